#pragma once

// The Galois layer over P = A(S^7_q) and C: the right action
//   (u (x) x) <| v = u v_(0) (x) x . v_(1),
// the coaction Delta_r, the canonical map chi on P (x) P representatives,
// the recursively defined translation map tau, the Sigma^4_q generators and
// the entwining map psi.

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qinst/cmod.hpp"
#include "qinst/s7.hpp"

namespace qinst::galois {

using cmod::CElement;
using cmod::CIndex;

struct PCKey {
  s7::Monomial p;
  CIndex c;
  auto operator<=>(const PCKey&) const = default;
  bool operator==(const PCKey&) const = default;
};
using PCElement = LinComb<PCKey>;

struct PPKey {
  s7::Monomial left;
  s7::Monomial right;
  auto operator<=>(const PPKey&) const = default;
  bool operator==(const PPKey&) const = default;
};
/// A representative of a class in P (x)_B P.
using PPElement = LinComb<PPKey>;

PCElement tensor(const s7::Element& p, const CElement& c);
PPElement tensor(const s7::Element& left, const s7::Element& right);
inline PCElement unit_pc(const CIndex& c) { return PCElement(PCKey{s7::Monomial{}, c}); }

/// Left multiplication of the P leg.
PCElement left_mul(const s7::Element& x, const PCElement& y);
PPElement left_mul(const s7::Element& x, const PPElement& y);
/// x * y with y multiplied into the right P leg.
PPElement right_mul(const PPElement& x, const s7::Element& y);

/// Steps of the recursion for tau; each maps tau_{k,m,n} to a neighbour.
enum class TauStep {
  RaiseK,  // tau_{k+1,m,n}, k >= 0
  LowerK,  // tau_{k-1,m,n}, k <= 0
  RaiseM,  // tau_{k,m+1,n}
  RaiseN,  // tau_{k,m,n+1}
};

enum class TauPath {
  Canonical,  // k first, then m, then n
  Alternate,  // k first, then n, then m
};

/// Thread-safe memo table (k, m, n) -> tau_{k,m,n}. Insertion is idempotent:
/// the first stored value wins.
class TauTable {
 public:
  std::optional<PPElement> find(const CIndex& key) const;
  void insert(const CIndex& key, PPElement value);
  std::size_t size() const;
  /// Sorted by key (k, m, n).
  std::map<CIndex, PPElement> snapshot() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<CIndex, PPElement> entries_;
};

struct EngineOptions {
  /// Check chi(tau_{k,m,n}) == 1 (x) r^{k,m,n} before storing a table entry.
  bool verify_tau = false;
};

class GaloisEngine {
 public:
  explicit GaloisEngine(const cmod::ModuleAction& action = cmod::ModuleAction::standard(),
                        EngineOptions options = {})
      : action_(action), options_(options) {}
  GaloisEngine(const GaloisEngine&) = delete;
  GaloisEngine& operator=(const GaloisEngine&) = delete;

  const cmod::ModuleAction& action() const { return action_; }

  PCElement triangle(const PCElement& x, s7::Gen g) const;
  PCElement triangle(const PCElement& x, const s7::Word& word) const;
  PCElement triangle(const PCElement& x, const s7::Element& v) const;

  /// Delta_r(p) = (1 (x) r(1)) <| p.
  const PCElement& delta_r(const s7::Monomial& p) const;
  PCElement delta_r(const s7::Element& p) const;

  /// chi(p' (x) p) = p' Delta_r(p).
  PCElement chi(const PPElement& x) const;
  bool quotient_eq(const PPElement& x, const PPElement& y) const { return chi(x) == chi(y); }

  /// tau_{k,m,n}, memoised in `table`. Throws s7::DegreeCapExceeded.
  PPElement tau(const CIndex& key, TauTable& table, TauPath path = TauPath::Canonical) const;
  PPElement tau_step(TauStep step, const CIndex& from, const PPElement& tau_from) const;

  /// psi(c (x) p) = (1 (x) c) <| p.
  PCElement psi(const CElement& c, const s7::Element& p) const;
  bool is_coinvariant(const s7::Element& p) const;

 private:
  const cmod::ModuleAction& action_;
  EngineOptions options_;
  mutable std::mutex delta_mutex_;
  mutable std::unordered_map<s7::Monomial, PCElement> delta_cache_;
};

/// Engine over the standard action table.
const GaloisEngine& standard_engine();

PCElement triangle(const PCElement& x, const s7::Element& v);
PCElement delta_r(const s7::Element& p);
PCElement chi(const PPElement& x);
PPElement tau(int k, int m, int n, TauTable& table);
bool quotient_eq(const PPElement& x, const PPElement& y);
PCElement psi(const CElement& c, const s7::Element& p);
bool is_coinvariant(const s7::Element& p);

/// a_n = z1 z4* - q^n z2 z3*,  b_n = z1 z3 + q^{n-1} z2 z4.
s7::Element a_n(int n);
s7::Element b_n(int n);
s7::Element a_star_n(int n);
s7::Element b_star_n(int n);

struct BGenerators {
  s7::Element a, a_star, b, b_star, R;
};
/// a = a_0, b = b_0, R = z1 z1* + z2 z2*.
BGenerators b_generators();

std::string to_string(const PCElement& x);
std::string to_string(const PPElement& x);

}  // namespace qinst::galois
