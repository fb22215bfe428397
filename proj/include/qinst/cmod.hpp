#pragma once

// The quotient coalgebra C = A(U_q(4)) / R with basis r^{k,m,n}, identified
// with A(SU_q(2)) as a coalgebra, and its right action by the 32 generator
// symbols t_ij, t*_ij (r(t) . t' = r(t t')).

#include <array>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qinst/suq2.hpp"

namespace qinst::cmod {

/// r^{k,m,n}: k >= 0 is r(t11^k t12^m t21^n), k < 0 is r(t12^m t21^n t22^-k).
using CIndex = su2::Monomial;
using CElement = su2::Element;
using CTensor = su2::Tensor;

struct GenSymbol {
  int row = 1;  // 1..4
  int col = 1;  // 1..4
  bool starred = false;

  bool in_block() const { return row <= 2 && col <= 2; }
  bool in_lower_block() const { return row >= 3 && col >= 3; }
  bool operator==(const GenSymbol&) const = default;
};

inline GenSymbol t(int i, int j) { return {i, j, false}; }
inline GenSymbol ts(int i, int j) { return {i, j, true}; }

/// All 32 symbols, unstarred first, row-major.
std::vector<GenSymbol> all_symbols();
std::string to_string(const GenSymbol& g);

/// Individually addressable entries of the action table; used by the
/// mutation hook that flips the sign of one entry.
enum class ActionEntry {
  Star11, Star12, Star21, Star22,
  Star33, Star34, Star43, Star44, Star33Correction, Star44Correction,
  T33, T34, T43, T44, T33Correction, T44Correction,
};
inline constexpr int kActionEntryCount = 16;
std::string to_string(ActionEntry e);

class ModuleAction {
 public:
  explicit ModuleAction(std::optional<ActionEntry> flipped = std::nullopt) : flipped_(flipped) {}
  ModuleAction(const ModuleAction&) = delete;
  ModuleAction& operator=(const ModuleAction&) = delete;

  /// The unmutated table shared by default callers.
  static const ModuleAction& standard();

  const CElement& act(const CIndex& x, const GenSymbol& g) const;
  CElement act(const CElement& x, const GenSymbol& g) const;
  CElement act_word(const CElement& x, const std::vector<GenSymbol>& word) const;

  std::optional<ActionEntry> flipped() const { return flipped_; }

 private:
  CElement compute(const CIndex& x, const GenSymbol& g) const;
  Laurent sign(ActionEntry e) const { return flipped_ == e ? Laurent(-1) : Laurent(1); }

  std::optional<ActionEntry> flipped_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, CElement> cache_;  // node-stable
};

CElement act_gen(const CElement& x, const GenSymbol& g);
CElement act_word(const CElement& x, const std::vector<GenSymbol>& word);

CTensor coproduct_c(const CIndex& x);
CTensor coproduct_c(const CElement& x);
Laurent counit_c(const CElement& x);

inline CElement basis(int k, int m, int n) { return CElement(CIndex{k, m, n}); }

/// `r[k,m,n]`
std::string to_string(const CIndex& x);
std::string to_string(const CElement& x);
/// Parses `r[k,m,n]`; throws std::invalid_argument.
CIndex parse_index(std::string_view text);

/// All (k, m, n) with |k| + m + n <= max_degree, ordered by total degree,
/// then k descending, then m descending.
std::vector<CIndex> indices_up_to(int max_degree);

}  // namespace qinst::cmod
