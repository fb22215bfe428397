#pragma once

// Normal forms in the *-algebra A(S^7_q) generated by z1..z4, z1*..z4*:
//   z_i z_j = q z_j z_i (i < j),        z_j* z_i = q z_i z_j* (i != j),
//   z_k* z_k = z_k z_k* + (1 - q^2) sum_{j<k} z_j z_j*,   sum_k z_k z_k* = 1.
// Basis monomials z1^a1..z4^a4 z1*^b1..z4*^b4 with a4 * b4 = 0.

#include <array>
#include <bit>
#include <cstring>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qinst/linear.hpp"

namespace qinst::s7 {

/// Generator letters in normal order z1 < ... < z4 < z1* < ... < z4*.
enum class Gen : std::uint8_t { Z1, Z2, Z3, Z4, Z1s, Z2s, Z3s, Z4s };

inline constexpr Gen z(int i) { return static_cast<Gen>(i - 1); }
inline constexpr Gen zs(int i) { return static_cast<Gen>(i + 3); }
inline constexpr int index_of(Gen g) { return static_cast<int>(g) % 4 + 1; }
inline constexpr bool is_starred(Gen g) { return static_cast<int>(g) >= 4; }
inline constexpr Gen star(Gen g) { return static_cast<Gen>((static_cast<int>(g) + 4) % 8); }

struct Monomial {
  std::array<std::uint8_t, 8> e{};  // exponents of z1..z4, z1*..z4*

  int degree() const {
    std::uint64_t x = word();
    x = (x & 0x00FF00FF00FF00FFULL) + ((x >> 8) & 0x00FF00FF00FF00FFULL);
    return static_cast<int>((x * 0x0001000100010001ULL) >> 48);
  }
  /// Graded: lower degree first, then reverse-lexicographic on exponents so
  /// that z1-heavy monomials lead.
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    return o.big_endian() <=> big_endian();
  }
  bool operator==(const Monomial& o) const { return word() == o.word(); }

  static Monomial of(Gen g) {
    Monomial m;
    m.e[static_cast<int>(g)] = 1;
    return m;
  }

 private:
  std::uint64_t word() const {
    std::uint64_t x;
    std::memcpy(&x, e.data(), sizeof x);
    return x;
  }
  // e[0] in the most significant byte, so integer order is lexicographic
  std::uint64_t big_endian() const {
    if constexpr (std::endian::native == std::endian::little) return __builtin_bswap64(word());
    return word();
  }
};

using Element = LinComb<Monomial>;
using Word = std::vector<Gen>;

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Products whose letter count would exceed the cap abort with
/// DegreeCapExceeded. Default 24.
void set_degree_cap(int cap);
int degree_cap();

Word to_word(const Monomial& mono);

Element nf(const Word& word);
/// mono * g and x * y; the references stay valid for the calling thread.
const Element& nf(const Monomial& mono, Gen g);
const Element& mul(const Monomial& x, const Monomial& y);
Element mul(const Element& x, const Element& y);
Element left_mul(Gen g, const Element& x);
Element right_mul(const Element& x, Gen g);

inline Element unit() { return Element(Monomial{}); }
inline Element gen(Gen g) { return Element(Monomial::of(g)); }

/// Antilinear anti-homomorphism z_i <-> z_i*; coefficients are real.
Element star(const Element& x);
/// Maximal letter count; throws std::invalid_argument for zero.
int degree(const Element& x);

enum class Strategy { LeftmostInnermost, RightmostInnermost };
/// Word rewriting with an explicit redex strategy, independent of nf().
Element reduce_word(const Word& word, Strategy strategy);

/// Every normal monomial with at most `max_degree` letters, in basis order.
std::vector<Monomial> monomials_up_to(int max_degree);

/// `z1^2 z3 z1*`, `1` for the unit.
std::string to_string(const Monomial& mono);
std::string to_string(const Element& x);
std::string gen_name(Gen g);
/// Inverse of to_string(Monomial); rejects non-normal input.
Monomial parse_monomial(std::string_view text);

}  // namespace qinst::s7

template <>
struct std::hash<qinst::s7::Monomial> {
  std::size_t operator()(const qinst::s7::Monomial& m) const noexcept {
    std::uint64_t h = 0;
    for (auto v : m.e) h = (h << 8) | v;
    h *= 0x9e3779b97f4a7c15ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
