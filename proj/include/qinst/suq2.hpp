#pragma once

// Normal forms and coalgebra structure of A(SU_q(2)).
//
// Generators a, b, c, d (the 2x2 block t11, t12, t21, t22) with
//   ab = q ba, ac = q ca, bc = cb, bd = q db, cd = q dc,
//   ad - da = (q - q^-1) bc,  ad - q bc = 1.
// Basis: a^k b^m c^n (k >= 0) and b^m c^n d^-k (k < 0).

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qinst/linear.hpp"

namespace qinst::su2 {

enum class Letter : unsigned char { A = 0, B = 1, C = 2, D = 3 };

struct Monomial {
  int k = 0;  // power of a when k >= 0, of d when k < 0
  int m = 0;  // power of b
  int n = 0;  // power of c

  int total_degree() const { return (k < 0 ? -k : k) + m + n; }
  auto operator<=>(const Monomial&) const = default;
};

using Element = LinComb<Monomial>;
using Word = std::vector<Letter>;

struct TensorKey {
  Monomial left;
  Monomial right;
  auto operator<=>(const TensorKey&) const = default;
};
using Tensor = LinComb<TensorKey>;

/// The ordered word a^k b^m c^n or b^m c^n d^l of a basis monomial.
Word to_word(const Monomial& mono);

/// Normal form of an arbitrary word (production strategy).
Element nf(const Word& word);
const Element& nf(const Monomial& mono, Letter g);  // mono * g; valid for the calling thread
Element mul(const Element& x, const Element& y);
Element mul(const Monomial& x, const Monomial& y);

inline Element unit() { return Element(Monomial{}); }
inline Element generator(Letter g) { return nf(Word{g}); }

enum class Strategy { LeftmostInnermost, RightmostInnermost };

/// Plain word rewriting with an explicit redex-selection strategy. Independent
/// of nf(); used to collect confluence evidence.
Element reduce_word(const Word& word, Strategy strategy);

/// Delta(a) = a(x)a + b(x)c, Delta(b) = a(x)b + b(x)d,
/// Delta(c) = c(x)a + d(x)c, Delta(d) = c(x)b + d(x)d, multiplicative.
const Tensor& coproduct(const Monomial& mono);
Tensor coproduct(const Element& x);
/// 1 when m = n = 0, else 0.
Laurent counit(const Monomial& mono);
Laurent counit(const Element& x);

/// `a^2 b c`, `b d^3`, `1`.
std::string to_string(const Monomial& mono);
std::string to_string(const Element& x);
char letter_char(Letter g);

}  // namespace qinst::su2
