#include <gtest/gtest.h>

#include "qinst/suq2.hpp"
#include "support/gen.hpp"
#include "support/mq2_oracle.hpp"

using namespace qinst;
using namespace qinst::su2;
using qinst::testing::Rng;

namespace {

constexpr Letter a = Letter::A, b = Letter::B, c = Letter::C, d = Letter::D;
Laurent Q(int e) { return q_pow(e); }
Element M(int k, int m, int n, Laurent coeff = Laurent(1)) { return Element(Monomial{k, m, n}, coeff); }

TEST(Su2Nf, Examples) {
  EXPECT_EQ(nf(Word{b, a}), M(1, 1, 0, Q(-1)));
  EXPECT_EQ(nf(Word{a}), M(1, 0, 0));
  // ad = 1 + q bc and ad - da = (q - q^-1) bc give da = 1 + (q - (q - q^-1)) bc
  EXPECT_EQ(nf(Word{d, a}), M(0, 0, 0) + M(0, 1, 1, Q(1) - (Q(1) - Q(-1))));
  EXPECT_EQ(to_string(nf(Word{d, a})), "1 + q^-1*b c");
}

TEST(Su2Mul, Examples) {
  EXPECT_EQ(mul(M(1, 0, 0), M(1, 0, 0)), M(2, 0, 0));
  EXPECT_EQ(mul(M(1, 0, 0), M(-1, 0, 0)), M(0, 0, 0) + M(0, 1, 1, Q(1)));
  const Element x = M(2, 1, 0, Q(3)) - M(-1, 0, 2);
  EXPECT_EQ(mul(x, unit()), x);
  EXPECT_EQ(mul(unit(), x), x);
}

TEST(Su2Coproduct, Examples) {
  Tensor da;
  da.add({{1, 0, 0}, {1, 0, 0}}, Laurent(1));
  da.add({{0, 1, 0}, {0, 0, 1}}, Laurent(1));
  EXPECT_EQ(coproduct(Monomial{1, 0, 0}), da);
  EXPECT_EQ(coproduct(Monomial{}), Tensor(TensorKey{}));

  // Delta(bc) = Delta(b) Delta(c), each leg multiplied in the engine
  const std::vector<std::pair<Monomial, Monomial>> db = {{{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {-1, 0, 0}}};
  const std::vector<std::pair<Monomial, Monomial>> dc = {{{0, 0, 1}, {1, 0, 0}}, {{-1, 0, 0}, {0, 0, 1}}};
  Tensor expected;
  for (const auto& [l1, r1] : db)
    for (const auto& [l2, r2] : dc)
      for (const auto& [lm, lc] : mul(l1, l2))
        for (const auto& [rm, rc] : mul(r1, r2)) expected.add_product({lm, rm}, lc, rc);
  EXPECT_EQ(coproduct(Monomial{0, 1, 1}), expected);
}

TEST(Su2Counit, Examples) {
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(counit(Monomial{k, 0, 0}), Laurent(1));
  EXPECT_EQ(counit(Monomial{0, 1, 0}), Laurent(0));
  EXPECT_EQ(counit(Monomial{}), Laurent(1));
}

TEST(Su2Render, Text) {
  EXPECT_EQ(to_string(Monomial{}), "1");
  EXPECT_EQ(to_string(Monomial{2, 1, 1}), "a^2 b c");
  EXPECT_EQ(to_string(Monomial{-3, 0, 1}), "c d^3");
}

TEST(Su2Properties, StrategiesAgreeOnRandomWords) {
  Rng g(21);
  for (int i = 0; i < 1000; ++i) {
    const Word w = g.su2_word(8);
    const Element left = reduce_word(w, Strategy::LeftmostInnermost);
    ASSERT_EQ(left, reduce_word(w, Strategy::RightmostInnermost));
    ASSERT_EQ(left, nf(w));
  }
}

TEST(Su2Properties, MultiplicationIsAssociative) {
  Rng g(22);
  for (int i = 0; i < 200; ++i) {
    const Element x = g.su2_element(3, 3), y = g.su2_element(3, 3), z = g.su2_element(3, 3);
    ASSERT_EQ(mul(mul(x, y), z), mul(x, mul(y, z)));
  }
}

std::vector<Monomial> basis_up_to(int n) {
  std::vector<Monomial> out;
  for (int k = -n; k <= n; ++k)
    for (int m = 0; m + std::abs(k) <= n; ++m)
      for (int l = 0; l + m + std::abs(k) <= n; ++l) out.push_back({k, m, l});
  return out;
}

TEST(Su2Properties, Coassociativity) {
  for (const auto& x : basis_up_to(4)) {
    using Triple = std::tuple<Monomial, Monomial, Monomial>;
    LinComb<Triple> lhs, rhs;
    for (const auto& [key, c] : coproduct(x)) {
      for (const auto& [inner, ci] : coproduct(key.left)) lhs.add_product({inner.left, inner.right, key.right}, c, ci);
      for (const auto& [inner, ci] : coproduct(key.right)) rhs.add_product({key.left, inner.left, inner.right}, c, ci);
    }
    EXPECT_EQ(lhs, rhs) << to_string(x);
  }
}

TEST(Su2Properties, CounitLaws) {
  for (const auto& x : basis_up_to(4)) {
    Element left, right;
    for (const auto& [key, c] : coproduct(x)) {
      left.add_product(key.right, c, counit(key.left));
      right.add_product(key.left, c, counit(key.right));
    }
    EXPECT_EQ(left, Element(x)) << to_string(x);
    EXPECT_EQ(right, Element(x)) << to_string(x);
  }
}

TEST(Su2Properties, CoproductIsMultiplicative) {
  Rng g(23);
  for (int i = 0; i < 100; ++i) {
    const Element x = g.su2_element(2, 3), y = g.su2_element(2, 3);
    Tensor expected;
    for (const auto& [kx, cx] : coproduct(x))
      for (const auto& [ky, cy] : coproduct(y))
        for (const auto& [lm, lc] : mul(kx.left, ky.left))
          for (const auto& [rm, rc] : mul(kx.right, ky.right)) expected.add_product({lm, rm}, cx * cy, lc * rc);
    ASSERT_EQ(coproduct(mul(x, y)), expected);
  }
}

// The M_q(2) reference agrees with the engine on words that start at the
// left edge of a basis monomial.
TEST(Su2Oracle, LeftEdgeReductionMatchesEngineOnBasisProducts) {
  for (const auto& x : basis_up_to(3))
    for (Letter l : {a, b, c, d})
      EXPECT_EQ(oracle::reduce_right_ideal(oracle::basis_word(x) + letter_char(l)), nf(x, l))
          << to_string(x) << " * " << letter_char(l);
}

}  // namespace
