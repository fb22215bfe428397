#include <gtest/gtest.h>

#include "qinst/cmod.hpp"
#include "support/mq2_oracle.hpp"

using namespace qinst;
using namespace qinst::cmod;

namespace {

Laurent Q(int e) { return q_pow(e); }
CElement R(int k, int m, int n, Laurent c = Laurent(1)) { return CElement(CIndex{k, m, n}, c); }

TEST(CAction, Examples) {
  EXPECT_EQ(act_gen(R(0, 0, 0), t(1, 1)), R(1, 0, 0));
  for (const auto& x : indices_up_to(3)) EXPECT_EQ(act_gen(CElement(x), ts(1, 1)), act_gen(CElement(x), t(2, 2)));
  EXPECT_EQ(act_gen(R(1, 0, 0), t(2, 2)), R(0, 0, 0) + R(0, 1, 1, Q(1)));
  EXPECT_EQ(act_gen(R(1, 0, 0), t(2, 2)), CElement(su2::mul(su2::Monomial{1, 0, 0}, su2::Monomial{-1, 0, 0})));
  EXPECT_TRUE(act_gen(R(0, 0, 0), t(1, 3)).is_zero());
}

TEST(CAction, OffBlockSymbolsActAsZero) {
  for (const auto& g : all_symbols()) {
    if (g.in_block() || g.in_lower_block()) continue;
    for (const auto& x : indices_up_to(3)) EXPECT_TRUE(act_gen(CElement(x), g).is_zero()) << to_string(g);
  }
  EXPECT_EQ(all_symbols().size(), 32u);
}

TEST(CAction, StarredBlockDelegatesToBlock) {
  for (const auto& x : indices_up_to(3)) {
    const CElement e(x);
    EXPECT_EQ(act_gen(e, ts(1, 2)), Laurent(-1) * Q(1) * act_gen(e, t(2, 1)));
    EXPECT_EQ(act_gen(e, ts(2, 1)), Laurent(-1) * Q(-1) * act_gen(e, t(1, 2)));
    EXPECT_EQ(act_gen(e, ts(2, 2)), act_gen(e, t(1, 1)));
  }
}

TEST(CActWord, Examples) {
  const CElement x = R(2, 1, 0) + R(-1, 0, 2, Q(3));
  EXPECT_EQ(act_word(x, {}), x);
  EXPECT_EQ(act_word(R(0, 0, 0), {t(1, 1), t(2, 2)}), R(0, 0, 0) + R(0, 1, 1, Q(1)));
  EXPECT_EQ(act_word(R(0, 0, 0), {t(1, 1), t(2, 2)}), CElement(su2::mul(su2::generator(su2::Letter::A),
                                                                       su2::generator(su2::Letter::D))));
}

TEST(CActWord, IsAFoldOfSingleActions) {
  const std::vector<GenSymbol> word = {t(3, 3), ts(4, 4), t(1, 2), ts(3, 4), t(4, 3)};
  for (const auto& x : indices_up_to(2)) {
    CElement step(x);
    for (const auto& g : word) step = act_gen(step, g);
    EXPECT_EQ(act_word(CElement(x), word), step);
  }
}

// The correction terms carry the factor 1 - q^{-2k}; they vanish at k = 0,
// so the lower-block action reduces to the plain block terms there.
TEST(CAction, CorrectionTermsVanishAtKZero) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      const CElement x = R(0, m, n);
      EXPECT_EQ(act_gen(x, ts(3, 3)), Q(m + n) * act_gen(x, t(1, 1)));
      EXPECT_EQ(act_gen(x, ts(4, 4)), Q(-(m + n)) * act_gen(x, t(2, 2)));
      EXPECT_EQ(act_gen(x, t(3, 3)), Q(-(m + n)) * act_gen(x, t(2, 2)));
      EXPECT_EQ(act_gen(x, t(4, 4)), Q(m + n) * act_gen(x, t(1, 1)));
    }
}

TEST(CAction, CorrectionTermIsTheBlockWordOnTheShiftedIndex) {
  for (int k = 1; k <= 4; ++k)
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) {
        const CElement x = R(k, m, n);
        const CElement shifted = act_word(R(k - 1, m, n), {t(1, 2), t(2, 1)});
        const CElement expected = Q(-(m + n)) * act_gen(x, t(2, 2)) - Q(1) * (Laurent(1) - Q(-2 * k)) * shifted;
        EXPECT_EQ(act_gen(x, t(3, 3)), expected);
      }
}

TEST(CAction, MutationFlipsExactlyOneEntry) {
  for (int i = 0; i < kActionEntryCount; ++i) {
    const ModuleAction mutated(static_cast<ActionEntry>(i));
    int differing = 0;
    for (const auto& g : all_symbols())
      for (const auto& x : indices_up_to(2))
        if (mutated.act(x, g) != ModuleAction::standard().act(x, g)) ++differing;
    EXPECT_GT(differing, 0) << to_string(static_cast<ActionEntry>(i));
  }
}

TEST(CAction, BlockActionMatchesRightIdealOracle) {
  for (int k = -3; k <= 3; ++k)
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (int col = 1; col <= 2; ++col)
          for (int row = 1; row <= 2; ++row) {
            const CIndex x{k, m, n};
            const char letter = "abcd"[(row - 1) * 2 + (col - 1)];
            EXPECT_EQ(act_gen(CElement(x), t(row, col)), oracle::reduce_right_ideal(oracle::basis_word(x) + letter))
                << cmod::to_string(x) << " . " << to_string(t(row, col));
          }
}

TEST(CCoalgebra, Examples) {
  CTensor expected;
  expected.add({{1, 0, 0}, {1, 0, 0}}, Laurent(1));
  expected.add({{0, 1, 0}, {0, 0, 1}}, Laurent(1));
  EXPECT_EQ(coproduct_c(CIndex{1, 0, 0}), expected);
  EXPECT_EQ(coproduct_c(CIndex{}), CTensor(su2::TensorKey{}));
  CTensor b;
  b.add({{1, 0, 0}, {0, 1, 0}}, Laurent(1));
  b.add({{0, 1, 0}, {-1, 0, 0}}, Laurent(1));
  EXPECT_EQ(coproduct_c(CIndex{0, 1, 0}), b);
  EXPECT_EQ(counit_c(R(0, 0, 0)), Laurent(1));
  EXPECT_EQ(counit_c(R(3, 0, 0)), Laurent(1));
  EXPECT_EQ(counit_c(R(0, 2, 1)), Laurent(0));
}

TEST(CIndexText, RoundTripAndErrors) {
  for (const auto& x : indices_up_to(3)) EXPECT_EQ(parse_index(cmod::to_string(x)), x);
  for (const char* bad : {"r[1,2]", "r[0,-1,0]", "s[0,0,0]", "r[a,0,0]", "r[0,0,0", "r[0, 0,0]"})
    EXPECT_THROW(parse_index(bad), std::invalid_argument) << bad;
}

TEST(CIndices, CountsAndOrder) {
  // sum over s of (number of k with |k| <= s) x (compositions of the rest)
  auto count = [](int n) {
    std::size_t c = 0;
    for (int k = -n; k <= n; ++k)
      for (int m = 0; m <= n; ++m)
        for (int l = 0; l <= n; ++l)
          if (std::abs(k) + m + l <= n) ++c;
    return c;
  };
  EXPECT_EQ(indices_up_to(0).size(), 1u);
  EXPECT_EQ(indices_up_to(2).size(), count(2));
  EXPECT_EQ(indices_up_to(4).size(), count(4));
  EXPECT_EQ(count(2), 14u);
  EXPECT_EQ(count(4), 55u);
}

}  // namespace
