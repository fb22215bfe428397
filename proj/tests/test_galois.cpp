#include <gtest/gtest.h>

#include <thread>

#include "qinst/galois.hpp"
#include "support/gen.hpp"

using namespace qinst;
using namespace qinst::galois;
using qinst::testing::Rng;
using s7::z;
using s7::zs;

namespace {

Laurent Q(int e) { return q_pow(e); }
s7::Element Z(int i) { return s7::gen(z(i)); }
s7::Element Zs(int i) { return s7::gen(zs(i)); }
s7::Element W(std::initializer_list<s7::Gen> w) { return s7::nf(s7::Word(w)); }
PCElement T(const s7::Element& p, int k, int m, int n) { return tensor(p, cmod::basis(k, m, n)); }
PPElement TT(const s7::Element& l, const s7::Element& r) { return tensor(l, r); }

TEST(Triangle, Examples) {
  const PCElement one = unit_pc({});
  EXPECT_EQ(triangle(one, Z(1)), T(Z(1), 1, 0, 0) + T(Z(2), 0, 0, 1));
  EXPECT_EQ(triangle(one, s7::unit()), one);
  EXPECT_EQ(triangle(one, Z(4)), T(-Z(3), 0, 0, 1) + T(Z(4), 1, 0, 0));
}

TEST(DeltaR, Examples) {
  EXPECT_EQ(delta_r(s7::unit()), unit_pc({}));
  EXPECT_EQ(delta_r(Z(3)), T(Z(3), -1, 0, 0) - T(Z(4), 0, 1, 0));
  const s7::Element a = W({z(1), zs(4)}) - W({z(2), zs(3)});
  EXPECT_EQ(delta_r(a), T(a, 0, 0, 0));
}

TEST(Chi, Examples) {
  EXPECT_EQ(chi(TT(s7::unit(), s7::unit())), unit_pc({}));
  TauTable table;
  EXPECT_EQ(chi(tau(1, 0, 0, table)), unit_pc({1, 0, 0}));
  EXPECT_EQ(chi(TT(Z(1), Z(3))), T(W({z(1), z(3)}), -1, 0, 0) - T(W({z(1), z(4)}), 0, 1, 0));
  // left P-linearity: chi(p' (x) p) = p' Delta_r(p)
  EXPECT_EQ(chi(TT(Z(1), Z(3))), left_mul(Z(1), delta_r(Z(3))));
}

TEST(Tau, Examples) {
  TauTable table;
  EXPECT_EQ(tau(0, 0, 0, table), TT(s7::unit(), s7::unit()));
  EXPECT_EQ(to_string(tau(0, 0, 0, table)), "1 ⊗ 1");
  EXPECT_EQ(tau(1, 0, 0, table),
            Q(2) * TT(Zs(1), Z(1)) + Q(2) * TT(Z(2), Zs(2)) + Q(2) * TT(Z(3), Zs(3)) + TT(Zs(4), Z(4)));
  EXPECT_EQ(tau(-1, 0, 0, table),
            Q(4) * TT(Z(1), Zs(1)) + Q(2) * TT(Zs(2), Z(2)) + TT(Zs(3), Z(3)) + TT(Z(4), Zs(4)));
}

TEST(Tau, ChiInvertsTauUpToDegreeThree) {
  TauTable table;
  for (const auto& x : cmod::indices_up_to(3)) EXPECT_EQ(chi(tau(x.k, x.m, x.n, table)), unit_pc(x));
}

TEST(Tau, PathIndependenceInTheQuotient) {
  TauTable canonical, alternate;
  const GaloisEngine& engine = standard_engine();
  for (const auto& x : cmod::indices_up_to(4)) {
    const PPElement a = engine.tau(x, canonical, TauPath::Canonical);
    const PPElement b = engine.tau(x, alternate, TauPath::Alternate);
    EXPECT_TRUE(quotient_eq(a, b)) << cmod::to_string(x);
  }
}

TEST(Tau, VerifyModeChecksEntries) {
  const GaloisEngine engine(cmod::ModuleAction::standard(), EngineOptions{true});
  TauTable table;
  EXPECT_NO_THROW(engine.tau({2, 1, 0}, table));
  EXPECT_TRUE(table.find({2, 1, 0}).has_value());
  // a flipped action table makes some chi(tau) check fail on insertion
  const cmod::ModuleAction broken(cmod::ActionEntry::Star33);
  const GaloisEngine checked(broken, EngineOptions{true});
  TauTable other;
  EXPECT_THROW(
      {
        for (const auto& x : cmod::indices_up_to(3)) checked.tau(x, other);
      },
      std::logic_error);
}

TEST(TauTable, FirstWriteWinsAndConcurrentInsertion) {
  TauTable table;
  table.insert({1, 0, 0}, TT(Z(1), Z(1)));
  table.insert({1, 0, 0}, TT(Z(2), Z(2)));
  auto v = *table.find({1, 0, 0});
  EXPECT_EQ(v, TT(Z(1), Z(1)));
  EXPECT_FALSE(table.find({5, 0, 0}).has_value());

  TauTable shared;
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&shared] {
      for (const auto& x : cmod::indices_up_to(3)) standard_engine().tau(x, shared);
    });
  for (auto& th : pool) th.join();
  TauTable serial;
  for (const auto& x : cmod::indices_up_to(3)) EXPECT_EQ(*shared.find(x), standard_engine().tau(x, serial));
}

TEST(QuotientEq, Examples) {
  Rng g(41);
  const PPElement x = TT(g.s7_element(3, 2), g.s7_element(3, 2));
  EXPECT_TRUE(quotient_eq(x, x));
  const s7::Element a = W({z(1), zs(4)}) - W({z(2), zs(3)});
  EXPECT_TRUE(quotient_eq(TT(a, s7::unit()), TT(s7::unit(), a)));
  EXPECT_EQ(chi(TT(a, s7::unit())), T(a, 0, 0, 0));
  EXPECT_FALSE(quotient_eq(TT(Z(1), s7::unit()), TT(Z(2), s7::unit())));
}

TEST(BGenerators, Examples) {
  EXPECT_EQ(a_n(0), W({z(1), zs(4)}) - W({z(2), zs(3)}));
  EXPECT_EQ(b_n(1), W({z(1), z(3)}) + W({z(2), z(4)}));
  const auto g = b_generators();
  EXPECT_EQ(g.R, W({z(1), zs(1)}) + W({z(2), zs(2)}));
  EXPECT_EQ(g.a, a_n(0));
  EXPECT_EQ(g.b, b_n(0));
  EXPECT_EQ(g.a_star, s7::star(g.a));
  EXPECT_EQ(g.b_star, s7::star(g.b));
  for (int n = -2; n <= 2; ++n) {
    EXPECT_EQ(a_n(n), W({z(1), zs(4)}) - Q(n) * W({z(2), zs(3)}));
    EXPECT_EQ(b_n(n), W({z(1), z(3)}) + Q(n - 1) * W({z(2), z(4)}));
  }
}

TEST(Psi, Examples) {
  Rng g(42);
  for (int i = 0; i < 20; ++i) {
    const s7::Element p = g.s7_element(3, 3);
    EXPECT_EQ(psi(cmod::basis(0, 0, 0), p), delta_r(p));
  }
  for (const auto& c : cmod::indices_up_to(2)) EXPECT_EQ(psi(cmod::CElement(c), s7::unit()), unit_pc(c));
  const auto c = cmod::basis(0, 0, 1);
  EXPECT_EQ(psi(c, Z(1)),
            tensor(Z(1), cmod::act_gen(c, cmod::t(1, 1))) + tensor(Z(2), cmod::act_gen(c, cmod::t(2, 1))));
}

TEST(Coinvariance, Examples) {
  const auto g = b_generators();
  EXPECT_TRUE(is_coinvariant(g.R));
  EXPECT_TRUE(is_coinvariant(g.a));
  EXPECT_TRUE(is_coinvariant(g.b_star));
  EXPECT_FALSE(is_coinvariant(Z(1)));
  EXPECT_TRUE(is_coinvariant(s7::unit()));
}

TEST(Triangle, IsARightAction) {
  Rng g(43);
  for (int i = 0; i < 60; ++i) {
    const PCElement x = T(g.s7_element(2, 2), g.c_index(2).k, 0, 0);
    const s7::Element u = g.s7_element(2, 2), v = g.s7_element(2, 2);
    ASSERT_EQ(triangle(triangle(x, u), v), triangle(x, s7::mul(u, v)));
  }
}

TEST(Render, Tensors) {
  EXPECT_EQ(to_string(T(Q(-1) * Z(1), 1, 0, 0) + T(Z(2), 0, 0, 1)), "q^-1*z1 ⊗ r[1,0,0] + z2 ⊗ r[0,0,1]");
  EXPECT_EQ(to_string(PCElement{}), "0");
}

}  // namespace
