#include "qinst/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qinst/s7.hpp"
#include "qinst/format.hpp"
#include "qinst/suq2.hpp"

namespace qinst::verify {
namespace {

using cmod::CIndex;
using galois::GaloisEngine;
using galois::PCElement;
using galois::PPElement;
using galois::TauTable;
using s7::Gen;
using s7::z;
using s7::zs;

using CaseFn = std::function<void(CaseResult&)>;

// Runs every case, in parallel when asked; results keep enumeration order.
std::vector<CaseResult> run_cases(const std::vector<CaseFn>& cases, unsigned threads) {
  std::vector<CaseResult> results(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  auto run_one = [&](std::size_t i) {
    try {
      cases[i](results[i]);
    } catch (const s7::DegreeCapExceeded& e) {
      errors[i] = std::make_exception_ptr(
          s7::DegreeCapExceeded(std::string(e.what()) + " (case: " + results[i].inputs + ")"));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (threads <= 1 || cases.size() <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(threads, cases.size());
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::string triple(int k, int m, int n) {
  return "(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string word_string(const s7::Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Gen g : w) out += (out.empty() ? "" : " ") + s7::gen_name(g);
  return out;
}

std::string word_string(const su2::Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (auto g : w) {
    if (!out.empty()) out += ' ';
    out += su2::letter_char(g);
  }
  return out;
}

// Fills the rendered sides only on failure: renderings of large chi images
// dominate otherwise.
template <typename T, typename Render>
void compare(CaseResult& r, const T& lhs, const T& rhs, Render render) {
  r.passed = lhs == rhs;
  if (!r.passed) {
    r.lhs = render(lhs);
    r.rhs = render(rhs);
  }
}

void compare_pc(CaseResult& r, const PCElement& lhs, const PCElement& rhs) {
  compare(r, lhs, rhs, [](const PCElement& x) { return galois::to_string(x); });
}

// ---------------------------------------------------------------- S1

std::vector<CaseFn> confluence_cases(int max_len, std::uint64_t seed, int words) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };
  std::vector<CaseFn> cases;
  std::vector<s7::Word> s7_words;
  std::vector<su2::Word> su2_words;
  for (int i = 0; i < words; ++i) {
    s7::Word w(draw(max_len + 1));
    for (auto& g : w) g = static_cast<Gen>(draw(8));
    s7_words.push_back(std::move(w));
  }
  for (int i = 0; i < words; ++i) {
    su2::Word w(draw(max_len + 1));
    for (auto& g : w) g = static_cast<su2::Letter>(draw(4));
    su2_words.push_back(std::move(w));
  }
  for (auto& w : s7_words)
    cases.push_back([w](CaseResult& r) {
      r.inputs = "S7 word " + word_string(w);
      auto left = s7::reduce_word(w, s7::Strategy::LeftmostInnermost);
      auto right = s7::reduce_word(w, s7::Strategy::RightmostInnermost);
      auto prod = s7::nf(w);
      r.passed = left == right && right == prod;
      if (!r.passed) {
        r.lhs = "leftmost " + s7::to_string(left);
        r.rhs = "rightmost " + s7::to_string(right) + "; nf " + s7::to_string(prod);
      }
    });
  for (auto& w : su2_words)
    cases.push_back([w](CaseResult& r) {
      r.inputs = "SU2 word " + word_string(w);
      auto left = su2::reduce_word(w, su2::Strategy::LeftmostInnermost);
      auto right = su2::reduce_word(w, su2::Strategy::RightmostInnermost);
      auto prod = su2::nf(w);
      r.passed = left == right && right == prod;
      if (!r.passed) {
        r.lhs = "leftmost " + su2::to_string(left);
        r.rhs = "rightmost " + su2::to_string(right) + "; nf " + su2::to_string(prod);
      }
    });
  return cases;
}

// ---------------------------------------------------------------- S2

struct Relation {
  s7::Word lhs;
  std::vector<std::pair<Laurent, s7::Word>> rhs;
};

std::vector<Relation> sphere_relations() {
  std::vector<Relation> rels;
  const Laurent q = q_pow(1);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) rels.push_back({{z(i), z(j)}, {{q, {z(j), z(i)}}}});
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) rels.push_back({{zs(j), zs(i)}, {{q, {zs(i), zs(j)}}}});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) rels.push_back({{zs(j), z(i)}, {{q, {z(i), zs(j)}}}});
  for (int k = 1; k <= 4; ++k) {
    Relation r{{zs(k), z(k)}, {{Laurent(1), {z(k), zs(k)}}}};
    for (int j = 1; j < k; ++j) r.rhs.push_back({Laurent(1) - q_pow(2), {z(j), zs(j)}});
    rels.push_back(std::move(r));
  }
  Relation sphere{{z(1), zs(1)}, {{Laurent(1), {}}}};
  for (int j = 2; j <= 4; ++j) sphere.rhs.push_back({Laurent(-1), {z(j), zs(j)}});
  rels.push_back(std::move(sphere));
  return rels;
}

std::string relation_string(const Relation& rel) {
  TermWriter w;
  for (const auto& [c, word] : rel.rhs) w.add(c, word_string(word));
  return word_string(rel.lhs) + " = " + w.str();
}

std::vector<CaseFn> action_cases(int max_degree, const GaloisEngine& engine) {
  std::vector<CaseFn> cases;
  const auto rels = sphere_relations();
  for (const auto& idx : cmod::indices_up_to(max_degree))
    for (const auto& rel : rels)
      cases.push_back([&engine, idx, rel](CaseResult& r) {
        r.inputs = "(1 ⊗ " + cmod::to_string(idx) + ") <| [" + relation_string(rel) + "]";
        const PCElement base = galois::unit_pc(idx);
        PCElement lhs = engine.triangle(base, rel.lhs);
        PCElement rhs;
        for (const auto& [c, word] : rel.rhs) rhs.add(engine.triangle(base, word), c);
        compare_pc(r, lhs, rhs);
      });
  return cases;
}

// ---------------------------------------------------------------- S3 / S5

struct Ctx {
  const GaloisEngine& engine;
  TauTable& table;
  PPElement tau(int k, int m, int n) const { return engine.tau(CIndex{k, m, n}, table); }
};

using Sides = std::pair<PPElement, PPElement>;
using IdentityFn = std::function<Sides(const Ctx&, int, int, int)>;

struct Family {
  const char* name;
  // admissible triples for range bound N
  std::function<bool(int k, int degree, int N)> admits;
  std::vector<IdentityFn> identities;
};

s7::Element G(Gen g) { return s7::gen(g); }
Laurent Q(int e) { return q_pow(e); }
PPElement L(const s7::Element& x, const PPElement& t) { return galois::left_mul(x, t); }
PPElement Rt(const PPElement& t, const s7::Element& x) { return galois::right_mul(t, x); }
PPElement sandwich(Gen a, const PPElement& t, Gen b) { return L(G(a), Rt(t, G(b))); }

std::vector<Family> recursion_families() {
  std::vector<Family> out;
  out.push_back({"left_kpos", [](int k, int d, int N) { return k >= 0 && d <= N - 1; },
                 {
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {Q(-(m + n)) * L(G(z(1)), c.tau(k + 1, m, n)) + L(G(z(2)), c.tau(k, m, n + 1)),
                               Rt(c.tau(k, m, n), G(z(1)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {-Q(-k) * L(G(z(3)), c.tau(k, m, n + 1)) + L(G(z(4)), c.tau(k + 1, m, n)),
                               Rt(c.tau(k, m, n), G(z(4)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {-Q(1) * L(G(zs(1)), c.tau(k, m, n + 1)) +
                                   Q(-(m + n)) * L(G(zs(2)), c.tau(k + 1, m, n)),
                               Rt(c.tau(k, m, n), G(zs(2)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {L(G(zs(3)), c.tau(k + 1, m, n)) + Q(-(1 + k)) * L(G(zs(4)), c.tau(k, m, n + 1)),
                               Rt(c.tau(k, m, n), G(zs(3)))};
                     },
                 }});
  out.push_back({"left_kneg", [](int k, int d, int N) { return k <= 0 && d <= N - 1; },
                 {
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {Q(-(m + n)) * L(G(z(3)), c.tau(k - 1, m, n)) - L(G(z(4)), c.tau(k, m + 1, n)),
                               Rt(c.tau(k, m, n), G(z(3)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {Q(k) * L(G(z(1)), c.tau(k, m + 1, n)) + L(G(z(2)), c.tau(k - 1, m, n)),
                               Rt(c.tau(k, m, n), G(z(2)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {Q(1) * L(G(zs(3)), c.tau(k, m + 1, n)) +
                                   Q(-(m + n)) * L(G(zs(4)), c.tau(k - 1, m, n)),
                               Rt(c.tau(k, m, n), G(zs(4)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {L(G(zs(1)), c.tau(k - 1, m, n)) - Q(-(1 - k)) * L(G(zs(2)), c.tau(k, m + 1, n)),
                               Rt(c.tau(k, m, n), G(zs(1)))};
                     },
                 }});
  out.push_back({"mixed_kpos", [](int k, int d, int N) { return k >= 1 && d <= N; },
                 {
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const int mn = m + n;
                       return {Q(mn) * L(G(z(2)), c.tau(k - 1, m, n)) +
                                   Q(mn + 1) * Rt(c.tau(k - 1, m + 1, n), G(z(1))),
                               Rt(c.tau(k, m, n), G(z(2)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {L(G(z(3)), c.tau(k - 1, m, n)) - Q(-k) * Rt(c.tau(k - 1, m + 1, n), G(z(4))),
                               Rt(c.tau(k, m, n), G(z(3)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const int mn = m + n;
                       return {Q(mn) * L(G(zs(1)), c.tau(k - 1, m, n)) -
                                   Q(mn) * Rt(c.tau(k - 1, m + 1, n), G(zs(2))),
                               Rt(c.tau(k, m, n), G(zs(1)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {L(G(zs(4)), c.tau(k - 1, m, n)) + Q(1 - k) * Rt(c.tau(k - 1, m + 1, n), G(zs(3))),
                               Rt(c.tau(k, m, n), G(zs(4)))};
                     },
                 }});
  out.push_back({"mixed_kneg", [](int k, int d, int N) { return k <= -1 && d <= N; },
                 {
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const int mn = m + n;
                       return {Q(mn) * L(G(z(4)), c.tau(k + 1, m, n)) -
                                   Q(mn + 1) * Rt(c.tau(k + 1, m, n + 1), G(z(3))),
                               Rt(c.tau(k, m, n), G(z(4)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {L(G(z(1)), c.tau(k + 1, m, n)) + Q(k) * Rt(c.tau(k + 1, m, n + 1), G(z(2))),
                               Rt(c.tau(k, m, n), G(z(1)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const int mn = m + n;
                       return {Q(mn) * L(G(zs(3)), c.tau(k + 1, m, n)) +
                                   Q(mn) * Rt(c.tau(k + 1, m, n + 1), G(zs(4))),
                               Rt(c.tau(k, m, n), G(zs(3)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       return {L(G(zs(2)), c.tau(k + 1, m, n)) - Q(1 + k) * Rt(c.tau(k + 1, m, n + 1), G(zs(1))),
                               Rt(c.tau(k, m, n), G(zs(2)))};
                     },
                 }});
  return out;
}

std::vector<Family> auxiliary_families() {
  using galois::a_n;
  using galois::a_star_n;
  using galois::b_n;
  using galois::b_star_n;
  std::vector<Family> out;
  out.push_back({"aux_left_kpos", [](int k, int d, int N) { return k >= 0 && d <= N; },
                 {
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto R = galois::b_generators().R;
                       const auto t = c.tau(k, m, n);
                       const int mn = m + n, s = k + m + n;
                       return {L(s7::unit() - Q(2) * R, Rt(t, G(z(1)))),
                               Q(2 - mn) * L(b_n(s), Rt(t, G(zs(3)))) + Q(-mn) * L(a_n(s), Rt(t, G(z(4))))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto R = galois::b_generators().R;
                       const auto t = c.tau(k, m, n);
                       const int mn = m + n, s = k + m + n;
                       return {L(R, Rt(t, G(z(4)))),
                               Q(2 - k) * L(b_n(s), Rt(t, G(zs(2)))) +
                                   Q(2 + mn) * L(a_star_n(-s), Rt(t, G(z(1))))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto R = galois::b_generators().R;
                       const auto t = c.tau(k, m, n);
                       const int s = k + m + n;
                       return {L(s7::unit() - Q(2) * R, Rt(t, G(zs(2)))),
                               Q(k) * L(b_star_n(-s), Rt(t, G(z(4)))) -
                                   Q(3 + k) * L(a_star_n(-s), Rt(t, G(zs(3))))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto R = galois::b_generators().R;
                       const auto t = c.tau(k, m, n);
                       const int mn = m + n, s = k + m + n;
                       return {Q(4) * L(R, Rt(t, G(zs(3)))),
                               Q(2 + mn) * L(b_star_n(-s), Rt(t, G(z(1)))) -
                                   Q(3 - k) * L(a_n(s), Rt(t, G(zs(2))))};
                     },
                 }});
  out.push_back({"aux_square_kpos", [](int k, int d, int N) { return k >= 0 && d <= N - 1; },
                 {
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto R = galois::b_generators().R;
                       const auto t = c.tau(k, m, n);
                       return {L(s7::unit() - Q(2) * R, c.tau(k + 1, m, n)),
                               sandwich(zs(4), t, z(4)) + Q(2) * sandwich(z(3), t, zs(3))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto t = c.tau(k, m, n);
                       const int s = k + m + n;
                       return {Q(-(m + n)) * L(b_n(s + 1), c.tau(k + 1, m, n)),
                               Q(1) * sandwich(z(3), t, z(1)) + Q(k) * sandwich(z(2), t, z(4))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto t = c.tau(k, m, n);
                       const int s = k + m + n;
                       return {Q(-(m + n)) * L(a_n(s + 1), c.tau(k + 1, m, n)),
                               Q(-1) * sandwich(zs(4), t, z(1)) - Q(1 + k) * sandwich(z(2), t, zs(3))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto t = c.tau(k, m, n);
                       const int s = k + m + n;
                       return {L(a_star_n(-(s + 1)), c.tau(k + 1, m, n)),
                               Q(-1) * sandwich(zs(1), t, z(4)) - Q(-k - 1) * sandwich(z(3), t, zs(2))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto R = galois::b_generators().R;
                       const auto t = c.tau(k, m, n);
                       return {L(R, c.tau(k + 1, m, n)), Q(m + n) * (sandwich(zs(1), t, z(1)) + sandwich(z(2), t, zs(2)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto t = c.tau(k, m, n);
                       const int s = k + m + n;
                       return {L(b_star_n(-(s + 1)), c.tau(k + 1, m, n)),
                               Q(1) * sandwich(zs(1), t, zs(3)) + Q(-k - 2) * sandwich(zs(4), t, zs(2))};
                     },
                 }});
  out.push_back({"aux_mixed_kpos", [](int k, int d, int N) { return k >= 1 && d <= N; },
                 {
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto R = galois::b_generators().R;
                       const auto t0 = c.tau(k - 1, m, n);
                       return {Rt(c.tau(k, m, n), s7::unit() - Q(2) * R),
                               sandwich(zs(4), t0, z(4)) + Q(2) * sandwich(z(3), t0, zs(3))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto R = galois::b_generators().R;
                       const auto t0 = c.tau(k - 1, m, n);
                       return {Rt(c.tau(k, m, n), R), Q(m + n) * (sandwich(z(2), t0, zs(2)) + sandwich(zs(1), t0, z(1)))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto t0 = c.tau(k - 1, m, n);
                       const int s = k + m + n;
                       return {Rt(c.tau(k, m, n), a_n(-s)),
                               Q(-1) * sandwich(zs(4), t0, z(1)) - Q(-k) * sandwich(z(2), t0, zs(3))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto t0 = c.tau(k - 1, m, n);
                       const int s = k + m + n;
                       return {Rt(c.tau(k, m, n), b_n(-s)),
                               Q(1) * sandwich(z(3), t0, z(1)) + Q(-k - 1) * sandwich(z(2), t0, z(4))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto t0 = c.tau(k - 1, m, n);
                       const int s = k + m + n;
                       return {Rt(c.tau(k, m, n), a_star_n(s)),
                               Q(m + n - 1) * sandwich(zs(1), t0, z(4)) - Q(s) * sandwich(z(3), t0, zs(2))};
                     },
                     [](const Ctx& c, int k, int m, int n) -> Sides {
                       const auto t0 = c.tau(k - 1, m, n);
                       const int s = k + m + n;
                       return {Rt(c.tau(k, m, n), b_star_n(s)),
                               Q(m + n + 1) * sandwich(zs(1), t0, zs(3)) + Q(s - 1) * sandwich(zs(4), t0, zs(2))};
                     },
                 }});
  return out;
}

std::vector<CaseFn> identity_cases(const std::vector<Family>& families, int N, const GaloisEngine& engine,
                                   TauTable& table) {
  std::vector<CaseFn> cases;
  for (const auto& family : families)
    for (const auto& idx : cmod::indices_up_to(N)) {
      if (!family.admits(idx.k, idx.total_degree(), N)) continue;
      for (std::size_t i = 0; i < family.identities.size(); ++i)
        cases.push_back([&engine, &table, name = family.name, i, fn = family.identities[i], idx](CaseResult& r) {
          r.inputs = std::string(name) + "[" + std::to_string(i + 1) + "] at (k,m,n)=" + triple(idx.k, idx.m, idx.n);
          const Ctx ctx{engine, table};
          auto [lhs, rhs] = fn(ctx, idx.k, idx.m, idx.n);
          compare_pc(r, engine.chi(lhs), engine.chi(rhs));
        });
    }
  return cases;
}

std::string family_ranges(const std::vector<Family>& families, int N) {
  std::string out = "range bound N=" + std::to_string(N) + ";";
  for (const auto& f : families) out += std::string(" ") + f.name;
  return out;
}

// ---------------------------------------------------------------- S4

std::vector<CaseFn> tau_cases(int max_degree, const GaloisEngine& engine, TauTable& table) {
  std::vector<CaseFn> cases;
  for (const auto& idx : cmod::indices_up_to(max_degree))
    cases.push_back([&engine, &table, idx](CaseResult& r) {
      r.inputs = "chi(tau" + triple(idx.k, idx.m, idx.n) + ")";
      compare_pc(r, engine.chi(engine.tau(idx, table)), galois::unit_pc(idx));
    });
  return cases;
}

// ---------------------------------------------------------------- S6

std::vector<CaseFn> presentation_cases(int max_degree, const GaloisEngine& engine) {
  using s7::mul;
  std::vector<CaseFn> cases;
  auto el = [](const s7::Element& x) { return s7::to_string(x); };
  struct Named {
    const char* text;
    std::function<std::pair<s7::Element, s7::Element>(const galois::BGenerators&)> sides;
  };
  const std::vector<Named> relations = {
      {"R a = q^-2 a R", [](const auto& g) { return std::pair{mul(g.R, g.a), Q(-2) * mul(g.a, g.R)}; }},
      {"R b = q^2 b R", [](const auto& g) { return std::pair{mul(g.R, g.b), Q(2) * mul(g.b, g.R)}; }},
      {"a b = q^3 b a", [](const auto& g) { return std::pair{mul(g.a, g.b), Q(3) * mul(g.b, g.a)}; }},
      {"a b* = q^-1 b* a", [](const auto& g) { return std::pair{mul(g.a, g.b_star), Q(-1) * mul(g.b_star, g.a)}; }},
      {"a a* + q^2 b b* = R (1 - q^2 R)",
       [](const auto& g) {
         return std::pair{mul(g.a, g.a_star) + Q(2) * mul(g.b, g.b_star), g.R - Q(2) * mul(g.R, g.R)};
       }},
      {"a a* = q^2 a* a + (1 - q^2) R^2",
       [](const auto& g) {
         return std::pair{mul(g.a, g.a_star), Q(2) * mul(g.a_star, g.a) + (Laurent(1) - Q(2)) * mul(g.R, g.R)};
       }},
      {"b* b = q^4 b b* + (1 - q^2) R",
       [](const auto& g) {
         return std::pair{mul(g.b_star, g.b), Q(4) * mul(g.b, g.b_star) + (Laurent(1) - Q(2)) * g.R};
       }},
      {"R a* = q^2 a* R", [](const auto& g) { return std::pair{mul(g.R, g.a_star), Q(2) * mul(g.a_star, g.R)}; }},
      {"R b* = q^-2 b* R", [](const auto& g) { return std::pair{mul(g.R, g.b_star), Q(-2) * mul(g.b_star, g.R)}; }},
  };
  for (const auto& rel : relations)
    cases.push_back([rel, el](CaseResult& r) {
      r.inputs = std::string("relation ") + rel.text;
      auto [lhs, rhs] = rel.sides(galois::b_generators());
      compare(r, lhs, rhs, el);
    });

  const std::vector<std::pair<const char*, s7::Element galois::BGenerators::*>> gens = {
      {"a", &galois::BGenerators::a},
      {"a*", &galois::BGenerators::a_star},
      {"b", &galois::BGenerators::b},
      {"b*", &galois::BGenerators::b_star},
      {"R", &galois::BGenerators::R},
  };
  for (const auto& [name, member] : gens)
    cases.push_back([&engine, name, member](CaseResult& r) {
      r.inputs = std::string("coinvariance of ") + name;
      const s7::Element x = galois::b_generators().*member;
      compare_pc(r, engine.delta_r(x), galois::tensor(x, cmod::basis(0, 0, 0)));
    });

  const auto monos = std::make_shared<const std::vector<s7::Monomial>>(s7::monomials_up_to(max_degree));
  for (const auto& [name, member] : gens)
    for (const auto& u : *monos)
      cases.push_back([&engine, monos, name, member, u](CaseResult& r) {
        const s7::Element x = galois::b_generators().*member;
        const s7::Element ux = s7::mul(s7::Element(u), x);
        for (const auto& v : *monos) {
          const s7::Element xv = s7::mul(x, s7::Element(v));
          const PCElement lhs = engine.chi(galois::tensor(ux, s7::Element(v)));
          const PCElement rhs = engine.chi(galois::tensor(s7::Element(u), xv));
          if (lhs != rhs) {
            r.inputs = std::string("B-balance x=") + name + " u=" + s7::to_string(u) + " v=" + s7::to_string(v);
            compare_pc(r, lhs, rhs);
            return;
          }
        }
        r.inputs = std::string("B-balance x=") + name + " u=" + s7::to_string(u);
      });
  return cases;
}

// ---------------------------------------------------------------- S7

struct PCCKey {
  s7::Monomial p;
  CIndex c1;
  CIndex c2;
  auto operator<=>(const PCCKey&) const = default;
  bool operator==(const PCCKey&) const = default;
};
using PCCElement = LinComb<PCCKey>;

std::string render_pcc(const PCCElement& x) {
  return render_terms(x, [](const PCCKey& k) {
    return s7::to_string(k.p) + " ⊗ " + cmod::to_string(k.c1) + " ⊗ " + cmod::to_string(k.c2);
  });
}

std::vector<CaseFn> coaction_cases(int max_degree, const GaloisEngine& engine) {
  std::vector<CaseFn> cases;
  for (const auto& p : s7::monomials_up_to(max_degree))
    cases.push_back([&engine, p](CaseResult& r) {
      r.inputs = "counit law on " + s7::to_string(p);
      s7::Element lhs;
      for (const auto& [key, c] : engine.delta_r(p)) lhs.add_product(key.p, c, su2::counit(key.c));
      compare(r, lhs, s7::Element(p), [](const s7::Element& x) { return s7::to_string(x); });
    });
  for (const auto& p : s7::monomials_up_to(std::max(max_degree - 1, 0)))
    cases.push_back([&engine, p](CaseResult& r) {
      r.inputs = "coassociativity on " + s7::to_string(p);
      PCCElement lhs, rhs;
      for (const auto& [key, c] : engine.delta_r(p)) {
        for (const auto& [inner, ci] : engine.delta_r(key.p)) lhs.add_product({inner.p, inner.c, key.c}, c, ci);
        for (const auto& [split, cs] : su2::coproduct(key.c))
          rhs.add_product({key.p, split.left, split.right}, c, cs);
      }
      compare(r, lhs, rhs, render_pcc);
    });
  return cases;
}

// ---------------------------------------------------------------- S8

void entwining_rank(int max_degree, const Rational& q0, const GaloisEngine& engine, SuiteReport& report) {
  std::vector<std::pair<CIndex, s7::Monomial>> domain;
  for (const auto& c : cmod::indices_up_to(max_degree))
    for (const auto& p : s7::monomials_up_to(max_degree)) domain.emplace_back(c, p);
  std::map<galois::PCKey, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
  for (const auto& [c, p] : domain) {
    std::vector<std::pair<std::size_t, Rational>> col;
    for (const auto& [key, coeff] : engine.psi(cmod::basis(c.k, c.m, c.n), s7::Element(p))) {
      Rational v = coeff.eval_at(q0);
      if (v == 0) continue;
      auto [it, inserted] = rows.try_emplace(key, rows.size());
      col.emplace_back(it->second, std::move(v));
    }
    columns.push_back(std::move(col));
  }
  const std::size_t rank = sparse_rank(columns);
  report.q0 = q0;
  report.rank = rank;
  report.columns = columns.size();
  report.cases_run = 1;
  report.cases_passed = rank == columns.size() ? 1 : 0;
  if (rank != columns.size()) {
    report.failures.push_back({"psi on span{c ⊗ p} at q0=" + rational_to_string(q0),
                               "rank " + std::to_string(rank), "columns " + std::to_string(columns.size()),
                               false});
  }
}

}  // namespace

std::string to_string(SuiteId id) { return "S" + std::to_string(static_cast<int>(id) + 1); }

SuiteId parse_suite_id(std::string_view text) {
  if (text.size() == 2 && (text[0] == 'S' || text[0] == 's') && text[1] >= '1' && text[1] <= '8')
    return static_cast<SuiteId>(text[1] - '1');
  throw std::invalid_argument("unknown suite id '" + std::string(text) + "' (expected S1..S8)");
}

std::size_t sparse_rank(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& columns) {
  // Echelon basis keyed by pivot row; each stored vector has a unit pivot at
  // its smallest row.
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots;
  for (const auto& col : columns) {
    std::map<std::size_t, Rational> v;
    for (const auto& [row, x] : col)
      if (x != 0) v[row] += x;
    std::erase_if(v, [](const auto& e) { return e.second == 0; });
    while (!v.empty()) {
      auto lead = v.begin();
      auto pivot = pivots.find(lead->first);
      if (pivot == pivots.end()) {
        const Rational inv = 1 / lead->second;
        for (auto& [row, x] : v) x *= inv;
        pivots.emplace(lead->first, std::move(v));
        break;
      }
      const Rational factor = lead->second;
      for (const auto& [row, x] : pivot->second) {
        auto [it, inserted] = v.try_emplace(row, 0);
        it->second -= factor * x;
        if (it->second == 0) v.erase(it);
      }
    }
  }
  return pivots.size();
}

SuiteReport run_suite(SuiteId id, int max_degree, std::uint64_t seed, const SuiteOptions& options) {
  if (max_degree < 0) throw std::invalid_argument("run_suite: max_degree must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  const cmod::ModuleAction& action = options.action ? *options.action : cmod::ModuleAction::standard();
  std::optional<GaloisEngine> private_engine;
  const GaloisEngine* engine = &galois::standard_engine();
  if (&action != &cmod::ModuleAction::standard()) engine = &private_engine.emplace(action);
  TauTable private_table;
  TauTable& table = options.tau_table ? *options.tau_table : private_table;
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());

  SuiteReport report;
  report.id = id;
  report.max_degree = max_degree;
  report.seed = seed;
  const std::string bound = std::to_string(max_degree);
  std::vector<CaseFn> cases;
  switch (id) {
    case SuiteId::S1:
      report.ranges = std::to_string(options.words) + " words per engine, length <= " + bound;
      cases = confluence_cases(max_degree, seed, options.words);
      break;
    case SuiteId::S2:
      report.ranges = "|k|+m+n <= " + bound + "; 29 relations";
      cases = action_cases(max_degree, *engine);
      break;
    case SuiteId::S3: {
      const auto fam = recursion_families();
      report.ranges = family_ranges(fam, max_degree);
      cases = identity_cases(fam, max_degree, *engine, table);
      break;
    }
    case SuiteId::S4:
      report.ranges = "|k|+m+n <= " + bound;
      cases = tau_cases(max_degree, *engine, table);
      break;
    case SuiteId::S5: {
      const auto fam = auxiliary_families();
      report.ranges = family_ranges(fam, max_degree);
      cases = identity_cases(fam, max_degree, *engine, table);
      break;
    }
    case SuiteId::S6:
      report.ranges = "9 relations; 5 coinvariants; B-balance on monomials of degree <= " + bound;
      cases = presentation_cases(max_degree, *engine);
      break;
    case SuiteId::S7:
      report.ranges = "counit on degree <= " + bound + "; coassociativity on degree <= " +
                      std::to_string(std::max(max_degree - 1, 0));
      cases = coaction_cases(max_degree, *engine);
      break;
    case SuiteId::S8:
      report.ranges = "c with |k|+m+n <= " + bound + ", p of degree <= " + bound;
      entwining_rank(max_degree, options.q0, *engine, report);
      break;
  }
  if (id != SuiteId::S8) {
    auto results = run_cases(cases, threads);
    report.cases_run = results.size();
    for (auto& r : results) {
      if (r.passed) {
        ++report.cases_passed;
      } else {
        report.failures.push_back(std::move(r));
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string serialize(const SuiteReport& report, bool with_timing) {
  std::ostringstream out;
  out << "suite: " << to_string(report.id) << '\n'
      << "max_degree: " << report.max_degree << '\n'
      << "seed: " << report.seed << '\n'
      << "ranges: " << report.ranges << '\n'
      << "cases_run: " << report.cases_run << '\n'
      << "cases_passed: " << report.cases_passed << '\n'
      << "status: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  if (report.q0) out << "q0: " << rational_to_string(*report.q0) << '\n';
  if (report.rank) out << "rank: " << *report.rank << '\n';
  if (report.columns) out << "columns: " << *report.columns << '\n';
  if (with_timing) {
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << report.seconds;
    out << "duration_seconds: " << secs.str() << '\n';
  }
  if (const auto* ce = report.counterexample()) {
    out << "counterexample.inputs: " << ce->inputs << '\n'
        << "counterexample.lhs: " << ce->lhs << '\n'
        << "counterexample.rhs: " << ce->rhs << '\n';
  }
  for (const auto& f : report.failures) out << "fail: " << f.inputs << " | " << f.lhs << " | " << f.rhs << '\n';
  return out.str();
}

}  // namespace qinst::verify
