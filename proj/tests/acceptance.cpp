// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qinst/cmod.hpp"
#include "qinst/verify.hpp"
#include "support/mq2_oracle.hpp"

using namespace qinst;
using namespace qinst::verify;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string summary(const SuiteReport& r) {
  std::string s = to_string(r.id) + " " + std::to_string(r.cases_passed) + "/" + std::to_string(r.cases_run);
  if (const auto* ce = r.counterexample()) s += "; first failure: " + ce->inputs;
  return s;
}

Outcome suite(SuiteId id, int degree, SuiteOptions options = {}, std::uint64_t seed = 0) {
  const SuiteReport r = run_suite(id, degree, seed, options);
  return {r.passed() && r.cases_run > 0, summary(r)};
}

Outcome presentation() { return suite(SuiteId::S6, 2); }

Outcome bijectivity_witness() {
  std::size_t triples = 0;
  for (int k = -4; k <= 4; ++k)
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        if (std::abs(k) + m + n <= 4) ++triples;
  const SuiteReport r = run_suite(SuiteId::S4, 4, 0);
  return {r.passed() && r.cases_run == triples,
          summary(r) + " over " + std::to_string(triples) + " enumerated triples"};
}

Outcome well_definedness() { return suite(SuiteId::S2, 3); }

Outcome identity_families() {
  galois::TauTable shared;
  SuiteOptions o;
  o.tau_table = &shared;
  const SuiteReport s3 = run_suite(SuiteId::S3, 4, 0, o);
  const SuiteReport s5 = run_suite(SuiteId::S5, 4, 0, o);
  return {s3.passed() && s5.passed() && s3.cases_run > 0 && s5.cases_run > 0, summary(s3) + ", " + summary(s5)};
}

Outcome coaction_axioms() { return suite(SuiteId::S7, 4); }

Outcome confluence() {
  SuiteOptions o;
  o.words = 1000;
  return suite(SuiteId::S1, 8, o, 20240617);
}

Outcome entwining() {
  SuiteOptions o;
  o.q0 = Rational(3, 2);
  const SuiteReport r = run_suite(SuiteId::S8, 2, 0, o);
  const bool full = r.passed() && r.rank && r.columns && *r.rank == *r.columns && r.q0 == Rational(3, 2);
  return {full, "rank " + std::to_string(r.rank.value_or(0)) + " of " + std::to_string(r.columns.value_or(0)) +
                    " columns at q0 = 3/2"};
}

Outcome oracle_cross_check() {
  int cases = 0, agree = 0;
  std::string first;
  for (int k = -3; k <= 3; ++k)
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (int row = 1; row <= 2; ++row)
          for (int col = 1; col <= 2; ++col) {
            const cmod::CIndex x{k, m, n};
            const char letter = "abcd"[(row - 1) * 2 + (col - 1)];
            ++cases;
            const cmod::CElement expected = oracle::reduce_right_ideal(oracle::basis_word(x) + letter);
            if (cmod::act_gen(cmod::CElement(x), cmod::t(row, col)) == expected) {
              ++agree;
            } else if (first.empty()) {
              first = "; first failure: " + cmod::to_string(x) + " . " + cmod::to_string(cmod::t(row, col));
            }
          }
  return {agree == cases, std::to_string(agree) + "/" + std::to_string(cases) + " block actions agree" + first};
}

Outcome mutation_guard() {
  int caught = 0;
  std::string missed;
  for (int i = 0; i < cmod::kActionEntryCount; ++i) {
    const auto entry = static_cast<cmod::ActionEntry>(i);
    const cmod::ModuleAction mutated(entry);
    SuiteOptions o;
    o.action = &mutated;
    const SuiteReport s2 = run_suite(SuiteId::S2, 3, 0, o);
    bool detected = !s2.passed() && s2.counterexample();
    if (!detected) {
      const SuiteReport s4 = run_suite(SuiteId::S4, 4, 0, o);
      detected = !s4.passed() && s4.counterexample();
    }
    if (detected) {
      ++caught;
    } else {
      missed += " " + cmod::to_string(entry);
    }
  }
  return {caught == cmod::kActionEntryCount,
          std::to_string(caught) + "/" + std::to_string(cmod::kActionEntryCount) + " sign flips detected" +
              (missed.empty() ? "" : "; undetected:" + missed)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"presentation, coinvariance and B-balance (S6, degree 2)", presentation},
      {"chi(tau) = 1 (x) r for |k|+m+n <= 4 (S4)", bijectivity_witness},
      {"action well-defined on sphere relations, |k|+m+n <= 3 (S2)", well_definedness},
      {"recursion identity families, range bound 4 (S3 + S5)", identity_families},
      {"coaction counit (degree 4) and coassociativity (degree 3) (S7)", coaction_axioms},
      {"confluence on 1000 random words of length <= 8 per engine (S1)", confluence},
      {"entwining map full column rank at q0 = 3/2 (S8, degree 2)", entwining},
      {"block action agrees with right-ideal oracle, |k| <= 3, m,n <= 2", oracle_cross_check},
      {"every single sign flip of the action table is caught by S2 or S4", mutation_guard},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s [%s] (%.1fs)\n", index++, o.passed ? "PASS" : "FAIL", name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
