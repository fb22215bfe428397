#pragma once

// Exhaustive (and, for S1, seeded random) verification suites over the
// engines, with a deterministic text report.
//
//   S1  rewriting confluence on random words, both engines
//   S2  well-definedness of the right action on every sphere relation
//   S3  the four recursion-compatibility families for tau
//   S4  chi(tau_{k,m,n}) = 1 (x) r^{k,m,n}
//   S5  the auxiliary identity families used inside the induction
//   S6  Sigma^4_q relations, coinvariance of the generators, B-balance of chi
//   S7  counit and coassociativity laws of Delta_r
//   S8  full column rank of the entwining map at a rational specialization

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qinst/cmod.hpp"
#include "qinst/coeff.hpp"
#include "qinst/galois.hpp"

namespace qinst::verify {

enum class SuiteId { S1, S2, S3, S4, S5, S6, S7, S8 };

std::string to_string(SuiteId id);
/// Accepts `S1`..`S8` (case-insensitive); throws std::invalid_argument.
SuiteId parse_suite_id(std::string_view text);

struct CaseResult {
  std::string inputs;
  std::string lhs;
  std::string rhs;
  bool passed = true;
};

struct SuiteReport {
  SuiteId id = SuiteId::S1;
  int max_degree = 0;
  std::uint64_t seed = 0;
  std::string ranges;
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  /// Every failing case in enumeration order; the first is the counterexample.
  std::vector<CaseResult> failures;
  double seconds = 0;
  /// S8 only.
  std::optional<Rational> q0;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> columns;

  bool passed() const { return failures.empty() && cases_passed == cases_run; }
  const CaseResult* counterexample() const { return failures.empty() ? nullptr : &failures.front(); }
};

struct SuiteOptions {
  /// Action table under test; the standard table when null.
  const cmod::ModuleAction* action = nullptr;
  /// Shared tau memo table; a private one when null.
  galois::TauTable* tau_table = nullptr;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// S1 sample size per engine.
  int words = 1000;
  /// S8 specialization point.
  Rational q0 = Rational(3, 2);
};

/// Deterministic in (id, max_degree, seed) apart from `seconds`.
/// Propagates s7::DegreeCapExceeded with the failing case attached.
SuiteReport run_suite(SuiteId id, int max_degree, std::uint64_t seed, const SuiteOptions& options = {});

/// `key: value` header, then one `fail:` line per failing case.
std::string serialize(const SuiteReport& report, bool with_timing = true);

/// Rank of a sparse matrix over Q given as columns of (row, value) pairs.
std::size_t sparse_rank(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& columns);

}  // namespace qinst::verify
