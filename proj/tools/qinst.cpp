// qinst: normal forms, coaction, canonical map, translation map and
// verification suites from the command line.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "qinst/cache.hpp"
#include "qinst/galois.hpp"
#include "qinst/parse.hpp"
#include "qinst/verify.hpp"

using namespace qinst;

namespace {

// Exit codes: 0 success, 1 a check failed, 2 bad input or runtime error.
constexpr int kFailed = 1;
constexpr int kError = 2;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

int cmd_nf(const std::string& context, const std::string& expr) {
  const parse::Context ctx = parse::parse_context(context);
  const parse::ExprAst ast = parse::parse(expr, ctx);
  switch (ctx) {
    case parse::Context::P: std::cout << s7::to_string(parse::elaborate_p(ast)) << '\n'; break;
    case parse::Context::SU2: std::cout << su2::to_string(parse::elaborate_su2(ast)) << '\n'; break;
    case parse::Context::C: std::cout << cmod::to_string(parse::elaborate_c(ast)) << '\n'; break;
  }
  return 0;
}

int cmd_deltar(const std::string& expr) {
  std::cout << galois::to_string(galois::delta_r(parse::parse_p(expr))) << '\n';
  return 0;
}

int cmd_chi(const std::string& expr) {
  const auto bar = expr.find('|');
  if (bar == std::string::npos || expr.find('|', bar + 1) != std::string::npos)
    throw std::invalid_argument("chi expects exactly one '|' separating the two tensor legs");
  const s7::Element left = parse::parse_p(trim(expr.substr(0, bar)));
  const s7::Element right = parse::parse_p(trim(expr.substr(bar + 1)));
  std::cout << galois::to_string(galois::chi(galois::tensor(left, right))) << '\n';
  return 0;
}

void report_rejected(const std::vector<cmod::CIndex>& rejected) {
  for (const auto& key : rejected) std::cerr << "rejected " << cmod::to_string(key) << ": chi check failed\n";
}

int cmd_tau(int k, int m, int n, const std::string& cache_path, bool verify) {
  if (m < 0 || n < 0) throw std::invalid_argument("tau: m and n must be nonnegative");
  galois::EngineOptions options;
  options.verify_tau = verify;
  const galois::GaloisEngine engine(cmod::ModuleAction::standard(), options);
  galois::TauTable table;
  const cmod::CIndex key{k, m, n};
  galois::PPElement value;
  if (cache_path.empty()) {
    value = engine.tau(key, table);
  } else {
    const auto loaded = cache::update(
        cache_path,
        [&](cache::Entries& entries) {
          cache::fill(table, entries);
          value = engine.tau(key, table);
          entries = cache::collect(table);
        },
        verify ? &engine : nullptr);
    report_rejected(loaded.rejected);
  }
  std::cout << galois::to_string(value) << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, int max_degree, std::uint64_t seed, unsigned threads,
               const std::string& cache_path, bool timing) {
  if (max_degree < 0) throw std::invalid_argument("--max-degree must be nonnegative");
  const verify::SuiteId id = verify::parse_suite_id(suite);
  verify::SuiteOptions options;
  options.threads = threads;
  galois::TauTable table;
  options.tau_table = &table;
  verify::SuiteReport report;
  auto run = [&] { report = verify::run_suite(id, max_degree, seed, options); };
  if (cache_path.empty()) {
    run();
  } else {
    // entries are re-checked on load: a bad cached tau would otherwise fail the suite silently
    const auto loaded = cache::update(
        cache_path,
        [&](cache::Entries& entries) {
          cache::fill(table, entries);
          run();
          entries = cache::collect(table);
        },
        &galois::standard_engine());
    report_rejected(loaded.rejected);
  }
  std::cout << verify::serialize(report, timing);
  return report.passed() ? 0 : kFailed;
}

int cmd_cache_check(const std::string& path) {
  if (!std::filesystem::exists(path)) throw cache::CacheError("no cache file at " + path);
  const auto loaded = cache::load(path, &galois::standard_engine());
  std::cout << "entries: " << loaded.entries.size() + loaded.rejected.size() << '\n'
            << "valid: " << loaded.entries.size() << '\n'
            << "rejected: " << loaded.rejected.size() << '\n';
  for (const auto& key : loaded.rejected) std::cout << "reject: " << cmod::to_string(key) << '\n';
  return loaded.rejected.empty() ? 0 : kFailed;
}

int cmd_cache_gc(const std::string& path) {
  if (!std::filesystem::exists(path)) throw cache::CacheError("no cache file at " + path);
  std::size_t kept = 0;
  const auto loaded = cache::update(
      path, [&](cache::Entries& entries) { kept = entries.size(); }, &galois::standard_engine());
  std::cout << "kept: " << kept << '\n' << "dropped: " << loaded.rejected.size() << '\n';
  for (const auto& key : loaded.rejected) std::cout << "drop: " << cmod::to_string(key) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for the quantum instanton bundle S^7_q -> Sigma^4_q"};
  app.require_subcommand(1);
  int degree_cap = s7::degree_cap();
  app.add_option("--degree-cap", degree_cap, "Largest total degree an intermediate S^7_q monomial may reach")
      ->check(CLI::PositiveNumber);

  std::string context = "P", expr, suite, cache_path, cache_file;
  int k = 0, m = 0, n = 0, max_degree = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool verify_flag = false, no_timing = false;

  auto* nf = app.add_subcommand("nf", "Print the canonical normal form of an expression");
  nf->add_option("-c,--context", context, "P, SU2 or C")->capture_default_str();
  nf->add_option("expr", expr)->required();

  auto* deltar = app.add_subcommand("deltar", "Apply the coaction Delta_r to an element of P");
  deltar->add_option("expr", expr)->required();

  auto* chi = app.add_subcommand("chi", "Apply the canonical map to a representative \"p' | p\"");
  chi->add_option("expr", expr)->required();

  auto* tau = app.add_subcommand("tau", "Translation map on the basis element r[k,m,n]");
  tau->add_option("k", k)->required();
  tau->add_option("m", m)->required();
  tau->add_option("n", n)->required();
  tau->add_option("--cache", cache_path, "Persistent tau cache (default: $QINST_TAU_CACHE)");
  tau->add_flag("--verify", verify_flag, "Check chi(tau) on computed and loaded entries");

  auto* ver = app.add_subcommand("verify", "Run a verification suite S1..S8");
  ver->add_option("suite", suite)->required();
  ver->add_option("--max-degree", max_degree)->required();
  ver->add_option("--seed", seed)->capture_default_str();
  ver->add_option("--threads", threads, "Worker threads (0: hardware concurrency)")->capture_default_str();
  ver->add_option("--cache", cache_path, "Persistent tau cache (default: $QINST_TAU_CACHE)");
  ver->add_flag("--no-timing", no_timing, "Omit the duration line from the report");

  auto* cache_cmd = app.add_subcommand("cache", "Inspect or compact a tau cache file");
  cache_cmd->require_subcommand(1);
  auto* check = cache_cmd->add_subcommand("check", "Verify every entry; nonzero exit on rejections");
  check->add_option("file", cache_file)->required();
  auto* gc = cache_cmd->add_subcommand("gc", "Drop entries failing verification and rewrite canonically");
  gc->add_option("file", cache_file)->required();

  CLI11_PARSE(app, argc, argv);

  if (cache_path.empty()) cache_path = cache::default_path().string();
  try {
    s7::set_degree_cap(degree_cap);
    if (*nf) return cmd_nf(context, expr);
    if (*deltar) return cmd_deltar(expr);
    if (*chi) return cmd_chi(expr);
    if (*tau) return cmd_tau(k, m, n, cache_path, verify_flag);
    if (*ver) return cmd_verify(suite, max_degree, seed, threads, cache_path, !no_timing);
    if (*check) return cmd_cache_check(cache_file);
    if (*gc) return cmd_cache_gc(cache_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
