#pragma once

#include "permharmonic/counted_scalar.hpp"
#include "permharmonic/fast_transform.hpp"
#include "permharmonic/permutation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Named verification suites shared by the command-line tool and the test
// binaries. Each suite fills a RunReport with (deviation, tolerance) pairs;
// a report passes iff every deviation is within its tolerance.
namespace permharmonic {

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  std::size_t trials = 0;

  bool pass() const { return deviation <= tolerance; }
};

struct RunReport {
  std::string command;
  std::string suite;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::map<std::string, double> values; ///< derived quantities worth reporting
  std::optional<OpCounts> counts;
  std::int64_t wall_ns = 0;

  bool pass() const;
  void add(CheckResult check) { checks.push_back(std::move(check)); }
};

struct SuiteOptions {
  std::size_t n = 4;
  std::uint64_t seed = 1;
  /// Random trials per randomized check; 0 selects each check's default.
  std::size_t trials = 0;
};

inline constexpr std::string_view kSuiteNames[] = {
    "coxeter", "orthogonality", "theorem", "counts", "prop1", "translation", "schur",
};

/// Suites that need the brute-force oracle and therefore n <= oracle_cap().
bool suite_needs_oracle(std::string_view suite);

/**
 * Runs one suite by name, or every suite for "all". Throws
 * std::invalid_argument for an unknown name or an n the suite cannot take,
 * and OracleCapExceeded for oracle suites beyond the cap.
 */
RunReport run_suite(std::string_view suite, const SuiteOptions &options);

// Individual checks, also used directly by the acceptance tests.

/// ||T P(sigma) x - (1 (+) D(sigma)^t) T x||_inf.
double equivariance_deviation(const TransformPlan &plan, const Permutation &sigma,
                              std::span<const double> x);

/// ||T P(tau_k) T^t - (1 (+) D(tau_k))||_max.
double conjugation_deviation(std::size_t n, std::size_t k);

void check_coxeter(RunReport &report, std::size_t n);
void check_orthogonality(RunReport &report, std::size_t n, std::uint64_t seed,
                         std::size_t trials);
void check_theorem(RunReport &report, std::size_t n, std::uint64_t seed,
                   std::size_t trials);
void check_counts(RunReport &report, std::size_t n);
void check_prop1(RunReport &report, std::size_t n, std::uint64_t seed, std::size_t trials);
void check_translation(RunReport &report, std::size_t n, std::uint64_t seed,
                       std::size_t trials);
void check_schur(RunReport &report, std::size_t n, std::uint64_t seed, std::size_t trials);

} // namespace permharmonic
