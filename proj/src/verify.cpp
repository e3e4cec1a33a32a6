#include "permharmonic/verify.hpp"

#include "permharmonic/oracle.hpp"
#include "permharmonic/random.hpp"
#include "permharmonic/yor_phi.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace permharmonic {

namespace {

constexpr double kDirectTol = 1e-12;
constexpr double kChainTol = 1e-10;
constexpr double kOracleTol = 1e-9;

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v)
    m = std::max(m, std::abs(x));
  return m;
}

double two_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v)
    s += x * x;
  return std::sqrt(s);
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i)
    f *= static_cast<double>(i);
  return f;
}

// Position of sigma in the lexicographic listing of S_n.
std::size_t lex_rank(const Permutation &sigma) {
  const auto &map = sigma.zero_based();
  const std::size_t n = map.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (map[j] < map[i])
        ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

void require_range(std::string_view suite, std::size_t n, std::size_t lo, std::size_t hi) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string(suite) + " suite takes " + std::to_string(lo) +
                                " <= n <= " + std::to_string(hi) + ", got n = " +
                                std::to_string(n));
}

void require_oracle(std::string_view suite, std::size_t n) {
  if (n > oracle_cap())
    throw OracleCapExceeded(n, oracle_cap());
  require_range(suite, n, 2, oracle_cap());
}

std::size_t trials_or(std::size_t trials, std::size_t fallback) {
  return trials ? trials : fallback;
}

} // namespace

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult &c) { return c.pass(); });
}

bool suite_needs_oracle(std::string_view suite) {
  return suite == "prop1" || suite == "translation" || suite == "schur" || suite == "all";
}

double equivariance_deviation(const TransformPlan &plan, const Permutation &sigma,
                              std::span<const double> x) {
  const auto lhs = transform(plan, apply_to_vector(sigma, x));
  const auto rhs = spectral_shift(sigma, transform(plan, x));
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    worst = std::max(worst, std::abs(lhs.coeffs[i] - rhs.coeffs[i]));
  return worst;
}

double conjugation_deviation(std::size_t n, std::size_t k) {
  const Matrix T = dense_T(TransformPlan(n));
  const Matrix lhs = T * permutation_matrix(Permutation::adjacent(n, k)) * T.transpose();
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix rhs = Matrix::Zero(nn, nn);
  rhs(0, 0) = 1.0;
  rhs.bottomRightCorner(nn - 1, nn - 1) = yor_phi_generator(n, k);
  return max_abs_deviation(lhs, rhs);
}

void check_coxeter(RunReport &report, std::size_t n) {
  report.add({"coxeter_relations", verify_coxeter(n), kDirectTol, 1});
}

void check_orthogonality(RunReport &report, std::size_t n, std::uint64_t seed,
                         std::size_t trials) {
  const TransformPlan plan(n);
  report.add({"T_orthogonality", orthogonality_defect(dense_T(plan)), kDirectTol, 1});

  Rng rng(seed);
  const auto rep = yor_phi_representation(n);
  const std::size_t count = trials_or(trials, 20);
  double yor = 0.0;
  double parseval = 0.0;
  for (std::size_t t = 0; t < count; ++t) {
    yor = std::max(yor, orthogonality_defect(rep(rng.permutation(n))));
    const auto x = rng.vector(n);
    const auto X = transform(plan, x);
    parseval = std::max(parseval, std::abs(two_norm(X.coeffs) - two_norm(x)) /
                                      std::max(1.0, two_norm(x)));
  }
  report.add({"yor_phi_orthogonality", yor, kChainTol, count});
  report.add({"parseval", parseval, kDirectTol, count});
}

void check_theorem(RunReport &report, std::size_t n, std::uint64_t seed,
                   std::size_t trials) {
  const TransformPlan plan(n);
  Rng rng(seed);

  double equiv = 0.0;
  std::size_t equiv_trials = 0;
  if (n <= 5) {
    for (const auto &sigma : enumerate_group(n)) {
      equiv = std::max(equiv, equivariance_deviation(plan, sigma, rng.vector(n)));
      ++equiv_trials;
    }
  } else {
    equiv_trials = trials_or(trials, 500);
    for (std::size_t t = 0; t < equiv_trials; ++t) {
      const auto sigma = rng.permutation(n);
      equiv = std::max(equiv, equivariance_deviation(plan, sigma, rng.vector(n)));
    }
  }
  report.add({"equivariance", equiv, kChainTol, equiv_trials});

  double conj = 0.0;
  for (std::size_t k = 1; k < n; ++k)
    conj = std::max(conj, conjugation_deviation(n, k));
  report.add({"generator_conjugation", conj, kDirectTol, n - 1});

  const Matrix T = dense_T(plan);
  const std::size_t count = trials_or(trials, 20);
  double forward = 0.0, round_trip = 0.0, inverse = 0.0;
  for (std::size_t t = 0; t < count; ++t) {
    const auto x = rng.vector(n);
    const auto X = transform(plan, x);
    const Eigen::VectorXd dense =
        T * Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      forward = std::max(forward, std::abs(X.coeffs[i] - dense[i]) /
                                      std::max(1.0, sup_norm(x)));
    const auto back = inverse_transform(plan, X);
    const auto back_dense = inverse_transform_dense(plan, X.coeffs);
    for (std::size_t i = 0; i < n; ++i) {
      round_trip = std::max(round_trip, std::abs(back[i] - x[i]));
      inverse = std::max(inverse, std::abs(back[i] - back_dense[i]));
    }
  }
  report.add({"fast_dense_agreement", forward, kDirectTol, count});
  report.add({"round_trip", round_trip, kChainTol, count});
  report.add({"inverse_fast_dense", inverse, kDirectTol, count});
}

void check_counts(RunReport &report, std::size_t n) {
  const TransformPlan plan(n);
  const std::vector<double> x(n, 1.0);
  const auto fwd = transform_counted(plan, x);
  const auto inv = inverse_transform_counted(plan, fwd.spectrum.coeffs);
  const double target = 2.0 * static_cast<double>(n) - 2.0;
  auto off = [&](const OpCounts &c) {
    return std::abs(static_cast<double>(c.mult) - target) +
           std::abs(static_cast<double>(c.add) - target);
  };
  report.add({"forward_op_count", off(fwd.counts), 0.0, 1});
  report.add({"inverse_op_count", off(inv.counts), 0.0, 1});
  report.counts = fwd.counts;
}

void check_prop1(RunReport &report, std::size_t n, std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  const std::size_t count = trials_or(trials, 50);
  double vanishing = 0.0;
  double offcolumn = 0.0;
  for (std::size_t t = 0; t < count; ++t) {
    const auto f = rng.vector(n);
    const auto r = verify_prop1(f);
    const double scale = factorial(n) * sup_norm(f);
    vanishing = std::max(vanishing, r.vanishing_max / scale);
    offcolumn = std::max(offcolumn, r.phi_offcolumn_max / scale);
  }
  // Deviations are normalized by n! ||f||_inf.
  report.add({"nontrivial_blocks_vanish", vanishing, kOracleTol, count});
  report.add({"phi_block_first_column_only", offcolumn, kOracleTol, count});

  const auto irreps = irreducible_representations(n, PhiBasis::Generators);
  const auto phi = Partition::phi(n);
  double z_phi = 0.0, z_other = 0.0, z_idem = 0.0;
  std::vector<Matrix> zs;
  for (const auto &ir : irreps) {
    const Matrix z = projection_Z(ir);
    zs.push_back(z);
    z_idem = std::max(z_idem, max_abs_deviation(z * z, z));
    if (ir.shape == phi) {
      Matrix unit = Matrix::Zero(z.rows(), z.cols());
      unit(0, 0) = 1.0;
      z_phi = std::max(z_phi, max_abs_deviation(z, unit));
    } else if (!(ir.shape == Partition::trivial(n))) {
      z_other = std::max(z_other, z.cwiseAbs().maxCoeff());
    }
  }
  report.add({"Z_phi_single_unit_entry", z_phi, kDirectTol, 1});
  report.add({"Z_vanishes_elsewhere", z_other, kDirectTol, 1});
  report.add({"Z_idempotent", z_idem, kChainTol, 1});

  // F~(nu) = F~(nu) Z(nu) for a lifted function.
  const auto f = rng.vector(n);
  const auto coeffs = fourier_full(lift(f), irreps, n);
  double fixed = 0.0;
  for (std::size_t i = 0; i < irreps.size(); ++i)
    fixed = std::max(fixed, max_abs_deviation(coeffs.blocks[i], coeffs.blocks[i] * zs[i]));
  report.add({"fixed_point_F_equals_FZ", fixed / (factorial(n) * sup_norm(f)), kOracleTol, 1});
}

void check_translation(RunReport &report, std::size_t n, std::uint64_t seed,
                       std::size_t trials) {
  Rng rng(seed);
  const std::size_t count = trials_or(trials, 20);
  double worst = 0.0;
  for (std::size_t t = 0; t < count; ++t) {
    const auto values = rng.vector(static_cast<std::size_t>(factorial(n)));
    GroupFunction f = [&values](const Permutation &s) { return values[lex_rank(s)]; };
    const auto delta = rng.permutation(n);
    worst = std::max(worst, verify_translation(f, delta, n).max_deviation);
  }
  report.add({"translation_property", worst, kOracleTol, count});
}

void check_schur(RunReport &report, std::size_t n, std::uint64_t seed, std::size_t trials) {
  const auto sc = derive_schur_constants(n);
  report.values["lambda1"] = sc.lambda1;
  report.values["lambda2"] = sc.lambda2;
  report.values["lambda1_expected"] = sc.lambda1_expected;
  for (std::size_t b = 0; b < sc.block_sizes.size(); ++b)
    report.values["block_" + std::to_string(b + 1) + "_size"] =
        static_cast<double>(sc.block_sizes[b]);

  report.add({"C_two_scalar_blocks", sc.max_offdiag, sc.tolerance, 1});
  report.add({"lambda1_relative_error",
              std::abs(sc.lambda1 - sc.lambda1_expected) / sc.lambda1_expected, kOracleTol,
              1});
  const bool split = sc.block_sizes == std::vector<std::size_t>{1, n - 1};
  report.add({"block_split_1_plus_n_minus_1", split ? 0.0 : 1.0, 0.0, 1});

  // The first column of F~(phi) is lambda2 times the trailing transform coefficients.
  Rng rng(seed);
  const TransformPlan plan(n);
  const std::vector<Irrep> irreps{
      {Partition::phi(n), yor_phi_representation(n)},
  };
  const std::size_t count = trials_or(trials, 5);
  double bridge = 0.0;
  for (std::size_t t = 0; t < count; ++t) {
    const auto f = rng.vector(n);
    const auto block = fourier_full(lift(f), irreps, n).blocks[0];
    const auto X = transform(plan, f);
    for (std::size_t i = 1; i < n; ++i)
      bridge = std::max(bridge, std::abs(block(i - 1, 0) - sc.lambda2 * X.coeffs[i]));
  }
  report.add({"oracle_fast_path_bridge", bridge, sc.tolerance, count});
}

RunReport run_suite(std::string_view suite, const SuiteOptions &options) {
  RunReport report;
  report.command = "verify";
  report.suite = std::string(suite);
  report.n = options.n;
  report.seed = options.seed;
  const std::size_t n = options.n;
  const auto start = std::chrono::steady_clock::now();

  // Each suite draws from its own stream so adding a suite to "all" does not
  // perturb the others.
  auto run_one = [&](std::string_view name) {
    if (name == "coxeter") {
      require_range(name, n, 2, 64);
      check_coxeter(report, n);
    } else if (name == "orthogonality") {
      require_range(name, n, 2, 1024);
      check_orthogonality(report, n, options.seed, options.trials);
    } else if (name == "theorem") {
      require_range(name, n, 2, 64);
      check_theorem(report, n, options.seed + 1, options.trials);
    } else if (name == "counts") {
      require_range(name, n, 2, std::size_t{1} << 24);
      check_counts(report, n);
    } else if (name == "prop1") {
      require_oracle(name, n);
      check_prop1(report, n, options.seed + 2, options.trials);
    } else if (name == "translation") {
      require_oracle(name, n);
      check_translation(report, n, options.seed + 3, options.trials);
    } else if (name == "schur") {
      require_oracle(name, n);
      check_schur(report, n, options.seed + 4, options.trials);
    } else {
      throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
    }
  };

  if (suite == "all") {
    if (n > oracle_cap())
      throw OracleCapExceeded(n, oracle_cap());
    for (auto name : kSuiteNames)
      run_one(name);
  } else {
    run_one(suite);
  }

  report.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

} // namespace permharmonic
