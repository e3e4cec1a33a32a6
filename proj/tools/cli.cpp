#include "cli.hpp"

#include "permharmonic/fast_transform.hpp"
#include "permharmonic/oracle.hpp"
#include "permharmonic/permutation.hpp"
#include "permharmonic/random.hpp"
#include "permharmonic/vector_io.hpp"
#include "permharmonic/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace permharmonic::cli {

namespace {

using nlohmann::json;

constexpr double kShiftTolerance = 1e-10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string &path, std::istream &in) {
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file)
    throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::vector<double> read_vector(const std::string &path, std::istream &in) {
  std::vector<double> v;
  try {
    v = parse_vector(read_all(path, in));
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  if (v.size() < 2)
    throw UsageError("input vector needs at least 2 entries, got " + std::to_string(v.size()));
  return v;
}

void print_vector(std::ostream &out, const std::string &format, std::span<const double> v,
                  json extra) {
  if (format == "json") {
    json doc = {{"n", v.size()}, {"values", std::vector<double>(v.begin(), v.end())}};
    doc.update(extra);
    out << doc.dump() << '\n';
    return;
  }
  out << (format == "csv" ? format_csv(v) : format_text(v));
  if (!extra.empty())
    out << extra.dump() << '\n';
}

json report_json(const RunReport &report, bool timing) {
  json checks = json::array();
  for (const auto &c : report.checks)
    checks.push_back({{"name", c.name},
                      {"deviation", c.deviation},
                      {"tolerance", c.tolerance},
                      {"trials", c.trials},
                      {"pass", c.pass()}});
  json doc = {{"command", report.command}, {"suite", report.suite}, {"n", report.n},
              {"seed", report.seed},       {"pass", report.pass()},  {"checks", checks}};
  if (!report.values.empty())
    doc["values"] = report.values;
  if (report.counts)
    doc["counts"] = {{"n", report.n}, {"mult", report.counts->mult}, {"add", report.counts->add}};
  if (timing)
    doc["wall_ns"] = report.wall_ns;
  return doc;
}

// --- transform -------------------------------------------------------------

struct TransformArgs {
  std::string input;
  bool inverse = false;
  bool counted = false;
  std::string format = "text";
};

int cmd_transform(const TransformArgs &args, std::istream &in, std::ostream &out) {
  const auto x = read_vector(args.input, in);
  const TransformPlan plan(x.size());
  std::vector<double> result;
  std::optional<OpCounts> counts;
  if (args.inverse) {
    if (args.counted) {
      auto r = inverse_transform_counted(plan, x);
      result = std::move(r.values);
      counts = r.counts;
    } else {
      result = inverse_transform(plan, std::span<const double>(x));
    }
  } else {
    if (args.counted) {
      auto r = transform_counted(plan, x);
      result = std::move(r.spectrum.coeffs);
      counts = r.counts;
    } else {
      result = transform(plan, x).coeffs;
    }
  }
  json extra = json::object();
  if (counts)
    extra = {{"n", x.size()}, {"mult", counts->mult}, {"add", counts->add}};
  print_vector(out, args.format, result, extra);
  return kPass;
}

// --- shift -----------------------------------------------------------------

struct ShiftArgs {
  std::string perm;
  std::string input;
  bool check = false;
  std::string format = "text";
};

int cmd_shift(const ShiftArgs &args, std::istream &in, std::ostream &out) {
  Permutation sigma = Permutation::identity(1);
  try {
    sigma = parse_permutation(args.perm);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  const auto x = read_vector(args.input, in);
  if (sigma.degree() != x.size())
    throw UsageError("permutation has degree " + std::to_string(sigma.degree()) +
                     " but the vector has length " + std::to_string(x.size()));
  const TransformPlan plan(x.size());
  const auto shifted = spectral_shift(sigma, transform(plan, x));

  json extra = json::object();
  bool pass = true;
  if (args.check) {
    const double dev = equivariance_deviation(plan, sigma, x);
    pass = dev <= kShiftTolerance;
    extra = {{"deviation", dev}, {"tolerance", kShiftTolerance}, {"pass", pass}};
  }
  print_vector(out, args.format, shifted.coeffs, extra);
  return pass ? kPass : kVerificationFailure;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::size_t n = 4;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  bool timing = false;
};

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
  RunReport report;
  try {
    report = run_suite(args.suite, {args.n, args.seed, args.trials});
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  out << report_json(report, args.timing).dump(2) << '\n';
  return report.pass() ? kPass : kVerificationFailure;
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
  std::size_t n = 4;
  std::uint64_t seed = 1;
  std::string input;
  bool timing = false;
};

int cmd_oracle(const OracleArgs &args, std::istream &in, std::ostream &out) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> f;
  std::size_t n = args.n;
  if (!args.input.empty()) {
    f = read_vector(args.input, in);
    n = f.size();
  }
  if (n < 2)
    throw UsageError("oracle needs n >= 2");
  if (n > oracle_cap())
    throw UsageError(OracleCapExceeded(n, oracle_cap()).what());
  if (f.empty()) {
    Rng rng(args.seed);
    f = rng.vector(n);
  }

  const auto prop1 = verify_prop1(f);
  const auto schur = derive_schur_constants(n);

  json blocks = json::object();
  json violations = json::array();
  for (std::size_t i = 0; i < prop1.shapes.size(); ++i) {
    const auto &nu = prop1.shapes[i];
    blocks[to_string(nu)] = prop1.block_max[i];
    const bool allowed = nu == Partition::trivial(n) || nu == Partition::phi(n);
    if (!allowed && prop1.block_max[i] > prop1.tolerance)
      violations.push_back(to_string(nu));
  }
  if (prop1.phi_offcolumn_max > prop1.tolerance)
    violations.push_back("phi_offcolumn");
  if (schur.max_offdiag > schur.tolerance)
    violations.push_back("schur_structure");
  if (std::abs(schur.lambda1 - schur.lambda1_expected) > 1e-9 * schur.lambda1_expected)
    violations.push_back("lambda1");

  json doc = {
      {"command", "oracle"},
      {"n", n},
      {"seed", args.seed},
      {"f", f},
      {"partitions", blocks},
      {"phi_offcolumn_max", prop1.phi_offcolumn_max},
      {"tolerance", prop1.tolerance},
      {"lambda1", schur.lambda1},
      {"lambda1_expected", schur.lambda1_expected},
      {"lambda2", schur.lambda2},
      {"schur_max_offdiag", schur.max_offdiag},
      {"schur_tolerance", schur.tolerance},
      {"block_sizes", schur.block_sizes},
      {"violations", violations},
      {"pass", violations.empty()},
  };
  if (args.timing)
    doc["wall_ns"] = std::chrono::duration_cast<std::chrono::nanoseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  out << doc.dump(2) << '\n';
  return violations.empty() ? kPass : kVerificationFailure;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::size_t> sizes{2, 8, 16, 32, 64, 128, 256, 512, 1024};
  std::size_t reps = 200;
  std::string format = "csv";
  /// Dense T is n^2 doubles; beyond this only the fast path is timed.
  std::size_t dense_limit = 4096;
};

template <typename F> double time_per_rep(std::size_t reps, F &&body) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < reps; ++r)
    body();
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return static_cast<double>(ns) / static_cast<double>(reps);
}

int cmd_bench(const BenchArgs &args, std::ostream &out) {
  if (args.reps == 0)
    throw UsageError("--reps must be positive");
  json rows = json::array();
  std::optional<std::size_t> crossover;
  Rng rng(1);
  volatile double sink = 0.0;
  for (auto n : args.sizes) {
    if (n < 2)
      throw UsageError("bench sizes must be at least 2");
    const TransformPlan plan(n);
    const auto x = rng.vector(n);
    const auto counted = transform_counted(plan, x);
    const double nd = static_cast<double>(n);

    std::vector<double> buffer(n);
    const double fast_ns = time_per_rep(args.reps, [&] {
      forward_transform<double>(plan, x, buffer);
      sink = sink + buffer[0];
    });
    json row = {
        {"n", n},
        {"mult", counted.counts.mult},
        {"add", counted.counts.add},
        {"total_ops", counted.counts.mult + counted.counts.add},
        {"bound_n3_minus_n2", nd * nd * nd - nd * nd},
        {"bound_3n_n_minus_1_over_2", 3.0 * nd * (nd - 1.0) / 2.0},
        {"fast_ns", fast_ns},
    };
    if (n <= args.dense_limit) {
      const Matrix T = dense_T(plan);
      const Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(n));
      Eigen::VectorXd y(static_cast<Eigen::Index>(n));
      const double dense_ns = time_per_rep(args.reps, [&] {
        y.noalias() = T * xv;
        sink = sink + y[0];
      });
      row["dense_ns"] = dense_ns;
      if (!crossover && fast_ns < dense_ns)
        crossover = n;
    } else {
      row["dense_ns"] = nullptr;
    }
    rows.push_back(row);
  }

  if (args.format == "json") {
    json doc = {{"command", "bench"}, {"reps", args.reps}, {"rows", rows}};
    doc["crossover_n"] = crossover ? json(*crossover) : json(nullptr);
    out << doc.dump(2) << '\n';
    return kPass;
  }
  out << "n,mult,add,total_ops,bound_n3_minus_n2,bound_3n_n_minus_1_over_2,fast_ns,dense_ns\n";
  for (const auto &r : rows) {
    out << r["n"].get<std::size_t>() << ',' << r["mult"].get<std::uint64_t>() << ','
        << r["add"].get<std::uint64_t>() << ',' << r["total_ops"].get<std::uint64_t>() << ','
        << static_cast<std::uint64_t>(r["bound_n3_minus_n2"].get<double>()) << ','
        << static_cast<std::uint64_t>(r["bound_3n_n_minus_1_over_2"].get<double>()) << ','
        << r["fast_ns"].get<double>() << ',';
    if (!r["dense_ns"].is_null())
      out << r["dense_ns"].get<double>();
    out << '\n';
  }
  out << "# crossover_n," << (crossover ? std::to_string(*crossover) : "none") << '\n';
  return kPass;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Fourier transform on the symmetric-group homogeneous space S_n/S_{n-1}",
               "permharmonic"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "csv", "json"};

  TransformArgs targs;
  auto *transform_cmd = app.add_subcommand("transform", "Transform a vector (X = T x)");
  transform_cmd->add_option("input", targs.input, "Vector file; stdin if omitted or -");
  transform_cmd->add_flag("--inverse", targs.inverse, "Apply the inverse transform");
  transform_cmd->add_flag("--counted", targs.counted, "Report multiplication/addition counts");
  transform_cmd->add_option("--format", targs.format)->check(CLI::IsMember(formats));

  ShiftArgs sargs;
  auto *shift_cmd = app.add_subcommand("shift", "Spectral shift (1 + D(sigma)^t) T x");
  shift_cmd->add_option("--perm", sargs.perm, "1-based one-line permutation, e.g. \"2 3 1\"")
      ->required();
  shift_cmd->add_option("input", sargs.input, "Vector file; stdin if omitted or -");
  shift_cmd->add_flag("--check", sargs.check, "Compare against T P(sigma) x");
  shift_cmd->add_option("--format", sargs.format)->check(CLI::IsMember(formats));

  VerifyArgs vargs;
  auto *verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites(std::begin(kSuiteNames), std::end(kSuiteNames));
  suites.push_back("all");
  verify_cmd->add_option("--suite", vargs.suite)->check(CLI::IsMember(suites));
  verify_cmd->add_option("--n", vargs.n, "Degree n");
  verify_cmd->add_option("--seed", vargs.seed, "PRNG seed (mt19937_64)");
  verify_cmd->add_option("--trials", vargs.trials, "Random trials per check (0 = defaults)");
  verify_cmd->add_flag("--timing", vargs.timing, "Include wall time in the report");

  OracleArgs oargs;
  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force full-group Fourier report");
  oracle_cmd->add_option("--n", oargs.n, "Degree n (random f)");
  oracle_cmd->add_option("--seed", oargs.seed, "PRNG seed for the random f");
  oracle_cmd->add_option("--input", oargs.input, "Use this vector as f instead");
  oracle_cmd->add_flag("--timing", oargs.timing, "Include wall time in the report");

  BenchArgs bargs;
  auto *bench_cmd = app.add_subcommand("bench", "Fast O(n) path vs dense multiply");
  bench_cmd->add_option("--n-list", bargs.sizes, "Sizes to run")->delimiter(',');
  bench_cmd->add_option("--reps", bargs.reps, "Repetitions per size");
  bench_cmd->add_option("--format", bargs.format)->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*transform_cmd)
      return cmd_transform(targs, in, out);
    if (*shift_cmd)
      return cmd_shift(sargs, in, out);
    if (*verify_cmd)
      return cmd_verify(vargs, out);
    if (*oracle_cmd)
      return cmd_oracle(oargs, in, out);
    if (*bench_cmd)
      return cmd_bench(bargs, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

} // namespace permharmonic::cli
