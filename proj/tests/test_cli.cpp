#include "cli.hpp"

#include "permharmonic/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

using nlohmann::json;
using namespace permharmonic;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<double> lines(const std::string &text) {
  std::vector<double> v;
  std::istringstream s(text);
  std::string line;
  while (std::getline(s, line))
    if (!line.empty() && line.front() != '{')
      v.push_back(std::stod(line));
  return v;
}

// T (1, 2, 3) = (6/sqrt 3, 3/sqrt 6, 1/sqrt 2); text output keeps 15 digits.
bool close_to_example(const std::vector<double> &v) {
  const std::vector<double> expect{6 / std::sqrt(3.0), 3 / std::sqrt(6.0), 1 / std::sqrt(2.0)};
  if (v.size() != 3)
    return false;
  for (std::size_t i = 0; i < 3; ++i)
    if (std::abs(v[i] - expect[i]) > 1e-13)
      return false;
  return true;
}

} // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"transform", "--format", "xml"}, "1 2").code == 2);
  CHECK(run({"transform"}, "1 x 2").code == 2);
  CHECK(run({"transform"}, "5").code == 2);
  CHECK(run({"transform", "/nonexistent/file"}).code == 2);
  CHECK(run({"shift"}, "1 2 3").code == 2);
  CHECK(run({"shift", "--perm", "2 2 1"}, "1 2 3").code == 2);
  CHECK(run({"shift", "--perm", "2 1"}, "1 2 3").code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "coxeter", "--n", "65"}).code == 2);
  CHECK(run({"verify", "--n", "1"}).code == 2);
  CHECK(run({"bench", "--n-list", "1"}).code == 2);
  CHECK(run({"bench", "--reps", "0"}).code == 2);
  const auto r = run({"verify", "--suite", "nope"});
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("transform") != std::string::npos);
}

TEST_CASE("transform") {
  const auto r = run({"transform"}, "1\n2\n3\n");
  CHECK(r.code == 0);
  CHECK(close_to_example(lines(r.out)));

  const auto csv = run({"transform", "--format", "csv"}, "1,2,3");
  CHECK(std::count(csv.out.begin(), csv.out.end(), ',') == 2);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 1);

  const auto counted = run({"transform", "--counted"}, "1 2 3");
  CHECK(counted.code == 0);
  const auto last = counted.out.substr(counted.out.rfind('{'));
  const auto counts = json::parse(last);
  CHECK(counts["n"] == 3);
  CHECK(counts["mult"] == 4);
  CHECK(counts["add"] == 4);

  const auto j = json::parse(run({"transform", "--counted", "--format", "json"}, "1 2 3 4").out);
  CHECK(j["n"] == 4);
  CHECK(j["mult"] == 6);
  CHECK(j["add"] == 6);
  CHECK(j["values"].size() == 4);
}

TEST_CASE("transform reads a file argument") {
  const std::string path = "permharmonic_cli_input.txt";
  {
    std::ofstream f(path);
    f << "1 2 3\n";
  }
  const auto r = run({"transform", path});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(close_to_example(lines(r.out)));
}

TEST_CASE("inverse round trip through text output") {
  const std::string x = "0.5 -1.25 3 7.75 -2 0.125";
  const auto fwd = run({"transform"}, x);
  const auto back = run({"transform", "--inverse", "--counted"}, fwd.out);
  CHECK(back.code == 0);
  const auto values = lines(back.out);
  const std::vector<double> expect{0.5, -1.25, 3, 7.75, -2, 0.125};
  REQUIRE(values.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(std::abs(values[i] - expect[i]) <= 1e-12);
  const auto counts = json::parse(back.out.substr(back.out.rfind('{')));
  CHECK(counts["mult"] == 10);
  CHECK(counts["add"] == 10);
}

TEST_CASE("shift") {
  const auto r = run({"shift", "--perm", "2 3 1", "--check", "--format", "json"}, "1 2 3");
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["deviation"].get<double>() <= 1e-10);

  // The shifted spectrum is the transform of P(sigma) x = (2, 3, 1).
  const auto shifted = lines(run({"shift", "--perm", "2,3,1"}, "1 2 3").out);
  const auto direct = lines(run({"transform"}, "2 3 1").out);
  REQUIRE(shifted.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(std::abs(shifted[i] - direct[i]) <= 1e-12);
}

TEST_CASE("shift conventions") {
  const auto j = json::parse(run({"shift", "--perm", "2 1 3", "--check", "--format", "json"}, "1 2 3").out);
  CHECK(j["deviation"].get<double>() <= 1e-12);

  CHECK(run({"shift", "--perm", "1 2 3"}, "1 2 3").out == run({"transform"}, "1 2 3").out);

  // P(a o b) x = P(b) P(a) x with a = 2 1 3, b = 3 2 1, a o b = 3 1 2.
  const auto once = lines(run({"shift", "--perm", "3 1 2"}, "1 2 3").out);
  const auto twice = lines(run({"shift", "--perm", "3 2 1"}, "2 1 3").out);
  REQUIRE(once.size() == 3);
  REQUIRE(twice.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(std::abs(once[i] - twice[i]) <= 1e-12);
}

TEST_CASE("verify suites") {
  const auto cox = run({"verify", "--suite", "coxeter", "--n", "10"});
  CHECK(cox.code == 0);
  auto j = json::parse(cox.out);
  CHECK(j["pass"] == true);
  CHECK(j["suite"] == "coxeter");
  CHECK_FALSE(j.contains("wall_ns"));

  j = json::parse(run({"verify", "--suite", "prop1", "--n", "5", "--seed", "7"}).out);
  CHECK(j["pass"] == true);
  CHECK(j["seed"] == 7);

  const auto all = run({"verify", "--suite", "all", "--n", "4"});
  CHECK(all.code == 0);
  j = json::parse(all.out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() >= std::size(kSuiteNames));

  j = json::parse(run({"verify", "--suite", "counts", "--n", "100"}).out);
  CHECK(j["counts"]["mult"] == 198);
  CHECK(j["counts"]["add"] == 198);

  CHECK(json::parse(run({"verify", "--suite", "coxeter", "--timing"}).out).contains("wall_ns"));
}

TEST_CASE("verify output is deterministic") {
  const std::vector<std::string> args{"verify", "--suite", "all", "--n", "5", "--seed", "3"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto o1 = run({"oracle", "--n", "5", "--seed", "9"});
  const auto o2 = run({"oracle", "--n", "5", "--seed", "9"});
  CHECK(o1.out == o2.out);
}

TEST_CASE("a failing check maps to a failing report") {
  RunReport report;
  report.add({"ok", 0.0, 1e-12, 1});
  CHECK(report.pass());
  report.add({"bad", 1.0, 1e-12, 1});
  CHECK_FALSE(report.pass());
}

TEST_CASE("oracle") {
  const auto r = run({"oracle", "--n", "4", "--seed", "2"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["violations"].empty());
  CHECK(j["partitions"].size() == 5);
  CHECK(j["block_sizes"] == json::array({1, 3}));
  CHECK(std::abs(j["lambda1"].get<double>() - 12.0) <= 1e-9);

  const auto from_input = json::parse(run({"oracle", "--input", "-"}, "1 0 0").out);
  CHECK(from_input["n"] == 3);
  CHECK(from_input["pass"] == true);

  CHECK(run({"oracle", "--n", "9"}).code == 2);
  ::setenv("PERMHARMONIC_ORACLE_CAP", "9", 1);
  CHECK(run({"verify", "--suite", "schur", "--n", "9", "--trials", "1"}).code == 0);
  ::setenv("PERMHARMONIC_ORACLE_CAP", "4", 1);
  CHECK(run({"oracle", "--n", "5"}).code == 2);
  CHECK(run({"verify", "--suite", "prop1", "--n", "5"}).code == 2);
  ::unsetenv("PERMHARMONIC_ORACLE_CAP");
}

TEST_CASE("bench") {
  const auto r = run({"bench", "--n-list", "8,64", "--reps", "3"});
  CHECK(r.code == 0);
  std::istringstream s(r.out);
  std::string header, row8, row64, crossover;
  std::getline(s, header);
  std::getline(s, row8);
  std::getline(s, row64);
  std::getline(s, crossover);
  CHECK(header == "n,mult,add,total_ops,bound_n3_minus_n2,bound_3n_n_minus_1_over_2,fast_ns,dense_ns");
  CHECK(row64.rfind("64,126,126,252,258048,6048,", 0) == 0);
  CHECK(row8.rfind("8,14,14,28,448,84,", 0) == 0);
  CHECK(crossover.rfind("# crossover_n,", 0) == 0);

  const auto j = json::parse(run({"bench", "--n-list", "16", "--reps", "2", "--format", "json"}).out);
  CHECK(j["rows"][0]["total_ops"] == 60);

  const auto two = json::parse(run({"bench", "--n-list", "2", "--reps", "1", "--format", "json"}).out);
  CHECK(two["rows"][0]["mult"] == 2);
  CHECK(two["rows"][0]["add"] == 2);
}
