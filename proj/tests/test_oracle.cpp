#include "permharmonic/fast_transform.hpp"
#include "permharmonic/oracle.hpp"
#include "permharmonic/random.hpp"
#include "permharmonic/yor_phi.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>

using namespace permharmonic;
using testing::max_abs;

namespace {

Partition part(std::initializer_list<std::size_t> p) { return Partition{p}; }

// f~ given by an explicit table over S_n.
GroupFunction tabulated(std::size_t n, Rng &rng) {
  auto table = std::make_shared<std::map<Permutation, double>>();
  for (const auto &s : enumerate_group(n))
    (*table)[s] = rng.uniform(-1.0, 1.0);
  return [table](const Permutation &s) { return table->at(s); };
}

} // namespace

TEST_CASE("partitions") {
  const auto p3 = enumerate_partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == part({3}));
  CHECK(p3[1] == part({2, 1}));
  CHECK(p3[2] == part({1, 1, 1}));
  CHECK(enumerate_partitions(1) == std::vector<Partition>{part({1})});

  const std::size_t counts[] = {0, 1, 2, 3, 5, 7, 11, 15, 22};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto ps = enumerate_partitions(n);
    CHECK(ps.size() == counts[n]);
    for (const auto &p : ps) {
      CHECK(p.is_valid());
      CHECK(p.n() == n);
    }
    CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
  }
  CHECK(to_string(part({3, 1})) == "(3,1)");
  CHECK_FALSE(part({1, 2}).is_valid());
  CHECK_THROWS_AS(enumerate_partitions(oracle_cap() + 1), OracleCapExceeded);
}

TEST_CASE("standard tableaux") {
  CHECK(standard_tableaux(part({5})).size() == 1);
  CHECK(standard_tableaux(part({4, 1})).size() == 4);
  CHECK(standard_tableaux(part({2, 2})).size() == 2);
  CHECK(hook_length_dimension(part({2, 2})) == 2);

  // Last-letter order for (n-1,1): n in row 2 first, 2 in row 2 last.
  const auto phi = standard_tableaux(part({4, 1}));
  CHECK(phi.front().rows[1] == std::vector<std::size_t>{5});
  CHECK(phi.back().rows[1] == std::vector<std::size_t>{2});

  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t sum_sq = 0;
    for (const auto &nu : enumerate_partitions(n)) {
      const auto ts = standard_tableaux(nu);
      CHECK(ts.size() == hook_length_dimension(nu));
      std::set<std::vector<std::vector<std::size_t>>> distinct;
      for (const auto &t : ts) {
        CHECK(t.is_standard());
        distinct.insert(t.rows);
      }
      CHECK(distinct.size() == ts.size());
      sum_sq += ts.size() * ts.size();
    }
    CHECK(sum_sq == testing::factorial(n));
  }
}

TEST_CASE("general YOR: one-dimensional representations") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto triv = yor_general_representation(Partition::trivial(n));
    const auto sign = yor_general_representation(Partition{std::vector<std::size_t>(n, 1)});
    for (const auto &s : enumerate_group(n)) {
      CHECK(triv(s)(0, 0) == doctest::Approx(1.0));
      CHECK(sign(s)(0, 0) == doctest::Approx(testing::inversion_sign(s)));
    }
  }
}

TEST_CASE("general YOR: relations, orthogonality, homomorphism") {
  Rng rng(8);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto &nu : enumerate_partitions(n)) {
      const auto rep = yor_general_representation(nu);
      CHECK(coxeter_deviation(rep) <= 1e-10);
      for (int t = 0; t < 10; ++t) {
        const auto s = rng.permutation(n);
        const auto d = rng.permutation(n);
        CHECK(orthogonality_defect(rep(s)) <= 1e-10);
        CHECK(max_abs(rep(compose(s, d)), rep(s) * rep(d)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("general YOR: characters are orthonormal") {
  // sum_sigma chi_nu(sigma) chi_mu(sigma) = n! [nu == mu]
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto irreps = irreducible_representations(n, PhiBasis::Tableau);
    const auto group = enumerate_group(n);
    std::vector<std::vector<double>> chars;
    for (const auto &ir : irreps) {
      std::vector<double> chi;
      for (const auto &s : group)
        chi.push_back(ir.rep(s).trace());
      chars.push_back(std::move(chi));
    }
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t b = 0; b < chars.size(); ++b) {
        double dot = 0.0;
        for (std::size_t i = 0; i < group.size(); ++i)
          dot += chars[a][i] * chars[b][i];
        CHECK(dot == doctest::Approx(a == b ? double(group.size()) : 0.0).epsilon(1e-10));
      }
  }
}

TEST_CASE("general YOR at (n-1,1) matches the explicit generators") {
  for (const auto &s : enumerate_group(4))
    CHECK(yor_general(part({3, 1}), s).trace() ==
          doctest::Approx(yor_phi(4, s).trace()).epsilon(1e-12));
  // In last-letter order the two bases coincide.
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto general = yor_general_representation(Partition::phi(n));
    for (std::size_t k = 1; k < n; ++k)
      CHECK(max_abs(general.generator(k).dense(), yor_phi_generator(n, k)) <= 1e-15);
  }
}

TEST_CASE("walk_group") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto irreps = irreducible_representations(n);
    std::set<Permutation> seen;
    std::size_t visits = 0;
    double worst = 0.0;
    walk_group(irreps, n, false, [&](const Permutation &s, std::span<const Matrix> mats) {
      ++visits;
      seen.insert(s);
      for (std::size_t i = 0; i < irreps.size(); ++i)
        worst = std::max(worst, max_abs(mats[i], irreps[i].rep(s)));
    });
    CHECK(visits == testing::factorial(n));
    CHECK(seen.size() == visits);
    CHECK(worst <= 1e-12);

    std::size_t fixed = 0;
    walk_group(irreps, n, true, [&](const Permutation &s, std::span<const Matrix>) {
      ++fixed;
      CHECK(s(n) == n);
    });
    CHECK(fixed == testing::factorial(n - 1));
  }
}

TEST_CASE("lift") {
  const std::vector<double> c(4, 2.5);
  const auto fc = lift(c);
  for (const auto &s : enumerate_group(4))
    CHECK(fc(s) == 2.5);

  const std::vector<double> f{10, 20, 30};
  CHECK(lift(f)(Permutation::from_images({2, 3, 1})) == 10);

  const std::vector<double> g{1.5, -2, 7, 0.25};
  const auto lg = lift(g);
  for (const auto &s : enumerate_group(4))
    for (const auto &d : enumerate_group(4))
      if (d(4) == 4)
        CHECK(lg(compose(s, d)) == lg(s));
}

TEST_CASE("fourier_full basics") {
  const std::size_t n = 4;
  const auto zero = fourier_full([](const Permutation &) { return 0.0; }, n);
  for (const auto &b : zero.blocks)
    CHECK(b.cwiseAbs().maxCoeff() == 0.0);

  const auto one = fourier_full([](const Permutation &) { return 1.0; }, n);
  for (std::size_t i = 0; i < one.shapes.size(); ++i) {
    if (one.shapes[i] == Partition::trivial(n))
      CHECK(one.blocks[i](0, 0) == doctest::Approx(24.0));
    else
      CHECK(one.blocks[i].cwiseAbs().maxCoeff() <= 1e-12);
  }

  const auto delta = fourier_full([](const Permutation &s) { return s.is_identity() ? 1.0 : 0.0; }, n);
  for (const auto &b : delta.blocks)
    CHECK(max_abs(b, Matrix::Identity(b.rows(), b.cols())) == 0.0);

  CHECK_THROWS_AS(delta.at(part({5})), std::out_of_range);
  CHECK_THROWS_AS(fourier_full([](const Permutation &) { return 0.0; }, oracle_cap() + 1),
                  OracleCapExceeded);
}

TEST_CASE("fourier_full matches direct evaluation") {
  Rng rng(21);
  const std::size_t n = 4;
  const auto f = tabulated(n, rng);
  const auto coeffs = fourier_full(f, n, PhiBasis::Tableau);
  for (std::size_t i = 0; i < coeffs.shapes.size(); ++i) {
    Matrix direct = Matrix::Zero(coeffs.blocks[i].rows(), coeffs.blocks[i].cols());
    for (const auto &s : enumerate_group(n))
      direct += f(s) * yor_general(coeffs.shapes[i], s);
    CHECK(max_abs(direct, coeffs.blocks[i]) <= 1e-12);
  }
}

TEST_CASE("projection Z") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(projection_Z(Partition::trivial(n))(0, 0) == doctest::Approx(1.0));
    for (const auto &nu : enumerate_partitions(n)) {
      const Matrix z = projection_Z(nu);
      CHECK(max_abs(z * z, z) <= 1e-10);
      if (nu == Partition::phi(n)) {
        Matrix unit = Matrix::Zero(z.rows(), z.cols());
        unit(0, 0) = 1.0;
        CHECK(max_abs(z, unit) <= 1e-12);
      } else if (!(nu == Partition::trivial(n))) {
        CHECK(z.cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
  CHECK(projection_Z(part({2, 1, 1})).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("band-limited coefficients of lifted functions") {
  SUBCASE("constant f: the (n-1,1) block vanishes too") {
    const std::vector<double> c(5, -3.0);
    const auto r = verify_prop1(c);
    CHECK(r.pass);
    for (std::size_t i = 0; i < r.shapes.size(); ++i)
      if (r.shapes[i] == Partition::phi(5))
        CHECK(r.block_max[i] <= r.tolerance);
  }
  SUBCASE("indicator of point 1 at n = 4") {
    const std::vector<double> e1{1, 0, 0, 0};
    const auto r = verify_prop1(e1);
    CHECK(r.pass);
    const auto coeffs = fourier_full(lift(e1), 4);
    CHECK(coeffs.at(part({4}))(0, 0) == doctest::Approx(6.0));
    const Matrix &phi = coeffs.at(part({3, 1}));
    CHECK(phi.col(0).cwiseAbs().maxCoeff() > 1.0);
    CHECK(phi.rightCols(2).cwiseAbs().maxCoeff() <= 1e-12);
    for (const auto &nu : {part({2, 2}), part({2, 1, 1}), part({1, 1, 1, 1})})
      CHECK(coeffs.at(nu).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("random f") {
    Rng rng(5);
    for (std::size_t n = 3; n <= 6; ++n)
      for (int t = 0; t < 5; ++t) {
        const auto r = verify_prop1(rng.vector(n));
        CHECK(r.pass);
        CHECK(r.vanishing_max <= r.tolerance);
        CHECK(r.phi_offcolumn_max <= r.tolerance);
      }
  }
  SUBCASE("F = F Z for lifted functions") {
    Rng rng(6);
    for (std::size_t n = 3; n <= 5; ++n) {
      const auto irreps = irreducible_representations(n);
      const auto coeffs = fourier_full(lift(rng.vector(n)), irreps, n);
      for (std::size_t i = 0; i < irreps.size(); ++i)
        CHECK(max_abs(coeffs.blocks[i], coeffs.blocks[i] * projection_Z(irreps[i])) <= 1e-9);
    }
  }
}

TEST_CASE("translation property") {
  Rng rng(12);
  const std::size_t n = 4;
  const auto f = tabulated(n, rng);
  CHECK(verify_translation(f, Permutation::identity(n), n).max_deviation == 0.0);
  const auto r = verify_translation(f, Permutation::adjacent(n, 2), n);
  CHECK(r.pass);
  CHECK(r.max_deviation <= 1e-10);

  // Shifting by d1 and then by d2 is the single shift by d1 o d2.
  const auto d1 = Permutation::from_images({2, 3, 1, 4});
  const auto d2 = Permutation::from_images({1, 4, 2, 3});
  GroupFunction g1 = [&](const Permutation &s) { return f(compose(d1, s)); };
  GroupFunction g2 = [&](const Permutation &s) { return g1(compose(d2, s)); };
  GroupFunction single = [&](const Permutation &s) { return f(compose(compose(d1, d2), s)); };
  GroupFunction swapped = [&](const Permutation &s) { return f(compose(compose(d2, d1), s)); };
  const auto G2 = fourier_full(g2, n);
  const auto S = fourier_full(single, n);
  const auto W = fourier_full(swapped, n);
  double same = 0.0, other = 0.0;
  for (std::size_t i = 0; i < G2.blocks.size(); ++i) {
    same = std::max(same, max_abs(G2.blocks[i], S.blocks[i]));
    other = std::max(other, max_abs(G2.blocks[i], W.blocks[i]));
  }
  CHECK(same <= 1e-12);
  CHECK(other > 1e-3);
}

TEST_CASE("Schur constants") {
  const auto s3 = derive_schur_constants(3);
  CHECK(s3.lambda1 == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(s3.max_offdiag <= 1e-10);
  CHECK(s3.block_sizes == std::vector<std::size_t>{1, 2});

  const auto s4 = derive_schur_constants(4);
  CHECK(s4.max_offdiag <= 1e-10);
  CHECK(s4.lambda1 == doctest::Approx(6.0 * 2.0).epsilon(1e-12));
  // Regression value from this oracle; equals 3! sqrt(4/3).
  CHECK(s4.lambda2 == doctest::Approx(6.928203230275509).epsilon(1e-12));
  CHECK(s4.block_sizes == std::vector<std::size_t>{1, 3});

  for (std::size_t n = 3; n <= 6; ++n) {
    const auto s = derive_schur_constants(n);
    CHECK(s.block_sizes == std::vector<std::size_t>{1, n - 1});
    CHECK(std::abs(s.lambda1 - s.lambda1_expected) <= 1e-9 * s.lambda1_expected);
    CHECK(s.max_offdiag <= 1e-9);
  }

  // n = 2: both scalars coincide, so C is a single scalar block.
  CHECK(derive_schur_constants(2).block_sizes == std::vector<std::size_t>{2});
}

TEST_CASE("oracle first column is a multiple of the fast transform") {
  Rng rng(14);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto lambda2 = derive_schur_constants(n).lambda2;
    const auto f = rng.vector(n);
    const auto coeffs = fourier_full(lift(f), n);
    const auto X = transform(TransformPlan(n), f);
    const Matrix &phi = coeffs.at(Partition::phi(n));
    for (std::size_t i = 1; i < n; ++i)
      CHECK(std::abs(phi(i - 1, 0) - lambda2 * X.coeffs[i]) <= 1e-9);
  }
}

TEST_CASE("oracle cap follows the environment") {
  ::setenv("PERMHARMONIC_ORACLE_CAP", "3", 1);
  CHECK(oracle_cap() == 3);
  CHECK_THROWS_AS(enumerate_partitions(4), OracleCapExceeded);
  CHECK_THROWS_AS(verify_prop1(std::vector<double>(4, 1.0)), OracleCapExceeded);
  ::setenv("PERMHARMONIC_ORACLE_CAP", "junk", 1);
  CHECK(oracle_cap() == kDefaultOracleCap);
  ::unsetenv("PERMHARMONIC_ORACLE_CAP");
  CHECK(oracle_cap() == kDefaultOracleCap);
}

TEST_CASE("Schur tolerance is absolute through n = 6") {
  for (std::size_t n = 2; n <= 6; ++n)
    CHECK(schur_tolerance(n) == 1e-9);
  CHECK(schur_tolerance(7) == doctest::Approx(6e-9));
  CHECK(schur_tolerance(8) == doctest::Approx(42e-9));
  CHECK(derive_schur_constants(5).tolerance == 1e-9);
}

TEST_CASE("lambda2 follows (n-1)! sqrt(n/(n-1))") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const double nd = static_cast<double>(n);
    const double expect = static_cast<double>(testing::factorial(n - 1)) * std::sqrt(nd / (nd - 1));
    CHECK(derive_schur_constants(n).lambda2 == doctest::Approx(expect).epsilon(1e-12));
  }
}
