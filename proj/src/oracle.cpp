#include "permharmonic/oracle.hpp"

#include "permharmonic/fast_transform.hpp"
#include "permharmonic/yor_phi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permharmonic {

namespace {

void require_cap(std::size_t n) {
  if (n > oracle_cap())
    throw OracleCapExceeded(n, oracle_cap());
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i)
    f *= static_cast<double>(i);
  return f;
}

void partitions_into(std::size_t remaining, std::size_t max_part,
                     std::vector<std::size_t> &prefix, std::vector<Partition> &out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

// Row index of each entry 1..n; two tableaux of the same shape are equal iff
// their row words are.
std::vector<std::size_t> row_word(const StandardTableau &t) {
  std::vector<std::size_t> word(t.shape.n());
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (auto e : t.rows[r])
      word[e - 1] = r;
  return word;
}

} // namespace

std::size_t Partition::n() const {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

bool Partition::is_valid() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0)
      return false;
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      return false;
  }
  return !parts.empty();
}

std::string to_string(const Partition &nu) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < nu.parts.size(); ++i)
    os << (i ? "," : "") << nu.parts[i];
  os << ')';
  return os.str();
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("enumerate_partitions: n must be at least 1");
  require_cap(n);
  std::vector<Partition> out;
  std::vector<std::size_t> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

std::size_t hook_length_dimension(const Partition &nu) {
  if (!nu.is_valid())
    throw std::invalid_argument("invalid partition " + to_string(nu));
  double hooks = 1.0;
  for (std::size_t r = 0; r < nu.rows(); ++r) {
    for (std::size_t c = 0; c < nu.parts[r]; ++c) {
      std::size_t below = 0;
      for (std::size_t rr = r + 1; rr < nu.rows() && nu.parts[rr] > c; ++rr)
        ++below;
      hooks *= static_cast<double>(nu.parts[r] - c + below);
    }
  }
  return static_cast<std::size_t>(std::llround(factorial(nu.n()) / hooks));
}

std::size_t StandardTableau::row_of(std::size_t entry) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto e : rows[r])
      if (e == entry)
        return r;
  throw std::out_of_range("entry " + std::to_string(entry) + " not in tableau");
}

std::size_t StandardTableau::column_of(std::size_t entry) const {
  for (const auto &row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] == entry)
        return c;
  throw std::out_of_range("entry " + std::to_string(entry) + " not in tableau");
}

bool StandardTableau::is_standard() const {
  if (rows.size() != shape.rows())
    return false;
  const std::size_t n = shape.n();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != shape.parts[r])
      return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const auto e = rows[r][c];
      if (e < 1 || e > n || seen[e])
        return false;
      seen[e] = true;
      if (c > 0 && rows[r][c - 1] >= e)
        return false;
      if (r > 0 && rows[r - 1][c] >= e)
        return false;
    }
  }
  return true;
}

std::vector<StandardTableau> standard_tableaux(const Partition &nu) {
  if (!nu.is_valid())
    throw std::invalid_argument("invalid partition " + to_string(nu));
  const std::size_t n = nu.n();
  if (n == 1)
    return {StandardTableau{nu, {{1}}}};

  std::vector<StandardTableau> out;
  for (std::size_t r = nu.rows(); r-- > 0;) {
    const bool removable = r + 1 == nu.rows() || nu.parts[r] > nu.parts[r + 1];
    if (!removable)
      continue;
    Partition smaller = nu;
    if (--smaller.parts[r] == 0)
      smaller.parts.pop_back();
    for (auto t : standard_tableaux(smaller)) {
      t.shape = nu;
      t.rows.resize(nu.rows());
      t.rows[r].push_back(n);
      out.push_back(std::move(t));
    }
  }
  return out;
}

GeneratorRepresentation yor_general_representation(const Partition &nu) {
  const auto tableaux = standard_tableaux(nu);
  const std::size_t n = nu.n();
  const std::size_t dim = tableaux.size();

  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<std::size_t>> words;
  words.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    words.push_back(row_word(tableaux[i]));
    index.emplace(words.back(), i);
  }

  std::vector<SparseGenerator> gens;
  gens.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    auto g = SparseGenerator::identity(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const auto &t = tableaux[i];
      const auto content = [&](std::size_t e) {
        return static_cast<long>(t.column_of(e)) - static_cast<long>(t.row_of(e));
      };
      const double r = static_cast<double>(content(k + 1) - content(k));
      g.diag[i] = 1.0 / r;
      auto swapped = words[i];
      std::swap(swapped[k - 1], swapped[k]);
      if (auto it = index.find(swapped); it != index.end() && swapped != words[i]) {
        g.partner[i] = it->second;
        g.off[i] = std::sqrt(1.0 - 1.0 / (r * r));
      }
    }
    gens.push_back(std::move(g));
  }
  return GeneratorRepresentation(n, dim, std::move(gens));
}

Matrix yor_general(const Partition &nu, const Permutation &sigma) {
  require_cap(nu.n());
  return yor_general_representation(nu)(sigma);
}

std::vector<Irrep> irreducible_representations(std::size_t n, PhiBasis basis) {
  std::vector<Irrep> out;
  for (auto &nu : enumerate_partitions(n)) {
    if (basis == PhiBasis::Generators && n >= 2 && nu == Partition::phi(n))
      out.push_back({nu, yor_phi_representation(n)});
    else
      out.push_back({nu, yor_general_representation(nu)});
  }
  return out;
}

void walk_group(std::span<const Irrep> irreps, std::size_t n, bool fix_last,
                const std::function<void(const Permutation &, std::span<const Matrix>)> &visit) {
  if (n == 0)
    throw std::invalid_argument("walk_group: n must be at least 1");
  require_cap(n);
  for (const auto &ir : irreps)
    if (ir.rep.degree() != n)
      throw std::invalid_argument("walk_group: irrep of S_" +
                                  std::to_string(ir.rep.degree()) + " in a walk of S_" +
                                  std::to_string(n));

  struct State {
    std::vector<std::uint32_t> images; // 0-based one-line form
    std::vector<Matrix> mats;
  };
  State root;
  root.images.resize(n);
  std::iota(root.images.begin(), root.images.end(), 0u);
  for (const auto &ir : irreps) {
    const auto d = static_cast<Eigen::Index>(ir.rep.dim());
    root.mats.push_back(Matrix::Identity(d, d));
  }

  // Left-multiplying by tau_j exchanges the values j and j+1.
  auto left_tau = [&](State &s, std::size_t j) {
    for (auto &v : s.images) {
      if (v == j - 1)
        v = static_cast<std::uint32_t>(j);
      else if (v == j)
        v = static_cast<std::uint32_t>(j - 1);
    }
    for (std::size_t i = 0; i < irreps.size(); ++i)
      irreps[i].rep.generator(j).left_multiply(s.mats[i]);
  };

  std::function<void(std::size_t, const State &)> level = [&](std::size_t m,
                                                              const State &in) {
    State cur = in;
    const std::size_t lowest = (m == n && fix_last) ? m : 1;
    for (std::size_t j = m; j >= lowest; --j) {
      if (j < m)
        left_tau(cur, j);
      if (m == n)
        visit(Permutation::from_zero_based(cur.images), cur.mats);
      else
        level(m + 1, cur);
      if (j == 1)
        break;
    }
  };

  if (n == 1)
    visit(Permutation::identity(1), root.mats);
  else
    level(2, root);
}

const Matrix &FourierCoefficients::at(const Partition &nu) const {
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (shapes[i] == nu)
      return blocks[i];
  throw std::out_of_range("no Fourier block for partition " + to_string(nu));
}

FourierCoefficients fourier_full(const GroupFunction &f, std::span<const Irrep> irreps,
                                 std::size_t n) {
  FourierCoefficients out;
  for (const auto &ir : irreps) {
    out.shapes.push_back(ir.shape);
    const auto d = static_cast<Eigen::Index>(ir.rep.dim());
    out.blocks.push_back(Matrix::Zero(d, d));
  }
  walk_group(irreps, n, false, [&](const Permutation &sigma, std::span<const Matrix> mats) {
    const double w = f(sigma);
    if (w == 0.0)
      return;
    for (std::size_t i = 0; i < mats.size(); ++i)
      out.blocks[i].noalias() += w * mats[i];
  });
  return out;
}

FourierCoefficients fourier_full(const GroupFunction &f, std::size_t n, PhiBasis basis) {
  const auto irreps = irreducible_representations(n, basis);
  return fourier_full(f, irreps, n);
}

GroupFunction lift(std::span<const double> f) {
  std::vector<double> values(f.begin(), f.end());
  return [values = std::move(values)](const Permutation &sigma) {
    if (sigma.degree() != values.size())
      throw std::invalid_argument("lifted function of degree " +
                                  std::to_string(values.size()) +
                                  " evaluated on a permutation of degree " +
                                  std::to_string(sigma.degree()));
    return values[sigma.zero_based().back()];
  };
}

Matrix projection_Z(const Irrep &irrep) {
  const std::size_t n = irrep.rep.degree();
  const auto d = static_cast<Eigen::Index>(irrep.rep.dim());
  Matrix z = Matrix::Zero(d, d);
  walk_group(std::span<const Irrep>(&irrep, 1), n, true,
             [&](const Permutation &, std::span<const Matrix> mats) {
               z += mats[0].transpose();
             });
  return z / factorial(n - 1);
}

Matrix projection_Z(const Partition &nu, PhiBasis basis) {
  const std::size_t n = nu.n();
  require_cap(n);
  if (basis == PhiBasis::Generators && n >= 2 && nu == Partition::phi(n))
    return projection_Z(Irrep{nu, yor_phi_representation(n)});
  return projection_Z(Irrep{nu, yor_general_representation(nu)});
}

BandLimitReport verify_prop1(std::span<const double> f) {
  const std::size_t n = f.size();
  if (n == 0)
    throw std::invalid_argument("verify_prop1: empty function");
  require_cap(n);

  BandLimitReport report;
  report.n = n;
  double sup = 0.0;
  for (double v : f)
    sup = std::max(sup, std::abs(v));
  report.tolerance = 1e-9 * factorial(n) * sup;

  const auto coeffs = fourier_full(lift(f), n, PhiBasis::Generators);
  for (std::size_t i = 0; i < coeffs.shapes.size(); ++i) {
    const auto &nu = coeffs.shapes[i];
    const auto &block = coeffs.blocks[i];
    const double norm = block.size() ? block.cwiseAbs().maxCoeff() : 0.0;
    report.shapes.push_back(nu);
    report.block_max.push_back(norm);
    const bool is_phi = n >= 2 && nu == Partition::phi(n);
    if (nu == Partition::trivial(n))
      continue;
    if (is_phi) {
      if (block.cols() > 1)
        report.phi_offcolumn_max =
            block.rightCols(block.cols() - 1).cwiseAbs().maxCoeff();
      continue;
    }
    report.vanishing_max = std::max(report.vanishing_max, norm);
  }
  report.pass = report.vanishing_max <= report.tolerance &&
                report.phi_offcolumn_max <= report.tolerance;
  return report;
}

TranslationReport verify_translation(const GroupFunction &f, const Permutation &delta,
                                     std::size_t n) {
  if (delta.degree() != n)
    throw std::invalid_argument("verify_translation: shift has the wrong degree");
  const auto irreps = irreducible_representations(n, PhiBasis::Generators);
  GroupFunction g = [&](const Permutation &sigma) { return f(compose(delta, sigma)); };
  const auto F = fourier_full(f, irreps, n);
  const auto G = fourier_full(g, irreps, n);

  TranslationReport report;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const Matrix expected = irreps[i].rep(delta).transpose() * F.blocks[i];
    report.max_deviation =
        std::max(report.max_deviation, max_abs_deviation(G.blocks[i], expected));
  }
  report.pass = report.max_deviation <= report.tolerance;
  return report;
}

Matrix homogeneous_fourier_matrix(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("homogeneous_fourier_matrix needs n >= 2");
  require_cap(n);
  const std::vector<Irrep> irreps{
      {Partition::trivial(n), yor_general_representation(Partition::trivial(n))},
      {Partition::phi(n), yor_phi_representation(n)},
  };
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix F(nn, nn);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> basis(n, 0.0);
    basis[j] = 1.0;
    const auto coeffs = fourier_full(lift(basis), irreps, n);
    F(0, j) = coeffs.blocks[0](0, 0);
    F.block(1, j, nn - 1, 1) = coeffs.blocks[1].col(0);
  }
  return F;
}

double schur_tolerance(std::size_t n) {
  return n <= 6 ? 1e-9 : 1e-9 * factorial(n - 1) / factorial(5);
}

SchurConstants derive_schur_constants(std::size_t n) {
  SchurConstants out;
  out.tolerance = schur_tolerance(n);
  const Matrix F = homogeneous_fourier_matrix(n);
  out.C = F * dense_T(TransformPlan(n)).transpose();
  out.lambda1 = out.C(0, 0);
  out.lambda1_expected = factorial(n - 1) * std::sqrt(static_cast<double>(n));

  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    sum += out.C(i, i);
  out.lambda2 = sum / static_cast<double>(n - 1);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double target = 0.0;
      if (i == j)
        target = i == 0 ? out.lambda1 : out.lambda2;
      out.max_offdiag = std::max(out.max_offdiag, std::abs(out.C(i, j) - target));
    }
  }

  const double scale = std::max(1.0, out.C.diagonal().cwiseAbs().maxCoeff());
  std::size_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(out.C(i, i) - out.C(i - 1, i - 1)) <= 1e-9 * scale) {
      ++run;
    } else {
      out.block_sizes.push_back(run);
      run = 1;
    }
  }
  out.block_sizes.push_back(run);
  return out;
}

} // namespace permharmonic
