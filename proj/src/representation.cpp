#include "permharmonic/representation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace permharmonic {

double max_abs_deviation(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_deviation: shape mismatch");
  if (a.size() == 0)
    return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double orthogonality_defect(const Matrix &m) {
  return max_abs_deviation(m * m.transpose(), Matrix::Identity(m.rows(), m.rows()));
}

Matrix permutation_matrix(const Permutation &sigma) {
  const auto n = static_cast<Eigen::Index>(sigma.degree());
  Matrix p = Matrix::Zero(n, n);
  const auto &map = sigma.zero_based();
  for (Eigen::Index i = 0; i < n; ++i)
    p(i, map[i]) = 1.0;
  return p;
}

SparseGenerator SparseGenerator::identity(std::size_t dim) {
  SparseGenerator g;
  g.diag.assign(dim, 1.0);
  g.off.assign(dim, 0.0);
  g.partner.resize(dim);
  for (std::size_t i = 0; i < dim; ++i)
    g.partner[i] = i;
  return g;
}

Matrix SparseGenerator::dense() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < dim(); ++i) {
    m(i, i) = diag[i];
    if (partner[i] != i)
      m(i, partner[i]) = off[i];
  }
  return m;
}

void SparseGenerator::apply(std::span<double> v) const {
  if (v.size() != dim())
    throw std::invalid_argument("SparseGenerator::apply: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) {
    const std::size_t p = partner[i];
    if (p == i) {
      v[i] *= diag[i];
    } else if (i < p) {
      const double a = v[i];
      const double b = v[p];
      v[i] = diag[i] * a + off[i] * b;
      v[p] = off[p] * a + diag[p] * b;
    }
  }
}

void SparseGenerator::left_multiply(Matrix &m) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    const std::size_t p = partner[i];
    if (p == i) {
      if (diag[i] != 1.0)
        m.row(i) *= diag[i];
    } else if (i < p) {
      Eigen::RowVectorXd a = m.row(i);
      Eigen::RowVectorXd b = m.row(p);
      m.row(i) = diag[i] * a + off[i] * b;
      m.row(p) = off[p] * a + diag[p] * b;
    }
  }
}

void SparseGenerator::right_multiply(Matrix &m) const {
  // G is symmetric, so column j of m G mixes columns j and partner[j].
  for (std::size_t j = 0; j < dim(); ++j) {
    const std::size_t p = partner[j];
    if (p == j) {
      if (diag[j] != 1.0)
        m.col(j) *= diag[j];
    } else if (j < p) {
      Eigen::VectorXd a = m.col(j);
      Eigen::VectorXd b = m.col(p);
      m.col(j) = diag[j] * a + off[p] * b;
      m.col(p) = off[j] * a + diag[p] * b;
    }
  }
}

GeneratorRepresentation::GeneratorRepresentation(std::size_t degree, std::size_t dim,
                                                 std::vector<SparseGenerator> generators)
    : degree_(degree), dim_(dim), generators_(std::move(generators)) {
  if (degree == 0)
    throw std::invalid_argument("representation degree must be at least 1");
  if (generators_.size() + 1 != degree)
    throw std::invalid_argument("expected " + std::to_string(degree - 1) +
                                " generators, got " +
                                std::to_string(generators_.size()));
  for (const auto &g : generators_)
    if (g.dim() != dim)
      throw std::invalid_argument("generator dimension mismatch");
}

const SparseGenerator &GeneratorRepresentation::generator(std::size_t k) const {
  if (k < 1 || k >= degree_)
    throw std::out_of_range("generator tau_" + std::to_string(k) +
                            " is not defined in S_" + std::to_string(degree_));
  return generators_[k - 1];
}

Matrix GeneratorRepresentation::evaluate(const AdjacentWord &word) const {
  if (word.degree != degree_)
    throw std::invalid_argument("word degree does not match representation degree");
  const auto d = static_cast<Eigen::Index>(dim_);
  Matrix m = Matrix::Identity(d, d);
  for (auto k : word.indices)
    generator(k).right_multiply(m);
  return m;
}

Matrix GeneratorRepresentation::operator()(const Permutation &sigma) const {
  if (sigma.degree() != degree_)
    throw std::invalid_argument("permutation of degree " +
                                std::to_string(sigma.degree()) +
                                " given to a representation of S_" +
                                std::to_string(degree_));
  return evaluate(decompose_adjacent(sigma));
}

void GeneratorRepresentation::apply_transpose(const Permutation &sigma,
                                              std::span<double> v) const {
  if (sigma.degree() != degree_)
    throw std::invalid_argument("permutation degree does not match representation");
  // D(sigma)^t = G_{k_m} ... G_{k_1} since every generator is symmetric.
  for (auto k : decompose_adjacent(sigma).indices)
    generator(k).apply(v);
}

double coxeter_deviation(const GeneratorRepresentation &rep) {
  const auto d = static_cast<Eigen::Index>(rep.dim());
  const Matrix eye = Matrix::Identity(d, d);
  const std::size_t last = rep.degree() - 1;
  double worst = 0.0;

  auto product = [&](std::initializer_list<std::size_t> ks) {
    Matrix m = eye;
    for (auto k : ks)
      rep.generator(k).right_multiply(m);
    return m;
  };

  for (std::size_t k = 1; k <= last; ++k) {
    worst = std::max(worst, max_abs_deviation(product({k, k}), eye));
    if (k + 1 <= last)
      worst = std::max(worst, max_abs_deviation(product({k, k + 1, k}),
                                                product({k + 1, k, k + 1})));
    for (std::size_t j = k + 2; j <= last; ++j)
      worst = std::max(worst, max_abs_deviation(product({k, j}), product({j, k})));
  }
  return worst;
}

} // namespace permharmonic
