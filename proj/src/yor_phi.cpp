#include "permharmonic/yor_phi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace permharmonic {

namespace {

void require_degree(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("D_(n-1,1) needs n >= 2, got n = " + std::to_string(n));
}

} // namespace

Eigen::Matrix2d rk_block(std::size_t k) {
  if (k < 2)
    throw std::invalid_argument("rk_block: k must be at least 2, got " +
                                std::to_string(k));
  const double inv = 1.0 / static_cast<double>(k);
  const double s = std::sqrt(1.0 - inv * inv);
  Eigen::Matrix2d r;
  r << -inv, s, s, inv;
  return r;
}

SparseGenerator yor_phi_sparse_generator(std::size_t n, std::size_t k) {
  require_degree(n);
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("yor_phi_generator: k = " + std::to_string(k) +
                                " outside [1, " + std::to_string(n - 1) + "]");
  auto g = SparseGenerator::identity(n - 1);
  if (k == 1) {
    g.diag[n - 2] = -1.0;
    return g;
  }
  // R_k sits on 1-based rows n-k, n-k+1, i.e. 0-based n-k-1, n-k.
  const auto r = rk_block(k);
  const std::size_t top = n - k - 1;
  const std::size_t bottom = n - k;
  g.diag[top] = r(0, 0);
  g.diag[bottom] = r(1, 1);
  g.partner[top] = bottom;
  g.partner[bottom] = top;
  g.off[top] = r(0, 1);
  g.off[bottom] = r(1, 0);
  return g;
}

Matrix yor_phi_generator(std::size_t n, std::size_t k) {
  return yor_phi_sparse_generator(n, k).dense();
}

GeneratorRepresentation yor_phi_representation(std::size_t n) {
  require_degree(n);
  std::vector<SparseGenerator> gens;
  gens.reserve(n - 1);
  for (std::size_t k = 1; k <= n - 1; ++k)
    gens.push_back(yor_phi_sparse_generator(n, k));
  return GeneratorRepresentation(n, n - 1, std::move(gens));
}

Matrix yor_phi(std::size_t n, const Permutation &sigma) {
  if (sigma.degree() != n)
    throw std::invalid_argument("yor_phi: permutation has degree " +
                                std::to_string(sigma.degree()) + ", expected " +
                                std::to_string(n));
  return yor_phi_representation(n)(sigma);
}

double verify_coxeter(std::size_t n) {
  if (n < 2 || n > 64)
    throw std::invalid_argument("verify_coxeter: n must lie in [2, 64]");
  return coxeter_deviation(yor_phi_representation(n));
}

} // namespace permharmonic
