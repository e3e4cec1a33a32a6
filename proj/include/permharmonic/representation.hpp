#pragma once

#include "permharmonic/permutation.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace permharmonic {

using Matrix = Eigen::MatrixXd;

/// max_{ij} |a_ij - b_ij|; shapes must agree.
double max_abs_deviation(const Matrix &a, const Matrix &b);

/// max_{ij} |(M M^t - I)_ij|.
double orthogonality_defect(const Matrix &m);

/// P(sigma)_{ij} = [sigma(i) = j], so (P(sigma) x)(i) = x(sigma(i)).
Matrix permutation_matrix(const Permutation &sigma);

/**
 * A symmetric matrix with at most one off-diagonal entry per row, paired
 * symmetrically: row i holds diag[i] at (i, i) and, when partner[i] != i,
 * off[i] at (i, partner[i]). Every Young orthogonal generator has this
 * shape, which lets products be formed with O(dim) work per row.
 */
struct SparseGenerator {
  std::vector<double> diag;
  std::vector<std::size_t> partner;
  std::vector<double> off;

  std::size_t dim() const { return diag.size(); }

  static SparseGenerator identity(std::size_t dim);

  Matrix dense() const;

  /// v <- G v
  void apply(std::span<double> v) const;
  /// m <- G m
  void left_multiply(Matrix &m) const;
  /// m <- m G
  void right_multiply(Matrix &m) const;
};

/**
 * A representation of S_n given by the images of tau_1, ..., tau_{n-1}.
 * Evaluation follows the library's composition convention: for the word
 * returned by decompose_adjacent, D(sigma) = G_{k_1} G_{k_2} ... G_{k_m},
 * so D(compose(a, b)) = D(a) D(b).
 */
class GeneratorRepresentation {
public:
  GeneratorRepresentation(std::size_t degree, std::size_t dim,
                          std::vector<SparseGenerator> generators);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }

  /// Image of tau_k, 1 <= k <= degree - 1.
  const SparseGenerator &generator(std::size_t k) const;

  Matrix operator()(const Permutation &sigma) const;
  Matrix evaluate(const AdjacentWord &word) const;

  /// v <- D(sigma)^t v, without forming D(sigma).
  void apply_transpose(const Permutation &sigma, std::span<double> v) const;

private:
  std::size_t degree_;
  std::size_t dim_;
  std::vector<SparseGenerator> generators_;
};

/**
 * Largest entrywise deviation over the Coxeter relations
 *   G_k^2 = I,
 *   G_k G_{k+1} G_k = G_{k+1} G_k G_{k+1},
 *   G_k G_j = G_j G_k  for |k - j| >= 2.
 */
double coxeter_deviation(const GeneratorRepresentation &rep);

} // namespace permharmonic
