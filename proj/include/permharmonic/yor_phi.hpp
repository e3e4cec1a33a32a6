#pragma once

#include "permharmonic/permutation.hpp"
#include "permharmonic/representation.hpp"

#include <Eigen/Dense>

#include <cstddef>

// Young orthogonal representation of S_n for the two-row partition (n-1, 1),
// written directly in terms of its generator matrices. Indices in this
// header are 1-based on the (n-1)-dimensional representation space.
namespace permharmonic {

/**
 * The 2x2 block
 *
 *   [ -1/k          sqrt(1-1/k^2) ]
 *   [ sqrt(1-1/k^2)  1/k          ]
 *
 * which is symmetric, orthogonal and of determinant -1. Requires k >= 2.
 */
Eigen::Matrix2d rk_block(std::size_t k);

/**
 * D(tau_k) as a sparse generator. For k = 1 this is diag(1, ..., 1, -1); for
 * k >= 2 it is I_{n-k-1} (+) R_k (+) I_{k-2}, which places R_k on rows and
 * columns n-k and n-k+1.
 */
SparseGenerator yor_phi_sparse_generator(std::size_t n, std::size_t k);

/// Dense form of yor_phi_sparse_generator.
Matrix yor_phi_generator(std::size_t n, std::size_t k);

/// All generators of D_(n-1,1) bundled for evaluation. Requires n >= 2.
GeneratorRepresentation yor_phi_representation(std::size_t n);

/// D_(n-1,1)(sigma) as a generator product over decompose_adjacent(sigma).
Matrix yor_phi(std::size_t n, const Permutation &sigma);

/// coxeter_deviation of the generators above, for 2 <= n <= 64.
double verify_coxeter(std::size_t n);

} // namespace permharmonic
