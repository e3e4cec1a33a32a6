#pragma once

#include "permharmonic/permutation.hpp"
#include "permharmonic/representation.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

// Brute-force harmonic analysis on S_n for small n: every routine here walks
// all n! group elements (or the (n-1)! elements fixing n) and is bounded by
// oracle_cap().
namespace permharmonic {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<std::size_t> parts;

  std::size_t n() const;
  std::size_t rows() const { return parts.size(); }
  bool is_valid() const;

  auto operator<=>(const Partition &) const = default;
  bool operator==(const Partition &) const = default;

  static Partition trivial(std::size_t n) { return {{n}}; }
  /// (n-1, 1); requires n >= 2.
  static Partition phi(std::size_t n) { return {{n - 1, 1}}; }
};

std::string to_string(const Partition &nu);

/// All partitions of n in reverse lexicographic order, (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(std::size_t n);

/// Number of standard tableaux of shape nu by the hook length formula.
std::size_t hook_length_dimension(const Partition &nu);

/// A standard filling of a Young diagram; rows[r][c] is the entry in row r, column c (0-based).
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<std::size_t>> rows;

  /// 0-based row and column holding `entry` (1-based).
  std::size_t row_of(std::size_t entry) const;
  std::size_t column_of(std::size_t entry) const;

  bool is_standard() const;
};

/**
 * All standard tableaux of shape nu in last-letter order: tableaux are
 * grouped by the cell holding n, taking removable corners from the bottom
 * row upwards, and each group is ordered recursively the same way.
 *
 * For nu = (n-1, 1) this lists the tableau with n in the second row first
 * and the one with 2 in the second row last.
 */
std::vector<StandardTableau> standard_tableaux(const Partition &nu);

/**
 * Young orthogonal representation of shape nu on the basis
 * standard_tableaux(nu). For tau_k and tableau t with axial distance
 * r = content(k+1) - content(k), content = column - row:
 *   D(tau_k)_{t,t} = 1/r,
 *   D(tau_k)_{t,t'} = sqrt(1 - 1/r^2) when t' = t with k, k+1 exchanged is standard.
 */
GeneratorRepresentation yor_general_representation(const Partition &nu);

Matrix yor_general(const Partition &nu, const Permutation &sigma);

/// Which matrices to use for the (n-1,1) block.
enum class PhiBasis {
  Tableau,    ///< yor_general_representation((n-1,1))
  Generators, ///< yor_phi_representation(n), the explicit R_k generators
};

struct Irrep {
  Partition shape;
  GeneratorRepresentation rep;
};

/// One Irrep per partition of n, in enumerate_partitions order.
std::vector<Irrep> irreducible_representations(std::size_t n,
                                               PhiBasis basis = PhiBasis::Generators);

using GroupFunction = std::function<double(const Permutation &)>;

/**
 * Visits every element of S_n together with its matrices in each irrep.
 * Elements are generated as sigma = c_n o c_{n-1} o ... o c_2 with
 * c_m = tau_j o tau_{j+1} o ... o tau_{m-1} (the coset representative that
 * sends m to j), so each matrix is a product of at most n(n-1)/2
 * generators. Visiting order is deterministic.
 *
 * With fix_last = true only the subgroup fixing n is visited.
 */
void walk_group(std::span<const Irrep> irreps, std::size_t n, bool fix_last,
                const std::function<void(const Permutation &, std::span<const Matrix>)> &visit);

struct FourierCoefficients {
  std::vector<Partition> shapes;
  std::vector<Matrix> blocks;

  /// Throws std::out_of_range for an unknown shape.
  const Matrix &at(const Partition &nu) const;
};

/// F(nu) = sum_sigma f(sigma) D_nu(sigma) for every nu |- n.
FourierCoefficients fourier_full(const GroupFunction &f, std::size_t n,
                                 PhiBasis basis = PhiBasis::Generators);
FourierCoefficients fourier_full(const GroupFunction &f, std::span<const Irrep> irreps,
                                 std::size_t n);

/// f~(sigma) = f(sigma(n)); f[i] holds the value at point i+1.
GroupFunction lift(std::span<const double> f);

/// Z(nu) = (1/(n-1)!) sum over sigma fixing n of D_nu(sigma)^t.
Matrix projection_Z(const Irrep &irrep);
Matrix projection_Z(const Partition &nu, PhiBasis basis = PhiBasis::Generators);

struct BandLimitReport {
  std::size_t n = 0;
  std::vector<Partition> shapes;
  std::vector<double> block_max; ///< ||F~(nu)||_max per shape
  double vanishing_max = 0.0;    ///< worst block outside (n) and (n-1,1)
  double phi_offcolumn_max = 0.0; ///< worst entry of F~(phi) outside column 1
  double tolerance = 0.0;        ///< 1e-9 n! ||f||_inf
  bool pass = false;
};

/**
 * Checks that the lifted f has nonzero coefficients only at (n) and
 * (n-1,1), and only in the first column of the (n-1,1) block, using
 * PhiBasis::Generators for that block.
 */
BandLimitReport verify_prop1(std::span<const double> f);

struct TranslationReport {
  double max_deviation = 0.0;
  double tolerance = 1e-9;
  bool pass = false;
};

/// With g(sigma) = f(delta o sigma), checks G(nu) = D_nu(delta)^t F(nu) for all nu.
TranslationReport verify_translation(const GroupFunction &f, const Permutation &delta,
                                     std::size_t n);

struct SchurConstants {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  /// Largest deviation of C = F T^t from lambda1 (+) lambda2 I_{n-1}.
  double max_offdiag = 0.0;
  double lambda1_expected = 0.0; ///< (n-1)! sqrt(n)
  /// Absolute bound on max_offdiag: schur_tolerance(n).
  double tolerance = 0.0;
  /// Sizes of the maximal runs of equal diagonal entries of C, top to bottom.
  std::vector<std::size_t> block_sizes;
  Matrix C;
};

/// 1e-9 for n <= 6, then 1e-9 (n-1)!/5!; entries of C grow like (n-1)!.
double schur_tolerance(std::size_t n);

/**
 * Builds the matrix F of x -> (F~((n)), first column of F~(phi)) column by
 * column from lifted basis vectors and factors it as C = F T^t. Requires
 * 2 <= n <= oracle_cap().
 */
SchurConstants derive_schur_constants(std::size_t n);

/// The n x n matrix of the map x -> (F~((n)), first column of F~(phi)).
Matrix homogeneous_fourier_matrix(std::size_t n);

} // namespace permharmonic
