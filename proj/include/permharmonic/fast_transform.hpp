#pragma once

#include "permharmonic/counted_scalar.hpp"
#include "permharmonic/permutation.hpp"
#include "permharmonic/representation.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Orthogonal transform for functions on {1, ..., n} = S_n / S_{n-1}.
//
// T = A U where U is the n x n integer matrix
//
//   row 1:      +1 +1 ... +1
//   row m >= 2: -1 on columns 1..n-m+1, (n-m+1) on column n-m+2, 0 after
//
// and A = diag(alpha_1, ..., alpha_n) normalizes the rows:
// alpha_1 = 1/sqrt(n), alpha_m = 1/sqrt((n-m+1)(n-m+2)).
//
// For every sigma, T P(sigma) = (1 (+) D_(n-1,1)(sigma)^t) T, so permuting the
// input only rotates the trailing n-1 spectral coefficients.
//
// All vectors are stored 0-based; x[i] holds the value at point i+1.
namespace permharmonic {

class TransformPlan {
public:
  /// Throws std::invalid_argument for n < 2.
  explicit TransformPlan(std::size_t n);

  std::size_t size() const { return alpha_.size(); }

  /// alpha[m-1] = alpha_m.
  std::span<const double> alpha() const { return alpha_; }

private:
  std::vector<double> alpha_;
};

inline TransformPlan build_plan(std::size_t n) { return TransformPlan(n); }

/// X = T x. coeffs[0] is the trivial component; coeffs[1..n-1] the (n-1,1) block.
struct SpectralVector {
  std::vector<double> coeffs;

  std::size_t size() const { return coeffs.size(); }
  std::span<const double> phi_block() const {
    return std::span<const double>(coeffs).subspan(1);
  }
};

/// Structured view of U; entries are computed on demand.
class UMatrix {
public:
  explicit UMatrix(std::size_t n);

  std::size_t size() const { return n_; }

  /// U(m, j), 1-based.
  double operator()(std::size_t m, std::size_t j) const;

  Matrix dense() const;

private:
  std::size_t n_;
};

Matrix dense_U(std::size_t n);
Matrix dense_T(const TransformPlan &plan);

/**
 * X = T x in 2n-2 multiplications and 2n-2 additions:
 *   a(n) = x(1), a(k) = a(k+1) + x(n-k+1)          prefix sums
 *   Xh(1) = a(1), Xh(m) = (n-m+1) x(n-m+2) - a(m)   (no multiply at m = n)
 *   X(m) = alpha_m Xh(m)
 */
template <typename Scalar>
void forward_transform(const TransformPlan &plan, std::span<const Scalar> x,
                       std::span<Scalar> out);

/// x = T^t X with the same operation counts, via running differences of alpha_m X(m).
template <typename Scalar>
void inverse_transform(const TransformPlan &plan, std::span<const Scalar> spectrum,
                       std::span<Scalar> out);

SpectralVector transform(const TransformPlan &plan, std::span<const double> x);

/// Real and imaginary parts are transformed independently.
std::vector<std::complex<double>> transform(const TransformPlan &plan,
                                            std::span<const std::complex<double>> x);

struct CountedTransform {
  SpectralVector spectrum;
  OpCounts counts;
};

CountedTransform transform_counted(const TransformPlan &plan, std::span<const double> x);

std::vector<double> inverse_transform(const TransformPlan &plan, const SpectralVector &X);
std::vector<double> inverse_transform(const TransformPlan &plan, std::span<const double> X);

std::vector<std::complex<double>>
inverse_transform(const TransformPlan &plan, std::span<const std::complex<double>> X);

struct CountedInverse {
  std::vector<double> values;
  OpCounts counts;
};

CountedInverse inverse_transform_counted(const TransformPlan &plan,
                                         std::span<const double> X);

/// O(n^2) reference: T^t X by dense multiply.
std::vector<double> inverse_transform_dense(const TransformPlan &plan,
                                            std::span<const double> X);

/// (1 (+) D_(n-1,1)(sigma)^t) X.
SpectralVector spectral_shift(const Permutation &sigma, const SpectralVector &X);

// ---------------------------------------------------------------------------

namespace detail {

inline void check_length(const char *what, std::size_t got, std::size_t want) {
  if (got != want)
    throw std::invalid_argument(std::string(what) + ": expected length " +
                                std::to_string(want) + ", got " + std::to_string(got));
}

} // namespace detail

template <typename Scalar>
void forward_transform(const TransformPlan &plan, std::span<const Scalar> x,
                       std::span<Scalar> out) {
  const std::size_t n = plan.size();
  detail::check_length("transform", x.size(), n);
  detail::check_length("transform output", out.size(), n);
  const auto alpha = plan.alpha();

  // m runs n, n-1, ..., 1 so the prefix sum a(m) grows by one term per step.
  Scalar prefix = x[0];
  for (std::size_t m = n; m >= 1; --m) {
    if (m < n)
      prefix = prefix + x[n - m];
    Scalar hat;
    if (m == 1)
      hat = prefix;
    else if (m == n)
      hat = x[1] - prefix;
    else
      hat = x[n - m + 1] * static_cast<double>(n - m + 1) - prefix;
    out[m - 1] = hat * alpha[m - 1];
  }
}

template <typename Scalar>
void inverse_transform(const TransformPlan &plan, std::span<const Scalar> spectrum,
                       std::span<Scalar> out) {
  const std::size_t n = plan.size();
  detail::check_length("inverse_transform", spectrum.size(), n);
  detail::check_length("inverse_transform output", out.size(), n);
  const auto alpha = plan.alpha();

  // With beta_m = alpha_m X(m) and Q(p) = beta_1 - beta_2 - ... - beta_p:
  //   x(1) = Q(n),  x(j) = Q(n-j+1) + (j-1) beta_{n-j+2}  for j >= 2.
  Scalar running = spectrum[0] * alpha[0];
  Scalar beta;
  for (std::size_t p = 1; p <= n; ++p) {
    if (p > 1)
      running = running - beta;
    if (p == n) {
      out[0] = running;
      break;
    }
    beta = spectrum[p] * alpha[p];
    const std::size_t j = n - p + 1;
    if (p == n - 1)
      out[j - 1] = running + beta;
    else
      out[j - 1] = running + beta * static_cast<double>(j - 1);
  }
}

} // namespace permharmonic
