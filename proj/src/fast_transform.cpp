#include "permharmonic/fast_transform.hpp"

#include "permharmonic/yor_phi.hpp"

#include <cmath>

namespace permharmonic {

TransformPlan::TransformPlan(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("transform plan needs n >= 2, got n = " +
                                std::to_string(n));
  alpha_.resize(n);
  const double nd = static_cast<double>(n);
  alpha_[0] = 1.0 / std::sqrt(nd);
  for (std::size_t k = 2; k <= n; ++k) {
    const double a = nd - static_cast<double>(k) + 1.0;
    alpha_[k - 1] = 1.0 / std::sqrt(a * (a + 1.0));
  }
}

UMatrix::UMatrix(std::size_t n) : n_(n) {
  if (n < 2)
    throw std::invalid_argument("U needs n >= 2");
}

double UMatrix::operator()(std::size_t m, std::size_t j) const {
  if (m < 1 || m > n_ || j < 1 || j > n_)
    throw std::out_of_range("U index out of range");
  if (m == 1)
    return 1.0;
  const std::size_t pivot = n_ - m + 2;
  if (j < pivot)
    return -1.0;
  if (j == pivot)
    return static_cast<double>(n_ - m + 1);
  return 0.0;
}

Matrix UMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Matrix u(n, n);
  for (std::size_t m = 1; m <= n_; ++m)
    for (std::size_t j = 1; j <= n_; ++j)
      u(m - 1, j - 1) = (*this)(m, j);
  return u;
}

Matrix dense_U(std::size_t n) { return UMatrix(n).dense(); }

Matrix dense_T(const TransformPlan &plan) {
  Matrix t = dense_U(plan.size());
  const auto alpha = plan.alpha();
  for (std::size_t m = 0; m < plan.size(); ++m)
    t.row(m) *= alpha[m];
  return t;
}

SpectralVector transform(const TransformPlan &plan, std::span<const double> x) {
  SpectralVector out;
  out.coeffs.resize(plan.size());
  forward_transform<double>(plan, x, out.coeffs);
  return out;
}

std::vector<std::complex<double>> transform(const TransformPlan &plan,
                                            std::span<const std::complex<double>> x) {
  detail::check_length("transform", x.size(), plan.size());
  std::vector<double> re(x.size()), im(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    re[i] = x[i].real();
    im[i] = x[i].imag();
  }
  const auto fr = transform(plan, re);
  const auto fi = transform(plan, im);
  std::vector<std::complex<double>> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = {fr.coeffs[i], fi.coeffs[i]};
  return out;
}

CountedTransform transform_counted(const TransformPlan &plan, std::span<const double> x) {
  CountedTransform result;
  std::vector<CountedScalar> in;
  in.reserve(x.size());
  for (double v : x)
    in.emplace_back(v, &result.counts);
  std::vector<CountedScalar> out(plan.size());
  forward_transform<CountedScalar>(plan, in, out);
  result.spectrum.coeffs.reserve(out.size());
  for (const auto &v : out)
    result.spectrum.coeffs.push_back(v.value());
  return result;
}

std::vector<double> inverse_transform(const TransformPlan &plan, std::span<const double> X) {
  std::vector<double> out(plan.size());
  inverse_transform<double>(plan, X, out);
  return out;
}

std::vector<double> inverse_transform(const TransformPlan &plan, const SpectralVector &X) {
  return inverse_transform(plan, std::span<const double>(X.coeffs));
}

std::vector<std::complex<double>>
inverse_transform(const TransformPlan &plan, std::span<const std::complex<double>> X) {
  detail::check_length("inverse_transform", X.size(), plan.size());
  std::vector<double> re(X.size()), im(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    re[i] = X[i].real();
    im[i] = X[i].imag();
  }
  const auto xr = inverse_transform(plan, std::span<const double>(re));
  const auto xi = inverse_transform(plan, std::span<const double>(im));
  std::vector<std::complex<double>> out(X.size());
  for (std::size_t i = 0; i < X.size(); ++i)
    out[i] = {xr[i], xi[i]};
  return out;
}

CountedInverse inverse_transform_counted(const TransformPlan &plan,
                                         std::span<const double> X) {
  CountedInverse result;
  std::vector<CountedScalar> in;
  in.reserve(X.size());
  for (double v : X)
    in.emplace_back(v, &result.counts);
  std::vector<CountedScalar> out(plan.size());
  inverse_transform<CountedScalar>(plan, in, out);
  result.values.reserve(out.size());
  for (const auto &v : out)
    result.values.push_back(v.value());
  return result;
}

std::vector<double> inverse_transform_dense(const TransformPlan &plan,
                                            std::span<const double> X) {
  detail::check_length("inverse_transform_dense", X.size(), plan.size());
  const Eigen::Map<const Eigen::VectorXd> spectrum(X.data(),
                                                   static_cast<Eigen::Index>(X.size()));
  const Eigen::VectorXd x = dense_T(plan).transpose() * spectrum;
  return {x.data(), x.data() + x.size()};
}

SpectralVector spectral_shift(const Permutation &sigma, const SpectralVector &X) {
  const std::size_t n = sigma.degree();
  detail::check_length("spectral_shift", X.size(), n);
  if (n < 2)
    throw std::invalid_argument("spectral_shift needs n >= 2");
  SpectralVector out = X;
  yor_phi_representation(n).apply_transpose(sigma,
                                            std::span<double>(out.coeffs).subspan(1));
  return out;
}

} // namespace permharmonic
