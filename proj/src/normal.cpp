#include "wegnerlab/normal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wegner {

namespace {

constexpr double kInvSqrtPi = 0.5641895835477562869;  // 1/sqrt(pi)
constexpr double kSqrt2 = std::numbers::sqrt2;

// erf(x) = 2x e^{-x^2}/sqrt(pi) * sum_n (2x^2)^n / (1*3*...*(2n+1)),
// every term positive, so no cancellation on |x| < 2
double erf_series(double x) {
  const double x2 = x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 200; ++n) {
    term *= 2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return 2.0 * x * std::exp(-x2) * kInvSqrtPi * sum;
}

// sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// evaluated by the modified Lentz scheme; converges fast for x >= 2
double erfc_cf(double x) {
  const double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 400; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x * x) * kInvSqrtPi / f;
}

}  // namespace

double erf(double x) {
  const double ax = std::abs(x);
  if (ax < 2.0) return erf_series(x);
  const double tail = erfc_cf(ax);
  return x > 0.0 ? 1.0 - tail : tail - 1.0;
}

double erfc(double x) {
  if (x >= 2.0) return erfc_cf(x);
  if (x <= -2.0) return 2.0 - erfc_cf(-x);
  return 1.0 - erf_series(x);  // |erf| < 0.9954 here, no cancellation trouble
}

double normal_cdf(double x) {
  const double t = x / kSqrt2;
  if (t >= 0.0) return 1.0 - 0.5 * erfc(t);
  return 0.5 * erfc(-t);
}

double normal_density(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_symmetric_interval(double halfwidth, double variance) {
  if (halfwidth < 0.0) throw std::invalid_argument("normal_symmetric_interval: negative halfwidth");
  if (variance <= 0.0) throw std::invalid_argument("normal_symmetric_interval: variance must be positive");
  return erf(halfwidth / std::sqrt(2.0 * variance));
}

double normal_interval(double lo, double hi, double variance) {
  if (lo > hi) throw std::invalid_argument("normal_interval: lo > hi");
  if (variance <= 0.0) throw std::invalid_argument("normal_interval: variance must be positive");
  const double sigma = std::sqrt(variance);
  return normal_cdf(hi / sigma) - normal_cdf(lo / sigma);
}

}  // namespace wegner
