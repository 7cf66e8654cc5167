#include "gentropy/genfun.hpp"

#include <array>
#include <cmath>

namespace gentropy {

namespace {

// First nine coefficients of the stretched-exponential inverses.
constexpr std::array<double, 9> kCoeffPlus = {
    1.0,       0.0228963, -0.709322,  0.905157,    -0.546751,
    0.186358, -0.0362676,  0.00373467, -0.000157095};
constexpr std::array<double, 9> kCoeffMinus = {
    1.0,        0.0147449, 0.3725,     -0.317048,   0.16867,
    -0.0675544, 0.0166679, -0.00211934, 0.000105402};

}  // namespace

double series_coefficient(Sign sign, int j) {
  if (j < 0 || j > max_series_order)
    throw std::domain_error("series coefficient index must lie in 0..8");
  return sign == Sign::plus ? kCoeffPlus[j] : kCoeffMinus[j];
}

double gen_log(Sign sign, double x) {
  if (!(x > 0.0))
    throw std::domain_error("generalized logarithm undefined for x <= 0");
  // x^x = exp(x ln x); expm1 keeps precision near x = 1 and as x -> 0+.
  const double u = x * std::log(x);
  return sign == Sign::plus ? std::expm1(u) / x : -std::expm1(-u) / x;
}

double gen_log_base(Sign sign, double x, int base, Convention convention) {
  if (base < 2) throw std::domain_error("alphabet size must be >= 2");
  if (!(x > 0.0))
    throw std::domain_error("generalized logarithm undefined for x <= 0");
  switch (convention) {
    case Convention::natural:
      return gen_log(sign, x);
    case Convention::rescale:
      return gen_log(sign, x) / std::log(static_cast<double>(base));
    case Convention::substitution: {
      const double u = x * std::log(x) / std::log(static_cast<double>(base));
      return sign == Sign::plus ? std::expm1(u) / x : -std::expm1(-u) / x;
    }
  }
  throw std::logic_error("unhandled convention");
}

double gen_exp_series(Sign sign, double y) {
  if (y < 0.0)
    throw std::domain_error("generalized exponential series requires y >= 0");
  const auto& a = sign == Sign::plus ? kCoeffPlus : kCoeffMinus;
  double poly = 0.0;
  for (int j = max_series_order; j >= 0; --j) poly = poly * y + a[j];
  return std::exp(-y) * poly;
}

double gen_exp_exact(Sign sign, double y) {
  if (y < 0.0)
    throw std::domain_error("generalized exponential requires y >= 0");
  if (y == 0.0) return 1.0;

  // Bisect in t = -ln p, where -gen_log(sign, e^-t) is strictly increasing
  // from 0 and unbounded, so a bracket [0, hi] always exists while e^-t
  // stays representable. e^-t underflows to zero just past t = 744.
  const auto shortfall = [&](double t) {
    return -gen_log(sign, std::exp(-t)) - y;
  };
  double lo = 0.0;
  double hi = std::min(y + 2.0, 744.0);
  if (shortfall(hi) < 0.0)
    throw numeric_error("gen_exp_exact: argument too large to invert");
  for (int i = 0; i < 200 && hi - lo > 1e-16 * (1.0 + hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (shortfall(mid) < 0.0 ? lo : hi) = mid;
  }
  const double p = std::exp(-0.5 * (lo + hi));
  if (std::abs(-gen_log(sign, p) - y) > 1e-10)
    throw numeric_error("gen_exp_exact: residual tolerance not met");
  return p;
}

double upper_incomplete_gamma(int n, double x) {
  if (n < 1)
    throw std::domain_error("incomplete gamma requires integer order n >= 1");
  if (x < 0.0) throw std::domain_error("incomplete gamma requires x >= 0");
  double factorial = 1.0;
  for (int k = 2; k < n; ++k) factorial *= k;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < n; ++k) {
    term *= x / k;
    sum += term;
  }
  return factorial * std::exp(-x) * sum;
}

}  // namespace gentropy
