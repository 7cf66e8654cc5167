#pragma once

// Test-only reference routines, deliberately independent of the library
// implementation paths they are used to check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testref {

// Recursive adaptive Simpson quadrature.
inline double adaptive_simpson_step(const std::function<double(double)>& f,
                                    double a, double b, double fa, double fb,
                                    double fm, double whole, double eps,
                                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson_step(f, a, m, fa, fm, flm, left, eps / 2.0,
                               depth - 1) +
         adaptive_simpson_step(f, m, b, fm, fb, frm, right, eps / 2.0,
                               depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double eps = 1e-12) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_step(f, a, b, fa, fb, fm, whole, eps, 48);
}

// Upper incomplete gamma by quadrature of the defining integral; the tail
// beyond x + 60 + 20n is far below the tolerance.
inline double upper_gamma_quad(int n, double x) {
  const double hi = x + 60.0 + 20.0 * n;
  return integrate(
      [n](double z) { return std::pow(z, n - 1) * std::exp(-z); }, x, hi,
      1e-13);
}

// Generalized logarithm through the direct power form (an algebraically
// different route from the library's expm1 evaluation).
inline double glog_pow_plus(double x) { return (std::pow(x, x) - 1.0) / x; }
inline double glog_pow_minus(double x) { return -(std::pow(x, -x) - 1.0) / x; }

// Seeded random probability vector with entries bounded away from zero.
inline std::vector<double> random_distribution(std::uint64_t seed,
                                               std::size_t n,
                                               double floor_weight = 0.01) {
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> u(floor_weight, 1.0);
  std::vector<double> probs(n);
  double total = 0.0;
  for (double& p : probs) {
    p = u(engine);
    total += p;
  }
  for (double& p : probs) p /= total;
  return probs;
}

}  // namespace testref
