#pragma once

#include <stdexcept>

namespace gentropy {

/// Branch selector for the generalized logarithm/exponential pair.
enum class Sign { plus, minus };

/// How natural-form logarithms are adapted to a D-ary alphabet.
///  - rescale:      divide the natural form by ln(D)
///  - substitution: replace the exponent x by x/ln(D) inside x^x, so the
///                  expansion runs in powers of x*log_D(x)
///  - natural:      leave the natural form untouched
enum class Convention { rescale, substitution, natural };

/// Thrown when an iterative numeric routine cannot reach its tolerance.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int max_series_order = 8;

/// Series coefficient a_sign(j) of the generalized exponential, j in 0..8.
/// a(0) == 1 for both signs.
double series_coefficient(Sign sign, int j);

/// Generalized logarithm, natural form:
///   plus:  (x^x - 1) / x
///   minus: -(x^-x - 1) / x
/// Defined for x > 0 only; nonpositive on (0,1], zero at x = 1, and
/// strictly increasing on (0,1] for both signs.
double gen_log(Sign sign, double x);

/// Generalized logarithm for an integer alphabet size (base >= 2) under the
/// given convention. All conventions coincide with gen_log at base e.
double gen_log_base(Sign sign, double x, int base, Convention convention);

/// Nine-term stretched-exponential series exp(-y) * sum_j a(j) y^j, y >= 0.
/// Approximate inverse of y = -gen_log(sign, p); see gen_exp_exact for the
/// authoritative inverse.
double gen_exp_series(Sign sign, double y);

/// Exact inverse of y = -gen_log(sign, p): the unique p in (0,1] with
/// -gen_log(sign, p) = y, located by bisection on the monotone map.
/// Guarantees |(-gen_log(sign, result)) - y| <= 1e-10, else throws
/// numeric_error (y beyond the representable range of p).
double gen_exp_exact(Sign sign, double y);

/// Upper incomplete gamma for integer order n >= 1 and x >= 0, evaluated by
/// the exact finite sum (n-1)! e^-x sum_{k<n} x^k/k!.
double upper_incomplete_gamma(int n, double x);

}  // namespace gentropy
