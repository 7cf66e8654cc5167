#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gentropy/entropy.hpp"

namespace gentropy {

/// Everything the two coding theorems say about one distribution:
/// real optimal lengths, their ceilings, averages, entropy, and both Kraft
/// sums. kraft_classical is taken over the integer lengths (prefix
/// realizability of the actual code); kraft_generalized is the sign-matched
/// constraint value at the real optimal lengths, absent for the shannon and
/// zero kinds and for degenerate codes with a zero-length codeword.
struct CodeLengthReport {
  Kind kind = Kind::shannon;
  int base = 2;
  Convention convention = Convention::rescale;
  std::vector<double> real_lengths;
  std::vector<long long> int_lengths;
  double avg_real = 0.0;
  double avg_int = 0.0;
  double entropy_value = 0.0;
  double kraft_classical = 0.0;
  std::optional<double> kraft_generalized;
  bool kraft_classical_feasible = false;
  bool sandwich_ok = false;
};

/// Reproducible i.i.d. draws from a source distribution.
struct SourceSample {
  std::vector<std::uint32_t> symbols;
  std::uint64_t seed = 0;
  Distribution source;
};

/// Optimal real codeword lengths l*_i = -measure_log(p_i) for a strictly
/// positive normalized distribution.
std::vector<double> optimal_lengths(Kind kind, const Distribution& dist,
                                    int base, Convention convention);

/// Elementwise ceiling; values within 1e-12 of an integer snap down so an
/// exactly-integer optimum is not rounded past the one-dit window.
std::vector<long long> integer_lengths(const std::vector<double>& real_lengths);

double average_length(const Distribution& dist,
                      const std::vector<double>& lengths);
double average_length(const Distribution& dist,
                      const std::vector<long long>& lengths);

/// Classical Kraft sum: sum_i base^-l_i. At most 1 for prefix-realizable
/// codes.
double kraft_sum_classical(const std::vector<long long>& lengths, int base);

/// Generalized Kraft sum
///   sum_i sum_{j<=j_max} a_sign(j) Gamma(j+1, l_i ln base)
/// over positive real lengths; j_max = 0 reduces to the classical sum.
double kraft_sum_generalized(Sign sign, const std::vector<double>& lengths,
                             int base, int j_max);

/// max_i |gen_exp_series(sign, l_i * ln base) - p_i|: how far the lengths sit
/// from the stationarity condition of the constrained optimization. Pass
/// base = e (any real > 1 is accepted) for the natural convention.
double stationarity_residual(Sign sign, const Distribution& dist,
                             const std::vector<double>& lengths, double base);

/// Assemble the full report; sandwich_ok records the one-dit window
/// entropy <= avg_int < entropy + 1 together with avg_real = entropy.
CodeLengthReport theorem_report(Kind kind, const Distribution& dist, int base,
                                Convention convention);

/// Seeded i.i.d. sampling by inverse CDF; identical seeds give identical
/// samples on every platform.
SourceSample simulate_source(std::uint64_t seed, const Distribution& dist,
                             std::size_t n_draws);

/// Normalized symbol counts of a sample, sized like the source distribution.
Distribution empirical_distribution(const SourceSample& sample);

}  // namespace gentropy
