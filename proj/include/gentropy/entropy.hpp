#pragma once

#include <cstdint>
#include <vector>

#include "gentropy/genfun.hpp"

namespace gentropy {

/// Entropy measure selector. `zero` is the arithmetic mean of the plus and
/// minus measures.
enum class Kind { shannon, plus, minus, zero };

enum class MassMode { normalized, subnormalized };

/// Validated probability vector. Normalized mass sums to one within 1e-9;
/// subnormalized mass may fall short of one (scaled arguments such as the
/// erasure-channel tail need this).
class Distribution {
 public:
  static Distribution normalized(std::vector<double> probs);
  static Distribution subnormalized(std::vector<double> probs);
  static Distribution from_counts(const std::vector<std::int64_t>& counts);
  static Distribution uniform(std::size_t n);

  const std::vector<double>& probs() const { return probs_; }
  MassMode mode() const { return mode_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  Distribution(std::vector<double> probs, MassMode mode)
      : probs_(std::move(probs)), mode_(mode) {}

  std::vector<double> probs_;
  MassMode mode_;
};

/// Scale every entry by a factor in [0, 1]; the result is subnormalized.
Distribution scale(const Distribution& dist, double factor);

/// Joint probability matrix, row-major; entries in [0,1] with total mass one.
class JointDistribution {
 public:
  JointDistribution(std::size_t rows, std::size_t cols,
                    std::vector<double> cells);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t r, std::size_t c) const {
    return cells_[r * cols_ + c];
  }
  const std::vector<double>& cells() const { return cells_; }
  std::vector<double> row_marginal() const;
  std::vector<double> col_marginal() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cells_;
};

/// Per-symbol logarithm of the selected measure: ln for shannon, gen_log for
/// plus/minus, their mean for zero, converted per base/convention.
double measure_log(Kind kind, double p, int base, Convention convention);

/// -sum_i p_i * measure_log(p_i); zero-probability terms contribute nothing.
/// The zero kind returns exactly the mean of the plus and minus results.
double entropy(Kind kind, const Distribution& dist, int base,
               Convention convention);

/// Closed form for the uniform distribution on n symbols, natural units:
/// ln n (shannon), n - n^(1-1/n) (plus), n^(1+1/n) - n (minus).
double uniform_entropy_closed(Kind kind, std::int64_t n);

/// Truncated expansion of the plus/minus entropies in powers of p ln p,
/// natural units. Order 1 reproduces the Shannon entropy.
double entropy_series_truncated(Kind kind, const Distribution& dist,
                                int order);

/// Entropy of the flattened joint probability vector.
double joint_entropy(Kind kind, const JointDistribution& joint, int base,
                     Convention convention);

}  // namespace gentropy
