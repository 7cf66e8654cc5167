#pragma once

#include <cstddef>
#include <vector>

#include "gentropy/entropy.hpp"

namespace gentropy {

enum class ChannelModel { bsc, bec, custom };

/// Row-stochastic transition matrix plus the defining parameter for the two
/// named channel families. BSC rows are [1-p, p] / [p, 1-p]; BEC rows are
/// [1-a, a, 0] / [0, a, 1-a] with output order {0, *, 1}.
class ChannelSpec {
 public:
  static ChannelSpec bsc(double crossover);
  static ChannelSpec bec(double erasure);
  static ChannelSpec custom(std::size_t inputs, std::size_t outputs,
                            std::vector<double> transition);

  ChannelModel model() const { return model_; }
  double param() const { return param_; }
  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  double transition(std::size_t in, std::size_t out) const {
    return matrix_[in * outputs_ + out];
  }

 private:
  ChannelSpec(ChannelModel model, double param, std::size_t inputs,
              std::size_t outputs, std::vector<double> matrix);

  ChannelModel model_;
  double param_;
  std::size_t inputs_;
  std::size_t outputs_;
  std::vector<double> matrix_;
};

enum class CapacityMethod { closed_form, numeric };

struct CapacityResult {
  double value = 0.0;      // normalized to [0, 1]
  double maximizer = 0.0;  // optimal input probability of symbol 0
  CapacityMethod method = CapacityMethod::numeric;
};

/// Natural-unit entropy of the uniform binary distribution under the given
/// measure: ln 2, 2 - sqrt(2), 2 sqrt(2) - 2, or the plus/minus mean.
double binary_measure_maximum(Kind kind);

/// Closed-form BSC capacity, normalized to 1 at p in {0,1} and 0 at p = 1/2.
/// The minus branch uses the corrected form (2sqrt2 - p^-p - q^-q)/(2sqrt2-2),
/// identical to 1 - H_minus(p,q)/H_minus(1/2,1/2).
double bsc_capacity_closed(Kind kind, double p);

/// Uncorrected variant of the minus-branch BSC formula,
/// (2sqrt2 p^-p - q^-q)/(2sqrt2 - 2). Kept for regression/demonstration
/// only: it exceeds 1 at p = 1/2 and fails the endpoint identities.
double bsc_capacity_minus_uncorrected(double p);

/// Closed-form BEC capacity at uniform input, normalized like the BSC forms.
/// shannon reduces to 1 - alpha exactly.
double bec_capacity_closed(Kind kind, double alpha);

/// H(X) + H(Y) - H(X,Y) in the selected measure for a general input
/// distribution over the channel inputs. Natural units by default; the
/// normalization to [0,1] happens only in the capacity operations.
double mutual_information(Kind kind, const Distribution& input,
                          const ChannelSpec& channel,
                          Convention convention = Convention::natural);

/// Binary-input shorthand: input distribution {p, 1-p}.
double mutual_information(Kind kind, double input_p,
                          const ChannelSpec& channel,
                          Convention convention = Convention::natural);

/// Maximize mutual information over the binary input probability by grid
/// scan plus golden-section refinement, then normalize by the measure's
/// binary maximum.
CapacityResult capacity_numeric(Kind kind, const ChannelSpec& channel,
                                double grid_step = 1e-3,
                                double refine_tol = 1e-9);

}  // namespace gentropy
