#include "gentropy/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gentropy {

namespace {

constexpr double kRowTolerance = 1e-12;

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error(std::string(what) + " must lie in [0, 1]");
}

double shannon_binary(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

}  // namespace

ChannelSpec::ChannelSpec(ChannelModel model, double param, std::size_t inputs,
                         std::size_t outputs, std::vector<double> matrix)
    : model_(model),
      param_(param),
      inputs_(inputs),
      outputs_(outputs),
      matrix_(std::move(matrix)) {
  if (inputs_ == 0 || outputs_ == 0 || matrix_.size() != inputs_ * outputs_)
    throw std::invalid_argument("channel matrix dimensions mismatch");
  for (std::size_t r = 0; r < inputs_; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < outputs_; ++c) {
      const double t = matrix_[r * outputs_ + c];
      if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("transition probability outside [0, 1]");
      row += t;
    }
    if (std::abs(row - 1.0) > kRowTolerance)
      throw std::invalid_argument("channel rows must sum to 1");
  }
}

ChannelSpec ChannelSpec::bsc(double crossover) {
  require_unit_interval(crossover, "crossover probability");
  return ChannelSpec(ChannelModel::bsc, crossover, 2, 2,
                     {1.0 - crossover, crossover, crossover, 1.0 - crossover});
}

ChannelSpec ChannelSpec::bec(double erasure) {
  require_unit_interval(erasure, "erasure probability");
  return ChannelSpec(ChannelModel::bec, erasure, 2, 3,
                     {1.0 - erasure, erasure, 0.0, 0.0, erasure, 1.0 - erasure});
}

ChannelSpec ChannelSpec::custom(std::size_t inputs, std::size_t outputs,
                                std::vector<double> transition) {
  return ChannelSpec(ChannelModel::custom, 0.0, inputs, outputs,
                     std::move(transition));
}

double binary_measure_maximum(Kind kind) {
  switch (kind) {
    case Kind::shannon:
      return std::numbers::ln2;
    case Kind::plus:
      return 2.0 - std::numbers::sqrt2;
    case Kind::minus:
      return 2.0 * std::numbers::sqrt2 - 2.0;
    case Kind::zero:
      return 0.5 * (binary_measure_maximum(Kind::plus) +
                    binary_measure_maximum(Kind::minus));
  }
  throw std::logic_error("unhandled entropy kind");
}

double bsc_capacity_closed(Kind kind, double p) {
  require_unit_interval(p, "crossover probability");
  const double q = 1.0 - p;
  const double sqrt2 = std::numbers::sqrt2;
  switch (kind) {
    case Kind::shannon:
      return 1.0 - shannon_binary(p) / std::numbers::ln2;
    case Kind::plus:
      return (sqrt2 - std::pow(p, p) - std::pow(q, q)) / (sqrt2 - 2.0);
    case Kind::minus:
      return (2.0 * sqrt2 - std::pow(p, -p) - std::pow(q, -q)) /
             (2.0 * sqrt2 - 2.0);
    case Kind::zero: {
      const double h = 0.5 * ((2.0 - std::pow(p, p) - std::pow(q, q)) +
                              (std::pow(p, -p) + std::pow(q, -q) - 2.0));
      return 1.0 - h / binary_measure_maximum(Kind::zero);
    }
  }
  throw std::logic_error("unhandled entropy kind");
}

double bsc_capacity_minus_uncorrected(double p) {
  require_unit_interval(p, "crossover probability");
  const double q = 1.0 - p;
  const double sqrt2 = std::numbers::sqrt2;
  return (2.0 * sqrt2 * std::pow(p, -p) - std::pow(q, -q)) /
         (2.0 * sqrt2 - 2.0);
}

double bec_capacity_closed(Kind kind, double alpha) {
  require_unit_interval(alpha, "erasure probability");
  const double sqrt2 = std::numbers::sqrt2;
  // Numerators are the mutual informations at uniform input; pow(0, 0) = 1
  // covers the alpha = 0 endpoint.
  const auto plus_numerator = [&] {
    return 1.0 - std::pow(alpha, alpha) - sqrt2 +
           2.0 * std::pow(alpha / 2.0, alpha / 2.0);
  };
  const auto minus_numerator = [&] {
    return std::pow(alpha, -alpha) - 1.0 + 2.0 * sqrt2 -
           2.0 * std::pow(alpha / 2.0, -alpha / 2.0);
  };
  switch (kind) {
    case Kind::shannon:
      return 1.0 - alpha;
    case Kind::plus:
      return plus_numerator() / (2.0 - sqrt2);
    case Kind::minus:
      return minus_numerator() / (2.0 * sqrt2 - 2.0);
    case Kind::zero:
      return 0.5 * (plus_numerator() + minus_numerator()) /
             binary_measure_maximum(Kind::zero);
  }
  throw std::logic_error("unhandled entropy kind");
}

double mutual_information(Kind kind, const Distribution& input,
                          const ChannelSpec& channel, Convention convention) {
  if (input.size() != channel.inputs())
    throw std::invalid_argument("input size does not match channel inputs");
  if (input.mode() != MassMode::normalized)
    throw std::invalid_argument("channel input must be normalized");

  const std::size_t n_in = channel.inputs();
  const std::size_t n_out = channel.outputs();
  std::vector<double> cells(n_in * n_out);
  for (std::size_t i = 0; i < n_in; ++i)
    for (std::size_t o = 0; o < n_out; ++o)
      cells[i * n_out + o] = input[i] * channel.transition(i, o);
  const JointDistribution joint(n_in, n_out, cells);
  const Distribution output = Distribution::normalized(joint.col_marginal());

  const int base = 2;
  return entropy(kind, input, base, convention) +
         entropy(kind, output, base, convention) -
         joint_entropy(kind, joint, base, convention);
}

double mutual_information(Kind kind, double input_p,
                          const ChannelSpec& channel, Convention convention) {
  require_unit_interval(input_p, "input probability");
  if (channel.inputs() != 2)
    throw std::invalid_argument("scalar input form requires a binary-input channel");
  return mutual_information(
      kind, Distribution::normalized({input_p, 1.0 - input_p}), channel,
      convention);
}

CapacityResult capacity_numeric(Kind kind, const ChannelSpec& channel,
                                double grid_step, double refine_tol) {
  if (!(grid_step > 0.0 && grid_step < 0.5))
    throw std::invalid_argument("grid step must lie in (0, 0.5)");
  if (!(refine_tol > 0.0))
    throw std::invalid_argument("refinement tolerance must be positive");

  const auto objective = [&](double p) {
    return mutual_information(kind, p, channel);
  };

  const std::size_t steps =
      static_cast<std::size_t>(std::ceil(1.0 / grid_step));
  double best_x = 0.0;
  double best_v = objective(0.0);
  for (std::size_t i = 1; i <= steps; ++i) {
    const double x = std::min(static_cast<double>(i) * grid_step, 1.0);
    const double v = objective(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }

  // Golden-section refinement inside the bracketing grid cells.
  double a = std::max(0.0, best_x - grid_step);
  double b = std::min(1.0, best_x + grid_step);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > refine_tol) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = objective(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = objective(c);
    }
  }
  double x_star = 0.5 * (a + b);
  double v_star = objective(x_star);
  if (v_star < best_v) {  // refinement never beat the grid point
    x_star = best_x;
    v_star = best_v;
  }

  double value = v_star / binary_measure_maximum(kind);
  if (value < 0.0 && value > -1e-9) value = 0.0;
  if (value > 1.0 && value < 1.0 + 1e-9) value = 1.0;
  return CapacityResult{value, x_star, CapacityMethod::numeric};
}

}  // namespace gentropy
