#include "gentropy/entropy.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gentropy {

namespace {

constexpr double kMassTolerance = 1e-9;

void validate_entries(const std::vector<double>& probs) {
  if (probs.empty()) throw std::invalid_argument("empty distribution");
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative probability");
    if (p > 1.0 + kMassTolerance)
      throw std::invalid_argument("probability exceeds 1");
  }
}

double total_mass(const std::vector<double>& probs) {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

}  // namespace

Distribution Distribution::normalized(std::vector<double> probs) {
  validate_entries(probs);
  const double sum = total_mass(probs);
  if (sum > 1.0 + kMassTolerance)
    throw std::invalid_argument("mass exceeds 1");
  if (sum < 1.0 - kMassTolerance)
    throw std::invalid_argument("mass falls short of 1");
  return Distribution(std::move(probs), MassMode::normalized);
}

Distribution Distribution::subnormalized(std::vector<double> probs) {
  validate_entries(probs);
  if (total_mass(probs) > 1.0 + kMassTolerance)
    throw std::invalid_argument("mass exceeds 1");
  return Distribution(std::move(probs), MassMode::subnormalized);
}

Distribution Distribution::from_counts(
    const std::vector<std::int64_t>& counts) {
  if (counts.empty()) throw std::invalid_argument("empty distribution");
  std::int64_t total = 0;
  for (std::int64_t c : counts) {
    if (c < 0) throw std::invalid_argument("negative count");
    total += c;
  }
  if (total == 0) throw std::invalid_argument("counts sum to zero");
  std::vector<double> probs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    probs[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return Distribution(std::move(probs), MassMode::normalized);
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty distribution");
  return Distribution(
      std::vector<double>(n, 1.0 / static_cast<double>(n)),
      MassMode::normalized);
}

Distribution scale(const Distribution& dist, double factor) {
  if (!(factor >= 0.0 && factor <= 1.0))
    throw std::invalid_argument("scale factor must lie in [0, 1]");
  std::vector<double> probs = dist.probs();
  for (double& p : probs) p *= factor;
  return Distribution::subnormalized(std::move(probs));
}

JointDistribution::JointDistribution(std::size_t rows, std::size_t cols,
                                     std::vector<double> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ == 0 || cols_ == 0 || cells_.size() != rows_ * cols_)
    throw std::invalid_argument("joint matrix dimensions mismatch");
  double sum = 0.0;
  for (double c : cells_) {
    if (!(c >= 0.0)) throw std::invalid_argument("negative joint probability");
    if (c > 1.0 + kMassTolerance)
      throw std::invalid_argument("joint probability exceeds 1");
    sum += c;
  }
  if (std::abs(sum - 1.0) > kMassTolerance)
    throw std::invalid_argument("joint mass must sum to 1");
}

std::vector<double> JointDistribution::row_marginal() const {
  std::vector<double> m(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m[r] += at(r, c);
  return m;
}

std::vector<double> JointDistribution::col_marginal() const {
  std::vector<double> m(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m[c] += at(r, c);
  return m;
}

double measure_log(Kind kind, double p, int base, Convention convention) {
  switch (kind) {
    case Kind::shannon:
      if (!(p > 0.0))
        throw std::domain_error("logarithm undefined for p <= 0");
      return convention == Convention::natural
                 ? std::log(p)
                 : std::log(p) / std::log(static_cast<double>(base));
    case Kind::plus:
      return gen_log_base(Sign::plus, p, base, convention);
    case Kind::minus:
      return gen_log_base(Sign::minus, p, base, convention);
    case Kind::zero:
      return 0.5 * (measure_log(Kind::plus, p, base, convention) +
                    measure_log(Kind::minus, p, base, convention));
  }
  throw std::logic_error("unhandled entropy kind");
}

double entropy(Kind kind, const Distribution& dist, int base,
               Convention convention) {
  if (kind == Kind::zero)
    return 0.5 * (entropy(Kind::plus, dist, base, convention) +
                  entropy(Kind::minus, dist, base, convention));
  double h = 0.0;
  for (double p : dist.probs()) {
    if (p == 0.0) continue;  // continuous limit: 0 * log(0) := 0
    h -= p * measure_log(kind, p, base, convention);
  }
  return h;
}

double uniform_entropy_closed(Kind kind, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("uniform size must be >= 1");
  const double nd = static_cast<double>(n);
  switch (kind) {
    case Kind::shannon:
      return std::log(nd);
    case Kind::plus:
      return nd - std::pow(nd, 1.0 - 1.0 / nd);
    case Kind::minus:
      return std::pow(nd, 1.0 + 1.0 / nd) - nd;
    case Kind::zero:
      return 0.5 * (uniform_entropy_closed(Kind::plus, n) +
                    uniform_entropy_closed(Kind::minus, n));
  }
  throw std::logic_error("unhandled entropy kind");
}

double entropy_series_truncated(Kind kind, const Distribution& dist,
                                int order) {
  if (order < 1) throw std::invalid_argument("expansion order must be >= 1");
  if (kind != Kind::plus && kind != Kind::minus)
    throw std::invalid_argument(
        "series expansion applies to the plus/minus measures");
  if (dist.mode() != MassMode::normalized)
    throw std::invalid_argument("series expansion requires normalized mass");
  // Per symbol: sum_k s_k v^k / k! with v = -p ln p, where s_k alternates
  // (+,-,+,...) for plus and stays +1 for minus.
  double h = 0.0;
  for (double p : dist.probs()) {
    if (p == 0.0) continue;
    const double v = -p * std::log(p);
    double term = 1.0;
    double sign = 1.0;
    for (int k = 1; k <= order; ++k) {
      term *= v / k;
      h += sign * term;
      if (kind == Kind::plus) sign = -sign;
    }
  }
  return h;
}

double joint_entropy(Kind kind, const JointDistribution& joint, int base,
                     Convention convention) {
  if (kind == Kind::zero)
    return 0.5 * (joint_entropy(Kind::plus, joint, base, convention) +
                  joint_entropy(Kind::minus, joint, base, convention));
  double h = 0.0;
  for (double c : joint.cells()) {
    if (c == 0.0) continue;
    h -= c * measure_log(kind, c, base, convention);
  }
  return h;
}

}  // namespace gentropy
