#include "gentropy/coding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gentropy {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument("distribution and length vector sizes differ");
}

}  // namespace

std::vector<double> optimal_lengths(Kind kind, const Distribution& dist,
                                    int base, Convention convention) {
  if (dist.mode() != MassMode::normalized)
    throw std::invalid_argument("optimal lengths require a normalized distribution");
  std::vector<double> lengths;
  lengths.reserve(dist.size());
  for (double p : dist.probs()) {
    if (!(p > 0.0))
      throw std::invalid_argument(
          "zero-probability symbol has no defined codeword length");
    lengths.push_back(-measure_log(kind, p, base, convention));
  }
  return lengths;
}

std::vector<long long> integer_lengths(
    const std::vector<double>& real_lengths) {
  std::vector<long long> out;
  out.reserve(real_lengths.size());
  for (double r : real_lengths) {
    if (!(r >= 0.0)) throw std::invalid_argument("negative codeword length");
    const double f = std::floor(r);
    out.push_back(static_cast<long long>(r - f <= 1e-12 ? f : f + 1.0));
  }
  return out;
}

double average_length(const Distribution& dist,
                      const std::vector<double>& lengths) {
  require_same_size(dist.size(), lengths.size());
  double avg = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) avg += dist[i] * lengths[i];
  return avg;
}

double average_length(const Distribution& dist,
                      const std::vector<long long>& lengths) {
  require_same_size(dist.size(), lengths.size());
  double avg = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i)
    avg += dist[i] * static_cast<double>(lengths[i]);
  return avg;
}

double kraft_sum_classical(const std::vector<long long>& lengths, int base) {
  if (base < 2) throw std::domain_error("alphabet size must be >= 2");
  double sum = 0.0;
  for (long long l : lengths) {
    if (l < 0) throw std::invalid_argument("negative codeword length");
    sum += std::pow(static_cast<double>(base), -static_cast<double>(l));
  }
  return sum;
}

double kraft_sum_generalized(Sign sign, const std::vector<double>& lengths,
                             int base, int j_max) {
  if (base < 2) throw std::domain_error("alphabet size must be >= 2");
  if (j_max < 0 || j_max > max_series_order)
    throw std::invalid_argument("j_max must lie in 0..8");
  const double log_base = std::log(static_cast<double>(base));
  double sum = 0.0;
  for (double l : lengths) {
    if (!(l > 0.0)) throw std::invalid_argument("nonpositive codeword length");
    const double x = l * log_base;
    for (int j = 0; j <= j_max; ++j)
      sum += series_coefficient(sign, j) * upper_incomplete_gamma(j + 1, x);
  }
  return sum;
}

double stationarity_residual(Sign sign, const Distribution& dist,
                             const std::vector<double>& lengths, double base) {
  require_same_size(dist.size(), lengths.size());
  if (!(base > 1.0)) throw std::domain_error("alphabet size must exceed 1");
  const double log_base = std::log(base);
  double worst = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double reconstructed = gen_exp_series(sign, lengths[i] * log_base);
    worst = std::max(worst, std::abs(reconstructed - dist[i]));
  }
  return worst;
}

CodeLengthReport theorem_report(Kind kind, const Distribution& dist, int base,
                                Convention convention) {
  CodeLengthReport report;
  report.kind = kind;
  report.base = base;
  report.convention = convention;
  report.real_lengths = optimal_lengths(kind, dist, base, convention);
  report.int_lengths = integer_lengths(report.real_lengths);
  report.entropy_value = entropy(kind, dist, base, convention);
  report.avg_real = average_length(dist, report.real_lengths);
  report.avg_int = average_length(dist, report.int_lengths);
  report.kraft_classical = kraft_sum_classical(report.int_lengths, base);
  report.kraft_classical_feasible = report.kraft_classical <= 1.0 + 1e-12;

  const bool has_sign = kind == Kind::plus || kind == Kind::minus;
  const bool all_positive =
      std::all_of(report.real_lengths.begin(), report.real_lengths.end(),
                  [](double l) { return l > 0.0; });
  if (has_sign && all_positive) {
    const Sign sign = kind == Kind::plus ? Sign::plus : Sign::minus;
    report.kraft_generalized = kraft_sum_generalized(
        sign, report.real_lengths, base, max_series_order);
  }

  report.sandwich_ok = std::abs(report.avg_real - report.entropy_value) <= 1e-9 &&
                       report.avg_int >= report.entropy_value - 1e-9 &&
                       report.avg_int < report.entropy_value + 1.0;
  return report;
}

SourceSample simulate_source(std::uint64_t seed, const Distribution& dist,
                             std::size_t n_draws) {
  if (dist.mode() != MassMode::normalized)
    throw std::invalid_argument("simulation requires a normalized distribution");
  if (n_draws < 1) throw std::invalid_argument("n_draws must be >= 1");

  std::vector<double> cumulative(dist.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    acc += dist[i];
    cumulative[i] = acc;
  }
  cumulative.back() = 1.0;

  // mt19937_64 output is fully specified, so samples are portable; the
  // 53-bit shift yields a uniform double in [0, 1).
  std::mt19937_64 engine(seed);
  SourceSample sample{{}, seed, dist};
  sample.symbols.reserve(n_draws);
  for (std::size_t i = 0; i < n_draws; ++i) {
    const double u =
        static_cast<double>(engine() >> 11) * 0x1.0p-53;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx =
        std::min<std::size_t>(it - cumulative.begin(), dist.size() - 1);
    sample.symbols.push_back(static_cast<std::uint32_t>(idx));
  }
  return sample;
}

Distribution empirical_distribution(const SourceSample& sample) {
  std::vector<std::int64_t> counts(sample.source.size(), 0);
  for (std::uint32_t s : sample.symbols) counts[s] += 1;
  return Distribution::from_counts(counts);
}

}  // namespace gentropy
