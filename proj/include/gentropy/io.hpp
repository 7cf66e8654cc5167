#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gentropy/capacity.hpp"
#include "gentropy/coding.hpp"
#include "gentropy/entropy.hpp"

namespace gentropy::io {

/// Locale-independent numeric cell: 12 significant digits, '.' separator.
std::string format_value(double v);

std::string kind_name(Kind kind);
std::string convention_name(Convention convention);
Kind parse_kind(const std::string& name);
Convention parse_convention(const std::string& name);

/// Comma-separated probabilities ("0.5,0.5") -> normalized distribution.
Distribution parse_inline_probs(const std::string& text);

/// JSON document with either {"probs": [...]} or {"counts": [...]}.
Distribution parse_json_distribution(const std::string& json_text);

/// Whitespace-separated symbol tokens -> empirical distribution, symbols
/// ordered by first appearance.
Distribution parse_token_text(const std::string& content);

/// Dispatch: inline probability list, JSON file, or raw token file.
Distribution load_distribution(const std::string& arg);

/// Comma-separated real lengths ("1,2,3.5").
std::vector<double> parse_lengths_list(const std::string& text);

/// Tabulated sweep rows for CSV emission; first column is the swept
/// parameter, monotone, one row per grid point.
struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const SweepTable& table);

/// (N, H_shannon, H_plus, H_minus) over uniform distributions, natural units.
SweepTable sweep_fig1(std::int64_t n_min, std::int64_t n_max,
                      std::int64_t step);

/// (N, H_shannon, H_plus, H_minus, H_zero, ratio_plus, ratio_minus):
/// the uniform closed forms with their Shannon ratios. Requires n_min >= 2.
SweepTable sweep_uniform(std::int64_t n_min, std::int64_t n_max,
                         std::int64_t step);

/// (p, C_shannon, C_plus, C_minus) closed-form BSC capacities.
SweepTable sweep_bsc(double p_min, double p_max, double step);

/// (alpha, C_shannon, C_plus, C_minus) closed-form BEC capacities.
SweepTable sweep_bec(double a_min, double a_max, double step);

std::string report_to_csv(const CodeLengthReport& report,
                          const Distribution& dist);
std::string report_to_json(const CodeLengthReport& report,
                           const Distribution& dist);

}  // namespace gentropy::io
