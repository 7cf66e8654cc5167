#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gentropy/capacity.hpp"
#include "gentropy/coding.hpp"
#include "gentropy/entropy.hpp"
#include "gentropy/genfun.hpp"
#include "gentropy/io.hpp"

namespace {

using namespace gentropy;

std::vector<Kind> selected_kinds(const std::string& variant) {
  if (variant == "all")
    return {Kind::shannon, Kind::plus, Kind::minus, Kind::zero};
  return {io::parse_kind(variant)};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::string path = out_path;
  if (const char* dir = std::getenv("GENTROPY_OUT_DIR");
      dir && !out_path.empty() && out_path.front() != '/')
    path = std::string(dir) + "/" + out_path;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write output file: " + path);
  out << text;
}

std::string run_entropy(const std::string& input, const std::string& variant,
                        int base, const std::string& convention,
                        const std::string& format) {
  const Distribution dist = io::load_distribution(input);
  const Convention conv = io::parse_convention(convention);
  std::ostringstream csv;
  nlohmann::json doc;
  csv << "measure,value\n";
  for (Kind kind : selected_kinds(variant)) {
    const double h = entropy(kind, dist, base, conv);
    csv << io::kind_name(kind) << ',' << io::format_value(h) << '\n';
    doc[io::kind_name(kind)] = h;
  }
  return format == "json" ? doc.dump(2) + "\n" : csv.str();
}

std::string run_lengths(const std::string& input, const std::string& variant,
                        int base, const std::string& convention,
                        const std::string& format) {
  const Distribution dist = io::load_distribution(input);
  const Convention conv = io::parse_convention(convention);
  const std::vector<Kind> kinds = selected_kinds(variant);

  if (format == "json") {
    if (kinds.size() == 1)
      return io::report_to_json(theorem_report(kinds[0], dist, base, conv),
                                dist);
    nlohmann::json doc;
    doc["reports"] = nlohmann::json::array();
    for (Kind kind : kinds)
      doc["reports"].push_back(nlohmann::json::parse(
          io::report_to_json(theorem_report(kind, dist, base, conv), dist)));
    return doc.dump(2) + "\n";
  }

  if (kinds.size() == 1)
    return io::report_to_csv(theorem_report(kinds[0], dist, base, conv), dist);

  std::ostringstream out;
  out << "kind,entropy,avg_real,avg_int,kraft_classical,kraft_generalized,"
         "kraft_classical_feasible,sandwich_ok\n";
  for (Kind kind : kinds) {
    const CodeLengthReport r = theorem_report(kind, dist, base, conv);
    out << io::kind_name(kind) << ',' << io::format_value(r.entropy_value)
        << ',' << io::format_value(r.avg_real) << ','
        << io::format_value(r.avg_int) << ','
        << io::format_value(r.kraft_classical) << ',';
    if (r.kraft_generalized) out << io::format_value(*r.kraft_generalized);
    out << ',' << (r.kraft_classical_feasible ? "true" : "false") << ','
        << (r.sandwich_ok ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string run_kraft(const std::string& lengths_arg,
                      const std::string& variant, int base, int j_max,
                      const std::string& format) {
  const std::vector<double> lengths = io::parse_lengths_list(lengths_arg);
  double classical = 0.0;  // well-defined for real lengths too
  for (double l : lengths) {
    if (l < 0.0) throw std::invalid_argument("negative codeword length");
    classical += std::pow(static_cast<double>(base), -l);
  }
  std::ostringstream csv;
  nlohmann::json doc;
  csv << "measure,value\n";
  csv << "classical," << io::format_value(classical) << '\n';
  doc["classical"] = classical;
  const bool want_plus = variant == "all" || variant == "plus";
  const bool want_minus = variant == "all" || variant == "minus";
  if (want_plus) {
    const double k = kraft_sum_generalized(Sign::plus, lengths, base, j_max);
    csv << "generalized_plus," << io::format_value(k) << '\n';
    doc["generalized_plus"] = k;
  }
  if (want_minus) {
    const double k = kraft_sum_generalized(Sign::minus, lengths, base, j_max);
    csv << "generalized_minus," << io::format_value(k) << '\n';
    doc["generalized_minus"] = k;
  }
  doc["j_max"] = j_max;
  doc["base"] = base;
  return format == "json" ? doc.dump(2) + "\n" : csv.str();
}

std::string run_capacity(const std::string& channel_name, double param,
                         const std::string& variant, const std::string& method,
                         double grid_step, bool legacy_minus,
                         const std::string& format) {
  const ChannelSpec channel = channel_name == "bsc" ? ChannelSpec::bsc(param)
                                                    : ChannelSpec::bec(param);
  std::ostringstream csv;
  nlohmann::json rows = nlohmann::json::array();
  csv << "kind,value,maximizer,method\n";
  for (Kind kind : selected_kinds(variant)) {
    double value;
    double maximizer;
    std::string method_name;
    if (method == "numeric") {
      const CapacityResult r = capacity_numeric(kind, channel, grid_step);
      value = r.value;
      maximizer = r.maximizer;
      method_name = "numeric";
    } else {
      if (kind == Kind::minus && legacy_minus && channel_name == "bsc")
        value = bsc_capacity_minus_uncorrected(param);
      else
        value = channel_name == "bsc" ? bsc_capacity_closed(kind, param)
                                      : bec_capacity_closed(kind, param);
      maximizer = 0.5;
      method_name = "closed_form";
    }
    csv << io::kind_name(kind) << ',' << io::format_value(value) << ','
        << io::format_value(maximizer) << ',' << method_name << '\n';
    rows.push_back({{"kind", io::kind_name(kind)},
                    {"value", value},
                    {"maximizer", maximizer},
                    {"method", method_name}});
  }
  if (format == "json") {
    nlohmann::json doc;
    doc["channel"] = channel_name;
    doc["param"] = param;
    doc["capacities"] = rows;
    return doc.dump(2) + "\n";
  }
  return csv.str();
}

std::string run_sweep(const std::string& target, double min_v, double max_v,
                      double step, const std::string& format) {
  io::SweepTable table;
  if (target == "fig1")
    table = io::sweep_fig1(static_cast<std::int64_t>(min_v),
                           static_cast<std::int64_t>(max_v),
                           static_cast<std::int64_t>(step));
  else if (target == "uniform")
    table = io::sweep_uniform(static_cast<std::int64_t>(min_v),
                              static_cast<std::int64_t>(max_v),
                              static_cast<std::int64_t>(step));
  else if (target == "bsc")
    table = io::sweep_bsc(min_v, max_v, step);
  else
    table = io::sweep_bec(min_v, max_v, step);
  if (format == "json") {
    nlohmann::json doc;
    doc["header"] = table.header;
    doc["rows"] = table.rows;
    return doc.dump(2) + "\n";
  }
  return io::to_csv(table);
}

std::string run_simulate(const std::string& input, std::uint64_t seed,
                         std::size_t draws, const std::string& format) {
  const Distribution dist = io::load_distribution(input);
  const SourceSample sample = simulate_source(seed, dist, draws);
  std::vector<std::int64_t> counts(dist.size(), 0);
  for (std::uint32_t s : sample.symbols) counts[s] += 1;
  const Distribution empirical = empirical_distribution(sample);

  if (format == "json") {
    nlohmann::json doc;
    doc["seed"] = seed;
    doc["draws"] = draws;
    doc["counts"] = counts;
    doc["probs"] = empirical.probs();
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "symbol,count,empirical_prob\n";
  for (std::size_t i = 0; i < counts.size(); ++i)
    out << i << ',' << counts[i] << ',' << io::format_value(empirical[i])
        << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gentropy: parameter-free generalized entropies, coding bounds, and "
      "channel capacities"};
  app.require_subcommand(1);

  const std::vector<std::string> variants = {"shannon", "plus", "minus",
                                             "zero", "all"};
  const std::vector<std::string> conventions = {"rescale", "substitution",
                                                "natural"};
  const std::vector<std::string> formats = {"csv", "json"};

  std::string input, variant = "all", convention = "rescale", format = "csv";
  std::string out_path;
  int base = 2;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input)
      sub->add_option("input", input,
                      "inline probabilities (\"0.5,0.5\"), a JSON file with "
                      "probs/counts, or a raw symbol text file")
          ->required();
    sub->add_option("--variant", variant, "measure to report")
        ->check(CLI::IsMember(variants));
    sub->add_option("--base", base, "alphabet size D")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--convention", convention, "base-D conversion rule")
        ->check(CLI::IsMember(conventions));
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember(formats));
    sub->add_option("--out", out_path,
                    "write output to this file (GENTROPY_OUT_DIR prefixes "
                    "relative paths)");
  };

  CLI::App* cmd_entropy =
      app.add_subcommand("entropy", "entropy report for a distribution");
  add_common(cmd_entropy, true);

  CLI::App* cmd_lengths = app.add_subcommand(
      "lengths", "optimal/integer codeword lengths and theorem report");
  add_common(cmd_lengths, true);

  std::string lengths_arg;
  int j_max = 8;
  CLI::App* cmd_kraft =
      app.add_subcommand("kraft", "classical and generalized Kraft sums");
  cmd_kraft->add_option("--lengths", lengths_arg, "comma-separated lengths")
      ->required();
  cmd_kraft->add_option("--jmax", j_max, "series truncation order 0..8")
      ->check(CLI::Range(0, 8));
  add_common(cmd_kraft, false);

  std::string channel_name, method = "closed";
  double param = 0.0;
  double grid_step = 1e-3;
  bool legacy_minus = false;
  CLI::App* cmd_capacity =
      app.add_subcommand("capacity", "BSC/BEC channel capacity");
  cmd_capacity->add_option("--channel", channel_name, "channel model")
      ->check(CLI::IsMember({"bsc", "bec"}))
      ->required();
  cmd_capacity->add_option("--param", param,
                           "crossover (bsc) or erasure (bec) probability")
      ->required();
  cmd_capacity->add_option("--method", method, "evaluation route")
      ->check(CLI::IsMember({"closed", "numeric"}));
  cmd_capacity->add_option("--step", grid_step, "numeric grid step");
  cmd_capacity->add_flag(
      "--legacy-minus", legacy_minus,
      "use the uncorrected minus-branch BSC formula (non-physical; for "
      "comparison only)");
  add_common(cmd_capacity, false);

  std::string target;
  double sweep_min = -1.0, sweep_max = -1.0, sweep_step = -1.0;
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "tabulate entropies/capacities to CSV");
  cmd_sweep->add_option("--target", target, "sweep family")
      ->check(CLI::IsMember({"fig1", "uniform", "bsc", "bec"}))
      ->required();
  CLI::Option* opt_min = cmd_sweep->add_option("--min", sweep_min, "range start");
  CLI::Option* opt_max = cmd_sweep->add_option("--max", sweep_max, "range end");
  CLI::Option* opt_step = cmd_sweep->add_option("--step", sweep_step, "grid step");
  add_common(cmd_sweep, false);

  std::uint64_t seed = 0;
  std::size_t draws = 1000;
  CLI::App* cmd_simulate = app.add_subcommand(
      "simulate", "seeded i.i.d. source draws and empirical distribution");
  cmd_simulate->add_option("--seed", seed, "RNG seed");
  cmd_simulate->add_option("--draws", draws, "number of draws")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  add_common(cmd_simulate, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (cmd_entropy->parsed()) {
      text = run_entropy(input, variant, base, convention, format);
    } else if (cmd_lengths->parsed()) {
      text = run_lengths(input, variant, base, convention, format);
    } else if (cmd_kraft->parsed()) {
      text = run_kraft(lengths_arg, variant, base, j_max, format);
    } else if (cmd_capacity->parsed()) {
      text = run_capacity(channel_name, param, variant, method, grid_step,
                          legacy_minus, format);
    } else if (cmd_sweep->parsed()) {
      const bool integer_target = target == "fig1" || target == "uniform";
      if (!*opt_min) sweep_min = integer_target ? 2.0 : 0.0;
      if (!*opt_max) sweep_max = integer_target ? 100.0 : 1.0;
      if (!*opt_step) sweep_step = integer_target ? 1.0 : 0.01;
      text = run_sweep(target, sweep_min, sweep_max, sweep_step, format);
    } else if (cmd_simulate->parsed()) {
      text = run_simulate(input, seed, draws, format);
    }
    emit(text, out_path);
  } catch (const gentropy::numeric_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
