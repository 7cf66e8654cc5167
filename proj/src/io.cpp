#include "gentropy/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace gentropy::io {

namespace {

std::vector<std::string> split(const std::string& text, char delim) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, delim)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& token) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + token + "'");
  }
  while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
    ++used;
  if (used != token.size())
    throw std::invalid_argument("not a number: '" + token + "'");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_inline(const std::string& arg) {
  if (arg.empty()) return false;
  bool digit = false;
  for (char ch : arg) {
    if (std::isdigit(static_cast<unsigned char>(ch))) digit = true;
    else if (ch != '.' && ch != ',' && ch != 'e' && ch != 'E' && ch != '+' &&
             ch != '-' && ch != ' ')
      return false;
  }
  return digit;
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::shannon: return "shannon";
    case Kind::plus: return "plus";
    case Kind::minus: return "minus";
    case Kind::zero: return "zero";
  }
  return "?";
}

std::string convention_name(Convention convention) {
  switch (convention) {
    case Convention::rescale: return "rescale";
    case Convention::substitution: return "substitution";
    case Convention::natural: return "natural";
  }
  return "?";
}

Kind parse_kind(const std::string& name) {
  if (name == "shannon") return Kind::shannon;
  if (name == "plus") return Kind::plus;
  if (name == "minus") return Kind::minus;
  if (name == "zero") return Kind::zero;
  throw std::invalid_argument("unknown variant: " + name);
}

Convention parse_convention(const std::string& name) {
  if (name == "rescale") return Convention::rescale;
  if (name == "substitution") return Convention::substitution;
  if (name == "natural") return Convention::natural;
  throw std::invalid_argument("unknown convention: " + name);
}

Distribution parse_inline_probs(const std::string& text) {
  std::vector<double> probs;
  for (const std::string& tok : split(text, ','))
    probs.push_back(parse_double(tok));
  return Distribution::normalized(std::move(probs));
}

Distribution parse_json_distribution(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
  }
  try {
    if (doc.contains("probs")) {
      std::vector<double> probs;
      for (const auto& v : doc["probs"]) probs.push_back(v.get<double>());
      return Distribution::normalized(std::move(probs));
    }
    if (doc.contains("counts")) {
      std::vector<std::int64_t> counts;
      for (const auto& v : doc["counts"])
        counts.push_back(v.get<std::int64_t>());
      return Distribution::from_counts(counts);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON input: ") +
                                e.what());
  }
  throw std::invalid_argument("JSON input needs a 'probs' or 'counts' array");
}

Distribution parse_token_text(const std::string& content) {
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::int64_t> counts;
  std::istringstream in(content);
  std::string token;
  while (in >> token) {
    auto [it, inserted] = index.emplace(token, counts.size());
    if (inserted) counts.push_back(0);
    counts[it->second] += 1;
  }
  if (counts.empty())
    throw std::invalid_argument("no symbols found in token input");
  return Distribution::from_counts(counts);
}

Distribution load_distribution(const std::string& arg) {
  if (looks_like_inline(arg)) return parse_inline_probs(arg);
  const std::string content = read_file(arg);
  const std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{')
    return parse_json_distribution(content);
  return parse_token_text(content);
}

std::vector<double> parse_lengths_list(const std::string& text) {
  std::vector<double> lengths;
  for (const std::string& tok : split(text, ','))
    lengths.push_back(parse_double(tok));
  if (lengths.empty()) throw std::invalid_argument("empty length list");
  return lengths;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out << ',';
    out << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_value(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

SweepTable sweep_fig1(std::int64_t n_min, std::int64_t n_max,
                      std::int64_t step) {
  if (step < 1) throw std::invalid_argument("sweep step must be >= 1");
  if (n_min < 1 || n_min > n_max) throw std::invalid_argument("empty sweep range");
  SweepTable table;
  table.header = {"N", "H_shannon", "H_plus", "H_minus"};
  for (std::int64_t n = n_min; n <= n_max; n += step)
    table.rows.push_back({static_cast<double>(n),
                          uniform_entropy_closed(Kind::shannon, n),
                          uniform_entropy_closed(Kind::plus, n),
                          uniform_entropy_closed(Kind::minus, n)});
  return table;
}

SweepTable sweep_uniform(std::int64_t n_min, std::int64_t n_max,
                         std::int64_t step) {
  if (step < 1) throw std::invalid_argument("sweep step must be >= 1");
  if (n_min < 2 || n_min > n_max)
    throw std::invalid_argument("uniform sweep requires 2 <= min <= max");
  SweepTable table;
  table.header = {"N",      "H_shannon",  "H_plus",     "H_minus",
                  "H_zero", "ratio_plus", "ratio_minus"};
  for (std::int64_t n = n_min; n <= n_max; n += step) {
    const double hs = uniform_entropy_closed(Kind::shannon, n);
    const double hp = uniform_entropy_closed(Kind::plus, n);
    const double hm = uniform_entropy_closed(Kind::minus, n);
    table.rows.push_back({static_cast<double>(n), hs, hp, hm,
                          0.5 * (hp + hm), hp / hs, hm / hs});
  }
  return table;
}

namespace {

SweepTable sweep_channel(double lo, double hi, double step,
                         const char* param_name,
                         double (*closed)(Kind, double)) {
  if (!(step > 0.0)) throw std::invalid_argument("sweep step must be positive");
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
    throw std::invalid_argument("empty sweep range");
  SweepTable table;
  table.header = {param_name, "C_shannon", "C_plus", "C_minus"};
  const auto count =
      static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = std::min(lo + static_cast<double>(i) * step, hi);
    table.rows.push_back({x, closed(Kind::shannon, x), closed(Kind::plus, x),
                          closed(Kind::minus, x)});
  }
  return table;
}

}  // namespace

SweepTable sweep_bsc(double p_min, double p_max, double step) {
  return sweep_channel(p_min, p_max, step, "p", &bsc_capacity_closed);
}

SweepTable sweep_bec(double a_min, double a_max, double step) {
  return sweep_channel(a_min, a_max, step, "alpha", &bec_capacity_closed);
}

std::string report_to_csv(const CodeLengthReport& report,
                          const Distribution& dist) {
  std::ostringstream out;
  out << "# kind," << kind_name(report.kind) << '\n';
  out << "# base," << report.base << '\n';
  out << "# convention," << convention_name(report.convention) << '\n';
  out << "# entropy," << format_value(report.entropy_value) << '\n';
  out << "# avg_real," << format_value(report.avg_real) << '\n';
  out << "# avg_int," << format_value(report.avg_int) << '\n';
  out << "# kraft_classical," << format_value(report.kraft_classical) << '\n';
  out << "# kraft_generalized,";
  if (report.kraft_generalized) out << format_value(*report.kraft_generalized);
  out << '\n';
  out << "# kraft_classical_feasible,"
      << (report.kraft_classical_feasible ? "true" : "false") << '\n';
  out << "# sandwich_ok," << (report.sandwich_ok ? "true" : "false") << '\n';
  out << "index,prob,real_length,int_length\n";
  for (std::size_t i = 0; i < report.real_lengths.size(); ++i)
    out << i << ',' << format_value(dist[i]) << ','
        << format_value(report.real_lengths[i]) << ','
        << report.int_lengths[i] << '\n';
  return out.str();
}

std::string report_to_json(const CodeLengthReport& report,
                           const Distribution& dist) {
  nlohmann::json doc;
  doc["kind"] = kind_name(report.kind);
  doc["base"] = report.base;
  doc["convention"] = convention_name(report.convention);
  doc["entropy"] = report.entropy_value;
  doc["avg_real"] = report.avg_real;
  doc["avg_int"] = report.avg_int;
  doc["kraft_classical"] = report.kraft_classical;
  if (report.kraft_generalized)
    doc["kraft_generalized"] = *report.kraft_generalized;
  else
    doc["kraft_generalized"] = nullptr;
  doc["kraft_classical_feasible"] = report.kraft_classical_feasible;
  doc["sandwich_ok"] = report.sandwich_ok;
  doc["probs"] = dist.probs();
  doc["real_lengths"] = report.real_lengths;
  doc["int_lengths"] = report.int_lengths;
  return doc.dump(2) + "\n";
}

}  // namespace gentropy::io
