#include "gentropy/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "doctest.h"

using namespace gentropy;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("format_value prints 12 significant digits with a dot") {
  CHECK(io::format_value(0.5) == "0.5");
  CHECK(io::format_value(2.0) == "2");
  CHECK(io::format_value(std::numbers::ln2) == "0.69314718056");
  CHECK(io::format_value(-0.0) == "0");
  CHECK(io::format_value(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("name round trips") {
  for (Kind k : {Kind::shannon, Kind::plus, Kind::minus, Kind::zero})
    CHECK(io::parse_kind(io::kind_name(k)) == k);
  for (Convention c :
       {Convention::rescale, Convention::substitution, Convention::natural})
    CHECK(io::parse_convention(io::convention_name(c)) == c);
  CHECK_THROWS_AS(io::parse_kind("q"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_convention("bits"), std::invalid_argument);
}

TEST_CASE("inline probability parsing") {
  const Distribution d = io::parse_inline_probs("0.5,0.25,0.25");
  CHECK(d.size() == 3);
  CHECK(d[0] == 0.5);
  CHECK_THROWS_WITH_AS(io::parse_inline_probs("0.5,0.6"), "mass exceeds 1",
                       std::invalid_argument);
  CHECK_THROWS_AS(io::parse_inline_probs("0.5,abc"), std::invalid_argument);
}

TEST_CASE("JSON distribution parsing") {
  const Distribution p = io::parse_json_distribution(R"({"probs":[0.5,0.5]})");
  CHECK(p.size() == 2);
  const Distribution c = io::parse_json_distribution(R"({"counts":[3,1]})");
  CHECK(c[0] == 0.75);
  CHECK_THROWS_AS(io::parse_json_distribution(R"({"weights":[1]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::parse_json_distribution("{not json"),
                  std::invalid_argument);
}

TEST_CASE("token text parsing keeps first-appearance order") {
  const Distribution d = io::parse_token_text("b a b\n c b");
  CHECK(d.size() == 3);
  CHECK(d[0] == 0.6);   // b appears three times out of five
  CHECK(d[1] == 0.2);   // a
  CHECK(d[2] == 0.2);   // c
  CHECK_THROWS_AS(io::parse_token_text("  \n "), std::invalid_argument);
}

TEST_CASE("load_distribution dispatches on the argument shape") {
  CHECK(io::load_distribution("0.5,0.5").size() == 2);
  const auto json_path =
      write_temp("gentropy_io_test.json", R"({"counts":[1,1,2]})");
  CHECK(io::load_distribution(json_path.string())[2] == 0.5);
  const auto tok_path = write_temp("gentropy_io_test.txt", "x y x z");
  CHECK(io::load_distribution(tok_path.string())[0] == 0.5);
  CHECK_THROWS_AS(io::load_distribution("/no/such/file"),
                  std::invalid_argument);
  std::filesystem::remove(json_path);
  std::filesystem::remove(tok_path);
}

TEST_CASE("sweep tables") {
  const io::SweepTable fig1 = io::sweep_fig1(2, 5, 1);
  CHECK(fig1.header ==
        std::vector<std::string>{"N", "H_shannon", "H_plus", "H_minus"});
  CHECK(fig1.rows.size() == 4);
  CHECK(fig1.rows[0][0] == 2.0);
  CHECK(fig1.rows[0][1] == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(fig1.rows[0][2] ==
        doctest::Approx(2.0 - std::numbers::sqrt2).epsilon(1e-15));
  // ordering holds in every row
  for (const auto& row : fig1.rows) {
    CHECK(row[2] < row[1]);
    CHECK(row[1] < row[3]);
  }
  CHECK_THROWS_WITH_AS(io::sweep_fig1(5, 2, 1), "empty sweep range",
                       std::invalid_argument);

  const io::SweepTable bsc = io::sweep_bsc(0.0, 1.0, 0.1);
  CHECK(bsc.rows.size() == 11);
  CHECK(bsc.rows.front()[0] == 0.0);
  CHECK(bsc.rows.back()[0] == 1.0);
  // the midpoint row vanishes for all three measures
  for (std::size_t col = 1; col <= 3; ++col)
    CHECK(std::abs(bsc.rows[5][col]) <= 1e-9);

  const io::SweepTable bec = io::sweep_bec(0.0, 1.0, 0.25);
  for (const auto& row : bec.rows)
    CHECK(row[1] == 1.0 - row[0]);  // Shannon column is exactly 1 - alpha

  const io::SweepTable uni = io::sweep_uniform(10, 20, 5);
  CHECK(uni.rows.size() == 3);
  CHECK(uni.rows[0][5] == doctest::Approx(uni.rows[0][2] / uni.rows[0][1]));
}

TEST_CASE("sweep CSV layout") {
  const std::string csv = io::to_csv(io::sweep_bsc(0.0, 0.2, 0.1));
  CHECK(csv == "p,C_shannon,C_plus,C_minus\n"
               "0,1,1,1\n"
               "0.1,0.531004406411,0.494458781954,0.567383486682\n"
               "0.2,0.278071905113,0.251077413082,0.305708047192\n");
}

TEST_CASE("report serialization") {
  const Distribution u4 = Distribution::uniform(4);
  const CodeLengthReport r =
      theorem_report(Kind::plus, u4, 2, Convention::rescale);
  const std::string csv = io::report_to_csv(r, u4);
  CHECK(csv.find("# kind,plus") != std::string::npos);
  CHECK(csv.find("# sandwich_ok,true") != std::string::npos);
  CHECK(csv.find("index,prob,real_length,int_length") != std::string::npos);
  CHECK(csv.find("0,0.25,1.69022237717,2") != std::string::npos);
  const std::string json = io::report_to_json(r, u4);
  CHECK(json.find("\"kind\": \"plus\"") != std::string::npos);
  CHECK(json.find("\"sandwich_ok\": true") != std::string::npos);
}
