#include "gentropy/capacity.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

using namespace gentropy;

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLn2 = std::numbers::ln2;
}  // namespace

TEST_CASE("channel construction") {
  const ChannelSpec bsc = ChannelSpec::bsc(0.1);
  CHECK(bsc.inputs() == 2);
  CHECK(bsc.outputs() == 2);
  CHECK(bsc.transition(0, 0) == 0.9);
  CHECK(bsc.transition(0, 1) == 0.1);

  const ChannelSpec bec = ChannelSpec::bec(0.25);
  CHECK(bec.outputs() == 3);
  CHECK(bec.transition(0, 1) == 0.25);
  CHECK(bec.transition(0, 2) == 0.0);
  CHECK(bec.transition(1, 0) == 0.0);

  CHECK_THROWS_AS(ChannelSpec::bsc(1.5), std::domain_error);
  CHECK_THROWS_AS(ChannelSpec::bec(-0.1), std::domain_error);
  CHECK_THROWS_AS(ChannelSpec::custom(2, 2, {0.5, 0.4, 0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ChannelSpec::custom(2, 2, {0.5, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("BSC closed forms: endpoints and frozen values") {
  for (Kind k : {Kind::shannon, Kind::plus, Kind::minus, Kind::zero}) {
    CHECK(std::abs(bsc_capacity_closed(k, 0.0) - 1.0) <= 1e-12);
    CHECK(std::abs(bsc_capacity_closed(k, 1.0) - 1.0) <= 1e-12);
    CHECK(std::abs(bsc_capacity_closed(k, 0.5)) <= 1e-12);
  }
  CHECK(bsc_capacity_closed(Kind::shannon, 0.1) ==
        doctest::Approx(0.53100440641071878).epsilon(1e-12));
  CHECK(bsc_capacity_closed(Kind::plus, 0.1) ==
        doctest::Approx(0.49445878195395976).epsilon(1e-12));
  CHECK(bsc_capacity_closed(Kind::minus, 0.1) ==
        doctest::Approx(0.56738348668228495).epsilon(1e-12));
  CHECK_THROWS_AS(bsc_capacity_closed(Kind::plus, -0.01), std::domain_error);
}

TEST_CASE("BSC closed forms agree with the normalized-entropy route") {
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    const Distribution noise = Distribution::normalized({p, 1.0 - p});
    for (Kind k : {Kind::shannon, Kind::plus, Kind::minus, Kind::zero}) {
      const double via_entropy =
          1.0 - entropy(k, noise, 2, Convention::natural) /
                    binary_measure_maximum(k);
      CHECK(std::abs(bsc_capacity_closed(k, p) - via_entropy) <= 1e-12);
    }
  }
}

TEST_CASE("BSC symmetry and ordering on a grid") {
  for (int i = 0; i <= 1000; ++i) {
    const double p = i / 1000.0;
    const double cp = bsc_capacity_closed(Kind::plus, p);
    const double cs = bsc_capacity_closed(Kind::shannon, p);
    const double cm = bsc_capacity_closed(Kind::minus, p);
    CHECK(cp <= cs + 1e-14);
    CHECK(cs <= cm + 1e-14);
    for (Kind k : {Kind::shannon, Kind::plus, Kind::minus})
      CHECK(std::abs(bsc_capacity_closed(k, p) -
                     bsc_capacity_closed(k, 1.0 - p)) <= 1e-12);
  }
}

TEST_CASE("uncorrected minus form is non-physical") {
  // the uncorrected expression blows past 1 where the capacity must vanish
  CHECK(bsc_capacity_minus_uncorrected(0.5) ==
        doctest::Approx(3.1213203435596424).epsilon(1e-12));
  CHECK(bsc_capacity_minus_uncorrected(0.5) > 1.0);
  CHECK(std::abs(bsc_capacity_minus_uncorrected(0.0) - 1.0) > 0.5);
  // the corrected form fixes both defects
  CHECK(std::abs(bsc_capacity_closed(Kind::minus, 0.5)) <= 1e-12);
}

TEST_CASE("BEC closed forms") {
  for (Kind k : {Kind::shannon, Kind::plus, Kind::minus, Kind::zero}) {
    CHECK(std::abs(bec_capacity_closed(k, 0.0) - 1.0) <= 1e-12);
    CHECK(std::abs(bec_capacity_closed(k, 1.0)) <= 1e-12);
  }
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    CHECK(bec_capacity_closed(Kind::shannon, a) == 1.0 - a);
  }
  CHECK(bec_capacity_closed(Kind::plus, 0.25) ==
        doctest::Approx(0.71850499570010343).epsilon(1e-12));
  CHECK(bec_capacity_closed(Kind::plus, 0.75) ==
        doctest::Approx(0.28057160135653027).epsilon(1e-12));
  CHECK(bec_capacity_closed(Kind::minus, 0.25) ==
        doctest::Approx(0.78336592131274292).epsilon(1e-12));
  CHECK(bec_capacity_closed(Kind::minus, 0.75) ==
        doctest::Approx(0.21739475438079737).epsilon(1e-12));
}

TEST_CASE("BEC bounds flip sides at alpha = 1/2") {
  for (double a : {0.05, 0.2, 0.35, 0.49}) {
    CHECK(bec_capacity_closed(Kind::plus, a) <
          bec_capacity_closed(Kind::shannon, a));
    CHECK(bec_capacity_closed(Kind::minus, a) >
          bec_capacity_closed(Kind::shannon, a));
  }
  for (double a : {0.51, 0.65, 0.8, 0.95}) {
    CHECK(bec_capacity_closed(Kind::plus, a) >
          bec_capacity_closed(Kind::shannon, a));
    CHECK(bec_capacity_closed(Kind::minus, a) <
          bec_capacity_closed(Kind::shannon, a));
  }
  // bisect the crossing of C+- against the Shannon line
  for (Kind k : {Kind::plus, Kind::minus}) {
    double lo = 0.45, hi = 0.55;
    const auto gap = [&](double a) {
      return bec_capacity_closed(k, a) - bec_capacity_closed(Kind::shannon, a);
    };
    const double sign_lo = gap(lo);
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (lo + hi);
      (gap(mid) * sign_lo > 0.0 ? lo : hi) = mid;
    }
    CHECK(std::abs(0.5 * (lo + hi) - 0.5) <= 1e-6);
  }
}

TEST_CASE("mutual information of clean channels") {
  const ChannelSpec identity = ChannelSpec::custom(2, 2, {1.0, 0.0, 0.0, 1.0});
  CHECK(mutual_information(Kind::shannon, 0.5, identity) ==
        doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(mutual_information(Kind::plus, 0.5, identity) ==
        doctest::Approx(2.0 - kSqrt2).epsilon(1e-15));
  // useless channel: both inputs produce the same output column
  const ChannelSpec useless = ChannelSpec::custom(2, 2, {0.5, 0.5, 0.5, 0.5});
  CHECK(std::abs(mutual_information(Kind::shannon, 0.3, useless)) <= 1e-15);
  CHECK_THROWS_AS(mutual_information(Kind::shannon, 1.2, identity),
                  std::domain_error);
}

TEST_CASE("BEC mutual information matches the closed identities") {
  // I+ = 1 - a^a + H+(P) - H+(Pa), I- = a^-a - 1 + H-(P) - H-(Pa)
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    const ChannelSpec channel = ChannelSpec::bec(a);
    for (double p : {0.5, 0.3, 0.8}) {
      const Distribution input = Distribution::normalized({p, 1.0 - p});
      const Distribution scaled = scale(input, a);
      const double ip = mutual_information(Kind::plus, p, channel);
      const double expected_p =
          1.0 - std::pow(a, a) +
          entropy(Kind::plus, input, 2, Convention::natural) -
          entropy(Kind::plus, scaled, 2, Convention::natural);
      CHECK(std::abs(ip - expected_p) <= 1e-12);
      const double im = mutual_information(Kind::minus, p, channel);
      const double expected_m =
          std::pow(a, -a) - 1.0 +
          entropy(Kind::minus, input, 2, Convention::natural) -
          entropy(Kind::minus, scaled, 2, Convention::natural);
      CHECK(std::abs(im - expected_m) <= 1e-12);
    }
  }
}

TEST_CASE("numeric capacity agrees with closed forms where they coincide") {
  // Shannon: both channels; plus/minus: the BEC identity route
  for (double p : {0.1, 0.25, 0.4}) {
    const CapacityResult r = capacity_numeric(Kind::shannon, ChannelSpec::bsc(p));
    CHECK(std::abs(r.value - bsc_capacity_closed(Kind::shannon, p)) <= 1e-6);
    CHECK(std::abs(r.maximizer - 0.5) <= 1e-4);
  }
  for (double a : {0.25, 0.75}) {
    for (Kind k : {Kind::shannon, Kind::plus, Kind::minus}) {
      const CapacityResult r = capacity_numeric(k, ChannelSpec::bec(a));
      CHECK(std::abs(r.value - bec_capacity_closed(k, a)) <= 1e-6);
      CHECK(std::abs(r.maximizer - 0.5) <= 1e-4);
    }
  }
}

TEST_CASE("numeric BSC capacity for the signed measures") {
  // The signed closed forms normalize the noise entropy, which is not the
  // joint-route maximum for a non-additive measure: the two stay within a
  // few parts in 1e3 of each other, with the maximizer still at 1/2 away
  // from the flat region.
  for (Kind k : {Kind::plus, Kind::minus}) {
    const CapacityResult r = capacity_numeric(k, ChannelSpec::bsc(0.1));
    CHECK(std::abs(r.maximizer - 0.5) <= 1e-4);
    const double gap = std::abs(r.value - bsc_capacity_closed(k, 0.1));
    CHECK(gap <= 3e-3);
  }
  // Useless channel: the Shannon value vanishes for every input, but the
  // non-additive measures keep a small spurious maximum away from the
  // uniform input.
  CHECK(std::abs(capacity_numeric(Kind::shannon, ChannelSpec::bsc(0.5)).value) <=
        1e-9);
  for (Kind k : {Kind::plus, Kind::minus}) {
    const CapacityResult r = capacity_numeric(k, ChannelSpec::bsc(0.5));
    CHECK(std::abs(mutual_information(k, 0.5, ChannelSpec::bsc(0.5))) <= 1e-12);
    CHECK(r.value >= 0.0);
    CHECK(r.value <= 2e-3);
  }
}

TEST_CASE("capacity_numeric argument validation") {
  CHECK_THROWS_AS(capacity_numeric(Kind::shannon, ChannelSpec::bsc(0.1), 0.7),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      capacity_numeric(Kind::shannon, ChannelSpec::bsc(0.1), 1e-3, 0.0),
      std::invalid_argument);
}

TEST_CASE("Shannon additivity on product channels, signed non-additivity") {
  const double crossover = 0.1;
  const ChannelSpec single = ChannelSpec::bsc(crossover);
  // Kronecker product of the channel with itself
  std::vector<double> product;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t o1 = 0; o1 < 2; ++o1)
        for (std::size_t o2 = 0; o2 < 2; ++o2)
          product.push_back(single.transition(i1, o1) *
                            single.transition(i2, o2));
  const ChannelSpec pair = ChannelSpec::custom(4, 4, product);
  const Distribution uniform4 = Distribution::uniform(4);

  const double i_single =
      mutual_information(Kind::shannon, 0.5, single);
  const double i_pair = mutual_information(Kind::shannon, uniform4, pair);
  CHECK(std::abs(i_pair - 2.0 * i_single) <= 1e-9);

  for (Kind k : {Kind::plus, Kind::minus}) {
    const double s = mutual_information(k, 0.5, single);
    const double d = mutual_information(k, uniform4, pair);
    CHECK(std::abs(d - 2.0 * s) > 0.01);
  }
}

TEST_CASE("zero measure sits between plus and minus") {
  const double c0 = bsc_capacity_closed(Kind::zero, 0.1);
  CHECK(c0 > bsc_capacity_closed(Kind::plus, 0.1));
  CHECK(c0 < bsc_capacity_closed(Kind::minus, 0.1));
  const double b0 = bec_capacity_closed(Kind::zero, 0.25);
  CHECK(b0 > bec_capacity_closed(Kind::plus, 0.25));
  CHECK(b0 < bec_capacity_closed(Kind::minus, 0.25));
}
