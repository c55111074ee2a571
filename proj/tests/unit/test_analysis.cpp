#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "deltascatter/analysis.hpp"
#include "deltascatter/error.hpp"
#include "deltascatter/transfer.hpp"

using namespace deltascatter;

namespace {

SweepSpec gap_sweep(std::vector<double> xi, double lo, double hi, std::size_t steps) {
  const std::size_t n = xi.size();
  return {SystemTemplate::dimensionless(std::move(xi), std::vector<double>(n - 1, 1.0)),
          SweepParameter::kGap, lo, hi, steps};
}

SweepSpec strength_sweep(std::size_t n, double gap, double lo, double hi,
                         std::size_t steps) {
  return {SystemTemplate::dimensionless(std::vector<double>(n, 1.0),
                                        std::vector<double>(n - 1, gap)),
          SweepParameter::kStrength, lo, hi, steps};
}

// Linear interpolation of T at `param` between the bracketing records.
double interpolate_t(const std::vector<SweepRecord>& records, double param) {
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].param >= param) {
      const auto& a = records[i - 1];
      const auto& b = records[i];
      const double w = (param - a.param) / (b.param - a.param);
      return a.transmission + w * (b.transmission - a.transmission);
    }
  }
  return records.back().transmission;
}

}  // namespace

TEST_CASE("sweep over the gap of six unit sites") {
  const SweepResult res = sweep(gap_sweep(std::vector<double>(6, 1.0), 0.05, 3.0, 300));
  REQUIRE(res.records.size() == 300);
  CHECK(res.skipped.empty());
  CHECK(res.records.front().param == 0.05);
  CHECK(res.records.back().param == 3.0);
  CHECK(std::is_sorted(res.records.begin(), res.records.end(),
                       [](const auto& a, const auto& b) { return a.param < b.param; }));
  CHECK(std::abs(interpolate_t(res.records, 1.0) - 0.236) <= 5e-3);
  for (const auto& r : res.records) {
    CHECK(std::abs(r.transmission + r.reflection - 1.0) <= 1e-9);
    CHECK(r.transmission >= -1e-9);
    CHECK(r.transmission <= 1.0 + 1e-9);
  }
}

TEST_CASE("sweep over the strength passes through the free particle") {
  const SweepResult res = sweep(strength_sweep(6, 1.0, -2.0, 2.0, 401));
  REQUIRE(res.records.size() == 401);
  CHECK(res.records[200].param == 0.0);
  CHECK(res.records[200].transmission == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("impurity arrays") {
  std::vector<double> weak(8, 1.0);
  weak[0] = 0.1;
  std::vector<double> half(8, 1.0);
  half[0] = 0.5;
  const SweepResult a = sweep(gap_sweep(weak, 0.5, 1.5, 3));
  const SweepResult b = sweep(gap_sweep(half, 0.5, 1.5, 3));
  CHECK(a.records[1].param == 1.0);
  CHECK(std::abs(a.records[1].transmission - 0.284) <= 5e-3);
  CHECK(std::abs(a.records[1].reflection - 0.716) <= 5e-3);
  CHECK(std::abs(b.records[1].transmission - 0.352) <= 5e-3);
  CHECK(std::abs(b.records[1].reflection - 0.6483) <= 5e-3);
}

TEST_CASE("wavenumber sweep rescales strengths and positions together") {
  const SweepSpec spec{SystemTemplate::reduced(std::vector<double>(6, 1.0),
                                               std::vector<double>(5, 1.0), 1.0),
                       SweepParameter::kWavenumber, 1.0, 2.0, 2};
  const SweepResult res = sweep(spec);
  REQUIRE(res.records.size() == 2);
  CHECK(res.records[0].transmission == doctest::Approx(0.236247867006499).epsilon(1e-12));
  CHECK(res.records[1].transmission == doctest::Approx(0.949218898161809).epsilon(1e-12));

  const DimensionlessSystem at2 = spec.base.build(SweepParameter::kWavenumber, 2.0);
  CHECK(at2.xi()[0] == 0.5);
  CHECK(at2.y()[5] == 10.0);
}

TEST_CASE("sweep validation and skipped points") {
  SweepSpec bad = gap_sweep({1.0, 1.0}, 1.0, 1.0, 10);
  CHECK_THROWS_AS(sweep(bad), Error);
  bad = gap_sweep({1.0, 1.0}, 0.0, 1.0, 10);
  CHECK_THROWS_AS(sweep(bad), Error);
  bad = gap_sweep({1.0, 1.0}, 0.5, 1.0, 1);
  CHECK_THROWS_AS(sweep(bad), Error);
  SweepSpec k_on_dimensionless = gap_sweep({1.0, 1.0}, 0.5, 1.0, 5);
  k_on_dimensionless.parameter = SweepParameter::kWavenumber;
  CHECK_THROWS_AS(sweep(k_on_dimensionless), Error);

  // Gaps below the separation floor cannot be solved and are skipped.
  const SweepResult res = sweep(gap_sweep({1.0, 1.0}, 1e-14, 2e-12, 3));
  CHECK(res.skipped.size() == 1);
  CHECK(res.records.size() == 2);
  CHECK(res.skipped[0].param == 1e-14);
}

TEST_CASE("golden section finds a parabola's vertex") {
  const double x = golden_section_minimize([](double v) { return (v - 0.3) * (v - 0.3); },
                                           -1.0, 2.0, 1e-12);
  CHECK(std::abs(x - 0.3) <= 1e-9);
}

TEST_CASE("resonances of the equal double delta") {
  SUBCASE("strength sweep at unit gap") {
    const auto hits = find_resonances(strength_sweep(2, 1.0, -3.0, 0.0, 2000));
    REQUIRE(hits.size() == 1);
    CHECK(std::abs(hits[0].param - (-2.0 / std::tan(1.0))) <= 1e-6);
    CHECK(hits[0].residual <= 1e-10);
  }
  SUBCASE("gap sweep at the resonant strength") {
    const double xi = -2.0 / std::tan(1.0);
    const auto hits = find_resonances(gap_sweep({xi, xi}, 0.5, 1.5, 2000));
    REQUIRE(hits.size() == 1);
    CHECK(std::abs(hits[0].param - 1.0) <= 1e-6);
  }
  SUBCASE("each hit is a local minimum") {
    const SweepSpec spec = strength_sweep(4, 0.7, -6.0, 6.0, 2000);
    const auto hits = find_resonances(spec);
    CHECK(!hits.empty());
    for (const auto& h : hits) {
      for (double off : {-1e-6, 1e-6}) {
        const auto amp = transfer_amplitudes(spec.base.build(spec.parameter, h.param + off));
        CHECK(std::norm(amp.r) >= h.residual);
      }
    }
    for (std::size_t i = 1; i < hits.size(); ++i) {
      CHECK(hits[i].param - hits[i - 1].param > 1e-9);
    }
  }
}

TEST_CASE("a single nonzero delta never transmits perfectly") {
  CHECK(find_resonances(strength_sweep(1, 1.0, 0.1, 3.0, 500)).empty());
  CHECK(find_resonances(strength_sweep(1, 1.0, -3.0, -0.1, 500)).empty());
  CHECK(find_resonances({SystemTemplate::dimensionless({1.3}, {}), SweepParameter::kGap,
                         0.1, 3.0, 200})
            .empty());
  CHECK_THROWS_AS(find_resonances(strength_sweep(2, 1.0, -3.0, 0.0, 100), 0.0), Error);
}

TEST_CASE("ordering of wells and barriers changes the spectrum") {
  const std::vector<std::vector<double>> patterns{
      {1, 1, 1, 1, -1, -1, -1, -1},
      {1, 1, -1, -1, 1, 1, -1, -1},
      {1, -1, 1, -1, 1, -1, 1, -1},
  };
  std::vector<SweepResult> curves;
  for (const auto& p : patterns) curves.push_back(sweep(gap_sweep(p, 0.1, 3.0, 600)));
  double largest = 0.0;
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      for (std::size_t i = 0; i < curves[a].records.size(); ++i) {
        largest = std::max(largest, std::abs(curves[a].records[i].transmission -
                                             curves[b].records[i].transmission));
      }
    }
  }
  CHECK(largest > 0.01);
}
