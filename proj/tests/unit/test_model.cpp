#include "doctest.h"

#include <cmath>
#include <random>

#include "deltascatter/error.hpp"
#include "deltascatter/model.hpp"

using namespace deltascatter;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected deltascatter::Error");
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("physical_to_reduced: unit parameters") {
  const PotentialArray a = physical_to_reduced({1.0, 1.0, 0.5, {0.5}, {0.0}});
  REQUIRE(a.reduced_strengths.size() == 1);
  CHECK(a.reduced_strengths[0] == doctest::Approx(1.0));
  CHECK(a.k == doctest::Approx(1.0));
}

TEST_CASE("physical_to_reduced: k = sqrt(2mE)/hbar") {
  const PotentialArray a = physical_to_reduced({1.0, 1.0, 2.0, {0.5}, {0.0}});
  CHECK(a.reduced_strengths[0] == doctest::Approx(1.0));
  CHECK(a.k == doctest::Approx(2.0));

  const PotentialArray b = physical_to_reduced({2.0, 0.5, 3.0, {1.5, -0.25}, {0.0, 1.0}});
  // 2 m / hbar^2 = 16, k = sqrt(12) / 0.5
  CHECK(b.reduced_strengths[0] == doctest::Approx(24.0));
  CHECK(b.reduced_strengths[1] == doctest::Approx(-4.0));
  CHECK(b.k == doctest::Approx(std::sqrt(12.0) / 0.5));
  CHECK(b.positions == std::vector<double>{0.0, 1.0});
}

TEST_CASE("physical_to_reduced: error paths") {
  CHECK(kind_of([] { physical_to_reduced({1.0, 1.0, -1.0, {0.5}, {0.0}}); }) ==
        ErrorKind::kDomain);
  CHECK(kind_of([] { physical_to_reduced({1.0, 1.0, 0.0, {0.5}, {0.0}}); }) ==
        ErrorKind::kDomain);
  CHECK(kind_of([] { physical_to_reduced({0.0, 1.0, 1.0, {0.5}, {0.0}}); }) ==
        ErrorKind::kDomain);
  CHECK(kind_of([] { physical_to_reduced({1.0, 1.0, 1.0, {1, 1}, {1.0, 0.5}}); }) ==
        ErrorKind::kOrdering);
  CHECK(kind_of([] { physical_to_reduced({1.0, 1.0, 1.0, {1, 1}, {0.0, 0.0}}); }) ==
        ErrorKind::kOrdering);
  CHECK(kind_of([] { physical_to_reduced({1.0, 1.0, 1.0, {1, 1}, {0.0}}); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("to_dimensionless: double delta with unit k") {
  const DimensionlessSystem s = to_dimensionless({{1.0, 1.0}, {0.0, 1.0}, 1.0});
  CHECK(s.xi()[0] == 1.0);
  CHECK(s.xi()[1] == 1.0);
  CHECK(s.y()[0] == 0.0);
  CHECK(s.y()[1] == 1.0);
  CHECK(s.gaps() == std::vector<double>{1.0});
}

TEST_CASE("to_dimensionless: strengths divide by k") {
  const DimensionlessSystem s = to_dimensionless({{1.0}, {0.0}, 2.0});
  CHECK(s.xi()[0] == 0.5);
  CHECK(s.y()[0] == 0.0);
}

TEST_CASE("to_dimensionless: error paths") {
  CHECK(kind_of([] { to_dimensionless({{1.0, 1.0}, {0.0, 0.0}, 1.0}); }) ==
        ErrorKind::kOrdering);
  CHECK(kind_of([] { to_dimensionless({{1.0}, {0.0}, 0.0}); }) == ErrorKind::kDomain);
  CHECK(kind_of([] { to_dimensionless({{1.0}, {0.0}, -1.0}); }) == ErrorKind::kDomain);
}

TEST_CASE("DimensionlessSystem: separation floor and values") {
  CHECK(kind_of([] { DimensionlessSystem({1.0, 1.0}, {0.0, 1e-13}); }) ==
        ErrorKind::kOrdering);
  CHECK_NOTHROW(DimensionlessSystem({1.0, 1.0}, {0.0, 1e-11}));
  CHECK(kind_of([] { DimensionlessSystem({}, {}); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { DimensionlessSystem({NAN}, {0.0}); }) == ErrorKind::kDomain);
  CHECK_NOTHROW(DimensionlessSystem({0.0, -3.0}, {0.0, 1.0}));
}

TEST_CASE("from_gaps: first site at y0") {
  const std::vector<double> gaps{1.0, 2.0};
  const auto s = DimensionlessSystem::from_gaps({1, 2, 3}, gaps);
  CHECK(s.y()[0] == 0.0);
  CHECK(s.y()[2] == 3.0);
  const auto shifted = DimensionlessSystem::from_gaps({1, 2, 3}, gaps, -1.5);
  CHECK(shifted.y()[0] == -1.5);
  CHECK(kind_of([] {
          const std::vector<double> g{1.0};
          DimensionlessSystem::from_gaps({1, 2, 3}, g);
        }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] {
          const std::vector<double> g{0.0};
          DimensionlessSystem::from_gaps({1, 2}, g);
        }) == ErrorKind::kOrdering);
}

TEST_CASE("round trip and scaling invariance") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    PhysicalInput in{u(rng), u(rng), u(rng), {u(rng) - 2.0, u(rng), u(rng) - 1.0},
                     {0.0, u(rng), 0.0}};
    in.positions[2] = in.positions[1] + u(rng);
    const PotentialArray a = physical_to_reduced(in);
    const DimensionlessSystem s = to_dimensionless(a);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s.xi()[i] * a.k == doctest::Approx(a.reduced_strengths[i]).epsilon(1e-14));
      CHECK(s.y()[i] / a.k == doctest::Approx(a.positions[i]).epsilon(1e-14));
    }

    // x -> c x with k -> k / c leaves y alone; xi depends only on V~ / k.
    const double c = u(rng);
    PotentialArray scaled = a;
    for (auto& x : scaled.positions) x *= c;
    for (auto& v : scaled.reduced_strengths) v /= c;
    scaled.k /= c;
    const DimensionlessSystem s2 = to_dimensionless(scaled);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s2.y()[i] == doctest::Approx(s.y()[i]).epsilon(1e-13));
      CHECK(s2.xi()[i] == doctest::Approx(s.xi()[i]).epsilon(1e-13));
    }
  }
}
