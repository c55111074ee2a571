#include "doctest.h"

#include <cmath>

#include "deltascatter/direct_solver.hpp"
#include "deltascatter/error.hpp"
#include "deltascatter/transfer.hpp"
#include "support/test_support.hpp"

using namespace deltascatter;
using deltascatter::testing::close;
using deltascatter::testing::RandomSystemSource;
using deltascatter::testing::uniform;

TEST_CASE("delta_matrix: switched-off site is the identity") {
  for (double y0 : {-3.0, 0.0, 0.4, 10.0}) {
    const TransferMatrix m = delta_matrix(0.0, y0);
    CHECK(m.m11() == Complex{1.0, 0.0});
    CHECK(m.m12() == Complex{});
    CHECK(m.m21() == Complex{});
    CHECK(m.m22() == Complex{1.0, 0.0});
  }
}

TEST_CASE("delta_matrix: unit barrier at the origin") {
  // (4 - 2i) / 5 and (-1 - 2i) / 5 from rationalizing 2i/(2i - 1), 1/(2i - 1).
  const Amplitudes a = amplitudes_from_matrix(delta_matrix(1.0, 0.0));
  CHECK(close(a.t, {0.8, -0.4}, 1e-15));
  CHECK(close(a.r, {-0.2, -0.4}, 1e-15));
}

TEST_CASE("delta_matrix: unit determinant") {
  CHECK(std::abs(delta_matrix(2.0, 1.0).determinant() - 1.0) <= 1e-15);
  for (double xi = -50.0; xi <= 50.0; xi += 0.73) {
    CHECK(std::abs(delta_matrix(xi, xi * 0.31).determinant() - 1.0) <= 1e-12);
  }
}

TEST_CASE("total_matrix: single site equals its delta matrix") {
  const TransferMatrix m = total_matrix(DimensionlessSystem({1.7}, {0.3}));
  const TransferMatrix d = delta_matrix(1.7, 0.3);
  CHECK(m.m11() == d.m11());
  CHECK(m.m12() == d.m12());
  CHECK(m.m21() == d.m21());
  CHECK(m.m22() == d.m22());
}

TEST_CASE("amplitudes_from_matrix: identity and degenerate input") {
  const Amplitudes a = amplitudes_from_matrix(TransferMatrix::identity());
  CHECK(a.t == Complex{1.0, 0.0});
  CHECK(a.r == Complex{});

  const TransferMatrix bad{Complex{1.0, 0.0}, Complex{}, Complex{}, Complex{1e-15, 0.0}};
  try {
    amplitudes_from_matrix(bad);
    FAIL("expected degenerate-matrix error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDegenerate);
  }
}

TEST_CASE("transfer_amplitudes: reference configurations") {
  const Amplitudes two = transfer_amplitudes(DimensionlessSystem({1.0, 1.0}, {0.0, 1.0}));
  CHECK(close(two.t, {0.336, -0.638}, 2e-3));
  CHECK(close(two.r, {-0.0597, -0.690}, 2e-3));

  const Amplitudes six = transfer_amplitudes(uniform(6, 1.0, 1.0));
  CHECK(std::abs(std::norm(six.t) - 0.236) <= 5e-3);
  CHECK(std::abs(std::norm(six.r) - 0.764) <= 5e-3);

  const Amplitudes three =
      transfer_amplitudes(DimensionlessSystem({1.0, 2.0, 3.0}, {0.0, 1.0, 3.0}));
  CHECK(close(three.r, {0.1434, -0.908}, 2e-3));
  CHECK(close(three.t, {-0.391, 0.025}, 2e-3));
}

TEST_CASE("transfer vs direct solver on random arrays") {
  RandomSystemSource source(0x7A5F3E);
  for (int trial = 0; trial < 500; ++trial) {
    const DimensionlessSystem sys = source.next();
    const Amplitudes tm = transfer_amplitudes(sys);
    const AmplitudeSolution direct = solve_amplitudes(sys);
    CHECK(close(tm.t, direct.t, 1e-9));
    CHECK(close(tm.r, direct.r, 1e-9));
    CHECK(std::abs(std::norm(tm.t) + std::norm(tm.r) - 1.0) <= 1e-10);

    // Every partial product keeps unit determinant.
    TransferMatrix partial = TransferMatrix::identity();
    for (std::size_t i = 0; i < sys.size(); ++i) {
      partial = delta_matrix(sys.xi()[i], sys.y()[i]) * partial;
      CHECK(std::abs(partial.determinant() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("product grouping does not change amplitudes") {
  RandomSystemSource source(0xA550C);
  for (int trial = 0; trial < 200; ++trial) {
    const DimensionlessSystem sys = source.next();
    if (sys.size() < 3) continue;
    std::vector<TransferMatrix> ms;
    for (std::size_t i = 0; i < sys.size(); ++i) ms.push_back(delta_matrix(sys.xi()[i], sys.y()[i]));

    // Left fold: (((M3 M2) M1)...); right fold: M_n (M_{n-1} (... M1)).
    TransferMatrix left = ms.back();
    for (std::size_t i = ms.size() - 1; i-- > 0;) left = left * ms[i];
    TransferMatrix right = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) right = ms[i] * right;

    const Amplitudes a = amplitudes_from_matrix(left);
    const Amplitudes b = amplitudes_from_matrix(right);
    CHECK(close(a.t, b.t, 1e-12));
    CHECK(close(a.r, b.r, 1e-12));
  }
}

TEST_CASE("two sites merging into one") {
  for (double xi1 : {-3.0, -0.5, 0.7, 2.5}) {
    for (double xi2 : {-1.5, 0.3, 4.0}) {
      const Amplitudes merged =
          transfer_amplitudes(DimensionlessSystem({xi1, xi2}, {0.0, 1e-8}));
      const Complex denom = Complex{0.0, 2.0} - (xi1 + xi2);
      const Complex t = Complex{0.0, 2.0} / denom;
      const Complex r = (xi1 + xi2) / denom;
      CHECK(close(merged.t, t, 1e-6));
      CHECK(close(merged.r, r, 1e-6));
    }
  }
}

TEST_CASE("very strong sites: carried determinant keeps t accurate") {
  for (double xi : {1e4, 1e6, 1e8, 1e10}) {
    const DimensionlessSystem sys = uniform(8, xi, 1.0);
    const TransferMatrix m = total_matrix(sys);
    CHECK(std::abs(m.carried_determinant() - 1.0) <= 1e-12);
    const Amplitudes tm = amplitudes_from_matrix(m);
    const AmplitudeSolution direct = solve_amplitudes(sys);
    CHECK(std::abs(tm.t - direct.t) <= 1e-9 * std::abs(direct.t));
    CHECK(close(tm.r, direct.r, 1e-12));
  }
}
