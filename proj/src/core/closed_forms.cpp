#include "deltascatter/closed_forms.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "deltascatter/error.hpp"

namespace deltascatter::closed_forms {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex phase2(double d) { return std::polar(1.0, 2.0 * d); }

}  // namespace

Amplitudes single(double xi, double y0) {
  const Complex denom = 2.0 * kI - xi;
  return {2.0 * kI / denom, xi * phase2(y0) / denom};
}

Amplitudes double_equal(double xi, double dt) {
  const Complex e = phase2(dt);
  const Complex denom = xi * xi * (e - 1.0) + 4.0 * (kI * xi + 1.0);
  const Complex num_r = xi * xi * (1.0 - e) - 2.0 * kI * xi * (e + 1.0);
  return {4.0 / denom, num_r / denom};
}

Amplitudes double_general(double xi1, double xi2, double dt) {
  const Complex e = phase2(dt);
  const Complex denom = xi1 * xi2 * (e - 1.0) + 2.0 * kI * (xi1 + xi2) + 4.0;
  const Complex num_r = xi1 * xi2 * (1.0 - e) - 2.0 * kI * (xi1 + xi2 * e);
  return {4.0 / denom, num_r / denom};
}

Amplitudes triple(double xi1, double xi2, double xi3, double dt1, double dt2) {
  const Complex e1 = phase2(dt1);
  const Complex e2 = phase2(dt2);
  const Complex e12 = phase2(dt1 + dt2);
  const double p123 = xi1 * xi2 * xi3;

  const Complex gamma =
      -p123 * (e12 - e1 - e2 + 1.0) + 2.0 * kI * xi1 * xi2 * (1.0 - e1);
  const Complex lambda = 2.0 * kI * xi2 * xi3 * (e12 - e1) -
                         4.0 * (xi1 + xi2 * e1 + xi3 * e12);
  const Complex beta = -p123 * (e1 + e2 - e12 - 1.0) +
                       2.0 * kI * xi1 * xi2 * (e1 - 1.0) +
                       2.0 * kI * xi1 * xi3 * (e12 - 1.0);
  const Complex omega = 2.0 * kI * xi1 * xi3 * (1.0 - e12) +
                        2.0 * kI * xi2 * xi3 * (1.0 - e2) +
                        4.0 * (xi1 + xi2 + xi3) - 8.0 * kI;

  const Complex denom = gamma + omega;
  return {-8.0 * kI / denom, (lambda + beta) / denom};
}

Amplitudes six_equal(double xi, double dt) {
  // e[m] = e^{2imdt}, m = 0..5
  std::array<Complex, 6> e;
  e[0] = 1.0;
  for (std::size_t m = 1; m < e.size(); ++m) e[m] = phase2(static_cast<double>(m) * dt);

  const std::array<Complex, 7> alpha = {
      Complex{64.0},
      192.0 * kI,
      80.0 * e[1] + 64.0 * e[2] + 48.0 * e[3] + 32.0 * e[4] + 16.0 * e[5] - 240.0,
      kI * (160.0 * e[1] + 64.0 * e[2] - 32.0 * e[4] - 32.0 * e[5] - 160.0),
      -120.0 * e[1] + 24.0 * e[2] + 48.0 * e[3] + 12.0 * e[4] - 24.0 * e[5] + 60.0,
      kI * (-40.0 * e[1] + 40.0 * e[2] - 20.0 * e[4] + 8.0 * e[5] + 12.0),
      5.0 * e[1] - 10.0 * e[2] + 10.0 * e[3] - 5.0 * e[4] + e[5] - 1.0,
  };
  const std::array<Complex, 7> beta = {
      Complex{},
      -32.0 * kI * (e[1] + e[2] + e[3] + e[4] + e[5] + 1.0),
      48.0 * e[1] + 16.0 * e[2] - 16.0 * e[3] - 48.0 * e[4] - 80.0 * e[5] + 80.0,
      kI * (-16.0 * e[1] - 64.0 * e[2] - 64.0 * e[3] - 16.0 * e[4] + 80.0 * e[5] + 80.0),
      56.0 * e[1] + 32.0 * e[2] - 32.0 * e[3] - 56.0 * e[4] + 40.0 * e[5] - 40.0,
      kI * (30.0 * e[1] - 20.0 * e[2] - 20.0 * e[3] + 30.0 * e[4] - 10.0 * e[5] - 10.0),
      -5.0 * e[1] + 10.0 * e[2] - 10.0 * e[3] + 5.0 * e[4] - e[5] + 1.0,
  };

  // Horner in xi.
  Complex denom{};
  Complex num{};
  for (std::size_t i = alpha.size(); i-- > 0;) {
    denom = denom * xi + alpha[i];
    num = num * xi + beta[i];
  }
  return {alpha[0] / denom, num / denom};
}

double double_resonance_strength(double dt) {
  const double pi = std::numbers::pi;
  const double nearest = std::round(dt / pi) * pi;
  if (std::abs(dt - nearest) <= 1e-9) {
    throw Error(ErrorKind::kPole, "no finite resonant strength at dt = k*pi");
  }
  return -2.0 * std::cos(dt) / std::sin(dt);
}

}  // namespace deltascatter::closed_forms
