#include "deltascatter/wavefunction.hpp"

#include <algorithm>
#include <cmath>

#include "deltascatter/error.hpp"

namespace deltascatter {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Local {
  Complex psi;
  Complex dpsi;
};

Local plane_waves(const std::pair<Complex, Complex>& ab, double y) {
  const Complex ep = std::polar(1.0, y);
  const Complex em = std::conj(ep);
  return {ab.first * ep + ab.second * em, kI * (ab.first * ep - ab.second * em)};
}

void check_shape(const DimensionlessSystem& sys, const AmplitudeSolution& sol) {
  if (sol.interior.size() + 1 != sys.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "solution does not belong to this system");
  }
}

}  // namespace

double MatchingReport::max_jump_residual() const {
  double worst = 0.0;
  for (const auto& s : sites) worst = std::max(worst, s.jump_residual);
  return worst;
}

double MatchingReport::max_analytic_continuity_residual() const {
  double worst = 0.0;
  for (const auto& s : sites) worst = std::max(worst, s.analytic_continuity_residual);
  return worst;
}

std::size_t region_of(const DimensionlessSystem& sys, double y) {
  const auto ys = sys.y();
  // first site with y_j >= y; region index is that site's index + 1.
  const auto it = std::lower_bound(ys.begin(), ys.end(), y);
  return static_cast<std::size_t>(it - ys.begin()) + 1;
}

WaveSample evaluate(const DimensionlessSystem& sys, const AmplitudeSolution& sol,
                    double y) {
  check_shape(sys, sol);
  const Local w = plane_waves(sol.region(region_of(sys, y)), y);
  return {y, w.psi, w.dpsi, std::norm(w.psi)};
}

std::vector<WaveSample> sample(const DimensionlessSystem& sys,
                               const AmplitudeSolution& sol, double ymin,
                               double ymax, std::size_t count) {
  if (!(ymin < ymax)) {
    throw Error(ErrorKind::kInvalidArgument, "sampling window needs ymin < ymax");
  }
  if (count < 2) {
    throw Error(ErrorKind::kInvalidArgument, "need at least two sample points");
  }
  check_shape(sys, sol);
  std::vector<WaveSample> out;
  out.reserve(count);
  const double step = (ymax - ymin) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double y = (i + 1 == count) ? ymax : ymin + step * static_cast<double>(i);
    out.push_back(evaluate(sys, sol, y));
  }
  return out;
}

SampleWindow default_window(const DimensionlessSystem& sys) {
  return {sys.y().front() - 3.0, sys.y().back() + 3.0, 2001};
}

MatchingReport verify_matching(const DimensionlessSystem& sys,
                               const AmplitudeSolution& sol, double h) {
  if (!(h > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "step h must be positive");
  }
  check_shape(sys, sol);
  MatchingReport report;
  report.sites.reserve(sys.size());
  for (std::size_t s = 0; s < sys.size(); ++s) {
    const double y = sys.y()[s];
    const Local left = plane_waves(sol.region(s + 1), y);
    const Local right = plane_waves(sol.region(s + 2), y);
    SiteMatching m;
    m.y = y;
    m.continuity_residual =
        std::abs(evaluate(sys, sol, y + h).psi - evaluate(sys, sol, y - h).psi);
    m.analytic_continuity_residual = std::abs(right.psi - left.psi);
    m.jump_residual = std::abs(right.dpsi - left.dpsi - sys.xi()[s] * right.psi);
    report.sites.push_back(m);
  }
  return report;
}

double probability_current(const AmplitudeSolution& sol, std::size_t region) {
  const auto [a, b] = sol.region(region);
  return std::norm(a) - std::norm(b);
}

}  // namespace deltascatter
