#pragma once

#include <optional>
#include <vector>

#include "deltascatter/direct_solver.hpp"
#include "deltascatter/model.hpp"

namespace deltascatter {

struct WaveSample {
  double y = 0.0;
  Complex psi;
  Complex dpsi;
  double density = 0.0;  // |psi|^2
};

struct SiteMatching {
  double y = 0.0;
  /// |psi(y + h) - psi(y - h)|, O(h) for a continuous psi.
  double continuity_residual = 0.0;
  /// |psi_R(y) - psi_L(y)| from the two regions' coefficients.
  double analytic_continuity_residual = 0.0;
  /// |psi'_R(y) - psi'_L(y) - xi psi(y)| from the regions' coefficients.
  double jump_residual = 0.0;
};

struct MatchingReport {
  std::vector<SiteMatching> sites;

  double max_jump_residual() const;
  double max_analytic_continuity_residual() const;
};

/// Region index (1..n+1) holding y. A point exactly on a site belongs to the
/// region on its left.
std::size_t region_of(const DimensionlessSystem& sys, double y);

/// psi and psi' at y; on a site psi' is the left limit.
WaveSample evaluate(const DimensionlessSystem& sys, const AmplitudeSolution& sol,
                    double y);

/// Uniform grid of `count` points over [ymin, ymax], endpoints included.
std::vector<WaveSample> sample(const DimensionlessSystem& sys,
                               const AmplitudeSolution& sol, double ymin,
                               double ymax, std::size_t count);

struct SampleWindow {
  double ymin;
  double ymax;
  std::size_t count;
};

/// [y_1 - 3, y_n + 3] with 2001 points.
SampleWindow default_window(const DimensionlessSystem& sys);

MatchingReport verify_matching(const DimensionlessSystem& sys,
                               const AmplitudeSolution& sol, double h = 1e-6);

/// Im(psi* psi') in region j; equals |a_j|^2 - |b_j|^2.
double probability_current(const AmplitudeSolution& sol, std::size_t region);

}  // namespace deltascatter
