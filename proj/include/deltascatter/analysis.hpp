#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltascatter/model.hpp"

namespace deltascatter {

enum class SweepParameter {
  kGap,         // every gap set to the swept value
  kStrength,    // every strength set to the swept value
  kWavenumber,  // k; rescales xi = V~/k and y = k x (physical template only)
};

/// Strength and gap vectors an array is rebuilt from at each sweep point.
///
/// A dimensionless template holds xi and dimensionless gaps with the first
/// site at `origin`. A physical template holds reduced strengths V~, gaps in
/// length units and the wavenumber k; it is scaled by to_dimensionless.
struct SystemTemplate {
  std::vector<double> strengths;
  std::vector<double> gaps;
  double origin = 0.0;
  bool physical = false;
  double k = 1.0;

  static SystemTemplate dimensionless(std::vector<double> xi,
                                      std::vector<double> gaps,
                                      double y0 = 0.0);
  static SystemTemplate reduced(std::vector<double> vtilde,
                                std::vector<double> gaps, double k,
                                double x0 = 0.0);

  /// The system at the template's own parameter values.
  DimensionlessSystem build() const;
  /// The system with `parameter` replaced by `value`.
  DimensionlessSystem build(SweepParameter parameter, double value) const;
};

struct SweepSpec {
  SystemTemplate base;
  SweepParameter parameter = SweepParameter::kGap;
  double lo = 0.0;
  double hi = 1.0;
  std::size_t steps = 2000;

  /// Throws Error(kInvalidArgument) unless lo < hi, steps >= 2 and the
  /// range is admissible for the parameter.
  void validate() const;
  double point(std::size_t i) const;
};

struct SweepRecord {
  double param = 0.0;
  double transmission = 0.0;
  double reflection = 0.0;
};

struct SweepFailure {
  double param = 0.0;
  std::string message;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<SweepFailure> skipped;
};

struct ResonanceHit {
  double param = 0.0;
  double residual = 0.0;  // |r|^2 at param
};

inline constexpr double kDefaultResonanceTolerance = 1e-10;

/// T and R on the uniform grid of `spec`, via transfer matrices. Points whose
/// solve fails are skipped and listed in SweepResult::skipped.
SweepResult sweep(const SweepSpec& spec);

/// Perfect-transmission points: interior local minima of |r|^2 on the grid,
/// refined by golden-section search to a bracket of 1e-12, kept when |r|^2 <= tol and
/// merged when closer than 1e-9. Resonances narrower than one grid cell may
/// be missed.
std::vector<ResonanceHit> find_resonances(const SweepSpec& spec,
                                          double tol = kDefaultResonanceTolerance);

/// Golden-section minimization of a unimodal f on [a, b] down to `width`.
/// Returns the abscissa of the smallest value seen.
template <class F>
double golden_section_minimize(F&& f, double a, double b, double width);

}  // namespace deltascatter

#include "deltascatter/detail/golden_section.hpp"
