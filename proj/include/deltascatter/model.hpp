#pragma once

#include <complex>
#include <span>
#include <vector>

namespace deltascatter {

using Complex = std::complex<double>;

/// Smallest admissible dimensionless gap between neighbouring sites.
inline constexpr double kMinSeparation = 1e-12;

/// Transmission and reflection amplitudes for a unit wave from the left.
struct Amplitudes {
  Complex t;
  Complex r;
};

/// Physical description of the array: V(x) = sum_i V0_i delta(x - x_i).
struct PhysicalInput {
  double mass = 1.0;
  double hbar = 1.0;
  double energy = 1.0;
  std::vector<double> potential_strengths;  // energy x length
  std::vector<double> positions;            // length, strictly increasing
};

/// Strengths in units of 1/length (2 m V0 / hbar^2) and the wavenumber k.
struct PotentialArray {
  std::vector<double> reduced_strengths;
  std::vector<double> positions;
  double k = 1.0;
};

/// Canonical solver input: xi_i = V0~_i / k and y_i = k x_i.
///
/// Instances are always valid: at least one site, finite strengths and
/// positions with y[i+1] - y[i] >= kMinSeparation.
class DimensionlessSystem {
 public:
  /// Throws Error(kOrdering) for non-increasing positions and
  /// Error(kDomain)/Error(kInvalidArgument) for bad values or sizes.
  DimensionlessSystem(std::vector<double> xi, std::vector<double> y);

  /// Builds site positions from consecutive gaps, first site at y0.
  static DimensionlessSystem from_gaps(std::vector<double> xi,
                                       std::span<const double> gaps,
                                       double y0 = 0.0);

  std::span<const double> xi() const noexcept { return xi_; }
  std::span<const double> y() const noexcept { return y_; }
  std::size_t size() const noexcept { return xi_.size(); }
  std::vector<double> gaps() const;

 private:
  std::vector<double> xi_;
  std::vector<double> y_;
};

PotentialArray physical_to_reduced(const PhysicalInput& input);

DimensionlessSystem to_dimensionless(const PotentialArray& array);

}  // namespace deltascatter
