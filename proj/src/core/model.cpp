#include "deltascatter/model.hpp"

#include <cmath>
#include <string>

#include "deltascatter/error.hpp"

namespace deltascatter {

namespace {

void check_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kDomain, std::string(what) + " must be finite");
    }
  }
}

void check_increasing(std::span<const double> positions, double min_gap,
                      const char* what) {
  for (std::size_t i = 1; i < positions.size(); ++i) {
    const double gap = positions[i] - positions[i - 1];
    if (!(gap > 0.0 && gap >= min_gap)) {
      throw Error(ErrorKind::kOrdering,
                  std::string(what) + " must be strictly increasing (site " +
                      std::to_string(i) + ")");
    }
  }
}

}  // namespace

DimensionlessSystem::DimensionlessSystem(std::vector<double> xi,
                                         std::vector<double> y)
    : xi_(std::move(xi)), y_(std::move(y)) {
  if (xi_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "system needs at least one site");
  }
  if (xi_.size() != y_.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "strength and position lists differ in length");
  }
  check_finite(xi_, "strengths");
  check_finite(y_, "positions");
  check_increasing(y_, kMinSeparation, "positions");
}

DimensionlessSystem DimensionlessSystem::from_gaps(std::vector<double> xi,
                                                   std::span<const double> gaps,
                                                   double y0) {
  if (gaps.size() + 1 != xi.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(xi.empty() ? 0 : xi.size() - 1) +
                    " gaps, got " + std::to_string(gaps.size()));
  }
  std::vector<double> y;
  y.reserve(xi.size());
  y.push_back(y0);
  for (double g : gaps) {
    if (!(g >= kMinSeparation)) {
      throw Error(ErrorKind::kOrdering, "gaps must be positive");
    }
    y.push_back(y.back() + g);
  }
  return DimensionlessSystem(std::move(xi), std::move(y));
}

std::vector<double> DimensionlessSystem::gaps() const {
  std::vector<double> out;
  out.reserve(y_.size() - 1);
  for (std::size_t i = 1; i < y_.size(); ++i) out.push_back(y_[i] - y_[i - 1]);
  return out;
}

PotentialArray physical_to_reduced(const PhysicalInput& input) {
  if (!(input.energy > 0.0) || !std::isfinite(input.energy)) {
    throw Error(ErrorKind::kDomain, "energy must be positive");
  }
  if (!(input.mass > 0.0) || !std::isfinite(input.mass)) {
    throw Error(ErrorKind::kDomain, "mass must be positive");
  }
  if (!(input.hbar > 0.0) || !std::isfinite(input.hbar)) {
    throw Error(ErrorKind::kDomain, "hbar must be positive");
  }
  if (input.potential_strengths.empty() ||
      input.potential_strengths.size() != input.positions.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "strengths and positions must be non-empty and equal length");
  }
  check_finite(input.potential_strengths, "strengths");
  check_finite(input.positions, "positions");
  check_increasing(input.positions, 0.0, "positions");

  PotentialArray out;
  const double scale = 2.0 * input.mass / (input.hbar * input.hbar);
  out.reduced_strengths.reserve(input.potential_strengths.size());
  for (double v : input.potential_strengths) {
    out.reduced_strengths.push_back(scale * v);
  }
  out.positions = input.positions;
  out.k = std::sqrt(2.0 * input.mass * input.energy) / input.hbar;
  return out;
}

DimensionlessSystem to_dimensionless(const PotentialArray& array) {
  if (!(array.k > 0.0) || !std::isfinite(array.k)) {
    throw Error(ErrorKind::kDomain, "wavenumber k must be positive");
  }
  if (array.reduced_strengths.size() != array.positions.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "strength and position lists differ in length");
  }
  std::vector<double> xi;
  std::vector<double> y;
  xi.reserve(array.reduced_strengths.size());
  y.reserve(array.positions.size());
  for (double v : array.reduced_strengths) xi.push_back(v / array.k);
  for (double x : array.positions) y.push_back(array.k * x);
  return DimensionlessSystem(std::move(xi), std::move(y));
}

}  // namespace deltascatter
