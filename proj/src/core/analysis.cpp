#include "deltascatter/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "deltascatter/error.hpp"
#include "deltascatter/transfer.hpp"

namespace deltascatter {

namespace {

constexpr double kRefineWidth = 1e-12;
constexpr double kMergeDistance = 1e-9;

std::vector<double> positions_from_gaps(double origin, std::span<const double> gaps) {
  std::vector<double> out{origin};
  for (double g : gaps) out.push_back(out.back() + g);
  return out;
}

double reflection_probability(const SweepSpec& spec, double value) {
  return std::norm(transfer_amplitudes(spec.base.build(spec.parameter, value)).r);
}

}  // namespace

SystemTemplate SystemTemplate::dimensionless(std::vector<double> xi,
                                             std::vector<double> gaps, double y0) {
  return {std::move(xi), std::move(gaps), y0, false, 1.0};
}

SystemTemplate SystemTemplate::reduced(std::vector<double> vtilde,
                                       std::vector<double> gaps, double k,
                                       double x0) {
  return {std::move(vtilde), std::move(gaps), x0, true, k};
}

DimensionlessSystem SystemTemplate::build() const {
  if (!physical) return DimensionlessSystem::from_gaps(strengths, gaps, origin);
  if (gaps.size() + 1 != strengths.size()) {
    throw Error(ErrorKind::kInvalidArgument, "gap count must be strengths - 1");
  }
  return to_dimensionless({strengths, positions_from_gaps(origin, gaps), k});
}

DimensionlessSystem SystemTemplate::build(SweepParameter parameter,
                                          double value) const {
  SystemTemplate t = *this;
  switch (parameter) {
    case SweepParameter::kGap:
      std::fill(t.gaps.begin(), t.gaps.end(), value);
      break;
    case SweepParameter::kStrength:
      std::fill(t.strengths.begin(), t.strengths.end(), value);
      break;
    case SweepParameter::kWavenumber:
      if (!physical) {
        throw Error(ErrorKind::kInvalidArgument,
                    "sweeping k needs a physical (vtilde) template");
      }
      t.k = value;
      break;
  }
  return t.build();
}

void SweepSpec::validate() const {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorKind::kInvalidArgument, "sweep range needs lo < hi");
  }
  if (steps < 2) {
    throw Error(ErrorKind::kInvalidArgument, "sweep needs at least two steps");
  }
  if (parameter == SweepParameter::kGap && !(lo > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "gap sweep needs lo > 0");
  }
  if (parameter == SweepParameter::kWavenumber) {
    if (!base.physical) {
      throw Error(ErrorKind::kInvalidArgument,
                  "sweeping k needs a physical (vtilde) template");
    }
    if (!(lo > 0.0)) {
      throw Error(ErrorKind::kInvalidArgument, "wavenumber sweep needs lo > 0");
    }
  }
  if (base.strengths.empty() || base.gaps.size() + 1 != base.strengths.size()) {
    throw Error(ErrorKind::kInvalidArgument, "gap count must be strengths - 1");
  }
}

double SweepSpec::point(std::size_t i) const {
  if (i + 1 >= steps) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

SweepResult sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult out;
  out.records.reserve(spec.steps);
  for (std::size_t i = 0; i < spec.steps; ++i) {
    const double p = spec.point(i);
    try {
      const Amplitudes amp = transfer_amplitudes(spec.base.build(spec.parameter, p));
      out.records.push_back({p, std::norm(amp.t), std::norm(amp.r)});
    } catch (const Error& e) {
      out.skipped.push_back({p, e.what()});
    }
  }
  return out;
}

std::vector<ResonanceHit> find_resonances(const SweepSpec& spec, double tol) {
  spec.validate();
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "resonance tolerance must be positive");
  }
  const double inf = std::numeric_limits<double>::infinity();
  auto objective = [&](double p) {
    try {
      return reflection_probability(spec, p);
    } catch (const Error&) {
      return inf;
    }
  };

  const std::size_t n = spec.steps;
  std::vector<double> grid(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = spec.point(i);
    values[i] = objective(grid[i]);
  }

  // Only interior grid minima are bracketed; a minimum on the range boundary
  // is not reported.
  std::vector<ResonanceHit> hits;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!std::isfinite(values[i])) continue;
    if (values[i] > values[i - 1] || values[i] > values[i + 1]) continue;

    const double a = grid[i - 1];
    const double b = grid[i + 1];
    const double x = golden_section_minimize(objective, a, b, kRefineWidth);
    const double fx = objective(x);
    if (fx <= tol) hits.push_back({x, fx});
  }

  std::sort(hits.begin(), hits.end(),
            [](const ResonanceHit& l, const ResonanceHit& r) { return l.param < r.param; });
  std::vector<ResonanceHit> merged;
  for (const auto& h : hits) {
    if (!merged.empty() && h.param - merged.back().param < kMergeDistance) {
      if (h.residual < merged.back().residual) merged.back() = h;
      continue;
    }
    merged.push_back(h);
  }
  return merged;
}

}  // namespace deltascatter
