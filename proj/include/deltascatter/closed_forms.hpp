#pragma once

#include "deltascatter/model.hpp"

// Analytic amplitudes for small arrays. All forms place the first site at
// y = 0 unless a position is passed explicitly, and assume a unit wave
// incident from the left.
namespace deltascatter::closed_forms {

/// t = 2i / (2i - xi), r = xi e^{2iy0} / (2i - xi).
Amplitudes single(double xi, double y0 = 0.0);

/// Two equal sites separated by dt.
Amplitudes double_equal(double xi, double dt);

/// Two sites of strengths xi1, xi2 separated by dt.
Amplitudes double_general(double xi1, double xi2, double dt);

/// Three sites with gaps dt1, dt2.
Amplitudes triple(double xi1, double xi2, double xi3, double dt1, double dt2);

/// Six equal, equally spaced sites; rational in xi with coefficient tables
/// alpha_i(dt), beta_i(dt).
Amplitudes six_equal(double xi, double dt);

/// Strength of two equal sites at separation dt that transmits perfectly:
/// xi = -2 / tan(dt). Throws Error(kPole) when dt is within 1e-9 of a
/// multiple of pi.
double double_resonance_strength(double dt);

}  // namespace deltascatter::closed_forms
