#pragma once

#include <cmath>

namespace deltascatter {

template <class F>
double golden_section_minimize(F&& f, double a, double b, double width) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  double best_x = fc <= fd ? c : d;
  double best_f = fc <= fd ? fc : fd;

  for (int iter = 0; iter < 300 && (b - a) > width; ++iter) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best_f) {
        best_f = fc;
        best_x = c;
      }
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best_f) {
        best_f = fd;
        best_x = d;
      }
    }
  }
  return best_x;
}

}  // namespace deltascatter
