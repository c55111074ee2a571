#pragma once

#include <complex>

namespace deltascatter::detail {

// Complex number over the 113-bit binary128 type. Only the field operations
// are provided; no transcendental functions are needed by the transfer path.
struct QuadComplex {
  __float128 re = 0;
  __float128 im = 0;

  QuadComplex() = default;
  constexpr QuadComplex(__float128 r, __float128 i) : re(r), im(i) {}
  explicit QuadComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  friend QuadComplex operator+(QuadComplex a, QuadComplex b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend QuadComplex operator-(QuadComplex a, QuadComplex b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend QuadComplex operator-(QuadComplex a) { return {-a.re, -a.im}; }
  friend QuadComplex operator*(QuadComplex a, QuadComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QuadComplex operator/(QuadComplex a, QuadComplex b) {
    const __float128 den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
};

}  // namespace deltascatter::detail
