#pragma once

#include "deltascatter/detail/quad_complex.hpp"
#include "deltascatter/model.hpp"

namespace deltascatter {

/// Maps plane-wave coefficients (A, B) of psi = A e^{iy} + B e^{-iy} on the
/// left of a site to the coefficients (C, D) on its right.
///
/// For a site of strength xi at y0, continuity of psi and the jump
/// psi'_R - psi'_L = xi psi give, with u = C - A and v = D - B,
///
///   u e^{iy0} + v e^{-iy0} = 0
///   i (u e^{iy0} - v e^{-iy0}) = xi (A e^{iy0} + B e^{-iy0})
///
/// so u = -(i xi / 2)(A + B e^{-2iy0}) and v = (i xi / 2)(A e^{2iy0} + B):
///
///   | C |   | 1 - i xi/2             -(i xi/2) e^{-2iy0} | | A |
///   | D | = | (i xi/2) e^{2iy0}       1 + i xi/2         | | B |
///
/// The determinant is (1 + xi^2/4) - xi^2/4 = 1 for any real xi. Position
/// phases live in the site matrix, so no separate propagation step exists.
///
/// Entries are held in binary128. Products of strongly reflecting sites grow
/// like 1/|t|, and in double precision the rounding of the entries alone
/// moves the determinant by ~1e-16 / |t|^2.
///
/// The determinant is also carried factor by factor through products. Once
/// the entries are large enough, m11 m22 - m12 m21 cancels to noise even in
/// binary128; amplitude extraction uses the carried value.
class TransferMatrix {
 public:
  TransferMatrix() = default;
  TransferMatrix(Complex m11, Complex m12, Complex m21, Complex m22)
      : m11_(m11), m12_(m12), m21_(m21), m22_(m22), det_(entry_determinant()) {}

  static TransferMatrix identity() { return {}; }

  Complex m11() const { return m11_.to_double(); }
  Complex m12() const { return m12_.to_double(); }
  Complex m21() const { return m21_.to_double(); }
  Complex m22() const { return m22_.to_double(); }

  /// Evaluated in binary128 before rounding.
  Complex determinant() const { return entry_determinant().to_double(); }

  /// Product of the factor determinants.
  Complex carried_determinant() const { return det_.to_double(); }

  /// lhs * rhs (rhs acts first).
  friend TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs);

  friend TransferMatrix delta_matrix(double xi, double y0);
  friend struct Amplitudes amplitudes_from_matrix(const TransferMatrix& m);

 private:
  using Entry = detail::QuadComplex;
  TransferMatrix(Entry m11, Entry m12, Entry m21, Entry m22, Entry det)
      : m11_(m11), m12_(m12), m21_(m21), m22_(m22), det_(det) {}

  Entry entry_determinant() const { return m11_ * m22_ - m12_ * m21_; }

  Entry m11_{1, 0};
  Entry m12_{};
  Entry m21_{};
  Entry m22_{1, 0};
  Entry det_{1, 0};
};

TransferMatrix delta_matrix(double xi, double y0);

/// M_n ... M_2 M_1 over the sites in increasing y.
TransferMatrix total_matrix(const DimensionlessSystem& sys);

/// Imposes (t, 0) = M (1, r): r = -m21/m22, t = det/m22 with the carried
/// determinant. Throws
/// Error(kDegenerate) if |m22| <= 1e-14.
Amplitudes amplitudes_from_matrix(const TransferMatrix& m);

/// Convenience: amplitudes_from_matrix(total_matrix(sys)).
Amplitudes transfer_amplitudes(const DimensionlessSystem& sys);

}  // namespace deltascatter
