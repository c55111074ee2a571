#include "deltascatter/transfer.hpp"

#include <cmath>

#include "deltascatter/error.hpp"

namespace deltascatter {

TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs) {
  return {lhs.m11_ * rhs.m11_ + lhs.m12_ * rhs.m21_,
          lhs.m11_ * rhs.m12_ + lhs.m12_ * rhs.m22_,
          lhs.m21_ * rhs.m11_ + lhs.m22_ * rhs.m21_,
          lhs.m21_ * rhs.m12_ + lhs.m22_ * rhs.m22_,
          lhs.det_ * rhs.det_};
}

TransferMatrix delta_matrix(double xi, double y0) {
  using Entry = detail::QuadComplex;
  const Entry half{0, static_cast<__float128>(0.5 * xi)};  // i xi / 2
  Entry phase(std::polar(1.0, 2.0 * y0));
  // |phase| is 1 only to double precision, and xi^2/4 amplifies that into det.
  const __float128 renorm = (3 - (phase.re * phase.re + phase.im * phase.im)) / 2;
  phase = {phase.re * renorm, phase.im * renorm};
  const Entry phase_conj{phase.re, -phase.im};
  const Entry one{1, 0};
  const Entry m11 = one - half;
  const Entry m12 = -(half * phase_conj);
  const Entry m21 = half * phase;
  const Entry m22 = one + half;
  return {m11, m12, m21, m22, m11 * m22 - m12 * m21};
}

TransferMatrix total_matrix(const DimensionlessSystem& sys) {
  TransferMatrix m = TransferMatrix::identity();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    m = delta_matrix(sys.xi()[i], sys.y()[i]) * m;
  }
  return m;
}

Amplitudes amplitudes_from_matrix(const TransferMatrix& m) {
  if (!(std::abs(m.m22()) > 1e-14)) {
    throw Error(ErrorKind::kDegenerate, "transfer matrix has vanishing m22");
  }
  return {(m.det_ / m.m22_).to_double(), (-(m.m21_ / m.m22_)).to_double()};
}

Amplitudes transfer_amplitudes(const DimensionlessSystem& sys) {
  return amplitudes_from_matrix(total_matrix(sys));
}

}  // namespace deltascatter
