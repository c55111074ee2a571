#pragma once

#include <utility>
#include <vector>

#include "deltascatter/model.hpp"

namespace deltascatter {

/// Dense row-major complex matrix, just enough for the boundary system.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  static ComplexMatrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Matching conditions of an n-site array as a 2n x 2n system.
///
/// Unknowns are ordered (r, a_2, b_2, ..., a_n, b_n, t). Site j contributes
/// row 2j (continuity psi_L = psi_R) followed by row 2j+1 (derivative jump
/// psi'_R - psi'_L - xi_j psi_R = 0). Terms of the unit incident wave
/// e^{iy} are moved to the right-hand side.
struct LinearSystem {
  ComplexMatrix matrix;
  std::vector<Complex> rhs;
};

/// Solution of the scattering problem for a unit wave incident from the left.
struct AmplitudeSolution {
  Complex r;
  Complex t;
  /// (a_j, b_j) for interior regions j = 2..n, i.e. n - 1 pairs.
  std::vector<std::pair<Complex, Complex>> interior;

  double transmission() const { return std::norm(t); }
  double reflection() const { return std::norm(r); }

  /// Coefficients (a, b) of region j in 1..n+1, with (1, r) on the far left
  /// and (t, 0) on the far right.
  std::pair<Complex, Complex> region(std::size_t j) const;
  std::size_t region_count() const { return interior.size() + 2; }
};

LinearSystem assemble_system(const DimensionlessSystem& sys);

/// Gaussian elimination with partial pivoting. Throws Error(kSingular) when a
/// pivot falls below 1e-14 of its row's magnitude.
std::vector<Complex> solve_linear(const LinearSystem& ls);

AmplitudeSolution solve_amplitudes(const DimensionlessSystem& sys);

/// Max-norm of matrix * x - rhs.
double residual_norm(const LinearSystem& ls, std::span<const Complex> x);

}  // namespace deltascatter
