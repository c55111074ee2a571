#include "deltascatter/direct_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deltascatter/error.hpp"

namespace deltascatter {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPivotTolerance = 1e-14;

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::pair<Complex, Complex> AmplitudeSolution::region(std::size_t j) const {
  if (j == 1) return {Complex{1.0, 0.0}, r};
  if (j == interior.size() + 2) return {t, Complex{}};
  if (j < 1 || j > interior.size() + 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "region index " + std::to_string(j) + " out of range");
  }
  return interior[j - 2];
}

LinearSystem assemble_system(const DimensionlessSystem& sys) {
  const std::size_t n = sys.size();
  const std::size_t dim = 2 * n;
  LinearSystem ls{ComplexMatrix(dim, dim), std::vector<Complex>(dim)};

  // Region j (1-based) owns columns: region 1 -> b in column 0 (a = 1 is
  // known), interior j -> (2j-3, 2j-2), region n+1 -> a in column dim-1.
  for (std::size_t s = 0; s < n; ++s) {
    const double y = sys.y()[s];
    const double xi = sys.xi()[s];
    const Complex ep = std::exp(kI * y);
    const Complex em = std::exp(-kI * y);
    const std::size_t cont = 2 * s;
    const std::size_t jump = 2 * s + 1;
    const std::size_t left = s + 1;
    const std::size_t right = s + 2;

    // Right region: +psi_R in continuity, +psi'_R - xi psi_R in the jump.
    if (right == n + 1) {
      ls.matrix(cont, dim - 1) += ep;
      ls.matrix(jump, dim - 1) += (kI - xi) * ep;
    } else {
      const std::size_t ca = 2 * right - 3;
      ls.matrix(cont, ca) += ep;
      ls.matrix(cont, ca + 1) += em;
      ls.matrix(jump, ca) += (kI - xi) * ep;
      ls.matrix(jump, ca + 1) += (-kI - xi) * em;
    }

    // Left region: -psi_L in continuity, -psi'_L in the jump.
    if (left == 1) {
      ls.rhs[cont] += ep;
      ls.matrix(cont, 0) -= em;
      ls.rhs[jump] += kI * ep;
      ls.matrix(jump, 0) -= -kI * em;
    } else {
      const std::size_t ca = 2 * left - 3;
      ls.matrix(cont, ca) -= ep;
      ls.matrix(cont, ca + 1) -= em;
      ls.matrix(jump, ca) -= kI * ep;
      ls.matrix(jump, ca + 1) -= -kI * em;
    }
  }
  return ls;
}

std::vector<Complex> solve_linear(const LinearSystem& ls) {
  const std::size_t n = ls.matrix.rows();
  if (ls.matrix.cols() != n || ls.rhs.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "linear system must be square");
  }
  ComplexMatrix a = ls.matrix;
  std::vector<Complex> b = ls.rhs;

  std::vector<double> row_scale(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      row_scale[i] = std::max(row_scale[i], std::abs(a(i, j)));
    }
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const double mag = std::abs(a(i, col));
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    if (best == 0.0 || best < kPivotTolerance * row_scale[pivot]) {
      throw Error(ErrorKind::kSingular,
                  "singular system at column " + std::to_string(col));
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(b[col], b[pivot]);
      std::swap(row_scale[col], row_scale[pivot]);
    }
    const Complex inv = 1.0 / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Complex factor = a(i, col) * inv;
      if (factor == Complex{}) continue;
      a(i, col) = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= factor * a(col, j);
      b[i] -= factor * b[col];
    }
  }

  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

double residual_norm(const LinearSystem& ls, std::span<const Complex> x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < ls.matrix.rows(); ++i) {
    Complex acc = -ls.rhs[i];
    for (std::size_t j = 0; j < ls.matrix.cols(); ++j) acc += ls.matrix(i, j) * x[j];
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

AmplitudeSolution solve_amplitudes(const DimensionlessSystem& sys) {
  const auto x = solve_linear(assemble_system(sys));
  AmplitudeSolution sol;
  sol.r = x.front();
  sol.t = x.back();
  sol.interior.reserve(sys.size() - 1);
  for (std::size_t k = 1; k + 1 < x.size(); k += 2) {
    sol.interior.emplace_back(x[k], x[k + 1]);
  }
  return sol;
}

}  // namespace deltascatter
