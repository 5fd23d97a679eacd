#pragma once

#include <vector>

#include "symalg/grid.hpp"
#include "symalg/laurent.hpp"

namespace nehari {

/// Cap and target for RationalMatrix::quadratureGridSize: n·|log|r|| ≥ 64
/// keeps geometric tails below e⁻³² over half the grid.
inline constexpr int kMaxQuadratureGrid = 1 << 18;
inline constexpr double kQuadratureDecay = 64.0;

/// Matrix of rational functions over one common scalar denominator:
///
///   F(z) = N(z) / d(z),   d(z) = Π_i (1 − z/r_i),   d(0) = 1,
///
/// where N is a LaurentMatrix (poles at the origin live in its negative
/// powers) and the r_i are nonzero roots off the unit circle. Root/numerator
/// pairs are cancelled whenever N vanishes at r_i (relative 1e-7).
class RationalMatrix {
 public:
  RationalMatrix() : RationalMatrix(LaurentMatrix(1, 1)) {}
  /* implicit */ RationalMatrix(LaurentMatrix numerator);
  RationalMatrix(LaurentMatrix numerator, std::vector<Complex> denominatorRoots);

  /// numerator / denominator for an arbitrary (non-zero) polynomial denominator.
  static RationalMatrix quotient(const LaurentMatrix& numerator, const Polynomial& denominator);
  /// Scalar Blaschke factor (z − λ)/(1 − λ̄z).
  static RationalMatrix blaschkeFactor(Complex lambda);

  int rows() const { return numerator_.rows(); }
  int cols() const { return numerator_.cols(); }
  const LaurentMatrix& numerator() const { return numerator_; }
  const std::vector<Complex>& denominatorRoots() const { return roots_; }
  Polynomial denominator() const;
  bool isLaurent() const { return roots_.empty(); }
  bool isZero() const { return numerator_.isZero(); }

  /// Poles in the open disc counted with multiplicity (roots inside plus the
  /// order of the pole at 0). Meaningful as a pole count for scalars.
  int polesInDisc() const;
  /// Nonzero roots of the denominator inside / outside the disc.
  std::vector<Complex> rootsInside() const;
  std::vector<Complex> rootsOutside() const;

  CMatrix evaluate(Complex point) const;
  CMatrix evaluateAt(Complex z) const;
  GridSymbol toGrid(int gridSize) const;
  /// `minimum`, doubled until the geometric tails of every
  /// pole alias below ~1e-14 (capped at 2^18).
  int quadratureGridSize(int minimum) const;
  /// min over denominator roots of |log|r||; +inf for a Laurent polynomial.
  double poleDecay() const;
  /// Fourier coefficients over [lo, hi] by FFT of samples on `gridSize` points
  /// (exact up to aliasing of the geometric tails).
  LaurentMatrix fourierProjection(int lo, int hi, int gridSize) const;

  RationalMatrix transpose() const;
  RationalMatrix star() const;
  /// Pointwise entrywise conjugate on the circle.
  RationalMatrix conjugate() const;
  RationalMatrix scaled(Complex factor) const;
  RationalMatrix shifted(int s) const;
  RationalMatrix block(int row, int col, int rows, int cols) const;
  RationalMatrix entry(int row, int col) const { return block(row, col, 1, 1); }
  RationalMatrix column(int col) const { return block(0, col, rows(), 1); }
  /// 1/F for a scalar F with no zeros on the circle.
  RationalMatrix reciprocal() const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

 private:
  void canonicalize();

  LaurentMatrix numerator_;
  std::vector<Complex> roots_;
};

/// Scalar rational functions are 1×1 RationalMatrix values.
using RationalScalar = RationalMatrix;

RationalMatrix scalarMultiply(const RationalMatrix& scalar, const RationalMatrix& a);
/// diag(d₀, d₁, …) from scalar entries.
RationalMatrix diagonal(const std::vector<RationalScalar>& entries);
/// Horizontal concatenation of column blocks with equal row counts.
RationalMatrix hconcat(const std::vector<RationalMatrix>& blocks);

/// (1 − z/r) as a scalar Laurent polynomial.
LaurentMatrix rootFactor(Complex root);

}  // namespace nehari
