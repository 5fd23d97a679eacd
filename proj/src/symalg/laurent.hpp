#pragma once

#include <map>

#include "symalg/error.hpp"
#include "symalg/polynomial.hpp"
#include "symalg/types.hpp"

namespace nehari {

/// Finite Fourier expansion Σ_p C_p z^p of an m×n matrix symbol on the circle.
///
/// Canonical form: coefficient matrices whose entries are all below
/// kTrimThreshold are dropped after every operation, so lo()/hi() are always
/// attained. The zero symbol has no coefficients and lo = hi = 0.
/// Column symbols (n = 1) double as vector functions.
class LaurentMatrix {
 public:
  LaurentMatrix() : LaurentMatrix(1, 1) {}
  LaurentMatrix(int rows, int cols);
  LaurentMatrix(int rows, int cols, std::map<int, CMatrix> coefficients);

  static LaurentMatrix identity(int n);
  static LaurentMatrix constant(const CMatrix& value);
  static LaurentMatrix monomial(const CMatrix& value, int power);
  static LaurentMatrix scalar(Complex value, int power = 0);
  /// Scalar z^shift · p(z).
  static LaurentMatrix fromPolynomial(const Polynomial& p, int shift = 0);
  /// Column vector symbol from a stacked coefficient vector: block j (length
  /// `rows`) is the coefficient of z^(firstPower + j).
  static LaurentMatrix fromStack(const CVector& stack, int rows, int firstPower = 0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool isZero() const { return coefficients_.empty(); }
  int lo() const { return isZero() ? 0 : coefficients_.begin()->first; }
  int hi() const { return isZero() ? 0 : coefficients_.rbegin()->first; }
  const std::map<int, CMatrix>& coefficients() const { return coefficients_; }
  CMatrix coefficient(int power) const;
  double maxAbsCoefficient() const;

  /// Value at a point of the circle; |point| must be 1 within kCircleTolerance.
  CMatrix evaluate(Complex point) const;
  /// Unchecked evaluation at any nonzero point (any point if lo() >= 0).
  CMatrix evaluateAt(Complex z) const;

  LaurentMatrix transpose() const;
  /// Pointwise conjugate transpose on the circle: p → −p, C → C*.
  LaurentMatrix star() const;
  /// Entrywise conjugation on the circle (no transpose): p → −p, C → conj(C).
  LaurentMatrix conjugate() const;
  /// z^s · A.
  LaurentMatrix shifted(int s) const;
  LaurentMatrix scaled(Complex factor) const;
  LaurentMatrix block(int row, int col, int rows, int cols) const;
  LaurentMatrix entry(int row, int col) const { return block(row, col, 1, 1); }
  LaurentMatrix column(int col) const { return block(0, col, rows_, 1); }

  /// P₊: powers ≥ 0. P₋: powers < 0.
  LaurentMatrix analyticPart() const;
  LaurentMatrix antianalyticPart() const;

  /// Entry (row, col) multiplied by z^(−lo()) as an ordinary polynomial.
  Polynomial entryPolynomial(int row, int col, int shift) const;
  /// Stacked coefficients of a column symbol over powers [from, to].
  CVector stack(int from, int to) const;

  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

 private:
  void canonicalize();

  int rows_;
  int cols_;
  std::map<int, CMatrix> coefficients_;
};

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);
/// Scalar symbol (1×1) times a matrix symbol.
LaurentMatrix scalarMultiply(const LaurentMatrix& scalar, const LaurentMatrix& a);
LaurentMatrix add(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix transpose(const LaurentMatrix& a);
LaurentMatrix star(const LaurentMatrix& a);

/// Exact determinant by cofactor expansion (sizes here are small).
LaurentMatrix determinant(const LaurentMatrix& a);
/// Adjugate; adj(A)·A = det(A)·I.
LaurentMatrix adjugate(const LaurentMatrix& a);

/// Checks |point| = 1 within kCircleTolerance.
void requireOnCircle(Complex point);

/// z^p for |z| = 1 computed from the angle, accurate for large |p|.
Complex unitPower(Complex point, int power);

}  // namespace nehari
