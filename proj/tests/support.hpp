#pragma once

#include <cmath>
#include <random>

#include "symalg/laurent.hpp"

namespace testsupport {

using nehari::CMatrix;
using nehari::Complex;
using nehari::LaurentMatrix;

inline const double kRt2 = std::sqrt(2.0);

inline CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Random symbol with coefficients in powers [lo, hi], entries uniform in the
// unit square (real entries only when `real` is set).
inline LaurentMatrix randomSymbol(std::mt19937_64& rng, int rows, int cols, int lo, int hi, bool real = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<int, CMatrix> c;
  for (int p = lo; p <= hi; ++p) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = real ? Complex(u(rng), 0.0) : Complex(u(rng), u(rng));
    c[p] = m;
  }
  return LaurentMatrix(rows, cols, std::move(c));
}

// Naive Σ C_p ζ^p, independent of LaurentMatrix::evaluate.
inline CMatrix naiveEvaluate(const LaurentMatrix& a, Complex z) {
  CMatrix v = CMatrix::Zero(a.rows(), a.cols());
  for (const auto& [p, m] : a.coefficients()) {
    Complex zp = 1.0;
    for (int i = 0; i < std::abs(p); ++i) zp *= (p > 0 ? z : 1.0 / z);
    v += m * zp;
  }
  return v;
}

inline double coefficientDistance(const LaurentMatrix& a, const LaurentMatrix& b) {
  double d = 0.0;
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  for (int p = lo; p <= hi; ++p) d = std::max(d, (a.coefficient(p) - b.coefficient(p)).cwiseAbs().maxCoeff());
  return d;
}

}  // namespace testsupport
