#include "aak/aak.hpp"

#include <algorithm>
#include <cmath>

#include "hankel/hankel.hpp"

namespace nehari {

namespace {

constexpr double kConstancyTolerance = 1e-6;

}  // namespace

RationalScalar bestMeromorphic(const LaurentMatrix& phi, int k) {
  require(phi.rows() == 1 && phi.cols() == 1, "bestMeromorphic expects a scalar symbol");
  require(k >= 0, "k must be nonnegative");
  const BlockHankelMatrix h = buildHankel(phi);
  const SingularData data = singularValues(h);
  if (data.value(k) <= 0.0) return RationalScalar(phi);
  if (!data.hasGap(k))
    fail(ErrorKind::NotKAdmissible, "s_" + std::to_string(k) + " is not separated from s_" + std::to_string(k - 1));

  const LaurentMatrix v = schmidtSpace(h, k).polynomial(0);
  const Polynomial denominator = v.entryPolynomial(0, 0, 0).trimmed(1e-13);
  return RationalScalar::quotient((phi * v).analyticPart(), denominator);
}

RationalScalar bestMeromorphicError(const RationalScalar& phi, int k, int gridSize) {
  require(phi.rows() == 1 && phi.cols() == 1, "bestMeromorphic expects a scalar symbol");
  require(k >= 0, "k must be nonnegative");
  const BlockHankelMatrix h = buildHankel(phi, gridSize);
  const SingularData data = singularValues(h);
  if (data.value(k) <= 0.0) return RationalScalar(LaurentMatrix(1, 1));
  if (!data.hasGap(k))
    fail(ErrorKind::NotKAdmissible, "s_" + std::to_string(k) + " is not separated from s_" + std::to_string(k - 1));

  const SchmidtSubspace e = schmidtSpace(h, k);
  if (h.space.isPolynomial() && phi.isLaurent()) {
    const LaurentMatrix v = e.polynomial(0);
    const LaurentMatrix w = applyHankel(phi.numerator(), v);
    return RationalScalar::quotient(w, v.entryPolynomial(0, 0, 0).trimmed(1e-13));
  }
  // H_φ v = Σ y_i J(φ_i) = J(Σ conj(y_i) φ_i).
  const CVector x = e.basis.col(0);
  const CVector y = h.matrix * x;
  const RationalScalar v = h.space.combination(x, 1);
  const RationalScalar w = h.space.combination(y.conjugate(), 1).conjugate().shifted(-1);
  return w * v.reciprocal();
}

RationalScalar bestMeromorphic(const RationalScalar& phi, int k, int gridSize) {
  if (phi.isLaurent()) return bestMeromorphic(phi.numerator(), k);
  return phi - bestMeromorphicError(phi, k, gridSize);
}

ScalarIndexRecord verifyScalarIndex(const LaurentMatrix& phi, const RationalScalar& q, int k, int gridSize) {
  require(phi.rows() == 1 && phi.cols() == 1 && q.rows() == 1 && q.cols() == 1, "scalar symbols expected");
  const RationalScalar error = RationalScalar(phi) - q;
  const GridSymbol g = error.toGrid(gridSize);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  double mean = 0.0;
  for (int j = 0; j < gridSize; ++j) {
    const double a = std::abs(g.scalarAt(j));
    lo = std::min(lo, a);
    hi = std::max(hi, a);
    mean += a;
  }
  mean /= gridSize;

  ScalarIndexRecord record;
  record.errorModulus = mean;
  record.modulusDeviation = std::max(hi - mean, mean - lo);
  if (record.modulusDeviation > kConstancyTolerance * (1.0 + mean))
    fail(ErrorKind::NotABestApproximant, "|φ − q| is not constant on the circle");

  record.winding = windingNumber([&error](Complex z) { return error.evaluate(z)(0, 0); }, error.quadratureGridSize(256));
  record.ind = -record.winding;
  record.mu = multiplicity(buildHankel(phi), k);
  record.formulaHolds = record.ind == 2 * k + record.mu;
  return record;
}

}  // namespace nehari
