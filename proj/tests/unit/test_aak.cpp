#include <cmath>
#include <random>

#include "aak/aak.hpp"
#include "doctest.h"
#include "hankel/hankel.hpp"
#include "support.hpp"

using namespace nehari;
using namespace testsupport;

namespace {

LaurentMatrix scalarLaurent(std::map<int, Complex> c) {
  std::map<int, CMatrix> m;
  for (const auto& [p, v] : c) m[p] = CMatrix::Constant(1, 1, v);
  return LaurentMatrix(1, 1, m);
}

double modulusSpread(const LaurentMatrix& phi, const RationalScalar& q, double& mean) {
  const GridSymbol g = (RationalScalar(phi) - q).toGrid(1024);
  double lo = 1e300, hi = 0.0;
  mean = 0.0;
  for (int j = 0; j < 1024; ++j) {
    const double a = std::abs(g.scalarAt(j));
    lo = std::min(lo, a);
    hi = std::max(hi, a);
    mean += a / 1024.0;
  }
  return hi - lo;
}

}  // namespace

TEST_CASE("bestMeromorphic examples") {
  double mean = 0.0;
  const RationalScalar q0 = bestMeromorphic(LaurentMatrix::scalar(1.0, -1), 0);
  CHECK(q0.isZero());

  const LaurentMatrix phi = scalarLaurent({{-1, 2.0}, {-2, 1.0}});
  const RationalScalar q1 = bestMeromorphic(phi, 1);
  CHECK(q1.polesInDisc() == 1);
  REQUIRE(q1.rootsInside().size() == 1);
  CHECK(std::abs(q1.rootsInside()[0] - (kRt2 - 1.0)) < 1e-10);
  CHECK(modulusSpread(phi, q1, mean) < 1e-8);
  CHECK(std::abs(mean - (kRt2 - 1.0)) < 1e-10);
  // Oracle: q = 2/((1−√2) + z).
  for (int j = 0; j < 16; ++j) {
    const Complex z = gridPoint(j, 16);
    CHECK(std::abs(q1.evaluate(z)(0, 0) - 2.0 / ((1.0 - kRt2) + z)) < 1e-10);
  }

  CHECK(bestMeromorphic(LaurentMatrix::scalar(1.0, -2), 0).isZero());

  // Degenerate level: z̄² has s₀ = s₁ = 1.
  CHECK_THROWS_AS(bestMeromorphic(LaurentMatrix::scalar(1.0, -2), 1), Error);
  // s_k = 0: φ is returned.
  const RationalScalar same = bestMeromorphic(phi, 2);
  CHECK(coefficientDistance(same.numerator(), phi) == 0.0);
}

TEST_CASE("verifyScalarIndex examples") {
  const ScalarIndexRecord r0 = verifyScalarIndex(LaurentMatrix::scalar(1.0, -1), RationalScalar(LaurentMatrix(1, 1)), 0);
  CHECK(r0.winding == -1);
  CHECK(r0.ind == 1);
  CHECK(r0.mu == 1);
  CHECK(r0.formulaHolds);

  const LaurentMatrix phi = scalarLaurent({{-1, 2.0}, {-2, 1.0}});
  const ScalarIndexRecord r1 = verifyScalarIndex(phi, bestMeromorphic(phi, 1), 1);
  CHECK(r1.winding == -3);
  CHECK(r1.ind == 3);
  CHECK(r1.formulaHolds);

  const LaurentMatrix phi3 = scalarLaurent({{-1, 3.0}, {-3, 1.0}});
  const SingularData s3 = singularValues(buildHankel(phi3));
  CHECK(std::abs(s3.value(0) - (3.0 + std::sqrt(13.0)) / 2.0) < 1e-12);
  CHECK(std::abs(s3.value(1) - 1.0) < 1e-12);
  CHECK(std::abs(s3.value(2) - (std::sqrt(13.0) - 3.0) / 2.0) < 1e-12);
  const ScalarIndexRecord r3 = verifyScalarIndex(phi3, bestMeromorphic(phi3, 1), 1);
  CHECK(r3.ind == 3);
  CHECK(r3.mu == 1);

  CHECK_THROWS_AS(verifyScalarIndex(phi, RationalScalar(LaurentMatrix(1, 1)), 0), Error);
}

TEST_CASE("random real scalar symbols") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> degree(1, 6);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentMatrix phi = randomSymbol(rng, 1, 1, -degree(rng), 1, true);
    const SingularData s = singularValues(buildHankel(phi));
    for (int k = 0; k <= 2; ++k) {
      if (s.value(k) <= 0.0) continue;
      if (k > 0 && s.value(k - 1) - s.value(k) <= 1e-4) continue;
      const RationalScalar q = bestMeromorphic(phi, k);
      double mean = 0.0;
      CHECK(modulusSpread(phi, q, mean) < 1e-6);
      CHECK(std::abs(mean - s.value(k)) < 1e-8);
      CHECK(q.polesInDisc() <= k);
      if (k == 0) {
        for (const Complex r : q.denominatorRoots()) CHECK(std::abs(r) > 1.0);
        CHECK(q.numerator().lo() >= 0);
      }
      const ScalarIndexRecord rec = verifyScalarIndex(phi, q, k);
      CHECK(rec.formulaHolds);

      const RationalScalar scaled = bestMeromorphic(phi.scaled(2.5), k);
      for (int j = 0; j < 8; ++j) {
        const Complex z = gridPoint(j, 8);
        CHECK(std::abs(scaled.evaluate(z)(0, 0) - 2.5 * q.evaluate(z)(0, 0)) < 1e-9 * (1.0 + std::abs(q.evaluate(z)(0, 0))));
      }
      ++checked;
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("rational symbols") {
  // φ = z̄² + c/(z − λ): the rational route agrees with constant error modulus.
  const Complex lambda(0.2, 0.5);
  const RationalScalar phi = RationalScalar(LaurentMatrix::scalar(1.0, -2)) +
                             RationalScalar::quotient(LaurentMatrix::scalar(0.7), Polynomial({-lambda, 1.0}));
  const SingularData s = singularValues(buildHankel(phi));
  REQUIRE(s.rank() == 3);
  for (int k = 0; k < 3; ++k) {
    if (!s.hasGap(k)) continue;
    const RationalScalar e = bestMeromorphicError(phi, k);
    const GridSymbol g = e.toGrid(1024);
    for (int j = 0; j < 1024; ++j) CHECK(std::abs(std::abs(g.scalarAt(j)) - s.value(k)) < 1e-8);
    const RationalScalar q = bestMeromorphic(phi, k);
    CHECK(q.polesInDisc() <= k);
  }

  // A Laurent symbol passed as rational takes the exact route.
  const LaurentMatrix lphi(1, 1, {{-1, CMatrix::Constant(1, 1, 2.0)}, {-2, CMatrix::Constant(1, 1, 1.0)}});
  const RationalScalar e1 = bestMeromorphicError(RationalScalar(lphi), 1);
  for (int j = 0; j < 16; ++j) CHECK(std::abs(std::abs(e1.evaluate(gridPoint(j, 16))(0, 0)) - (kRt2 - 1.0)) < 1e-10);
}
