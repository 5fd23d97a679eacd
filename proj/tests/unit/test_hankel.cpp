#include <cmath>
#include <random>

#include "doctest.h"
#include "hankel/hankel.hpp"
#include "io/examples.hpp"
#include "support.hpp"

using namespace nehari;
using namespace testsupport;

namespace {

LaurentMatrix scalarLaurent(std::map<int, Complex> c) {
  std::map<int, CMatrix> m;
  for (const auto& [p, v] : c) m[p] = CMatrix::Constant(1, 1, v);
  return LaurentMatrix(1, 1, m);
}

}  // namespace

TEST_CASE("buildHankel") {
  const BlockHankelMatrix h1 = buildHankel(LaurentMatrix::scalar(1.0, -1));
  REQUIRE(h1.matrix.rows() == 1);
  CHECK(h1.matrix(0, 0) == Complex(1.0));

  const BlockHankelMatrix hx = buildHankel(examples::takagiSymbol());
  CHECK(hx.depth() == 5);
  CHECK(hx.matrix.rows() == 10);
  CHECK(hx.matrix.cols() == 10);
  CHECK((hx.matrix.block(0, 0, 2, 2) - mat2(1.0 / 3.0, 0, 0, 1.0 / 3.0) / kRt2).norm() < 1e-15);
  // Block (i,j) depends only on i + j; anti-lower triangle is zero.
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i + j + 1 > 5) CHECK(hx.matrix.block(2 * i, 2 * j, 2, 2).isZero());
      if (i > 0 && j + 1 < 5) CHECK(hx.matrix.block(2 * i, 2 * j, 2, 2) == hx.matrix.block(2 * (i - 1), 2 * (j + 1), 2, 2));
    }

  const BlockHankelMatrix h0 = buildHankel(scalarLaurent({{0, 1.0}, {3, 2.0}}));
  CHECK(h0.depth() == 0);
  CHECK(singularValues(h0).rank() == 0);
}

TEST_CASE("singular values") {
  const SingularData sx = singularValues(buildHankel(examples::takagiSymbol()));
  const double expected[] = {std::sqrt(10.0) / 3.0, 1, 1, 1, 1 / kRt2, 1.0 / 3.0, 0, 0, 0, 0};
  for (int j = 0; j < 10; ++j) CHECK(std::abs(sx.value(j) - expected[j]) < 1e-8);
  CHECK(sx.value(25) == 0.0);
  CHECK(sx.multiplicity(1) == 3);
  CHECK(sx.multiplicity(0) == 1);
  CHECK(sx.hasGap(1));
  CHECK_FALSE(sx.hasGap(2));
  CHECK(sx.rank() == 6);

  const SingularData s2 = singularValues(buildHankel(scalarLaurent({{-1, 2.0}, {-2, 1.0}})));
  CHECK(std::abs(s2.value(0) - (kRt2 + 1)) < 1e-12);
  CHECK(std::abs(s2.value(1) - (kRt2 - 1)) < 1e-12);

  const SingularData s1 = singularValues(buildHankel(LaurentMatrix::scalar(1.0, -1)));
  CHECK(s1.values.size() == 1);
  CHECK(std::abs(s1.value(0) - 1.0) < 1e-15);
}

TEST_CASE("Schmidt spaces") {
  const SchmidtSubspace e1 = schmidtSpace(scalarLaurent({{-1, 2.0}, {-2, 1.0}}), 1);
  REQUIRE(e1.dimension() == 1);
  const CVector v = (CVector(2) << 1.0 - kRt2, 1.0).finished();
  CHECK(std::abs(std::abs(e1.basis.col(0).dot(v)) - v.norm()) < 1e-10);

  const SchmidtSubspace e0 = schmidtSpace(LaurentMatrix::scalar(1.0, -1), 0);
  REQUIRE(e0.dimension() == 1);
  CHECK(std::abs(e0.basis(0, 0) - 1.0) < 1e-15);

  const BlockHankelMatrix hx = buildHankel(examples::takagiSymbol());
  const SchmidtSubspace ex = schmidtSpace(hx, 1);
  REQUIRE(ex.dimension() == 3);
  const CMatrix hh = hx.matrix.adjoint() * hx.matrix;
  for (int i = 0; i < 3; ++i) {
    CHECK((hh * ex.basis.col(i) - ex.basis.col(i)).norm() <= 1e-8);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(ex.basis.col(i).dot(ex.basis.col(j)) - (i == j ? 1.0 : 0.0)) < 1e-10);
  }
  // Canonical choice: the first basis vector is z·e₁.
  const LaurentMatrix xi = ex.polynomial(0);
  CHECK(coefficientDistance(xi, LaurentMatrix::monomial((CMatrix(2, 1) << 1.0, 0.0).finished(), 1)) < 1e-10);

  CHECK_THROWS_AS(schmidtSpace(hx, 7), Error);
}

TEST_CASE("applyHankel and applyFlip") {
  const CMatrix e1 = (CMatrix(2, 1) << 1.0, 0.0).finished();
  CHECK(coefficientDistance(applyFlip(LaurentMatrix::monomial(e1, -1)), LaurentMatrix::constant(e1)) == 0.0);

  const LaurentMatrix phi = examples::takagiSymbol();
  const BlockHankelMatrix h = buildHankel(phi);
  const LaurentMatrix image = applyHankel(phi, LaurentMatrix::constant(e1));
  // Range coordinates: block i holds the coefficient of z̄^(i+1).
  for (int i = 0; i < 5; ++i) CHECK((image.coefficient(-i - 1) - h.matrix.block(2 * i, 0, 2, 1)).norm() == 0.0);
}

TEST_CASE("Hankel properties on random symbols") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentMatrix phi = randomSymbol(rng, 2, 3, -4, 2);
    const SingularData s = singularValues(buildHankel(phi));
    const SingularData st = singularValues(buildHankel(phi.transpose()));
    for (int j = 0; j < 12; ++j) CHECK(std::abs(s.value(j) - st.value(j)) < 1e-10);

    // J H_Φ f = H*_{Φᵗ} J f on polynomial f.
    const LaurentMatrix f = randomSymbol(rng, 3, 1, 0, 5);
    const LaurentMatrix lhs = applyFlip(applyHankel(phi, f));
    const LaurentMatrix rhs = applyHankelAdjoint(phi.transpose(), applyFlip(f));
    CHECK(coefficientDistance(lhs, rhs) < 1e-10);

    // J H_Φ E_k(Φ) ⊆ E_k(Φᵗ).
    const BlockHankelMatrix ht = buildHankel(phi.transpose());
    for (int k = 0; k < 4; ++k) {
      if (!s.hasGap(k) || s.value(k) <= 0.0) continue;
      const SchmidtSubspace e = schmidtSpace(phi, k);
      const CMatrix hth = ht.matrix.adjoint() * ht.matrix;
      for (int i = 0; i < e.dimension(); ++i) {
        const LaurentMatrix eta = applyFlip(applyHankel(phi, e.polynomial(i)));
        const CVector x = eta.stack(0, ht.depth() - 1);
        CHECK((hth * x - s.value(k) * s.value(k) * x).norm() <= 1e-8 * (1.0 + x.norm()));
      }
    }
  }
}

TEST_CASE("toeplitzTruncation") {
  CHECK(toeplitzTruncation(LaurentMatrix::identity(2), 3).isApprox(CMatrix::Identity(8, 8)));
  const CMatrix t = toeplitzTruncation(LaurentMatrix::scalar(1.0, -1), 2);
  CHECK(t == (CMatrix(3, 3) << 0, 1, 0, 0, 0, 1, 0, 0, 0).finished());

  // Parseval: ‖T f‖² + ‖H f‖² = ‖Ψ f‖², right side by grid quadrature.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentMatrix psi = randomSymbol(rng, 2, 2, -3, 3);
    const LaurentMatrix f = randomSymbol(rng, 2, 1, 0, 4);
    const CVector tf = toeplitzTruncation(psi, 7) * f.stack(0, 7);
    const LaurentMatrix hf = applyHankel(psi, f);
    double hnorm = 0.0;
    for (const auto& [p, m] : hf.coefficients()) hnorm += m.squaredNorm();
    const GridSymbol g = toGrid(psi * f, 64);
    double full = 0.0;
    for (const CMatrix& m : g.samples) full += m.squaredNorm();
    full /= 64.0;
    CHECK(std::abs(tf.squaredNorm() + hnorm - full) < 1e-10 * (1.0 + full));
  }
}

TEST_CASE("Hankel of a rational symbol") {
  // q = 1/(z − λ): rank one, ‖H_q‖ = 1/(1 − |λ|²).
  const Complex lambda(0.3, 0.4);
  const RationalMatrix q = RationalMatrix::quotient(LaurentMatrix::scalar(1.0), Polynomial({-lambda, 1.0}));
  const SingularData s = singularValues(buildHankel(q));
  CHECK(s.rank() == 1);
  CHECK(std::abs(s.value(0) - 1.0 / (1.0 - std::norm(lambda))) < 1e-10);

  // Mixed: z̄² + 1/(z − λ) has rank 3 and matches the Laurent part when λ → 0 is absent.
  const RationalMatrix mixed = q + RationalMatrix(LaurentMatrix::scalar(1.0, -2));
  CHECK(singularValues(buildHankel(mixed)).rank() == 3);

  // Model-space basis is orthonormal under grid quadrature.
  const ModelSpace space({0.0, lambda, Complex(-0.5, 0.1)});
  const CMatrix samples = space.samples(512);
  CHECK((samples.adjoint() * samples / 512.0 - CMatrix::Identity(3, 3)).norm() < 1e-12);
  const CVector x = (CVector(3) << 1.0, Complex(0, 2), -1.0).finished();
  const RationalMatrix f = space.combination(x, 1);
  CHECK((space.coordinates(f.toGrid(512)) - x).norm() < 1e-12);
}
