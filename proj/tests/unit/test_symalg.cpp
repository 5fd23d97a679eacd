#include <cmath>
#include <random>

#include "doctest.h"
#include "io/examples.hpp"
#include "support.hpp"
#include "symalg/fejer_riesz.hpp"
#include "symalg/grid.hpp"
#include "symalg/rational.hpp"

using namespace nehari;
using namespace testsupport;

TEST_CASE("evaluate") {
  CHECK(LaurentMatrix(2, 3).evaluate(Complex(0.6, 0.8)).isZero());

  const CMatrix at1 = examples::takagiSymbol().evaluate(1.0);
  CHECK((at1 - mat2(4.0 / 3.0, -1.0 / 3.0, 1.0, 1.0 / 3.0) / kRt2).norm() < 1e-14);

  const LaurentMatrix diag = LaurentMatrix(2, 2, {{1, mat2(1, 0, 0, 0)}, {0, mat2(0, 0, 0, 1)}});
  CHECK((diag.evaluate(Complex(0, 1)) - mat2(Complex(0, 1), 0, 0, 1)).norm() < 1e-15);

  CHECK_THROWS_AS(diag.evaluate(Complex(0.5, 0.0)), Error);
}

TEST_CASE("star, transpose and the displayed factorization") {
  const LaurentMatrix e11 = LaurentMatrix::monomial(mat2(1, 0, 0, 0), -1);
  CHECK(coefficientDistance(e11.star(), LaurentMatrix::monomial(mat2(1, 0, 0, 0), 1)) == 0.0);

  const LaurentMatrix q = examples::takagiApproximant();
  CHECK(coefficientDistance(q.transpose(), q) == 0.0);

  const LaurentMatrix product = examples::takagiLeftFactor() * examples::takagiDiagonalFactor();
  CHECK(coefficientDistance(product, examples::takagiSymbol() - q) < 1e-12);

  CHECK_THROWS_AS(LaurentMatrix(2, 3) * LaurentMatrix(2, 3), Error);
  CHECK_THROWS_AS(LaurentMatrix(2, 3) + LaurentMatrix(3, 2), Error);
}

TEST_CASE("ring laws on random symbols") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentMatrix a = randomSymbol(rng, 2, 3, -2, 2);
    const LaurentMatrix b = randomSymbol(rng, 3, 2, -2, 2);
    const LaurentMatrix ab = a * b;
    for (int j = 0; j < 16; ++j) {
      const Complex z = gridPoint(j, 16);
      CHECK((ab.evaluate(z) - naiveEvaluate(a, z) * naiveEvaluate(b, z)).norm() < 1e-10);
      CHECK((a.star().evaluate(z) - naiveEvaluate(a, z).adjoint()).norm() < 1e-12);
    }
    CHECK(coefficientDistance(a.star().star(), a) == 0.0);
    CHECK(coefficientDistance(ab.star(), b.star() * a.star()) < 1e-10);
  }
}

TEST_CASE("grid round trip and FFT product") {
  const LaurentMatrix phi = examples::takagiSymbol();
  CHECK(coefficientDistance(fromGrid(toGrid(phi, 64), -5, 0), phi) < 1e-12);

  const GridSymbol cube = sampleGrid([](Complex z) { return CMatrix::Constant(1, 1, std::pow(std::conj(z), 3) / 3.0); }, 1, 1, 64);
  const LaurentMatrix back = fromGrid(cube, -8, 8);
  CHECK(back.coefficients().size() == 1);
  CHECK(std::abs(back.coefficient(-3)(0, 0) - 1.0 / 3.0) < 1e-14);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentMatrix a = randomSymbol(rng, 2, 2, 0, 4);
    const LaurentMatrix b = randomSymbol(rng, 2, 2, -4, 0);
    // Direct convolution oracle, written out independently of operator*.
    std::map<int, CMatrix> conv;
    for (int p = 0; p <= 4; ++p)
      for (int q = -4; q <= 0; ++q) {
        auto it = conv.try_emplace(p + q, CMatrix::Zero(2, 2)).first;
        it->second += a.coefficient(p) * b.coefficient(q);
      }
    const LaurentMatrix expected(2, 2, conv);
    const LaurentMatrix viaGrid = fromGrid(pointwiseProduct(toGrid(a, 32), toGrid(b, 32)), -4, 4);
    CHECK(coefficientDistance(viaGrid, expected) < 1e-10);
    CHECK(coefficientDistance(a * b, expected) < 1e-12);
  }

  CHECK_THROWS_AS(toGrid(phi, 8), Error);
  CHECK_THROWS_AS(toGrid(phi, 48), Error);
}

TEST_CASE("determinant") {
  const LaurentMatrix det = determinant(examples::takagiSymbol() - examples::takagiApproximant());
  CHECK(det.coefficients().size() == 1);
  CHECK(std::abs(det.coefficient(-6)(0, 0) - 1.0 / 3.0) < 1e-14);
  CHECK(coefficientDistance(determinant(LaurentMatrix::identity(3)), LaurentMatrix::scalar(1.0)) == 0.0);
  const LaurentMatrix diag = LaurentMatrix(2, 2, {{1, mat2(1, 0, 0, 0)}, {0, mat2(0, 0, 0, 1)}});
  CHECK(coefficientDistance(determinant(diag), LaurentMatrix::scalar(1.0, 1)) == 0.0);
  CHECK_THROWS_AS(determinant(LaurentMatrix(2, 3)), Error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentMatrix a = randomSymbol(rng, 3, 3, -2, 2);
    const LaurentMatrix b = randomSymbol(rng, 3, 3, -1, 1);
    const GridSymbol dab = toGrid(determinant(a * b), 64);
    const GridSymbol da = toGrid(determinant(a), 64);
    const GridSymbol db = toGrid(determinant(b), 64);
    const GridSymbol pointwise = determinant(toGrid(a, 64));
    for (int j = 0; j < 64; ++j) {
      CHECK(std::abs(dab.scalarAt(j) - da.scalarAt(j) * db.scalarAt(j)) < 1e-8);
      CHECK(std::abs(da.scalarAt(j) - pointwise.scalarAt(j)) < 1e-10);
    }
    const LaurentMatrix adj = adjugate(a);
    CHECK(coefficientDistance(adj * a, scalarMultiply(determinant(a), LaurentMatrix::identity(3))) < 1e-10);
  }
}

TEST_CASE("winding numbers") {
  CHECK(windingNumber(LaurentMatrix::scalar(1.0 / 3.0, -6)) == -6);
  CHECK(windingNumber(determinant(examples::takagiSymbol() - examples::takagiApproximant())) == -6);
  CHECK(windingNumber([](Complex z) { return (z - 0.3) / (1.0 - 0.3 * z); }) == 1);

  // High-degree monomials need grid refinement from a coarse start.
  GridSymbol coarse = toGrid(LaurentMatrix::scalar(1.0, 40), 128);
  CHECK(windingNumber(coarse) == 40);

  CHECK_THROWS_AS(windingNumber(LaurentMatrix(1, 1, {{0, CMatrix::Constant(1, 1, 1.0)}, {1, CMatrix::Constant(1, 1, 1.0)}})),
                  Error);

  std::mt19937_64 rng(8);
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 15; ++trial) {
    const LaurentMatrix f = randomSymbol(rng, 1, 1, -3, 3);
    const LaurentMatrix g = randomSymbol(rng, 1, 1, -2, 2);
    try {
      const int wf = windingNumber(f);
      const int wg = windingNumber(g);
      CHECK(windingNumber(f * g) == wf + wg);
      ++tested;
    } catch (const Error&) {
    }
  }
  CHECK(tested >= 10);
}

TEST_CASE("fejerRiesz") {
  const LaurentMatrix twoPlus(1, 1, {{-1, CMatrix::Constant(1, 1, 1.0)}, {0, CMatrix::Constant(1, 1, 2.0)}, {1, CMatrix::Constant(1, 1, 1.0)}});
  const Polynomial h = fejerRiesz(twoPlus);
  REQUIRE(h.degree() == 1);
  CHECK(std::abs(h[0] - 1.0) < 1e-7);
  CHECK(std::abs(h[1] - 1.0) < 1e-7);

  const Polynomial c = fejerRiesz(LaurentMatrix::scalar(4.0));
  CHECK(c.degree() == 0);
  CHECK(std::abs(c[0] - 2.0) < 1e-14);

  // ‖ξ‖² for ξ = ((1−√2) + z)e₁: root-flipping oracle gives h ∝ 1 + (1−√2)z.
  const Complex a = 1.0 - kRt2;
  const LaurentMatrix norm2(1, 1, {{-1, CMatrix::Constant(1, 1, a)}, {0, CMatrix::Constant(1, 1, 1.0 + a * a)}, {1, CMatrix::Constant(1, 1, a)}});
  const Polynomial hx = fejerRiesz(norm2);
  REQUIRE(hx.degree() == 1);
  const std::vector<Complex> roots = hx.roots();
  CHECK(std::abs(roots[0] - 1.0 / (kRt2 - 1.0)) < 1e-8);

  CHECK_THROWS_AS(fejerRiesz(LaurentMatrix::scalar(-1.0)), Error);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentMatrix g = randomSymbol(rng, 1, 1, 0, 4);
    const LaurentMatrix f = g * g.star();
    const Polynomial hf = fejerRiesz(f);
    for (const Complex r : hf.roots()) CHECK(std::abs(r) >= 1.0 - 1e-8);
    CHECK(std::abs(hf[0].imag()) < 1e-12);
    CHECK(hf[0].real() >= 0.0);
    const GridSymbol fg = toGrid(f, 64);
    double fmax = 0.0;
    double err = 0.0;
    for (int j = 0; j < 64; ++j) {
      fmax = std::max(fmax, fg.scalarAt(j).real());
      err = std::max(err, std::abs(std::norm(hf.evaluate(gridPoint(j, 64))) - fg.scalarAt(j).real()));
    }
    CHECK(err <= 1e-8 * (1.0 + fmax));
  }

  // Double root on the circle: f = |1 + z|⁴.
  const LaurentMatrix onePlus(1, 1, {{0, CMatrix::Constant(1, 1, 1.0)}, {1, CMatrix::Constant(1, 1, 1.0)}});
  const LaurentMatrix sq = onePlus * onePlus;
  const Polynomial hd = fejerRiesz(sq * sq.star());
  REQUIRE(hd.degree() == 2);
  CHECK(std::abs(hd[0] - 1.0) < 1e-6);
  CHECK(std::abs(hd[1] - 2.0) < 1e-6);
  CHECK(std::abs(hd[2] - 1.0) < 1e-6);
}

TEST_CASE("supNorm and pointwise singular values") {
  const LaurentMatrix err = examples::takagiSymbol() - examples::takagiApproximant();
  CHECK(std::abs(supNorm(err) - 1.0) < 1e-12);
  for (const RVector& s : pointwiseSingularValues(toGrid(err, 256))) {
    CHECK(std::abs(s(0) - 1.0) < 1e-12);
    CHECK(std::abs(s(1) - 1.0 / 3.0) < 1e-12);
  }
  CHECK(supNorm(LaurentMatrix(2, 2)) == 0.0);
}

TEST_CASE("polynomial roots and deflation") {
  const Polynomial p = Polynomial::fromRoots({0.5, Complex(0, 2), 3.0, 0.0});
  const std::vector<Complex> r = p.roots();
  REQUIRE(r.size() == 4);
  CHECK(std::abs(r[0]) < 1e-15);
  CHECK(std::abs(r[1] - 0.5) < 1e-12);
  CHECK(std::abs(r[2] - Complex(0, 2)) < 1e-12);
  CHECK(std::abs(r[3] - 3.0) < 1e-12);
  const Polynomial q = p.deflate(3.0);
  CHECK(q.degree() == 3);
  CHECK(std::abs(q.evaluate(0.5)) < 1e-12);
  const auto [quot, rem] = p.divmod(Polynomial::fromRoots({0.5, 3.0}));
  CHECK(quot.degree() == 2);
  CHECK(rem.maxAbsCoefficient() < 1e-12);
}

TEST_CASE("rational functions") {
  // (z − 0.3)/(1 − 0.3z): root at 1/0.3, canonical d(0) = 1.
  const RationalMatrix b = RationalMatrix::blaschkeFactor(0.3);
  CHECK(b.denominatorRoots().size() == 1);
  CHECK(b.polesInDisc() == 0);
  for (int j = 0; j < 8; ++j) CHECK(std::abs(std::abs(b.evaluate(gridPoint(j, 8))(0, 0)) - 1.0) < 1e-14);

  // Cancellation: (z² − 0.25)/(z − 0.5) = z + 0.5.
  const RationalMatrix c = RationalMatrix::quotient(LaurentMatrix::fromPolynomial(Polynomial({-0.25, 0.0, 1.0})), Polynomial({-0.5, 1.0}));
  CHECK(c.isLaurent());
  CHECK(coefficientDistance(c.numerator(), LaurentMatrix::fromPolynomial(Polynomial({0.5, 1.0}))) < 1e-12);

  // 1/z moves into the numerator.
  const RationalMatrix inv = RationalMatrix::quotient(LaurentMatrix::scalar(2.0), Polynomial({0.0, 1.0}));
  CHECK(inv.isLaurent());
  CHECK(inv.polesInDisc() == 1);

  // star on the circle matches pointwise conjugation; add/multiply match pointwise.
  const RationalMatrix f = RationalMatrix::quotient(LaurentMatrix::fromPolynomial(Polynomial({1.0, Complex(0.2, 0.3)}), -1), Polynomial({1.0, Complex(-0.4, 0.1)}));
  const RationalMatrix g = RationalMatrix::quotient(LaurentMatrix::fromPolynomial(Polynomial({0.5, 1.0})), Polynomial({2.0, 1.0}));
  const RationalMatrix sum = f + g;
  const RationalMatrix prod = f * g;
  const RationalMatrix fs = f.star();
  const RationalMatrix recip = g.reciprocal();
  for (int j = 0; j < 32; ++j) {
    const Complex z = gridPoint(j, 32);
    const Complex fz = f.evaluate(z)(0, 0);
    const Complex gz = g.evaluate(z)(0, 0);
    CHECK(std::abs(sum.evaluate(z)(0, 0) - (fz + gz)) < 1e-12);
    CHECK(std::abs(prod.evaluate(z)(0, 0) - fz * gz) < 1e-12);
    CHECK(std::abs(fs.evaluate(z)(0, 0) - std::conj(fz)) < 1e-12);
    CHECK(std::abs(recip.evaluate(z)(0, 0) - 1.0 / gz) < 1e-12);
  }
  CHECK((f - f).isZero());

  CHECK_THROWS_AS(RationalMatrix(LaurentMatrix::scalar(1.0), {Complex(0.0, 1.0)}), Error);
}

TEST_CASE("near-cancellation keeps the function on the circle") {
  // (1 − z/r')/(1 − z/r) with r' a hair away from r: dividing the factor out
  // would move the function by ~|r − r'|, so the root must stay.
  const Complex r(-1.53, 0.0);
  const Complex near = r * (1.0 + 1e-8);
  const LaurentMatrix num = LaurentMatrix::fromPolynomial(Polynomial({1.0, -1.0 / near}));
  const RationalMatrix f(num, {r});
  CHECK(f.denominatorRoots().size() == 1);
  for (int j = 0; j < 64; ++j) {
    const Complex z = gridPoint(j, 64);
    CHECK(std::abs(f.evaluate(z)(0, 0) - (1.0 - z / near) / (1.0 - z / r)) < 1e-14);
  }
  // An exact common factor still cancels.
  const RationalMatrix g(scalarMultiply(rootFactor(r), LaurentMatrix::scalar(2.0, 1)), {r});
  CHECK(g.isLaurent());
  CHECK(coefficientDistance(g.numerator(), LaurentMatrix::scalar(2.0, 1)) < 1e-14);
}

TEST_CASE("quadrature grid follows poles near the circle") {
  CHECK(RationalMatrix(LaurentMatrix::scalar(1.0, -3)).quadratureGridSize(512) == 512);
  const RationalMatrix far = RationalMatrix::blaschkeFactor(0.3);
  CHECK(far.quadratureGridSize(512) == 512);
  // |log 0.99| ≈ 0.01005: 64 / 0.01005 ≈ 6368 → 8192.
  const RationalMatrix close = RationalMatrix::blaschkeFactor(0.99);
  CHECK(close.quadratureGridSize(512) == 8192);
  CHECK(close.poleDecay() == doctest::Approx(-std::log(0.99)));
  // Tail aliasing at the chosen size stays negligible: coefficients of the
  // Blaschke factor are exact (−λ, 1 − λ², (1 − λ²)λ, …).
  const LaurentMatrix c = close.fourierProjection(0, 3, 512);
  const double lambda = 0.99;
  CHECK(std::abs(c.coefficient(0)(0, 0) + lambda) < 1e-12);
  CHECK(std::abs(c.coefficient(3)(0, 0) - (1 - lambda * lambda) * lambda * lambda) < 1e-12);
}

TEST_CASE("quotient with noise-level leading coefficients") {
  // (1 − z/2)(1 + 1e-15 z³): the top coefficient is rounding noise and its
  // huge roots must not distort the function on the circle.
  const Polynomial den = Polynomial({1.0, -0.5}) * Polynomial({1.0, 0.0, 0.0, 1e-13});
  const RationalMatrix f = RationalMatrix::quotient(LaurentMatrix::scalar(1.0), den);
  for (int j = 0; j < 64; ++j) {
    const Complex z = gridPoint(j, 64);
    CHECK(std::abs(f.evaluate(z)(0, 0) * den.evaluate(z) - 1.0) < 1e-13);
  }
}

TEST_CASE("roots of a badly scaled polynomial") {
  // (1 − z/2)(1 + 1e-13 z³): roots 2 and the cube roots of −1e13.
  const Polynomial p = Polynomial({1.0, -0.5}) * Polynomial({1.0, 0.0, 0.0, 1e-13});
  const std::vector<Complex> roots = p.roots();
  REQUIRE(roots.size() == 4);
  CHECK(std::abs(roots[0] - 2.0) < 1e-12);
  const double big = std::cbrt(1e13);
  for (size_t i = 1; i < 4; ++i) {
    CHECK(std::abs(std::abs(roots[i]) - big) < 1e-9 * big);
    CHECK(std::abs(std::pow(roots[i] / big, 3) + 1.0) < 1e-9);
  }
}
