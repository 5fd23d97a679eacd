#include <cmath>
#include <random>

#include "doctest.h"
#include "hankel/hankel.hpp"
#include "index/toeplitz_kernel.hpp"
#include "io/examples.hpp"
#include "support.hpp"

using namespace nehari;
using namespace testsupport;

namespace {

LaurentMatrix exampleU() {
  // (1/√2)[[z̄³, −z̄/3], [z̄³, z̄/3]]
  const double a = 1.0 / kRt2;
  return LaurentMatrix(2, 2, {{-3, mat2(a, 0, a, 0)}, {-1, mat2(0, -a / 3.0, 0, a / 3.0)}});
}

// Independent check of f ∈ ker T_Ψ: convolve Ψ with a long Taylor window of f
// and read off the coefficients of nonnegative powers.
double analyticResidual(const LaurentMatrix& psi, const RationalMatrix& f) {
  // Taylor window long enough for the geometric tail to drop below 1e-13.
  double rho = 10.0;
  for (const Complex r : f.denominatorRoots()) rho = std::min(rho, std::abs(r));
  const int window = std::min(6000, 64 + static_cast<int>(30.0 / std::log(rho)));
  const int grid = nextPowerOfTwo(4 * window);
  const LaurentMatrix product = psi * f.fourierProjection(0, window, grid);
  double r = 0.0;
  for (int p = 0; p <= window - 8; ++p) r = std::max(r, product.coefficient(p).cwiseAbs().maxCoeff());
  return r;
}

}  // namespace

TEST_CASE("fredholmCheck") {
  const LaurentMatrix err = examples::takagiSymbol() - examples::takagiApproximant();
  const FredholmCheck c = fredholmCheck(err);
  CHECK(c.fredholm);
  CHECK(std::abs(c.margin - 1.0) < 1e-10);
  CHECK_FALSE(fredholmCheck(LaurentMatrix::constant(mat2(1, 1, 1, 1))).fredholm);
  CHECK(fredholmCheck(LaurentMatrix::identity(2)).fredholm);
}

TEST_CASE("kernelToeplitzExact examples") {
  const ToeplitzKernelBasis k1 = kernelToeplitzExact(LaurentMatrix::scalar(1.0, -1));
  REQUIRE(k1.dimension() == 1);
  CHECK(k1.elements[0].isLaurent());
  CHECK(std::abs(std::abs(k1.elements[0].numerator().coefficient(0)(0, 0)) - 1.0) < 1e-12);
  CHECK(k1.elements[0].numerator().hi() == 0);

  const LaurentMatrix err = examples::takagiSymbol() - examples::takagiApproximant();
  const ToeplitzKernelBasis kx = kernelToeplitzExact(err);
  CHECK(kx.dimension() == 6);
  for (const RationalMatrix& f : kx.elements) CHECK(analyticResidual(err, f) < 1e-10);

  const ToeplitzKernelBasis ku = kernelToeplitzExact(exampleU());
  CHECK(ku.dimension() == 4);
  CHECK(ku.depth == 3);

  CHECK_THROWS_AS(kernelToeplitzExact(LaurentMatrix::constant(mat2(1, 1, 1, 1))), Error);
}

TEST_CASE("cokernel and index") {
  const LaurentMatrix err = examples::takagiSymbol() - examples::takagiApproximant();
  CHECK(cokernelDim(err) == 0);
  CHECK(cokernelDim(LaurentMatrix::scalar(1.0, -1)) == 0);
  CHECK(cokernelDim(LaurentMatrix::scalar(1.0, 1)) == 1);
  CHECK(toeplitzIndex(err) == 6);
  CHECK(toeplitzIndex(LaurentMatrix::monomial(CMatrix::Identity(2, 2), -1)) == 2);
  CHECK(toeplitzIndex(exampleU()) == 4);
  CHECK(cokernelDim(exampleU()) == 0);
}

TEST_CASE("rational symbols") {
  // ψ = b_λ² z̄³ with b_λ = (z − λ)/(1 − λ̄z): winding −1, kernel dimension 1.
  const Complex lambda(0.3, -0.2);
  const RationalMatrix b = RationalMatrix::blaschkeFactor(lambda);
  const RationalMatrix psi = b * b * RationalMatrix(LaurentMatrix::scalar(1.0, -3));
  const ToeplitzKernelBasis k = kernelToeplitzExact(psi);
  CHECK(k.dimension() == 1);
  CHECK(toeplitzIndex(psi) == 1);

  // 1/(z − λ) with λ inside the disc: z̄/(1 − λz̄) is co-outer times z̄.
  const RationalMatrix pole = RationalMatrix::quotient(LaurentMatrix::scalar(1.0), Polynomial({-lambda, 1.0}));
  CHECK(kernelToeplitzExact(pole).dimension() == 1);
  CHECK(toeplitzIndex(pole) == 1);

  // Outer denominator: (z̄²)/(1 − z/3) has kernel (1 − z/3)·span{1, z}.
  const RationalMatrix outer = RationalMatrix(LaurentMatrix::scalar(1.0, -2), {3.0});
  const ToeplitzKernelBasis ko = kernelToeplitzExact(outer);
  CHECK(ko.dimension() == 2);
  for (const RationalMatrix& f : ko.elements) CHECK(f.isLaurent());
}

TEST_CASE("winding equals dim ker minus dim coker on random symbols") {
  std::mt19937_64 rng(99);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 25; ++trial) {
    std::uniform_int_distribution<int> lo(-3, 0), hi(0, 3);
    const LaurentMatrix psi = randomSymbol(rng, 2, 2, lo(rng), hi(rng));
    if (fredholmCheck(psi).margin <= 1e-3) continue;
    try {
      const int ind = toeplitzIndex(psi);
      const ToeplitzKernelBasis k = kernelToeplitzExact(psi);
      for (const RationalMatrix& f : k.elements) CHECK(analyticResidual(psi, f) < 1e-8);
      CHECK(ind == k.dimension() - cokernelDim(psi));
      ++tested;
    } catch (const Error& e) {
      CHECK(std::string(toString(e.kind())) == "ill-conditioned");
    }
  }
  CHECK(tested >= 20);
}
