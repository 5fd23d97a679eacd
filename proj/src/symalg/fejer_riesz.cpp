#include "symalg/fejer_riesz.hpp"

#include <algorithm>
#include <cmath>

#include "symalg/grid.hpp"

namespace nehari {

namespace {

constexpr double kOnCircle = 1e-6;
constexpr double kClusterRadius = 1e-3;
constexpr double kOnCircleMultiple = 1e-4;

// A root of multiplicity m is a simple root of the (m−1)-th derivative.
Complex refineMultipleRoot(const Polynomial& p, Complex center, int multiplicity) {
  Polynomial d = p;
  for (int i = 1; i < multiplicity; ++i) d = d.derivative();
  const Polynomial dd = d.derivative();
  for (int iter = 0; iter < 8; ++iter) {
    const Complex slope = dd.evaluate(center);
    if (std::abs(slope) == 0.0) break;
    const Complex step = d.evaluate(center) / slope;
    center -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return center;
}

}  // namespace

Polynomial fejerRiesz(const LaurentMatrix& f) {
  require(f.rows() == 1 && f.cols() == 1, "fejerRiesz expects a scalar symbol");
  if (f.isZero()) return {};

  const int n = gridSizeFor(f.lo(), f.hi(), 1024);
  const GridSymbol g = toGrid(f, n);
  double fmax = 0.0;
  double fsum = 0.0;
  for (int j = 0; j < n; ++j) {
    fmax = std::max(fmax, std::abs(g.scalarAt(j)));
    fsum += g.scalarAt(j).real();
  }
  for (int j = 0; j < n; ++j)
    require(g.scalarAt(j).real() >= -1e-10 * (1.0 + fmax), "fejerRiesz input is negative on the circle");

  const int d = std::max(-f.lo(), f.hi());
  const Polynomial lifted = f.entryPolynomial(0, 0, d);
  // Multiple roots on the circle scatter by ~eps^(1/m) under the companion
  // solver, so classify clusters rather than individual roots.
  std::vector<Complex> kept;
  for (auto [root, multiplicity] : clusterRoots(lifted.roots(), kClusterRadius)) {
    if (multiplicity > 1) root = refineMultipleRoot(lifted, root, multiplicity);
    const double m = std::abs(root);
    if (multiplicity > 1 && std::abs(m - 1.0) <= kOnCircleMultiple) {
      require(multiplicity % 2 == 0, "fejerRiesz input changes sign on the circle");
      for (int i = 0; i < multiplicity / 2; ++i) kept.push_back(root / m);
    } else if (multiplicity == 1 && std::abs(m - 1.0) <= kOnCircle) {
      fail(ErrorKind::InvalidInput, "fejerRiesz input changes sign on the circle");
    } else if (m > 1.0) {
      for (int i = 0; i < multiplicity; ++i) kept.push_back(root);
    }
  }

  Polynomial h = Polynomial::fromRoots(kept);
  double hsum = 0.0;
  for (int j = 0; j < n; ++j) hsum += std::norm(h.evaluate(gridPoint(j, n)));
  const double alpha = std::sqrt(std::max(0.0, fsum) / hsum);
  const Complex h0 = h.evaluate(0.0);
  const Complex phase = std::abs(h0) > 0.0 ? std::conj(h0) / std::abs(h0) : Complex(1.0);
  return h.scaled(alpha * phase);
}

}  // namespace nehari
