#include "symalg/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nehari {

namespace {

constexpr double kZeroRoot = 1e-12;
constexpr double kCancelTolerance = 1e-7;
constexpr double kBoundaryGap = 1e-9;
// A cancellation may move the function on the circle by at most this much
// (relative); anything larger is a nearby zero, not a common factor.
constexpr double kRemainderTolerance = 1e-11;
constexpr int kCancelSamples = 256;

// N / (1 − z/r) assuming N(r) ≈ 0.
LaurentMatrix divideRootFactor(const LaurentMatrix& n, Complex r) {
  const int lo = n.lo();
  std::map<int, CMatrix> c;
  for (int i = 0; i < n.rows(); ++i) {
    for (int j = 0; j < n.cols(); ++j) {
      const Polynomial q = n.entryPolynomial(i, j, -lo).deflate(r).scaled(-r);
      for (int p = 0; p <= q.degree(); ++p) {
        auto it = c.try_emplace(p + lo, CMatrix::Zero(n.rows(), n.cols())).first;
        it->second(i, j) = q[p];
      }
    }
  }
  return LaurentMatrix(n.rows(), n.cols(), std::move(c));
}

bool vanishesAt(const LaurentMatrix& n, Complex r) {
  if (n.isZero()) return true;
  const int lo = n.lo();
  for (int i = 0; i < n.rows(); ++i) {
    for (int j = 0; j < n.cols(); ++j) {
      const Polynomial p = n.entryPolynomial(i, j, -lo);
      const double scale = p.absoluteScale(std::abs(r));
      if (scale == 0.0) continue;
      if (std::abs(p.evaluate(r)) > kCancelTolerance * scale) return false;
    }
  }
  return true;
}

}  // namespace

LaurentMatrix rootFactor(Complex root) {
  return LaurentMatrix(1, 1, {{0, CMatrix::Constant(1, 1, 1.0)}, {1, CMatrix::Constant(1, 1, -1.0 / root)}});
}

RationalMatrix::RationalMatrix(LaurentMatrix numerator) : numerator_(std::move(numerator)) {}

RationalMatrix::RationalMatrix(LaurentMatrix numerator, std::vector<Complex> denominatorRoots)
    : numerator_(std::move(numerator)), roots_(std::move(denominatorRoots)) {
  for (const Complex r : roots_) {
    require(std::isfinite(r.real()) && std::isfinite(r.imag()), "non-finite denominator root");
    require(std::abs(r) > kZeroRoot, "denominator roots at the origin belong in the numerator");
  }
  canonicalize();
  for (const Complex r : roots_)
    require(std::abs(std::abs(r) - 1.0) > kBoundaryGap, "denominator root on the unit circle");
}

void RationalMatrix::canonicalize() {
  if (numerator_.isZero()) {
    roots_.clear();
    return;
  }
  std::sort(roots_.begin(), roots_.end(), rootOrder);
  std::vector<Complex> kept;
  for (size_t i = 0; i < roots_.size(); ++i) {
    const Complex r = roots_[i];
    if (vanishesAt(numerator_, r)) {
      LaurentMatrix reduced = divideRootFactor(numerator_, r);
      const LaurentMatrix remainder = scalarMultiply(rootFactor(r), reduced) - numerator_;
      // Compare the change of N/d on the circle with N/d itself.
      double change = 0.0;
      double size = 0.0;
      for (int t = 0; t < kCancelSamples; ++t) {
        const Complex z = gridPoint(t, kCancelSamples);
        Complex d = 1.0;
        for (const Complex other : kept) d *= 1.0 - z / other;
        for (size_t j = i; j < roots_.size(); ++j) d *= 1.0 - z / roots_[j];
        const double inv = 1.0 / std::abs(d);
        change = std::max(change, remainder.evaluate(z).cwiseAbs().maxCoeff() * inv);
        size = std::max(size, numerator_.evaluate(z).cwiseAbs().maxCoeff() * inv);
      }
      // Rebuilding through (1 − z/r) scales rounding by 1/|r|.
      if (change <= kRemainderTolerance * std::max(1.0, 1.0 / std::abs(r)) * size) {
        numerator_ = std::move(reduced);
        continue;
      }
    }
    kept.push_back(r);
  }
  roots_ = std::move(kept);
}

RationalMatrix RationalMatrix::quotient(const LaurentMatrix& numerator, const Polynomial& denominator) {
  const Polynomial den = denominator.trimmed(1e-14);
  require(!den.isZero(), "zero denominator");
  std::vector<Complex> roots = den.roots();
  int zeros = 0;
  std::vector<Complex> nonzero;
  for (const Complex r : roots) {
    if (std::abs(r) <= kZeroRoot) ++zeros;
    else nonzero.push_back(r);
  }
  // den = scale · z^zeros · Π(1 − z/r). Fit the scale on the circle: the
  // leading coefficient times Π(−r) is ill-conditioned when far roots come
  // from noise-level top coefficients.
  constexpr int kFitPoints = 8;
  Complex scale{};
  for (int j = 0; j < kFitPoints; ++j) {
    const Complex z = gridPoint(j, kFitPoints);
    Complex model = std::pow(z, zeros);
    for (const Complex r : nonzero) model *= 1.0 - z / r;
    scale += den.evaluate(z) / model;
  }
  scale /= static_cast<double>(kFitPoints);
  return RationalMatrix(numerator.shifted(-zeros).scaled(1.0 / scale), std::move(nonzero));
}

RationalMatrix RationalMatrix::blaschkeFactor(Complex lambda) {
  require(std::abs(lambda) < 1.0, "Blaschke factor needs a point of the open disc");
  const LaurentMatrix num(1, 1, {{0, CMatrix::Constant(1, 1, -lambda)}, {1, CMatrix::Constant(1, 1, 1.0)}});
  if (std::abs(lambda) <= kZeroRoot) return RationalMatrix(num);
  return RationalMatrix(num, {1.0 / std::conj(lambda)});
}

Polynomial RationalMatrix::denominator() const {
  Polynomial d = Polynomial::constant(1.0);
  for (const Complex r : roots_) d = d * Polynomial({1.0, -1.0 / r});
  return d;
}

int RationalMatrix::polesInDisc() const {
  return static_cast<int>(rootsInside().size()) + std::max(0, -numerator_.lo());
}

std::vector<Complex> RationalMatrix::rootsInside() const {
  std::vector<Complex> out;
  for (const Complex r : roots_)
    if (std::abs(r) < 1.0) out.push_back(r);
  return out;
}

std::vector<Complex> RationalMatrix::rootsOutside() const {
  std::vector<Complex> out;
  for (const Complex r : roots_)
    if (std::abs(r) > 1.0) out.push_back(r);
  return out;
}

CMatrix RationalMatrix::evaluate(Complex point) const {
  requireOnCircle(point);
  return evaluateAt(point);
}

CMatrix RationalMatrix::evaluateAt(Complex z) const {
  Complex d = 1.0;
  for (const Complex r : roots_) d *= 1.0 - z / r;
  const CMatrix n = (std::abs(std::abs(z) - 1.0) <= kCircleTolerance) ? numerator_.evaluate(z) : numerator_.evaluateAt(z);
  return n / d;
}

GridSymbol RationalMatrix::toGrid(int gridSize) const {
  if (gridSize < 2 * (numerator_.hi() - numerator_.lo()) + 2)
    return sampleGrid([this](Complex z) { return evaluateAt(z); }, rows(), cols(), gridSize);
  GridSymbol g = nehari::toGrid(numerator_, gridSize);
  for (int j = 0; j < gridSize; ++j) {
    const Complex z = gridPoint(j, gridSize);
    Complex d = 1.0;
    for (const Complex r : roots_) d *= 1.0 - z / r;
    g.samples[static_cast<size_t>(j)] /= d;
  }
  return g;
}

double RationalMatrix::poleDecay() const {
  double decay = std::numeric_limits<double>::infinity();
  for (const Complex r : roots_) decay = std::min(decay, std::abs(std::log(std::abs(r))));
  return decay;
}

int RationalMatrix::quadratureGridSize(int minimum) const {
  const double decay = poleDecay();
  int n = std::max(2, minimum);
  while (n < kMaxQuadratureGrid && n * decay < kQuadratureDecay) n *= 2;
  return n;
}

LaurentMatrix RationalMatrix::fourierProjection(int lo, int hi, int gridSize) const {
  if (isLaurent()) {
    std::map<int, CMatrix> c;
    for (const auto& [p, m] : numerator_.coefficients())
      if (p >= lo && p <= hi) c[p] = m;
    return LaurentMatrix(rows(), cols(), std::move(c));
  }
  return fromGrid(toGrid(quadratureGridSize(gridSize)), lo, hi);
}

RationalMatrix RationalMatrix::transpose() const { return RationalMatrix(numerator_.transpose(), roots_); }

RationalMatrix RationalMatrix::star() const {
  // 1/conj(1 − ζ/r) = −r̄ ζ / (1 − ζ r̄) on the circle.
  Complex scale = 1.0;
  std::vector<Complex> reflected;
  for (const Complex r : roots_) {
    scale *= -std::conj(r);
    reflected.push_back(1.0 / std::conj(r));
  }
  const int m = static_cast<int>(roots_.size());
  return RationalMatrix(numerator_.star().shifted(m).scaled(scale), std::move(reflected));
}

RationalMatrix RationalMatrix::conjugate() const { return star().transpose(); }

RationalMatrix RationalMatrix::scaled(Complex factor) const { return RationalMatrix(numerator_.scaled(factor), roots_); }

RationalMatrix RationalMatrix::shifted(int s) const { return RationalMatrix(numerator_.shifted(s), roots_); }

RationalMatrix RationalMatrix::block(int row, int col, int rows, int cols) const {
  return RationalMatrix(numerator_.block(row, col, rows, cols), roots_);
}

RationalMatrix RationalMatrix::reciprocal() const {
  require(rows() == 1 && cols() == 1, "reciprocal of a non-scalar rational function");
  require(!isZero(), "reciprocal of zero");
  const int lo = numerator_.lo();
  const Polynomial num = numerator_.entryPolynomial(0, 0, -lo);
  const LaurentMatrix top = LaurentMatrix::fromPolynomial(denominator(), -lo);
  for (const Complex r : num.roots())
    if (std::abs(std::abs(r) - 1.0) <= kBoundaryGap) fail(ErrorKind::NotInvertibleOnCircle, "reciprocal has a pole on the circle");
  return quotient(top, num);
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch in add");
  std::vector<Complex> common = a.roots_;
  std::vector<bool> used(a.roots_.size(), false);
  std::vector<Complex> onlyB;
  for (const Complex r : b.roots_) {
    bool matched = false;
    for (size_t i = 0; i < a.roots_.size(); ++i) {
      if (!used[i] && std::abs(a.roots_[i] - r) <= kRootClusterRadius * std::max(1.0, std::abs(r))) {
        used[i] = true;
        matched = true;
        break;
      }
    }
    if (!matched) onlyB.push_back(r);
  }
  LaurentMatrix na = a.numerator_;
  for (const Complex r : onlyB) na = scalarMultiply(rootFactor(r), na);
  LaurentMatrix nb = b.numerator_;
  for (size_t i = 0; i < a.roots_.size(); ++i)
    if (!used[i]) nb = scalarMultiply(rootFactor(a.roots_[i]), nb);
  common.insert(common.end(), onlyB.begin(), onlyB.end());
  return RationalMatrix(na + nb, std::move(common));
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return a + b.scaled(-1.0); }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  std::vector<Complex> roots = a.roots_;
  roots.insert(roots.end(), b.roots_.begin(), b.roots_.end());
  return RationalMatrix(a.numerator_ * b.numerator_, std::move(roots));
}

RationalMatrix scalarMultiply(const RationalMatrix& scalar, const RationalMatrix& a) {
  std::vector<Complex> roots = scalar.denominatorRoots();
  roots.insert(roots.end(), a.denominatorRoots().begin(), a.denominatorRoots().end());
  return RationalMatrix(scalarMultiply(scalar.numerator(), a.numerator()), std::move(roots));
}

RationalMatrix diagonal(const std::vector<RationalScalar>& entries) {
  const int n = static_cast<int>(entries.size());
  require(n > 0, "empty diagonal");
  RationalMatrix result(LaurentMatrix(n, n));
  for (int i = 0; i < n; ++i) {
    require(entries[static_cast<size_t>(i)].rows() == 1 && entries[static_cast<size_t>(i)].cols() == 1,
            "diagonal entries must be scalar");
    std::map<int, CMatrix> c;
    for (const auto& [p, m] : entries[static_cast<size_t>(i)].numerator().coefficients()) {
      CMatrix e = CMatrix::Zero(n, n);
      e(i, i) = m(0, 0);
      c[p] = e;
    }
    result = result + RationalMatrix(LaurentMatrix(n, n, std::move(c)), entries[static_cast<size_t>(i)].denominatorRoots());
  }
  return result;
}

RationalMatrix hconcat(const std::vector<RationalMatrix>& blocks) {
  require(!blocks.empty(), "nothing to concatenate");
  // Bring every block onto the union denominator by adding zero-padded pieces.
  int totalCols = 0;
  for (const RationalMatrix& b : blocks) {
    require(b.rows() == blocks.front().rows(), "row mismatch in hconcat");
    totalCols += b.cols();
  }
  RationalMatrix result(LaurentMatrix(blocks.front().rows(), totalCols));
  int offset = 0;
  for (const RationalMatrix& b : blocks) {
    std::map<int, CMatrix> c;
    for (const auto& [p, m] : b.numerator().coefficients()) {
      CMatrix wide = CMatrix::Zero(b.rows(), totalCols);
      wide.middleCols(offset, b.cols()) = m;
      c[p] = wide;
    }
    result = result + RationalMatrix(LaurentMatrix(b.rows(), totalCols, std::move(c)), b.denominatorRoots());
    offset += b.cols();
  }
  return result;
}

}  // namespace nehari
