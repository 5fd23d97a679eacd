#include "symalg/grid.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/FFT>

namespace nehari {

std::vector<Complex> samplesToCoefficients(const std::vector<Complex>& samples) {
  Eigen::FFT<double> fft;
  std::vector<Complex> out;
  fft.fwd(out, samples);
  const double n = static_cast<double>(samples.size());
  for (Complex& c : out) c /= n;
  return out;
}

std::vector<Complex> coefficientsToSamples(const std::vector<Complex>& coefficients) {
  Eigen::FFT<double> fft;
  std::vector<Complex> out;
  fft.inv(out, coefficients);
  const double n = static_cast<double>(coefficients.size());
  for (Complex& s : out) s *= n;
  return out;
}

int gridSizeFor(int lo, int hi, int minimum) {
  return nextPowerOfTwo(std::max(minimum, 2 * (hi - lo) + 2));
}

namespace {

size_t wrap(int power, int n) { return static_cast<size_t>(((power % n) + n) % n); }

void requireGridSize(int gridSize, int lo, int hi) {
  require(isPowerOfTwo(gridSize), "grid size must be a power of two");
  require(gridSize >= 2 * (hi - lo) + 2, "grid too small for the symbol's degree range");
}

}  // namespace

GridSymbol toGrid(const LaurentMatrix& symbol, int gridSize) {
  requireGridSize(gridSize, symbol.lo(), symbol.hi());
  GridSymbol g{symbol.rows(), symbol.cols(),
               std::vector<CMatrix>(static_cast<size_t>(gridSize), CMatrix::Zero(symbol.rows(), symbol.cols()))};
  std::vector<Complex> coeffs(static_cast<size_t>(gridSize));
  for (int r = 0; r < symbol.rows(); ++r) {
    for (int c = 0; c < symbol.cols(); ++c) {
      std::fill(coeffs.begin(), coeffs.end(), Complex{});
      for (const auto& [p, m] : symbol.coefficients()) coeffs[wrap(p, gridSize)] = m(r, c);
      const std::vector<Complex> s = coefficientsToSamples(coeffs);
      for (size_t j = 0; j < s.size(); ++j) g.samples[j](r, c) = s[j];
    }
  }
  return g;
}

LaurentMatrix fromGrid(const GridSymbol& grid, int lo, int hi) {
  require(hi >= lo, "empty power range");
  requireGridSize(grid.gridSize(), lo, hi);
  std::map<int, CMatrix> coeffs;
  for (int p = lo; p <= hi; ++p) coeffs[p] = CMatrix::Zero(grid.rows, grid.cols);
  std::vector<Complex> s(static_cast<size_t>(grid.gridSize()));
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      for (size_t j = 0; j < s.size(); ++j) s[j] = grid.samples[j](r, c);
      const std::vector<Complex> f = samplesToCoefficients(s);
      for (int p = lo; p <= hi; ++p) coeffs[p](r, c) = f[wrap(p, grid.gridSize())];
    }
  }
  return LaurentMatrix(grid.rows, grid.cols, std::move(coeffs));
}

GridSymbol sampleGrid(const std::function<CMatrix(Complex)>& f, int rows, int cols, int gridSize) {
  GridSymbol g{rows, cols, {}};
  g.samples.reserve(static_cast<size_t>(gridSize));
  for (int j = 0; j < gridSize; ++j) g.samples.push_back(f(gridPoint(j, gridSize)));
  return g;
}

GridSymbol pointwiseProduct(const GridSymbol& a, const GridSymbol& b) {
  require(a.cols == b.rows && a.gridSize() == b.gridSize(), "grid shape mismatch in product");
  GridSymbol g{a.rows, b.cols, {}};
  g.samples.reserve(a.samples.size());
  for (size_t j = 0; j < a.samples.size(); ++j) g.samples.push_back(a.samples[j] * b.samples[j]);
  return g;
}

GridSymbol determinant(const GridSymbol& grid) {
  require(grid.rows == grid.cols, "determinant of a non-square symbol");
  GridSymbol g{1, 1, {}};
  g.samples.reserve(grid.samples.size());
  for (const CMatrix& m : grid.samples) g.samples.push_back(CMatrix::Constant(1, 1, m.determinant()));
  return g;
}

namespace {

// Returns false when some increment reaches π/2 (grid too coarse).
bool accumulateWinding(const std::vector<Complex>& values, int& winding) {
  double maxAbs = 0.0;
  double minAbs = std::numeric_limits<double>::infinity();
  for (const Complex v : values) {
    maxAbs = std::max(maxAbs, std::abs(v));
    minAbs = std::min(minAbs, std::abs(v));
  }
  if (!(minAbs > 1e-8 * maxAbs))
    fail(ErrorKind::NotInvertibleOnCircle, "symbol (nearly) vanishes on the circle");
  double total = 0.0;
  for (size_t j = 0; j < values.size(); ++j) {
    const double step = std::arg(values[(j + 1) % values.size()] / values[j]);
    if (std::abs(step) >= kPi / 2.0) return false;
    total += step;
  }
  winding = static_cast<int>(std::lround(total / (2.0 * kPi)));
  return true;
}

[[noreturn]] void resolutionFailure() {
  fail(ErrorKind::ResolutionFailure, "winding number unresolved at the maximum grid size");
}

}  // namespace

int windingNumber(const GridSymbol& scalar) {
  require(scalar.isScalar(), "winding number of a non-scalar symbol");
  require(isPowerOfTwo(scalar.gridSize()), "grid size must be a power of two");
  std::vector<Complex> values(scalar.samples.size());
  for (size_t j = 0; j < values.size(); ++j) values[j] = scalar.samples[j](0, 0);
  int winding = 0;
  while (!accumulateWinding(values, winding)) {
    const size_t n = values.size();
    if (2 * n > static_cast<size_t>(kMaxGridSize)) resolutionFailure();
    // Trigonometric interpolation onto the doubled grid.
    std::vector<Complex> c = samplesToCoefficients(values);
    std::vector<Complex> padded(2 * n, Complex{});
    for (size_t p = 0; p < n / 2; ++p) padded[p] = c[p];
    for (size_t p = n / 2 + 1; p < n; ++p) padded[p + n] = c[p];
    padded[n / 2] = 0.5 * c[n / 2];
    padded[n + n / 2] = 0.5 * c[n / 2];
    values = coefficientsToSamples(padded);
  }
  return winding;
}

int windingNumber(const std::function<Complex(Complex)>& f, int initialGridSize) {
  for (int n = initialGridSize; n <= kMaxGridSize; n *= 2) {
    std::vector<Complex> values(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) values[static_cast<size_t>(j)] = f(gridPoint(j, n));
    int winding = 0;
    if (accumulateWinding(values, winding)) return winding;
  }
  resolutionFailure();
}

int windingNumber(const LaurentMatrix& scalar) {
  require(scalar.rows() == 1 && scalar.cols() == 1, "winding number of a non-scalar symbol");
  return windingNumber(toGrid(scalar, gridSizeFor(scalar.lo(), scalar.hi(), 256)));
}

double supNorm(const GridSymbol& grid) {
  double m = 0.0;
  for (const RVector& s : pointwiseSingularValues(grid))
    if (s.size() > 0) m = std::max(m, s(0));
  return m;
}

double supNorm(const LaurentMatrix& symbol, int gridSize) {
  if (gridSize <= 0) gridSize = gridSizeFor(symbol.lo(), symbol.hi());
  return supNorm(toGrid(symbol, gridSize));
}

std::vector<RVector> pointwiseSingularValues(const GridSymbol& grid) {
  std::vector<RVector> out;
  out.reserve(grid.samples.size());
  for (const CMatrix& m : grid.samples) out.push_back(Eigen::JacobiSVD<CMatrix>(m).singularValues());
  return out;
}

Complex innerProduct(const GridSymbol& f, const GridSymbol& g) {
  require(f.gridSize() == g.gridSize() && f.rows == g.rows && f.cols == 1 && g.cols == 1,
          "inner product of incompatible grid vectors");
  Complex acc{};
  for (size_t j = 0; j < f.samples.size(); ++j) acc += g.samples[j].col(0).dot(f.samples[j].col(0));
  return acc / static_cast<double>(f.gridSize());
}

double l2Norm(const GridSymbol& f) { return std::sqrt(std::max(0.0, innerProduct(f, f).real())); }

}  // namespace nehari
