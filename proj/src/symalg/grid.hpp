#pragma once

#include <functional>
#include <vector>

#include "symalg/laurent.hpp"

namespace nehari {

/// Samples of a matrix symbol at the N-th roots of unity, sample j taken at
/// ζ_j = exp(2πij/N). Quadrature weight is 1/N.
struct GridSymbol {
  int rows = 1;
  int cols = 1;
  std::vector<CMatrix> samples;

  int gridSize() const { return static_cast<int>(samples.size()); }
  bool isScalar() const { return rows == 1 && cols == 1; }
  Complex scalarAt(int j) const { return samples[static_cast<size_t>(j)](0, 0); }
};

/// DFT bridge: coefficient c_p sits at index p mod N.
std::vector<Complex> samplesToCoefficients(const std::vector<Complex>& samples);
std::vector<Complex> coefficientsToSamples(const std::vector<Complex>& coefficients);

/// Smallest alias-free power-of-two grid for powers in [lo, hi], at least `minimum`.
int gridSizeFor(int lo, int hi, int minimum = kDefaultGridSize);

GridSymbol toGrid(const LaurentMatrix& symbol, int gridSize);
LaurentMatrix fromGrid(const GridSymbol& grid, int lo, int hi);
GridSymbol sampleGrid(const std::function<CMatrix(Complex)>& f, int rows, int cols, int gridSize);

GridSymbol pointwiseProduct(const GridSymbol& a, const GridSymbol& b);
GridSymbol determinant(const GridSymbol& grid);

/// Winding number about 0 of a scalar symbol. Increments of the principal
/// argument must stay below π/2; otherwise the grid is doubled (trigonometric
/// interpolation for GridSymbol, resampling for callables) up to kMaxGridSize.
int windingNumber(const GridSymbol& scalar);
int windingNumber(const std::function<Complex(Complex)>& f, int initialGridSize = 256);
int windingNumber(const LaurentMatrix& scalar);

double supNorm(const GridSymbol& grid);
double supNorm(const LaurentMatrix& symbol, int gridSize = 0);
/// Per-sample singular values, descending.
std::vector<RVector> pointwiseSingularValues(const GridSymbol& grid);

/// Grid L² inner product ⟨f, g⟩ = mean_j g(ζ_j)* f(ζ_j) for column symbols.
Complex innerProduct(const GridSymbol& f, const GridSymbol& g);
double l2Norm(const GridSymbol& f);

}  // namespace nehari
