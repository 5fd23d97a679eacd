#pragma once

#include <vector>

#include "symalg/grid.hpp"
#include "symalg/rational.hpp"

namespace nehari {

/// Exact basis of ker T_Ψ for a square rational symbol Ψ = N/d.
///
/// Outer denominator roots factor out (ker T_Ψ = d_out · ker T_{N/d_in}) and
/// inner ones only shift the symbol, so everything reduces to the Laurent
/// symbol Ψ' = z^(−a) N with depth D = −lo(Ψ'). With P = z^D Ψ', f lies in the
/// kernel iff P f = q for a vector polynomial q of degree < D and P⁻¹q is
/// analytic in the disc, i.e. adj(P) q ≡ 0 modulo the inner part of det P.
struct ToeplitzKernelBasis {
  int size = 1;
  int depth = 0;
  LaurentMatrix lifted;                // P
  Polynomial detInside;                // monic, roots of det P inside the disc
  std::vector<Complex> outerRoots;     // d_out
  CMatrix qBasis;                      // columns: stacked coefficients of q
  std::vector<RationalMatrix> elements;  // f = d_out · P⁻¹ q, unit L² norm
  double planeResidual = 0.0;          // max grid |P f − q| (relative)
  double projectionResidual = 0.0;     // max |P₊(Ψ f)| coefficient

  int dimension() const { return static_cast<int>(elements.size()); }
};

struct FredholmCheck {
  bool fredholm = false;
  double margin = 0.0;  // min |det Ψ| / max |det Ψ| over the grid
};

FredholmCheck fredholmCheck(const RationalMatrix& psi, int gridSize = kDefaultGridSize);

/// Throws IllConditioned if det P has roots within 1e-6 of the circle and
/// InternalInconsistency if a basis element fails its grid cross-checks.
ToeplitzKernelBasis kernelToeplitzExact(const RationalMatrix& psi, int gridSize = kDefaultGridSize);

/// dim ker T_Ψ* = dim ker T_{Ψ*}.
int cokernelDim(const RationalMatrix& psi, int gridSize = kDefaultGridSize);

int windingOfDeterminant(const RationalMatrix& psi);

/// −winding(det Ψ), asserted equal to dim ker − dim coker.
int toeplitzIndex(const RationalMatrix& psi, int gridSize = kDefaultGridSize);

}  // namespace nehari
