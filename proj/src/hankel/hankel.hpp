#pragma once

#include <vector>

#include "hankel/model_space.hpp"
#include "symalg/laurent.hpp"
#include "symalg/rational.hpp"

namespace nehari {

/// Matrix of H_Φ between K_θ ⊗ Cⁿ and J(K_θ) ⊗ Cᵐ, θ carrying the poles of Φ
/// in the disc. Entry [(i,a),(j,b)] = ∫ Φ_ab φ_j φ_i ζ dm. For a Laurent
/// symbol with lo = −N this is the block Hankel matrix with block (i, j) =
/// Φ̂(−i−j−1), 0 ≤ i, j < N.
struct BlockHankelMatrix {
  int rows = 1;
  int cols = 1;
  ModelSpace space;
  CMatrix matrix;

  int depth() const { return space.dimension(); }
};

BlockHankelMatrix buildHankel(const LaurentMatrix& phi);
BlockHankelMatrix buildHankel(const RationalMatrix& phi, int gridSize = kDefaultGridSize);

/// Singular values of the active block, descending. Values below 1e-10·s₀
/// are snapped to 0; everything past the active block is 0 as well.
struct SingularData {
  std::vector<double> values;
  std::vector<int> cluster;  // cluster id of each active value

  double value(int j) const;
  int rank() const;
  int clusterBegin(int k) const;
  /// Size of the cluster containing s_k; −1 when s_k = 0 (infinite).
  int multiplicity(int k) const;
  /// s_k < s_{k−1} beyond the cluster radius; vacuous at k = 0.
  bool hasGap(int k) const;
};

SingularData singularValues(const BlockHankelMatrix& h);
int multiplicity(const BlockHankelMatrix& h, int k);

/// Orthonormal basis of the eigenspace of H*H for s_k², stored as
/// coordinates in h.space ⊗ Cⁿ. The basis is canonical: Gram–Schmidt over
/// the columns of the spectral projector in fixed order.
struct SchmidtSubspace {
  int level = 0;
  double value = 0.0;
  int rows = 1;  // n: length of each vector function
  ModelSpace space;
  CMatrix basis;

  int dimension() const { return static_cast<int>(basis.cols()); }
  RationalMatrix function(int i) const;
  /// Same as function(i) when space.isPolynomial().
  LaurentMatrix polynomial(int i) const;
};

SchmidtSubspace schmidtSpace(const BlockHankelMatrix& h, int k);
SchmidtSubspace schmidtSpace(const LaurentMatrix& phi, int k);

/// P₋(Φf), exact for Laurent f; rational f enters via its Taylor coefficients.
LaurentMatrix applyHankel(const LaurentMatrix& phi, const LaurentMatrix& f);
LaurentMatrix applyHankel(const LaurentMatrix& phi, const RationalMatrix& f, int gridSize = kDefaultGridSize);
/// H*_Φ g = P₊(Φ* g) for antianalytic g.
LaurentMatrix applyHankelAdjoint(const LaurentMatrix& phi, const LaurentMatrix& g);

/// J g = z̄ · conj(g).
LaurentMatrix applyFlip(const LaurentMatrix& g);
RationalMatrix applyFlip(const RationalMatrix& g);

/// Block (i, j) = Ψ̂(i − j), 0 ≤ i, j ≤ D.
CMatrix toeplitzTruncation(const LaurentMatrix& psi, int degree);

}  // namespace nehari
