#pragma once

#include <vector>

#include "symalg/grid.hpp"
#include "symalg/rational.hpp"

namespace nehari {

/// Model space K_θ = H² ⊖ θH² of a finite Blaschke product θ with zeros
/// `nodes`, carried with its Takenaka–Malmquist orthonormal basis
///
///   φ_j = sqrt(1 − |λ_j|²) / (1 − λ̄_j z) · Π_{i<j} b_{λ_i}.
///
/// With all nodes at 0 this is span{1, z, …, z^(d−1)} with φ_j = z^j.
class ModelSpace {
 public:
  ModelSpace() = default;
  explicit ModelSpace(std::vector<Complex> nodes);

  /// Zeros of θ = poles in the open disc of the symbol (origin first).
  static ModelSpace forPoles(const RationalMatrix& symbol);

  int dimension() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Complex>& nodes() const { return nodes_; }
  bool isPolynomial() const;

  /// gridSize × d matrix of basis values φ_j(ζ_t).
  CMatrix samples(int gridSize) const;
  /// Σ_{j,b} x(j·n + b) φ_j e_b as an n×1 rational column.
  RationalMatrix combination(const CVector& x, int n) const;
  /// Coordinates ⟨f, φ_j e_b⟩ of a sampled n×1 column (orthogonal projection).
  CVector coordinates(const GridSymbol& f) const;

 private:
  std::vector<Complex> nodes_;
};

}  // namespace nehari
