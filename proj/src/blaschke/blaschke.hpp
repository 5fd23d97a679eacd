#pragma once

#include <vector>

#include "hankel/model_space.hpp"
#include "symalg/rational.hpp"

namespace nehari {

/// b_λ P + (I − P), P the orthogonal projection onto span(range).
struct BlaschkeFactor {
  Complex lambda;
  CMatrix range;  // orthonormal columns
};

/// B = U · B₁ B₂ ⋯ B_m, U a constant unitary.
class BlaschkePotapovProduct {
 public:
  BlaschkePotapovProduct() : BlaschkePotapovProduct(1) {}
  explicit BlaschkePotapovProduct(int size);
  BlaschkePotapovProduct(CMatrix unitaryFront, std::vector<BlaschkeFactor> factors);

  int size() const { return static_cast<int>(front_.rows()); }
  const CMatrix& unitaryFront() const { return front_; }
  const std::vector<BlaschkeFactor>& factors() const { return factors_; }
  /// Σ rank P_j.
  int degree() const;

  CMatrix evaluate(Complex point) const;
  CMatrix evaluateAt(Complex z) const;
  RationalMatrix toRational() const;

 private:
  CMatrix front_;
  std::vector<BlaschkeFactor> factors_;
};

int degree(const BlaschkePotapovProduct& b);

/// ker H_Q = B·H²(Cⁿ) together with an orthonormal basis g₁…g_r of
/// range(H_Q*) = H² ⊖ ker H_Q (coordinates in `space` ⊗ Cⁿ).
struct HankelKernelData {
  int rank = 0;
  int size = 1;
  ModelSpace space;
  CMatrix gBasis;
  BlaschkePotapovProduct product;
  double residual = 0.0;  // max |negative Fourier coefficient of Q·B|

  RationalMatrix g(int alpha) const { return space.combination(gBasis.col(alpha), size); }
};

/// Minimal Blaschke–Potapov B with Q·B analytic, built one rank-one factor at
/// a time from the backward-shift invariant subspace range(H_Q*). Poles are
/// peeled by ascending modulus, ties by ascending argument.
HankelKernelData poleCarrier(const RationalMatrix& q, int gridSize = kDefaultGridSize);

struct MembershipCertificate {
  bool member = false;
  int k = 0;
  int rank = 0;
  double residual = 0.0;
  BlaschkePotapovProduct product;
};

/// Q ∈ H∞_(k) iff rank H_Q ≤ k; the certificate carries B of degree rank H_Q.
MembershipCertificate membership(const RationalMatrix& q, int k, int gridSize = kDefaultGridSize);

/// f ∈ ker H_Q via ⟨f, g_α⟩ = 0 (relative 1e-8 of ‖f‖₂), by grid quadrature.
bool kernelMembershipConditions(const HankelKernelData& data, const RationalMatrix& f,
                                int gridSize = kDefaultGridSize);
/// The largest |⟨f, g_α⟩| / ‖f‖₂.
double kernelMembershipResidual(const HankelKernelData& data, const RationalMatrix& f,
                                int gridSize = kDefaultGridSize);

}  // namespace nehari
