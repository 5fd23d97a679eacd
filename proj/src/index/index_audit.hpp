#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blaschke/blaschke.hpp"
#include "index/toeplitz_kernel.hpp"
#include "superopt/superopt.hpp"

namespace nehari {

/// B and Λ carry the poles of Q and Qᵗ (ker H_Q = B·H², ker H_{Qᵗ} = Λ·H²);
/// U = Λᵗ (Φ − Q) B has the same pointwise singular values as Φ − Q.
struct UFactorization {
  HankelKernelData carrierQ;
  HankelKernelData carrierQt;
  RationalMatrix B;
  RationalMatrix Lambda;
  RationalMatrix U;
  double singularValueResidual = 0.0;
};

/// Throws InternalInconsistency when the pointwise singular values of U and
/// Φ − Q differ by more than 1e-8.
UFactorization buildU(const LaurentMatrix& phi, const RationalMatrix& q, const Settings& settings = defaultSettings());

/// E_plain = ker H_Q ∩ ker T_{Φ−Q}, computed twice:
///   route 1: ker T_{Φ−Q} cut down by ⟨f, g_α⟩ = 0 for the g-basis of poleCarrier(Q);
///   route 2: B · ker T_{(Φ−Q)B}, each element checked against ‖H_Φξ‖ = ‖(Φ−Q)ξ‖.
/// E_J = B · ker T_U.
struct ESpaces {
  UFactorization factors;
  ToeplitzKernelBasis kernel;               // ker T_{Φ−Q}
  std::vector<RationalMatrix> plain;        // route 1 basis
  std::vector<RationalMatrix> plainByProduct;  // route 2 basis
  std::vector<RationalMatrix> j;            // E_J basis
  double routeResidual = 0.0;   // mutual containment of the two E_plain bases
  double normResidual = 0.0;    // worst relative |‖H_Φξ‖ − ‖(Φ−Q)ξ‖| over route 2
  double jInPlain = 0.0;        // E_J ⊆ E_plain residual
  double plainInJ = 0.0;        // E_plain ⊆ E_J residual (nonzero when they differ)
  int dimPlain() const { return static_cast<int>(plain.size()); }
  int dimJ() const { return static_cast<int>(j.size()); }
};

/// Requires T_{Φ−Q} Fredholm; the caller is responsible for having verified
/// Q. Throws InternalInconsistency when the two E_plain routes disagree.
ESpaces computeESpaces(const LaurentMatrix& phi, const RationalMatrix& q, const Settings& settings = defaultSettings());

/// Pointwise span test at every distinct nonzero t_j(Ψ), dim ker T_Ψ ≥ n and
/// dense range of T_{zΨ} (trivial cokernel).
struct VeryBadReport {
  int n = 0;
  SuperoptValues values;
  std::optional<int> kernelDimension;
  std::optional<int> shiftedCokernel;
  std::vector<PointwiseSchmidtSpan> spans;
  std::vector<AuditCheck> checks;
};

VeryBadReport veryBadAudit(const RationalMatrix& psi, const Settings& settings = defaultSettings());

/// R = {ξ ∈ ker H_Q : ‖H_{Φ−Q}ξ‖ = s_k‖ξ‖, J H_Φ ξ ∈ ker H_{Qᵗ}} against the
/// Schmidt space E_k(Φ).
struct SchmidtCharacterization {
  int k = 0;
  double level = 0.0;
  int mu = 0;
  int dimPlain = 0;
  int dimNormAttaining = 0;
  std::vector<RationalMatrix> basis;  // R
  double rInSchmidt = 0.0;
  double schmidtInR = 0.0;
  std::vector<AuditCheck> checks;
  int dimR() const { return static_cast<int>(basis.size()); }
};

SchmidtCharacterization schmidtCharacterizationAudit(const LaurentMatrix& phi, const RationalMatrix& q, int k,
                                                     const Settings& settings = defaultSettings());
/// Same, reusing E-spaces already computed for (Φ, Q).
SchmidtCharacterization schmidtCharacterizationAudit(const LaurentMatrix& phi, const RationalMatrix& q, int k,
                                                     const ESpaces& spaces,
                                                     const Settings& settings = defaultSettings());

struct IndexAuditReport {
  int k = 0;
  int n = 0;
  std::vector<double> singularValues;
  int mu = 0;  // −1 when s_k = 0
  std::vector<double> t;
  std::optional<int> windingDet;
  std::optional<int> ind;
  std::optional<int> dimKer;
  std::optional<int> dimCoker;
  std::optional<int> dimEPlain;
  std::optional<int> dimEJ;
  SuperoptCertificate certificate;
  std::vector<AuditCheck> checks;

  std::optional<int> rhsPlain() const { return dimEPlain ? std::optional<int>(2 * k + *dimEPlain) : std::nullopt; }
  std::optional<int> rhsJ() const { return dimEJ ? std::optional<int>(2 * k + *dimEJ) : std::nullopt; }
  int rhsMu() const { return 2 * k + mu; }
};

/// Never fails on an audit check; only internal inconsistencies (and invalid
/// input / inadmissible k) throw.
IndexAuditReport indexAudit(const LaurentMatrix& phi, const RationalMatrix& q, int k,
                            const Settings& settings = defaultSettings());

/// Mutual-containment helper: max over columns of A of the relative distance
/// to span(B). Columns are stacked grid samples.
double subspaceResidual(const CMatrix& a, const CMatrix& b);
/// Columns of stacked samples (n·N rows, scaled by 1/√N) of column symbols.
CMatrix sampleColumns(const std::vector<RationalMatrix>& columns, int gridSize);

}  // namespace nehari
