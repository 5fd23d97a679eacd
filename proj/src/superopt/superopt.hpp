#pragma once

#include <string>
#include <vector>

#include "blaschke/blaschke.hpp"
#include "index/toeplitz_kernel.hpp"
#include "superopt/certificate.hpp"
#include "symalg/fejer_riesz.hpp"
#include "symalg/settings.hpp"

namespace nehari {

/// t_j = grid mean of the j-th pointwise singular value of Ψ; deviation[j] is
/// the largest departure from that mean.
struct SuperoptValues {
  std::vector<double> t;
  std::vector<double> deviation;
  double maxDeviation = 0.0;
  bool constant = false;  // maxDeviation ≤ constancyTolerance · (1 + t₀)
};

SuperoptValues superoptValues(const RationalMatrix& psi, const Settings& settings = defaultSettings());

/// Distinct nonzero entries of t (descending), merged at 1e-6·(1 + t₀).
std::vector<double> distinctLevels(const std::vector<double>& t);

/// Pointwise span test at level σ: the kernel elements f whose values avoid
/// the singular directions of Ψ below σ (the witnesses) must, at every probe
/// point, span a space of dimension #{s_j(ζ) ≥ σ}.
struct PointwiseSchmidtSpan {
  double sigma = 0.0;
  int kernelDimension = 0;
  int witnessCount = 0;
  std::vector<Complex> probes;
  std::vector<int> expected;
  std::vector<int> observed;
  bool passed = false;
};

PointwiseSchmidtSpan spanCriterion(const RationalMatrix& psi, const ToeplitzKernelBasis& kernel, double sigma,
                                   double tolerance = 1e-8);
/// Computes ker T_Ψ itself. Throws as kernelToeplitzExact does.
PointwiseSchmidtSpan spanCriterion(const RationalMatrix& psi, double sigma,
                                   const Settings& settings = defaultSettings());

struct SuperoptCertificate {
  int k = 0;
  double level = 0.0;  // s_k
  double supNorm = 0.0;
  SuperoptValues values;
  MembershipCertificate membership;
  std::vector<PointwiseSchmidtSpan> spans;
  std::vector<AuditCheck> checks;  // membership, norm, constancy, span
  bool verdict = false;
};

/// Checks that Q is a superoptimal approximant of Φ in H∞_(k): membership,
/// ‖Φ − Q‖∞ = s_k, constant pointwise singular values, and the span criterion
/// (not-applicable when T_{Φ−Q} is not Fredholm or is ill-conditioned).
/// Throws NotKAdmissible when k ≥ 1 and s_k is not separated from s_(k−1).
SuperoptCertificate verifyCandidate(const LaurentMatrix& phi, const RationalMatrix& q, int k,
                                    const Settings& settings = defaultSettings());

/// [v, J·conj(v)] with J = [[0, −1], [1, 0]], for an analytic 2×1 column v
/// with ‖v(ζ)‖ = 1 on the circle. The result is unitary on the circle with
/// determinant 1.
RationalMatrix thematicComplete2x2(const RationalMatrix& v, const Settings& settings = defaultSettings());

/// Splits an analytic polynomial column v = θ·v' where θ is the Blaschke
/// product over the zeros in the open disc common to every entry.
struct InnerOuterSplit {
  std::vector<Complex> zeros;
  LaurentMatrix outer;  // v'
  RationalScalar inner;  // θ
};
InnerOuterSplit splitCommonInner(const LaurentMatrix& v);

struct PyAttempt {
  int budget = 0;
  bool passed = false;
  std::string outcome;
};

/// Record of the two-step 2×2 construction. With ξ = θ_ξ h_ξ ξ_i, η = θ_η h_η η_i
/// (inner θ, outer h, pointwise unit ξ_i, η_i):
///   V = [ξ_i, J·conj(ξ_i)],  W = [η_i, J·conj(η_i)],
///   Φ − Q = conj(W) · diag(s·u₀, e') · V*,
/// where e' is the best-approximation error of ψ' = (Wᵗ Φ V)₂₂ with `budget` poles.
struct PyConstruction {
  int k = 0;
  double s = 0.0;
  LaurentMatrix xi;
  LaurentMatrix eta;
  InnerOuterSplit xiSplit;
  InnerOuterSplit etaSplit;
  Polynomial hXi;
  Polynomial hEta;
  RationalMatrix V;
  RationalMatrix W;
  RationalScalar u0;
  RationalScalar psiPrime;
  RationalScalar errorPrime;
  int budget = 0;
  RationalMatrix q;
  SuperoptCertificate certificate;
  std::vector<PyAttempt> attempts;
  double factorizationResidual = 0.0;  // grid max ‖conj(W) D V* − (Φ − Q)‖
  double unitarityResidual = 0.0;      // grid max of ‖V*V − I‖, ‖W*W − I‖
};

/// Throws ConstructionFailure (listing every attempt) when no budget yields a
/// certified candidate; NotKAdmissible / DegenerateLevel come from the level.
PyConstruction pyConstruct2x2(const LaurentMatrix& phi, int k, const Settings& settings = defaultSettings());

}  // namespace nehari
