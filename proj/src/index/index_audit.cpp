#include "index/index_audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hankel/hankel.hpp"

namespace nehari {

namespace {

constexpr double kSingularValueMatch = 1e-8;
constexpr double kNullTolerance = 1e-7;
constexpr double kNormIdentityTolerance = 1e-7;
constexpr double kRouteTolerance = 1e-6;
constexpr double kContainmentTolerance = 1e-7;

std::string sci(double x) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << x;
  return os.str();
}

// Orthonormal coordinates: columns x with S·x orthonormal (S = samples).
CMatrix orthonormalCoordinates(const CMatrix& samples) {
  const Eigen::Index r = samples.cols();
  if (r == 0) return CMatrix(0, 0);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(samples.adjoint() * samples);
  const double top = eig.eigenvalues().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < r; ++i)
    if (eig.eigenvalues()(i) > 1e-20 + 1e-14 * top) keep.push_back(i);
  CMatrix w(r, static_cast<Eigen::Index>(keep.size()));
  for (size_t c = 0; c < keep.size(); ++c)
    w.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(keep[c]) / std::sqrt(eig.eigenvalues()(keep[c]));
  return w;
}

// Right null vectors of m (singular values ≤ tol), m having `cols` columns.
CMatrix nullSpace(const CMatrix& m, Eigen::Index cols, double tol) {
  if (cols == 0) return CMatrix(0, 0);
  if (m.rows() == 0) return CMatrix::Identity(cols, cols);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const RVector s = svd.singularValues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < cols; ++j)
    if (j >= s.size() || s(j) <= tol) keep.push_back(j);
  CMatrix out(cols, static_cast<Eigen::Index>(keep.size()));
  for (size_t c = 0; c < keep.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = svd.matrixV().col(keep[c]);
  return out;
}

RationalMatrix combine(const std::vector<RationalMatrix>& elements, const CVector& coeffs) {
  RationalMatrix sum(LaurentMatrix(elements.front().rows(), 1));
  for (size_t i = 0; i < elements.size(); ++i) {
    const Complex c = coeffs(static_cast<Eigen::Index>(i));
    if (std::abs(c) > 1e-15) sum = sum + elements[i].scaled(c);
  }
  return sum;
}

std::vector<RationalMatrix> combineAll(const std::vector<RationalMatrix>& elements, const CMatrix& coords) {
  std::vector<RationalMatrix> out;
  for (Eigen::Index c = 0; c < coords.cols(); ++c) out.push_back(combine(elements, coords.col(c)));
  return out;
}

std::vector<RationalMatrix> multiplyAll(const RationalMatrix& b, const std::vector<RationalMatrix>& elements) {
  std::vector<RationalMatrix> out;
  for (const RationalMatrix& h : elements) out.push_back(b * h);
  return out;
}

std::vector<RationalMatrix> gBasis(const HankelKernelData& data) {
  std::vector<RationalMatrix> out;
  for (int a = 0; a < data.rank; ++a) out.push_back(data.g(a));
  return out;
}

double coefficientNorm(const LaurentMatrix& f) {
  double s = 0.0;
  for (const auto& [p, m] : f.coefficients()) s += m.squaredNorm();
  return std::sqrt(s);
}

AuditCheck notApplicable(const std::string& name, const std::string& why) {
  return {name, CheckStatus::NotApplicable, why};
}

std::string versus(int lhs, int rhs) { return std::to_string(lhs) + " vs " + std::to_string(rhs); }

}  // namespace

CMatrix sampleColumns(const std::vector<RationalMatrix>& columns, int gridSize) {
  if (columns.empty()) return CMatrix(0, 0);
  const int n = columns.front().rows();
  CMatrix out(static_cast<Eigen::Index>(n) * gridSize, static_cast<Eigen::Index>(columns.size()));
  const double w = 1.0 / std::sqrt(static_cast<double>(gridSize));
  for (size_t c = 0; c < columns.size(); ++c) {
    const GridSymbol g = columns[c].toGrid(gridSize);
    for (int j = 0; j < gridSize; ++j)
      out.block(static_cast<Eigen::Index>(j) * n, static_cast<Eigen::Index>(c), n, 1) =
          g.samples[static_cast<size_t>(j)].col(0) * w;
  }
  return out;
}

double subspaceResidual(const CMatrix& a, const CMatrix& b) {
  if (a.cols() == 0) return 0.0;
  CMatrix basis(a.rows(), 0);
  if (b.cols() > 0) {
    Eigen::JacobiSVD<CMatrix> svd(b, Eigen::ComputeThinU);
    const RVector s = svd.singularValues();
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > 1e-10 * s(0)) ++r;
    basis = svd.matrixU().leftCols(r);
  }
  double worst = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    const double norm = a.col(c).norm();
    if (norm == 0.0) continue;
    const CVector rest = a.col(c) - basis * (basis.adjoint() * a.col(c));
    worst = std::max(worst, rest.norm() / norm);
  }
  return worst;
}

UFactorization buildU(const LaurentMatrix& phi, const RationalMatrix& q, const Settings& settings) {
  require(phi.rows() == q.rows() && phi.cols() == q.cols(), "symbol and candidate differ in shape");
  UFactorization f;
  f.carrierQ = poleCarrier(q, settings.gridSize);
  f.carrierQt = poleCarrier(q.transpose(), settings.gridSize);
  f.B = f.carrierQ.product.toRational();
  f.Lambda = f.carrierQt.product.toRational();
  const RationalMatrix psi = RationalMatrix(phi) - q;
  f.U = f.Lambda.transpose() * psi * f.B;

  const std::vector<RVector> a = pointwiseSingularValues(psi.toGrid(settings.gridSize));
  const std::vector<RVector> b = pointwiseSingularValues(f.U.toGrid(settings.gridSize));
  for (size_t j = 0; j < a.size(); ++j)
    f.singularValueResidual = std::max(f.singularValueResidual, (a[j] - b[j]).cwiseAbs().maxCoeff());
  if (f.singularValueResidual > kSingularValueMatch)
    fail(ErrorKind::InternalInconsistency,
         "pointwise singular values of U and Phi - Q differ by " + sci(f.singularValueResidual));
  return f;
}

ESpaces computeESpaces(const LaurentMatrix& phi, const RationalMatrix& q, const Settings& settings) {
  settings.validate();
  const int grid = settings.gridSize;
  ESpaces e;
  e.factors = buildU(phi, q, settings);
  const RationalMatrix psi = RationalMatrix(phi) - q;

  // Route 1: ker T_{Φ−Q} ∩ (g-basis)^⊥.
  e.kernel = kernelToeplitzExact(psi, grid);
  const CMatrix kernelSamples = sampleColumns(e.kernel.elements, grid);
  const CMatrix w = orthonormalCoordinates(kernelSamples);
  if (w.cols() != e.kernel.dimension())
    fail(ErrorKind::InternalInconsistency, "Toeplitz kernel basis is numerically dependent");
  if (e.kernel.dimension() > 0) {
    const CMatrix gSamples = sampleColumns(gBasis(e.factors.carrierQ), grid);
    const CMatrix constraints = gSamples.cols() > 0 ? CMatrix(gSamples.adjoint() * kernelSamples * w)
                                                    : CMatrix(0, w.cols());
    const CMatrix coords = w * nullSpace(constraints, w.cols(), kNullTolerance);
    e.plain = combineAll(e.kernel.elements, coords);
  }

  // Route 2: B · ker T_{(Φ−Q)B}, checked against the defining norm identity.
  const ToeplitzKernelBasis product = kernelToeplitzExact(psi * e.factors.B, grid);
  e.plainByProduct = multiplyAll(e.factors.B, product.elements);
  for (const RationalMatrix& xi : e.plainByProduct) {
    const double hankelNorm = coefficientNorm(applyHankel(phi, xi, grid));
    const double symbolNorm = l2Norm((psi * xi).toGrid(grid));
    const double gap = std::abs(hankelNorm - symbolNorm) / std::max(1e-300, l2Norm(xi.toGrid(grid)));
    e.normResidual = std::max(e.normResidual, gap);
  }
  if (e.normResidual > kNormIdentityTolerance)
    fail(ErrorKind::InternalInconsistency,
         "B ker T_{(Phi-Q)B} violates ||H_Phi xi|| = ||(Phi-Q) xi|| by " + sci(e.normResidual));
  if (e.plainByProduct.size() != e.plain.size())
    fail(ErrorKind::InternalInconsistency, "E_plain routes disagree: dim " + std::to_string(e.plain.size()) +
                                               " (kernel intersection) vs " +
                                               std::to_string(e.plainByProduct.size()) + " (B ker T_{(Phi-Q)B})");

  const CMatrix plainSamples = sampleColumns(e.plain, grid);
  const CMatrix productSamples = sampleColumns(e.plainByProduct, grid);
  e.routeResidual = std::max(subspaceResidual(plainSamples, productSamples),
                             subspaceResidual(productSamples, plainSamples));
  if (e.routeResidual > kRouteTolerance)
    fail(ErrorKind::InternalInconsistency, "E_plain routes span different spaces (residual " + sci(e.routeResidual) + ")");

  // E_J = B · ker T_U.
  const ToeplitzKernelBasis ku = kernelToeplitzExact(e.factors.U, grid);
  e.j = multiplyAll(e.factors.B, ku.elements);
  const CMatrix jSamples = sampleColumns(e.j, grid);
  e.jInPlain = subspaceResidual(jSamples, plainSamples);
  e.plainInJ = subspaceResidual(plainSamples, jSamples);
  return e;
}

VeryBadReport veryBadAudit(const RationalMatrix& psi, const Settings& settings) {
  settings.validate();
  require(psi.rows() == psi.cols(), "very-bad audit needs a square symbol");
  VeryBadReport r;
  r.n = psi.rows();
  r.values = superoptValues(psi, settings);
  const std::vector<double> levels = distinctLevels(r.values.t);

  const FredholmCheck fc = fredholmCheck(psi, settings.gridSize);
  std::string why;
  std::optional<ToeplitzKernelBasis> kernel;
  if (!fc.fredholm) {
    why = "T_Psi is not Fredholm (det margin " + sci(fc.margin) + ")";
  } else {
    try {
      kernel = kernelToeplitzExact(psi, settings.gridSize);
      r.kernelDimension = kernel->dimension();
      r.shiftedCokernel = cokernelDim(psi.shifted(1), settings.gridSize);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IllConditioned) throw;
      why = std::string("ill-conditioned: ") + e.what();
    }
  }

  if (!kernel) {
    r.checks = {notApplicable("span", why), notApplicable("kernel-dimension", why), notApplicable("dense-range", why)};
    return r;
  }

  if (levels.empty()) {
    r.checks.push_back(notApplicable("span", "no nonzero pointwise singular values"));
  } else {
    const double tol = std::max(1e-8, 10.0 * r.values.maxDeviation);
    bool ok = true;
    std::ostringstream details;
    for (double sigma : levels) {
      r.spans.push_back(spanCriterion(psi, *kernel, sigma, tol));
      const PointwiseSchmidtSpan& s = r.spans.back();
      ok = ok && s.passed;
      details << "sigma " << sci(sigma) << ": " << (s.passed ? "pass" : "fail") << " (" << s.witnessCount
              << " witnesses, expected dim " << s.expected.front() << ", observed " << s.observed.front() << "); ";
    }
    r.checks.push_back({"span", statusOf(ok), details.str()});
  }
  r.checks.push_back({"kernel-dimension", statusOf(*r.kernelDimension >= r.n),
                      "dim ker T_Psi = " + std::to_string(*r.kernelDimension) + ", n = " + std::to_string(r.n)});
  r.checks.push_back({"dense-range", statusOf(*r.shiftedCokernel == 0),
                      "dim coker T_{z Psi} = " + std::to_string(*r.shiftedCokernel)});
  return r;
}

SchmidtCharacterization schmidtCharacterizationAudit(const LaurentMatrix& phi, const RationalMatrix& q, int k,
                                                     const ESpaces& spaces, const Settings& settings) {
  const int grid = settings.gridSize;
  const SingularData sd = singularValues(buildHankel(phi));
  SchmidtCharacterization out;
  out.k = k;
  out.level = sd.value(k);
  out.mu = sd.multiplicity(k);
  out.dimPlain = spaces.dimPlain();
  if (out.level <= 0.0) {
    out.checks = {notApplicable("dim-R-vs-mu", "s_k = 0"), notApplicable("R-vs-schmidt-space", "s_k = 0")};
    return out;
  }
  const double s2 = out.level * out.level;

  std::vector<LaurentMatrix> images;
  for (const RationalMatrix& xi : spaces.plain) images.push_back(applyHankel(phi, xi, grid));

  const CMatrix plainSamples = sampleColumns(spaces.plain, grid);
  const CMatrix w = orthonormalCoordinates(plainSamples);
  const Eigen::Index r = w.cols();

  // Norm attainment ‖H_Φξ‖ = s_k‖ξ‖ on E_plain (where ‖H_Φξ‖ ≤ s_k‖ξ‖ always).
  CMatrix gram = CMatrix::Zero(static_cast<Eigen::Index>(images.size()), static_cast<Eigen::Index>(images.size()));
  for (size_t a = 0; a < images.size(); ++a)
    for (size_t b = 0; b < images.size(); ++b) {
      Complex sum = 0.0;
      for (const auto& [p, m] : images[b].coefficients()) sum += (images[a].coefficient(p).adjoint() * m)(0, 0);
      gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
    }
  CMatrix attain(r, 0);
  if (r > 0) {
    const CMatrix form = s2 * CMatrix::Identity(r, r) - w.adjoint() * gram * w;
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(form);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < r; ++i)
      if (std::abs(eig.eigenvalues()(i)) <= kNullTolerance * std::max(1.0, s2)) keep.push_back(i);
    attain.resize(r, static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c) attain.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(keep[c]);
  }
  out.dimNormAttaining = static_cast<int>(attain.cols());

  // J H_Φ ξ ⟂ g'_β. J is antilinear, so the constraint is linear after conjugation.
  CMatrix coords = w * attain;
  const HankelKernelData& carrierQt = spaces.factors.carrierQt;
  if (carrierQt.rank > 0 && coords.cols() > 0) {
    CMatrix flip(carrierQt.rank, static_cast<Eigen::Index>(images.size()));
    for (int beta = 0; beta < carrierQt.rank; ++beta) {
      const GridSymbol g = carrierQt.g(beta).toGrid(grid);
      for (size_t i = 0; i < images.size(); ++i)
        flip(beta, static_cast<Eigen::Index>(i)) = std::conj(innerProduct(toGrid(applyFlip(images[i]), grid), g));
    }
    coords = coords * nullSpace(flip * coords, coords.cols(), kNullTolerance * std::max(1.0, out.level));
  }
  if (coords.cols() > 0) out.basis = combineAll(spaces.plain, coords);

  const SchmidtSubspace schmidt = schmidtSpace(phi, k);
  std::vector<RationalMatrix> schmidtColumns;
  for (int i = 0; i < schmidt.dimension(); ++i) schmidtColumns.push_back(RationalMatrix(schmidt.polynomial(i)));
  const CMatrix rSamples = sampleColumns(out.basis, grid);
  const CMatrix eSamples = sampleColumns(schmidtColumns, grid);
  out.rInSchmidt = out.basis.empty() ? 0.0 : subspaceResidual(rSamples, eSamples);
  out.schmidtInR = out.basis.empty() ? 1.0 : subspaceResidual(eSamples, rSamples);

  out.checks.push_back({"dim-R-vs-mu", statusOf(out.dimR() == out.mu),
                        "dim R = " + std::to_string(out.dimR()) + ", mu = " + std::to_string(out.mu) +
                            " (norm-attaining part of E_plain: " + std::to_string(out.dimNormAttaining) + ")"});
  const bool same = out.dimR() == out.mu && out.rInSchmidt <= kContainmentTolerance &&
                    out.schmidtInR <= kContainmentTolerance;
  out.checks.push_back({"R-vs-schmidt-space", statusOf(same),
                        "R in E_k residual " + sci(out.rInSchmidt) + ", E_k in R residual " + sci(out.schmidtInR)});
  (void)q;
  return out;
}

SchmidtCharacterization schmidtCharacterizationAudit(const LaurentMatrix& phi, const RationalMatrix& q, int k,
                                                     const Settings& settings) {
  const FredholmCheck fc = fredholmCheck(RationalMatrix(phi) - q, settings.gridSize);
  if (!fc.fredholm) {
    SchmidtCharacterization out;
    out.k = k;
    const std::string why = "T_{Phi-Q} is not Fredholm";
    out.checks = {notApplicable("dim-R-vs-mu", why), notApplicable("R-vs-schmidt-space", why)};
    return out;
  }
  return schmidtCharacterizationAudit(phi, q, k, computeESpaces(phi, q, settings), settings);
}

IndexAuditReport indexAudit(const LaurentMatrix& phi, const RationalMatrix& q, int k, const Settings& settings) {
  settings.validate();
  require(phi.rows() == phi.cols(), "index audit needs a square symbol");
  require(q.rows() == phi.rows() && q.cols() == phi.cols(), "symbol and candidate differ in shape");
  require(k >= 0, "k must be nonnegative");

  IndexAuditReport r;
  r.k = k;
  r.n = phi.rows();
  const SingularData sd = singularValues(buildHankel(phi));
  r.singularValues = sd.values;
  r.mu = sd.multiplicity(k);
  r.certificate = verifyCandidate(phi, q, k, settings);
  r.t = r.certificate.values.t;

  std::ostringstream pre;
  for (const AuditCheck& c : r.certificate.checks) pre << c.name << "=" << toString(c.status) << " ";
  r.checks.push_back({"superoptimal-candidate", statusOf(r.certificate.verdict), pre.str()});
  r.checks.push_back({"rank-H_Q", statusOf(r.certificate.membership.rank == k),
                      "rank H_Q = " + std::to_string(r.certificate.membership.rank) + ", k = " + std::to_string(k)});

  const RationalMatrix psi = RationalMatrix(phi) - q;
  const FredholmCheck fc = fredholmCheck(psi, settings.gridSize);
  std::string indexWhy;
  if (!fc.fredholm) {
    indexWhy = "T_{Phi-Q} is not Fredholm (det margin " + sci(fc.margin) + ")";
  } else {
    try {
      r.windingDet = windingOfDeterminant(psi);
      r.dimKer = kernelToeplitzExact(psi, settings.gridSize).dimension();
      r.dimCoker = cokernelDim(psi, settings.gridSize);
      r.ind = toeplitzIndex(psi, settings.gridSize);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IllConditioned) throw;
      indexWhy = std::string("ill-conditioned: ") + e.what();
      r.windingDet.reset();
      r.dimKer.reset();
      r.dimCoker.reset();
      r.ind.reset();
    }
  }
  const bool haveIndex = r.ind.has_value();

  if (haveIndex) {
    r.checks.push_back({"C1", statusOf(*r.ind == *r.dimKer && *r.dimCoker == 0),
                        "ind " + std::to_string(*r.ind) + ", dim ker " + std::to_string(*r.dimKer) + ", dim coker " +
                            std::to_string(*r.dimCoker)});
    r.checks.push_back({"C2", statusOf(*r.dimKer >= 2 * k + r.n),
                        "dim ker " + std::to_string(*r.dimKer) + " vs 2k + n = " + std::to_string(2 * k + r.n)});
  } else {
    r.checks.push_back(notApplicable("C1", indexWhy));
    r.checks.push_back(notApplicable("C2", indexWhy));
  }

  const double t0 = r.t.empty() ? 0.0 : r.t.front();
  const bool allNonzero = !r.t.empty() && r.t.back() > 1e-8 * (1.0 + t0);
  std::string eWhy;
  if (!haveIndex) eWhy = indexWhy;
  else if (!r.certificate.verdict) eWhy = "candidate is not certified superoptimal";
  else if (!allNonzero) eWhy = "not all superoptimal values are nonzero";

  std::optional<ESpaces> spaces;
  if (eWhy.empty()) {
    spaces = computeESpaces(phi, q, settings);
    r.dimEPlain = spaces->dimPlain();
    r.dimEJ = spaces->dimJ();
  }

  if (spaces) {
    r.checks.push_back({"C3", statusOf(*r.ind == *r.rhsPlain()), "ind vs 2k + dim E_plain: " + versus(*r.ind, *r.rhsPlain())});
    r.checks.push_back({"C4", statusOf(*r.ind == *r.rhsJ()), "ind vs 2k + dim E_J: " + versus(*r.ind, *r.rhsJ())});
  } else {
    r.checks.push_back(notApplicable("C3", eWhy));
    r.checks.push_back(notApplicable("C4", eWhy));
  }
  if (haveIndex && r.mu > 0)
    r.checks.push_back({"C5", statusOf(*r.ind == r.rhsMu()), "ind vs 2k + mu: " + versus(*r.ind, r.rhsMu())});
  else
    r.checks.push_back(notApplicable("C5", haveIndex ? "s_k = 0: mu is infinite" : indexWhy));

  const bool allEqual = !r.t.empty() && r.t.front() - r.t.back() <= 1e-6 * (1.0 + t0);
  if (!spaces)
    r.checks.push_back(notApplicable("C6", eWhy));
  else if (!allEqual)
    r.checks.push_back(notApplicable("C6", "superoptimal values are not all equal"));
  else
    r.checks.push_back({"C6", statusOf(*r.dimEJ == r.mu && *r.dimEPlain == r.mu),
                        "dim E_J " + std::to_string(*r.dimEJ) + ", dim E_plain " + std::to_string(*r.dimEPlain) +
                            ", mu " + std::to_string(r.mu)});

  if (spaces) {
    r.checks.push_back({"E_J-in-E_plain", statusOf(spaces->jInPlain <= kContainmentTolerance),
                        "residual " + sci(spaces->jInPlain) + "; E_plain in E_J residual " + sci(spaces->plainInJ)});
    r.checks.push_back({"E_plain-routes", CheckStatus::Pass,
                        "both routes give dim " + std::to_string(spaces->dimPlain()) + " (span residual " +
                            sci(spaces->routeResidual) + ", norm identity residual " + sci(spaces->normResidual) + ")"});
  } else {
    r.checks.push_back(notApplicable("E_J-in-E_plain", eWhy));
    r.checks.push_back(notApplicable("E_plain-routes", eWhy));
  }
  return r;
}

}  // namespace nehari
