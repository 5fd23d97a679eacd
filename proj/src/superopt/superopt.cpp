#include "superopt/superopt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aak/aak.hpp"
#include "hankel/hankel.hpp"

namespace nehari {

namespace {

constexpr int kLeakGrid = 256;
constexpr int kProbeCount = 16;
constexpr double kProbeOffset = 0.37;
constexpr double kWitnessTolerance = 1e-9;
constexpr double kProbeRankTolerance = 1e-7;
constexpr double kInnerMatch = 1e-6;

std::string formatDouble(double x) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << x;
  return os.str();
}

Complex probePoint(int p) {
  return std::polar(1.0, 2.0 * kPi * (static_cast<double>(p) + kProbeOffset) / kProbeCount);
}

// Right singular vectors of m with singular value below `below`.
CMatrix smallDirections(const CMatrix& m, double below) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const RVector s = svd.singularValues();
  const CMatrix& v = svd.matrixV();
  std::vector<int> keep;
  for (int j = 0; j < v.cols(); ++j) {
    const double sj = j < s.size() ? s(j) : 0.0;
    if (sj < below) keep.push_back(j);
  }
  CMatrix out(v.rows(), static_cast<Eigen::Index>(keep.size()));
  for (size_t c = 0; c < keep.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = v.col(keep[c]);
  return out;
}

int countAtLeast(const CMatrix& m, double level) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const RVector s = svd.singularValues();
  int count = 0;
  for (Eigen::Index j = 0; j < s.size(); ++j)
    if (s(j) >= level) ++count;
  return count;
}

int numericRank(const CMatrix& m, double tol) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const RVector s = svd.singularValues();
  const double scale = std::max(1.0, s(0));
  int r = 0;
  for (Eigen::Index j = 0; j < s.size(); ++j)
    if (s(j) > tol * scale) ++r;
  return r;
}

// Columns f_i(ζ) of the kernel elements.
CMatrix elementValues(const std::vector<RationalMatrix>& elements, int n, Complex zeta) {
  CMatrix f(n, static_cast<Eigen::Index>(elements.size()));
  for (size_t i = 0; i < elements.size(); ++i) f.col(static_cast<Eigen::Index>(i)) = elements[i].evaluate(zeta).col(0);
  return f;
}

Polynomial columnEntry(const LaurentMatrix& v, int row) {
  std::vector<Complex> c(static_cast<size_t>(std::max(v.hi() + 1, 0)));
  for (const auto& [p, m] : v.coefficients()) c[static_cast<size_t>(p)] = m(row, 0);
  return Polynomial(std::move(c));
}

std::vector<Complex> insideRoots(const Polynomial& p) {
  std::vector<Complex> out;
  for (Complex r : p.roots())
    if (std::abs(r) < 1.0 - 1e-9) out.push_back(r);
  return out;
}

}  // namespace

SuperoptValues superoptValues(const RationalMatrix& psi, const Settings& settings) {
  settings.validate();
  const GridSymbol grid = psi.toGrid(settings.gridSize);
  const std::vector<RVector> sv = pointwiseSingularValues(grid);
  const int n = std::min(psi.rows(), psi.cols());
  SuperoptValues out;
  out.t.assign(static_cast<size_t>(n), 0.0);
  out.deviation.assign(static_cast<size_t>(n), 0.0);
  for (const RVector& s : sv)
    for (int j = 0; j < n; ++j) out.t[static_cast<size_t>(j)] += s(j);
  for (double& t : out.t) t /= static_cast<double>(sv.size());
  for (const RVector& s : sv)
    for (int j = 0; j < n; ++j)
      out.deviation[static_cast<size_t>(j)] =
          std::max(out.deviation[static_cast<size_t>(j)], std::abs(s(j) - out.t[static_cast<size_t>(j)]));
  for (double d : out.deviation) out.maxDeviation = std::max(out.maxDeviation, d);
  const double t0 = out.t.empty() ? 0.0 : out.t.front();
  out.constant = out.maxDeviation <= settings.constancyTolerance * (1.0 + t0);
  return out;
}

std::vector<double> distinctLevels(const std::vector<double>& t) {
  std::vector<double> out;
  if (t.empty()) return out;
  const double scale = 1.0 + t.front();
  for (double v : t) {
    if (v <= 1e-8 * scale) continue;
    if (!out.empty() && std::abs(out.back() - v) <= 1e-6 * scale) continue;
    out.push_back(v);
  }
  return out;
}

PointwiseSchmidtSpan spanCriterion(const RationalMatrix& psi, const ToeplitzKernelBasis& kernel, double sigma,
                                   double tolerance) {
  require(psi.rows() == psi.cols(), "span criterion needs a square symbol");
  const int n = psi.cols();
  const int r = kernel.dimension();
  PointwiseSchmidtSpan out;
  out.sigma = sigma;
  out.kernelDimension = r;

  // Witnesses: null space of the leak form relative to the L² Gram matrix.
  CMatrix witnesses(r, 0);
  if (r > 0) {
    CMatrix gram = CMatrix::Zero(r, r);
    CMatrix leak = CMatrix::Zero(r, r);
    for (int j = 0; j < kLeakGrid; ++j) {
      const Complex zeta = gridPoint(j, kLeakGrid);
      const CMatrix f = elementValues(kernel.elements, n, zeta);
      const CMatrix low = smallDirections(psi.evaluate(zeta), sigma - tolerance);
      const CMatrix projected = low.adjoint() * f;
      gram += f.adjoint() * f;
      leak += projected.adjoint() * projected;
    }
    gram /= static_cast<double>(kLeakGrid);
    leak /= static_cast<double>(kLeakGrid);

    Eigen::SelfAdjointEigenSolver<CMatrix> g(gram);
    const double gmax = g.eigenvalues().maxCoeff();
    std::vector<int> keep;
    for (int i = 0; i < r; ++i)
      if (g.eigenvalues()(i) > 1e-12 * gmax) keep.push_back(i);
    CMatrix whiten(r, static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c)
      whiten.col(static_cast<Eigen::Index>(c)) =
          g.eigenvectors().col(keep[c]) / std::sqrt(g.eigenvalues()(keep[c]));
    const CMatrix reduced = whiten.adjoint() * leak * whiten;
    Eigen::SelfAdjointEigenSolver<CMatrix> l(reduced);
    std::vector<int> nulls;
    for (Eigen::Index i = 0; i < reduced.rows(); ++i)
      if (l.eigenvalues()(i) <= kWitnessTolerance) nulls.push_back(static_cast<int>(i));
    witnesses.resize(r, static_cast<Eigen::Index>(nulls.size()));
    for (size_t c = 0; c < nulls.size(); ++c)
      witnesses.col(static_cast<Eigen::Index>(c)) = whiten * l.eigenvectors().col(nulls[c]);
  }
  out.witnessCount = static_cast<int>(witnesses.cols());

  out.passed = true;
  for (int p = 0; p < kProbeCount; ++p) {
    const Complex zeta = probePoint(p);
    out.probes.push_back(zeta);
    const int expected = countAtLeast(psi.evaluate(zeta), sigma - tolerance);
    int observed = 0;
    if (out.witnessCount > 0) observed = numericRank(elementValues(kernel.elements, n, zeta) * witnesses, kProbeRankTolerance);
    out.expected.push_back(expected);
    out.observed.push_back(observed);
    if (expected != observed) out.passed = false;
  }
  return out;
}

PointwiseSchmidtSpan spanCriterion(const RationalMatrix& psi, double sigma, const Settings& settings) {
  return spanCriterion(psi, kernelToeplitzExact(psi, settings.gridSize), sigma);
}

SuperoptCertificate verifyCandidate(const LaurentMatrix& phi, const RationalMatrix& q, int k,
                                    const Settings& settings) {
  settings.validate();
  require(k >= 0, "k must be nonnegative");
  require(q.rows() == phi.rows() && q.cols() == phi.cols(), "candidate and symbol differ in shape");
  const SingularData sd = singularValues(buildHankel(phi));
  if (k >= 1 && !sd.hasGap(k))
    fail(ErrorKind::NotKAdmissible, "s_k is not separated from s_(k-1) at k = " + std::to_string(k));

  SuperoptCertificate cert;
  cert.k = k;
  cert.level = sd.value(k);
  const RationalMatrix psi = RationalMatrix(phi) - q;

  cert.membership = membership(q, k, settings.gridSize);
  cert.checks.push_back({"membership", statusOf(cert.membership.member),
                         "rank H_Q = " + std::to_string(cert.membership.rank) + ", k = " + std::to_string(k)});

  const GridSymbol grid = psi.toGrid(settings.gridSize);
  cert.supNorm = supNorm(grid);
  const double normGap = std::abs(cert.supNorm - cert.level);
  cert.checks.push_back({"norm", statusOf(normGap <= 1e-7),
                         "sup norm " + formatDouble(cert.supNorm) + " vs s_k " + formatDouble(cert.level)});

  cert.values = superoptValues(psi, settings);
  cert.checks.push_back({"constancy", statusOf(cert.values.constant),
                         "max deviation " + formatDouble(cert.values.maxDeviation)});

  AuditCheck span{"span", CheckStatus::NotApplicable, ""};
  const FredholmCheck fc = fredholmCheck(psi, settings.gridSize);
  if (psi.rows() != psi.cols()) {
    span.details = "symbol is not square";
  } else if (!fc.fredholm) {
    span.details = "T_{Phi-Q} is not Fredholm (det margin " + formatDouble(fc.margin) + ")";
  } else {
    try {
      const ToeplitzKernelBasis kernel = kernelToeplitzExact(psi, settings.gridSize);
      const double tol = std::max(1e-8, 10.0 * cert.values.maxDeviation);
      bool ok = true;
      std::ostringstream details;
      for (double sigma : distinctLevels(cert.values.t)) {
        cert.spans.push_back(spanCriterion(psi, kernel, sigma, tol));
        ok = ok && cert.spans.back().passed;
        details << "sigma " << formatDouble(sigma) << ": " << (cert.spans.back().passed ? "pass" : "fail")
                << " (" << cert.spans.back().witnessCount << " witnesses); ";
      }
      span.status = statusOf(ok);
      span.details = "dim ker " + std::to_string(kernel.dimension()) + "; " + details.str();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IllConditioned && e.kind() != ErrorKind::NotInvertibleOnCircle) throw;
      span.details = std::string(toString(e.kind())) + ": " + e.what();
    }
  }
  cert.checks.push_back(span);

  cert.verdict = cert.checks[0].passed() && cert.checks[1].passed() && cert.checks[2].passed() &&
                 span.status != CheckStatus::Fail;
  return cert;
}

RationalMatrix thematicComplete2x2(const RationalMatrix& v, const Settings& settings) {
  require(v.rows() == 2 && v.cols() == 1, "thematic completion needs a 2x1 column");
  require(v.numerator().lo() >= 0 && v.rootsInside().empty(), "thematic completion needs an analytic column");
  const GridSymbol grid = v.toGrid(settings.gridSize);
  double worst = 0.0;
  for (const CMatrix& s : grid.samples) worst = std::max(worst, std::abs(s.col(0).norm() - 1.0));
  require(worst <= settings.unitarityTolerance, "column is not pointwise unit: deviation " + formatDouble(worst));

  CMatrix jm(2, 2);
  jm << 0.0, -1.0, 1.0, 0.0;
  const RationalMatrix second = RationalMatrix(LaurentMatrix::constant(jm)) * v.conjugate();
  return hconcat({v, second});
}

InnerOuterSplit splitCommonInner(const LaurentMatrix& v) {
  require(v.cols() == 1 && v.lo() >= 0, "inner-outer split needs an analytic polynomial column");
  require(!v.isZero(), "inner-outer split of the zero column");
  std::vector<Polynomial> entries;
  for (int i = 0; i < v.rows(); ++i) entries.push_back(columnEntry(v, i));

  // Candidates from the first nonzero entry; matched (with multiplicity) in the rest.
  size_t lead = 0;
  while (entries[lead].isZero()) ++lead;
  std::vector<Complex> common;
  std::vector<std::vector<Complex>> pools;
  for (const Polynomial& e : entries) pools.push_back(e.isZero() ? std::vector<Complex>{} : insideRoots(e));
  for (Complex lambda : pools[lead]) {
    bool everywhere = true;
    std::vector<size_t> picks(entries.size(), 0);
    for (size_t i = 0; i < entries.size() && everywhere; ++i) {
      if (i == lead || entries[i].isZero()) continue;
      auto& pool = pools[i];
      auto it = std::min_element(pool.begin(), pool.end(), [&](Complex a, Complex b) {
        return std::abs(a - lambda) < std::abs(b - lambda);
      });
      if (it == pool.end() || std::abs(*it - lambda) > kInnerMatch) everywhere = false;
      else picks[i] = static_cast<size_t>(it - pool.begin());
    }
    if (!everywhere) continue;
    for (size_t i = 0; i < entries.size(); ++i)
      if (i != lead && !entries[i].isZero()) pools[i].erase(pools[i].begin() + static_cast<long>(picks[i]));
    common.push_back(lambda);
  }

  InnerOuterSplit out;
  out.zeros = common;
  out.inner = RationalScalar(LaurentMatrix::scalar(1.0));
  for (Complex lambda : common) {
    const Polynomial reflect({1.0, -std::conj(lambda)});
    for (Polynomial& e : entries)
      if (!e.isZero()) e = e.deflate(lambda) * reflect;
    out.inner = out.inner * RationalScalar::blaschkeFactor(lambda);
  }
  std::map<int, CMatrix> coeffs;
  for (size_t i = 0; i < entries.size(); ++i)
    for (int p = 0; p <= entries[i].degree(); ++p) {
      auto [it, inserted] = coeffs.try_emplace(p, CMatrix::Zero(v.rows(), 1));
      it->second(static_cast<Eigen::Index>(i), 0) = entries[i][p];
    }
  out.outer = LaurentMatrix(v.rows(), 1, std::move(coeffs));
  return out;
}

PyConstruction pyConstruct2x2(const LaurentMatrix& phi, int k, const Settings& settings) {
  settings.validate();
  require(phi.rows() == 2 && phi.cols() == 2, "the two-step construction needs a 2x2 symbol");
  require(k >= 0, "k must be nonnegative");
  const BlockHankelMatrix h = buildHankel(phi);
  const SingularData sd = singularValues(h);
  if (k >= 1 && !sd.hasGap(k))
    fail(ErrorKind::NotKAdmissible, "s_k is not separated from s_(k-1) at k = " + std::to_string(k));

  PyConstruction out;
  out.k = k;
  out.s = sd.value(k);
  if (out.s <= 0.0)
    fail(ErrorKind::ConstructionFailure, "s_k = 0: the symbol already has rank H_Phi <= k, take Q = Phi");

  const SchmidtSubspace schmidt = schmidtSpace(h, k);
  out.xi = schmidt.polynomial(0);
  out.eta = applyFlip(applyHankel(phi, out.xi)).scaled(1.0 / out.s);
  out.xiSplit = splitCommonInner(out.xi);
  out.etaSplit = splitCommonInner(out.eta);
  out.hXi = fejerRiesz(out.xiSplit.outer.star() * out.xiSplit.outer);
  out.hEta = fejerRiesz(out.etaSplit.outer.star() * out.etaSplit.outer);

  out.V = thematicComplete2x2(RationalMatrix::quotient(out.xiSplit.outer, out.hXi), settings);
  out.W = thematicComplete2x2(RationalMatrix::quotient(out.etaSplit.outer, out.hEta), settings);

  const RationalScalar outerXi(LaurentMatrix::fromPolynomial(out.hXi));
  const RationalScalar outerEta(LaurentMatrix::fromPolynomial(out.hEta));
  out.u0 = (out.etaSplit.inner * outerEta).star().shifted(-1) * (out.xiSplit.inner * outerXi).reciprocal();

  const RationalMatrix phiR(phi);
  out.psiPrime = (out.W.transpose() * phiR * out.V).entry(1, 1);

  const RationalMatrix leftFactor = out.W.conjugate();
  const RationalMatrix rightFactor = out.V.star();
  for (int budget = 0; budget <= k; ++budget) {
    PyAttempt attempt;
    attempt.budget = budget;
    try {
      const RationalScalar e = bestMeromorphicError(out.psiPrime, budget, settings.gridSize);
      const RationalMatrix d = diagonal({out.u0.scaled(out.s), e});
      const RationalMatrix candidate = phiR - leftFactor * d * rightFactor;
      const SuperoptCertificate cert = verifyCandidate(phi, candidate, k, settings);
      attempt.passed = cert.verdict;
      std::ostringstream os;
      for (const AuditCheck& c : cert.checks) os << c.name << "=" << toString(c.status) << " ";
      attempt.outcome = os.str();
      if (cert.verdict) {
        out.budget = budget;
        out.errorPrime = e;
        out.q = candidate;
        out.certificate = cert;
        out.attempts.push_back(attempt);

        const int n = settings.gridSize;
        const GridSymbol product = (leftFactor * d * rightFactor).toGrid(n);
        const GridSymbol difference = (phiR - candidate).toGrid(n);
        const GridSymbol vg = out.V.toGrid(n);
        const GridSymbol wg = out.W.toGrid(n);
        const CMatrix eye = CMatrix::Identity(2, 2);
        for (int j = 0; j < n; ++j) {
          const size_t u = static_cast<size_t>(j);
          out.factorizationResidual =
              std::max(out.factorizationResidual, (product.samples[u] - difference.samples[u]).operatorNorm());
          out.unitarityResidual = std::max({out.unitarityResidual,
                                            (vg.samples[u].adjoint() * vg.samples[u] - eye).operatorNorm(),
                                            (wg.samples[u].adjoint() * wg.samples[u] - eye).operatorNorm()});
        }
        return out;
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidInput || e.kind() == ErrorKind::InternalInconsistency) throw;
      attempt.outcome = std::string(toString(e.kind())) + ": " + e.what();
    }
    out.attempts.push_back(attempt);
  }

  std::ostringstream os;
  os << "no budget produced a certified candidate:";
  for (const PyAttempt& a : out.attempts) os << " [budget " << a.budget << "] " << a.outcome << ";";
  fail(ErrorKind::ConstructionFailure, os.str());
}

}  // namespace nehari
