#include "index/toeplitz_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <Eigen/SVD>

namespace nehari {

namespace {

constexpr double kCircleGuard = 1e-6;
constexpr double kRankTolerance = 1e-8;
constexpr double kPlaneTolerance = 1e-8;
constexpr double kProjectionTolerance = 1e-7;

void requireFredholm(const RationalMatrix& psi, int gridSize) {
  require(psi.rows() == psi.cols(), "Toeplitz index machinery needs a square symbol");
  if (!fredholmCheck(psi, gridSize).fredholm)
    fail(ErrorKind::NotInvertibleOnCircle, "det Ψ (nearly) vanishes on the circle");
}

// Remainder of every entry of M (a column polynomial matrix) modulo a monic
// divisor, flattened.
CVector remainders(const LaurentMatrix& column, const Polynomial& divisor) {
  const int m = divisor.degree();
  CVector out = CVector::Zero(static_cast<Eigen::Index>(column.rows()) * m);
  for (int i = 0; i < column.rows(); ++i) {
    const Polynomial rem = column.entryPolynomial(i, 0, 0).divmod(divisor).second;
    for (int p = 0; p < m; ++p) out(i * m + p) = rem[p];
  }
  return out;
}

double coefficientNorm(const Polynomial& p) {
  double s = 0.0;
  for (int j = 0; j <= p.degree(); ++j) s += std::abs(p[j]);
  return s;
}

// Multiple roots come back from the eigenvalue solver split by ~ε^{1/m}, while
// a cluster's centroid stays accurate. Snap clusters at growing radii and keep
// the factor that divides det most cleanly.
Polynomial insideFactor(const Polynomial& det, const std::vector<Complex>& inside) {
  Polynomial best = Polynomial::fromRoots(inside);
  double bestRemainder = coefficientNorm(det.divmod(best).second);
  for (const double radius : {1e-6, 1e-5, 1e-4, 1e-3}) {
    std::vector<Complex> snapped;
    for (const auto& [centre, mult] : clusterRoots(inside, radius)) snapped.insert(snapped.end(), static_cast<size_t>(mult), centre);
    const Polynomial candidate = Polynomial::fromRoots(snapped);
    const double remainder = coefficientNorm(det.divmod(candidate).second);
    if (remainder < bestRemainder) {
      best = candidate;
      bestRemainder = remainder;
    }
  }
  return best;
}

}  // namespace

FredholmCheck fredholmCheck(const RationalMatrix& psi, int gridSize) {
  require(psi.rows() == psi.cols(), "fredholmCheck needs a square symbol");
  const GridSymbol det = determinant(psi.toGrid(gridSize));
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int j = 0; j < det.gridSize(); ++j) {
    lo = std::min(lo, std::abs(det.scalarAt(j)));
    hi = std::max(hi, std::abs(det.scalarAt(j)));
  }
  FredholmCheck check;
  check.margin = hi > 0.0 ? lo / hi : 0.0;
  check.fredholm = hi > 0.0 && lo > 1e-8 * hi;
  return check;
}

ToeplitzKernelBasis kernelToeplitzExact(const RationalMatrix& psi, int gridSize) {
  requireFredholm(psi, gridSize);
  const int n = psi.rows();

  ToeplitzKernelBasis basis;
  basis.size = n;
  basis.outerRoots = psi.rootsOutside();
  const int a = static_cast<int>(psi.rootsInside().size());
  const LaurentMatrix reduced = psi.numerator().shifted(-a);
  const int depth = std::max(0, -reduced.lo());
  basis.depth = depth;
  basis.lifted = reduced.shifted(depth);
  basis.qBasis = CMatrix(static_cast<Eigen::Index>(n) * depth, 0);
  if (depth == 0) return basis;

  const Polynomial det = determinant(basis.lifted).entryPolynomial(0, 0, 0);
  std::vector<Complex> inside;
  for (const Complex r : det.roots()) {
    if (std::abs(std::abs(r) - 1.0) <= kCircleGuard)
      fail(ErrorKind::IllConditioned, "det P has a root within 1e-6 of the unit circle");
    if (std::abs(r) < 1.0) inside.push_back(r);
  }
  basis.detInside = insideFactor(det, inside);
  const LaurentMatrix adj = adjugate(basis.lifted);

  // Constraint matrix: column (p, b) holds adj(P)·z^p e_b mod det_in.
  const int unknowns = n * depth;
  CMatrix nullspace;
  if (inside.empty()) {
    nullspace = CMatrix::Identity(unknowns, unknowns);
  } else {
    CMatrix constraints(static_cast<Eigen::Index>(n) * basis.detInside.degree(), unknowns);
    for (int p = 0; p < depth; ++p)
      for (int b = 0; b < n; ++b) constraints.col(p * n + b) = remainders(adj.column(b).shifted(p), basis.detInside);
    // Equilibrate columns so the rank decision is scale-free.
    RVector scale(unknowns);
    for (int c = 0; c < unknowns; ++c) scale(c) = std::max(constraints.col(c).norm(), 1e-300);
    const double top = scale.maxCoeff();
    const Eigen::JacobiSVD<CMatrix> svd(constraints, Eigen::ComputeFullV);
    const RVector& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index j = 0; j < sv.size(); ++j)
      if (sv(j) > kRankTolerance * std::max(top, sv(0))) ++rank;
    nullspace = svd.matrixV().rightCols(unknowns - rank);
  }

  // Materialize f = d_out · adj(P) q / det P, dividing out det_in exactly.
  const auto [detOutside, detRest] = det.divmod(basis.detInside);
  Polynomial dOut = Polynomial::constant(1.0);
  for (const Complex r : basis.outerRoots) dOut = dOut * Polynomial({1.0, -1.0 / r});
  std::map<int, GridSymbol> psiGrids;  // by quadrature size

  for (Eigen::Index c = 0; c < nullspace.cols(); ++c) {
    const LaurentMatrix q = LaurentMatrix::fromStack(nullspace.col(c), n, 0);
    const LaurentMatrix numerator = adj * q;
    std::map<int, CMatrix> coeffs;
    for (int i = 0; i < n; ++i) {
      const Polynomial entry = numerator.entryPolynomial(i, 0, 0).divmod(basis.detInside).first * dOut;
      for (int p = 0; p <= entry.degree(); ++p) {
        auto it = coeffs.try_emplace(p, CMatrix::Zero(n, 1)).first;
        it->second(i) = entry[p];
      }
    }
    RationalMatrix f = RationalMatrix::quotient(LaurentMatrix(n, 1, std::move(coeffs)), detOutside);
    const int checkGrid = std::max(psi.quadratureGridSize(gridSize), f.quadratureGridSize(gridSize));
    auto cached = psiGrids.find(checkGrid);
    if (cached == psiGrids.end()) cached = psiGrids.emplace(checkGrid, psi.toGrid(checkGrid)).first;
    const GridSymbol& psiGrid = cached->second;
    GridSymbol fg = f.toGrid(checkGrid);
    const double norm = l2Norm(fg);
    if (norm == 0.0) fail(ErrorKind::InternalInconsistency, "Toeplitz kernel element vanished");
    f = f.scaled(1.0 / norm);
    for (CMatrix& s : fg.samples) s /= norm;
    CVector qcol = nullspace.col(c) / norm;

    // Cross-check 1: P f = d_out q on the grid.
    double plane = 0.0;
    double qscale = 0.0;
    for (int t = 0; t < checkGrid; ++t) {
      const Complex z = gridPoint(t, checkGrid);
      const CMatrix qz = LaurentMatrix::fromStack(qcol, n, 0).evaluate(z) * dOut.evaluate(z);
      const CMatrix pz = basis.lifted.evaluate(z);
      plane = std::max(plane, (pz * fg.samples[static_cast<size_t>(t)] - qz).norm());
      qscale = std::max(qscale, qz.norm());
    }
    plane /= std::max(1.0, qscale);
    // Cross-check 2: P₊(Ψ f) = 0.
    const LaurentMatrix analytic = fromGrid(pointwiseProduct(psiGrid, fg), 0, checkGrid / 2 - 1);
    const double projection = analytic.maxAbsCoefficient();
    basis.planeResidual = std::max(basis.planeResidual, plane);
    basis.projectionResidual = std::max(basis.projectionResidual, projection);
    if (plane > kPlaneTolerance || projection > kProjectionTolerance)
    {
      std::ostringstream msg;
      msg << std::scientific << std::setprecision(3) << "Toeplitz kernel element fails its grid cross-check (plane "
          << plane << ", projection " << projection << ")";
      fail(ErrorKind::InternalInconsistency, msg.str());
    }

    basis.qBasis.conservativeResize(Eigen::NoChange, basis.qBasis.cols() + 1);
    basis.qBasis.col(basis.qBasis.cols() - 1) = qcol;
    basis.elements.push_back(std::move(f));
  }
  (void)detRest;
  return basis;
}

int cokernelDim(const RationalMatrix& psi, int gridSize) {
  return kernelToeplitzExact(psi.star(), gridSize).dimension();
}

int windingOfDeterminant(const RationalMatrix& psi) {
  require(psi.rows() == psi.cols(), "winding of det needs a square symbol");
  if (psi.isLaurent()) return windingNumber(determinant(psi.numerator()));
  return windingNumber([&psi](Complex z) { return psi.evaluate(z).determinant(); }, psi.quadratureGridSize(256));
}

int toeplitzIndex(const RationalMatrix& psi, int gridSize) {
  requireFredholm(psi, gridSize);
  const int ind = -windingOfDeterminant(psi);
  const int dimKer = kernelToeplitzExact(psi, gridSize).dimension();
  const int dimCoker = cokernelDim(psi, gridSize);
  if (ind != dimKer - dimCoker)
    fail(ErrorKind::InternalInconsistency, "winding index " + std::to_string(ind) + " disagrees with dim ker − dim coker = " +
                                               std::to_string(dimKer) + " − " + std::to_string(dimCoker));
  return ind;
}

}  // namespace nehari
