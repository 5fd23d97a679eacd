#include "blaschke/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "hankel/hankel.hpp"

namespace nehari {

namespace {

constexpr double kEigenTolerance = 1e-7;
constexpr double kResidualTolerance = 1e-9;
constexpr double kMembershipTolerance = 1e-8;

CMatrix orthonormalize(const CMatrix& x) {
  if (x.cols() == 0) return x;
  Eigen::HouseholderQR<CMatrix> qr(x);
  CMatrix q = qr.householderQ() * CMatrix::Identity(x.rows(), x.cols());
  return q;
}

}  // namespace

BlaschkePotapovProduct::BlaschkePotapovProduct(int size) : front_(CMatrix::Identity(size, size)) {}

BlaschkePotapovProduct::BlaschkePotapovProduct(CMatrix unitaryFront, std::vector<BlaschkeFactor> factors)
    : front_(std::move(unitaryFront)), factors_(std::move(factors)) {
  const Eigen::Index n = front_.rows();
  require(front_.cols() == n, "unitary front must be square");
  require((front_.adjoint() * front_ - CMatrix::Identity(n, n)).norm() <= 1e-9, "front factor is not unitary");
  for (const BlaschkeFactor& f : factors_) {
    require(std::abs(f.lambda) < 1.0 - 1e-10, "Blaschke factor zero must lie in the open disc");
    require(f.range.rows() == n && f.range.cols() >= 1, "Blaschke factor range has the wrong shape");
    require((f.range.adjoint() * f.range - CMatrix::Identity(f.range.cols(), f.range.cols())).norm() <= 1e-10,
            "Blaschke factor range basis is not orthonormal");
  }
}

int BlaschkePotapovProduct::degree() const {
  int d = 0;
  for (const BlaschkeFactor& f : factors_) d += static_cast<int>(f.range.cols());
  return d;
}

int degree(const BlaschkePotapovProduct& b) { return b.degree(); }

CMatrix BlaschkePotapovProduct::evaluate(Complex point) const {
  requireOnCircle(point);
  return evaluateAt(point);
}

CMatrix BlaschkePotapovProduct::evaluateAt(Complex z) const {
  const Eigen::Index n = front_.rows();
  CMatrix value = front_;
  for (const BlaschkeFactor& f : factors_) {
    const CMatrix p = f.range * f.range.adjoint();
    const Complex b = (z - f.lambda) / (1.0 - std::conj(f.lambda) * z);
    value = value * (b * p + (CMatrix::Identity(n, n) - p));
  }
  return value;
}

RationalMatrix BlaschkePotapovProduct::toRational() const {
  const Eigen::Index n = front_.rows();
  RationalMatrix value(LaurentMatrix::constant(front_));
  for (const BlaschkeFactor& f : factors_) {
    const CMatrix p = f.range * f.range.adjoint();
    const CMatrix rest = CMatrix::Identity(n, n) - p;
    // [(z − λ)P + (1 − λ̄z)(I − P)] / (1 − λ̄z)
    const LaurentMatrix num(static_cast<int>(n), static_cast<int>(n),
                            {{0, rest - f.lambda * p}, {1, p - std::conj(f.lambda) * rest}});
    std::vector<Complex> roots;
    if (f.lambda != Complex{}) roots.push_back(1.0 / std::conj(f.lambda));
    value = value * RationalMatrix(num, roots);
  }
  return value;
}

HankelKernelData poleCarrier(const RationalMatrix& q, int gridSize) {
  if (q.polesInDisc() == 0) {
    // Analytic Q: H_Q = 0 exactly, B = I.
    HankelKernelData data;
    data.size = q.cols();
    data.space = ModelSpace::forPoles(q);
    data.product = BlaschkePotapovProduct(q.cols());
    data.gBasis = CMatrix(static_cast<Eigen::Index>(data.space.dimension()) * q.cols(), 0);
    return data;
  }
  if (q.poleDecay() * kMaxQuadratureGrid < kQuadratureDecay)
    fail(ErrorKind::IllConditioned, "a pole of Q is too close to the unit circle to resolve by quadrature");
  gridSize = q.quadratureGridSize(gridSize);
  const int n = q.cols();
  const BlockHankelMatrix h = buildHankel(q, gridSize);
  const SingularData sv = singularValues(h);
  const int r = sv.rank();

  HankelKernelData data;
  data.rank = r;
  data.size = n;
  data.space = h.space;
  data.product = BlaschkePotapovProduct(n);
  if (r == 0) {
    data.gBasis = CMatrix(static_cast<Eigen::Index>(h.depth()) * n, 0);
    return data;
  }
  const Eigen::JacobiSVD<CMatrix> svd(h.matrix, Eigen::ComputeThinV);
  data.gBasis = svd.matrixV().leftCols(r);

  // Backward shift on K_θ: ⟨S*φ_j, φ_i⟩ = ⟨φ_j, zφ_i⟩.
  const ModelSpace& space = h.space;
  const int d = space.dimension();
  const CMatrix samples = space.samples(gridSize);
  CMatrix zs = samples;
  for (int t = 0; t < gridSize; ++t) zs.row(t) *= gridPoint(t, gridSize);
  const CMatrix shiftScalar = zs.adjoint() * samples / static_cast<double>(gridSize);
  CMatrix shift = CMatrix::Zero(static_cast<Eigen::Index>(d) * n, static_cast<Eigen::Index>(d) * n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) shift.block(i * n, j * n, n, n) = shiftScalar(i, j) * CMatrix::Identity(n, n);
  CVector atZero(d);
  {
    Complex prefix = 1.0;
    for (int j = 0; j < d; ++j) {
      const Complex l = space.nodes()[static_cast<size_t>(j)];
      atZero(j) = std::sqrt(1.0 - std::norm(l)) * prefix;
      prefix *= -l;
    }
  }

  std::vector<Complex> candidates;
  for (const auto& [node, mult] : clusterRoots(space.nodes(), kRootClusterRadius)) candidates.push_back(node);

  std::vector<BlaschkeFactor> factors;
  CMatrix x = data.gBasis;
  for (int step = 0; step < r; ++step) {
    const CMatrix a = x.adjoint() * shift * x;
    const double scale = std::max(1.0, a.norm());
    bool found = false;
    for (const Complex node : candidates) {
      const CMatrix shifted = a - std::conj(node) * CMatrix::Identity(a.rows(), a.cols());
      const Eigen::JacobiSVD<CMatrix> local(shifted, Eigen::ComputeFullV);
      const Eigen::Index last = local.singularValues().size() - 1;
      if (local.singularValues()(last) > kEigenTolerance * scale) continue;
      const CVector y = local.matrixV().col(last);
      const CVector k = x * y;
      CVector u = CVector::Zero(n);
      for (int j = 0; j < d; ++j) u += atZero(j) * k.segment(static_cast<Eigen::Index>(j) * n, n);
      if (u.norm() <= 1e-12) fail(ErrorKind::ConstructionFailure, "backward-shift eigenvector vanishes at 0");
      const CVector unit = u / u.norm();
      factors.push_back({node, unit});

      // K' = B_j*(K ⊖ k), re-expressed in model-space coordinates.
      const Eigen::HouseholderQR<CMatrix> qr(y);
      const CMatrix complement = CMatrix(qr.householderQ()).rightCols(y.size() - 1);
      const CMatrix rest = x * complement;
      const CMatrix p = unit * unit.adjoint();
      CMatrix next(rest.rows(), rest.cols());
      for (Eigen::Index c = 0; c < rest.cols(); ++c) {
        const RationalMatrix f = space.combination(rest.col(c), n);
        GridSymbol g = f.toGrid(gridSize);
        for (int t = 0; t < gridSize; ++t) {
          const Complex z = gridPoint(t, gridSize);
          const Complex bconj = std::conj((z - node) / (1.0 - std::conj(node) * z));
          CMatrix& s = g.samples[static_cast<size_t>(t)];
          s = bconj * (p * s) + (s - p * s);
        }
        next.col(c) = space.coordinates(g);
      }
      x = orthonormalize(next);
      found = true;
      break;
    }
    if (!found)
      fail(ErrorKind::ConstructionFailure,
           "no pole node is an eigenvalue of the compressed backward shift at step " + std::to_string(step));
  }
  data.product = BlaschkePotapovProduct(CMatrix::Identity(n, n), std::move(factors));

  // Certificate: Q·B must have no negative Fourier coefficients.
  const RationalMatrix qbr = q * data.product.toRational();
  const int qbGrid = qbr.quadratureGridSize(gridSize);
  const LaurentMatrix coeffs = fromGrid(qbr.toGrid(qbGrid), -(qbGrid / 2 - 1), 0);
  double residual = 0.0;
  for (const auto& [p, m] : coeffs.coefficients())
    if (p < 0) residual = std::max(residual, m.cwiseAbs().maxCoeff());
  data.residual = residual;
  const double qscale = std::max(1.0, q.numerator().maxAbsCoefficient());
  if (residual > kResidualTolerance * qscale) {
    std::ostringstream msg;
    msg << std::scientific << std::setprecision(3) << "Q·B keeps antianalytic content (residual " << residual
        << ", scale " << qscale << ")";
    fail(ErrorKind::ConstructionFailure, msg.str());
  }
  return data;
}

MembershipCertificate membership(const RationalMatrix& q, int k, int gridSize) {
  const HankelKernelData data = poleCarrier(q, gridSize);
  return MembershipCertificate{data.rank <= k, k, data.rank, data.residual, data.product};
}

double kernelMembershipResidual(const HankelKernelData& data, const RationalMatrix& f, int gridSize) {
  require(f.cols() == 1 && f.rows() == data.size, "kernel membership expects a column of matching size");
  if (data.rank == 0) return 0.0;
  const GridSymbol g = f.toGrid(gridSize);
  const double norm = l2Norm(g);
  if (norm == 0.0) return 0.0;
  const CVector products = data.gBasis.adjoint() * data.space.coordinates(g);
  return products.cwiseAbs().maxCoeff() / norm;
}

bool kernelMembershipConditions(const HankelKernelData& data, const RationalMatrix& f, int gridSize) {
  return kernelMembershipResidual(data, f, gridSize) <= kMembershipTolerance;
}

}  // namespace nehari
