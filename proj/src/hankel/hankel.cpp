#include "hankel/hankel.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace nehari {

namespace {

constexpr double kSnapToZero = 1e-10;
constexpr double kAcceptColumn = 1e-3;

}  // namespace

BlockHankelMatrix buildHankel(const LaurentMatrix& phi) {
  const int m = phi.rows();
  const int n = phi.cols();
  const int depth = std::max(0, -phi.lo());
  BlockHankelMatrix h{m, n, ModelSpace(std::vector<Complex>(static_cast<size_t>(depth), Complex{})),
                      CMatrix::Zero(static_cast<Eigen::Index>(depth) * m, static_cast<Eigen::Index>(depth) * n)};
  for (int i = 0; i < depth; ++i)
    for (int j = 0; i + j < depth; ++j) h.matrix.block(i * m, j * n, m, n) = phi.coefficient(-i - j - 1);
  return h;
}

BlockHankelMatrix buildHankel(const RationalMatrix& phi, int gridSize) {
  if (phi.isLaurent()) return buildHankel(phi.numerator());
  gridSize = phi.quadratureGridSize(gridSize);
  const int m = phi.rows();
  const int n = phi.cols();
  ModelSpace space = ModelSpace::forPoles(phi);
  const int d = space.dimension();
  const CMatrix s = space.samples(gridSize);
  const GridSymbol g = phi.toGrid(gridSize);
  CMatrix matrix = CMatrix::Zero(static_cast<Eigen::Index>(d) * m, static_cast<Eigen::Index>(d) * n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      CVector w(gridSize);
      for (int t = 0; t < gridSize; ++t) w(t) = g.samples[static_cast<size_t>(t)](a, b) * gridPoint(t, gridSize);
      const CMatrix block = s.transpose() * w.asDiagonal() * s / static_cast<double>(gridSize);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) matrix(i * m + a, j * n + b) = block(i, j);
    }
  }
  return BlockHankelMatrix{m, n, std::move(space), std::move(matrix)};
}

double SingularData::value(int j) const {
  if (j < 0 || j >= static_cast<int>(values.size())) return 0.0;
  return values[static_cast<size_t>(j)];
}

int SingularData::rank() const {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [](double v) { return v > 0.0; }));
}

int SingularData::clusterBegin(int k) const {
  if (k >= static_cast<int>(values.size())) return std::min(k, rank());
  int b = k;
  while (b > 0 && cluster[static_cast<size_t>(b - 1)] == cluster[static_cast<size_t>(k)]) --b;
  return b;
}

int SingularData::multiplicity(int k) const {
  if (value(k) == 0.0) return -1;
  int e = k;
  while (e + 1 < static_cast<int>(values.size()) && cluster[static_cast<size_t>(e + 1)] == cluster[static_cast<size_t>(k)]) ++e;
  return e - clusterBegin(k) + 1;
}

bool SingularData::hasGap(int k) const {
  if (k <= 0) return true;
  if (k >= static_cast<int>(values.size())) return value(k - 1) > 0.0;
  return cluster[static_cast<size_t>(k - 1)] != cluster[static_cast<size_t>(k)];
}

SingularData singularValues(const BlockHankelMatrix& h) {
  SingularData data;
  if (h.matrix.size() == 0) return data;
  const Eigen::JacobiSVD<CMatrix> svd(h.matrix);
  const RVector& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  int id = 0;
  for (Eigen::Index j = 0; j < sv.size(); ++j) {
    const double v = sv(j) <= kSnapToZero * top ? 0.0 : sv(j);
    if (j > 0 && data.values.back() - v > kSingularClusterRadius * top) ++id;
    data.values.push_back(v);
    data.cluster.push_back(id);
  }
  return data;
}

int multiplicity(const BlockHankelMatrix& h, int k) { return singularValues(h).multiplicity(k); }

RationalMatrix SchmidtSubspace::function(int i) const { return space.combination(basis.col(i), rows); }

LaurentMatrix SchmidtSubspace::polynomial(int i) const {
  require(space.isPolynomial(), "Schmidt vectors are not polynomial for this symbol");
  return LaurentMatrix::fromStack(basis.col(i), rows, 0);
}

SchmidtSubspace schmidtSpace(const BlockHankelMatrix& h, int k) {
  const SingularData data = singularValues(h);
  if (data.value(k) <= 0.0)
    fail(ErrorKind::DegenerateLevel, "s_" + std::to_string(k) + "(H) = 0: no Schmidt space at this level");
  const int begin = data.clusterBegin(k);
  const int mu = data.multiplicity(k);
  const Eigen::JacobiSVD<CMatrix> svd(h.matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const CMatrix vc = svd.matrixV().middleCols(begin, mu);
  const CMatrix projector = vc * vc.adjoint();

  CMatrix basis(projector.rows(), 0);
  for (Eigen::Index c = 0; c < projector.cols() && basis.cols() < mu; ++c) {
    CVector v = projector.col(c);
    for (Eigen::Index q = 0; q < basis.cols(); ++q) v -= basis.col(q).dot(v) * basis.col(q);
    for (Eigen::Index q = 0; q < basis.cols(); ++q) v -= basis.col(q).dot(v) * basis.col(q);
    const double norm = v.norm();
    if (norm <= kAcceptColumn) continue;
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = v / norm;
  }
  if (basis.cols() != mu) fail(ErrorKind::InternalInconsistency, "Schmidt basis extraction lost dimensions");
  return SchmidtSubspace{k, data.value(k), h.cols, h.space, std::move(basis)};
}

SchmidtSubspace schmidtSpace(const LaurentMatrix& phi, int k) { return schmidtSpace(buildHankel(phi), k); }

LaurentMatrix applyHankel(const LaurentMatrix& phi, const LaurentMatrix& f) { return (phi * f).antianalyticPart(); }

LaurentMatrix applyHankel(const LaurentMatrix& phi, const RationalMatrix& f, int gridSize) {
  if (f.isLaurent()) return applyHankel(phi, f.numerator());
  const int depth = std::max(0, -phi.lo());
  if (depth == 0) return LaurentMatrix(phi.rows(), f.cols());
  const LaurentMatrix taylor = f.fourierProjection(0, depth - 1, gridSize);
  return applyHankel(phi, taylor);
}

LaurentMatrix applyHankelAdjoint(const LaurentMatrix& phi, const LaurentMatrix& g) {
  return (phi.star() * g).analyticPart();
}

LaurentMatrix applyFlip(const LaurentMatrix& g) { return g.conjugate().shifted(-1); }

RationalMatrix applyFlip(const RationalMatrix& g) { return g.conjugate().shifted(-1); }

CMatrix toeplitzTruncation(const LaurentMatrix& psi, int degree) {
  require(degree >= 0, "truncation degree must be nonnegative");
  const int m = psi.rows();
  const int n = psi.cols();
  CMatrix t = CMatrix::Zero(static_cast<Eigen::Index>(degree + 1) * m, static_cast<Eigen::Index>(degree + 1) * n);
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; j <= degree; ++j) t.block(i * m, j * n, m, n) = psi.coefficient(i - j);
  return t;
}

}  // namespace nehari
