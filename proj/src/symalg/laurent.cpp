#include "symalg/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace nehari {

LaurentMatrix::LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows > 0 && cols > 0, "symbol dimensions must be positive");
}

LaurentMatrix::LaurentMatrix(int rows, int cols, std::map<int, CMatrix> coefficients)
    : LaurentMatrix(rows, cols) {
  for (const auto& [power, c] : coefficients) {
    require(c.rows() == rows && c.cols() == cols, "coefficient shape mismatch");
    require(c.allFinite(), "non-finite coefficient");
  }
  coefficients_ = std::move(coefficients);
  canonicalize();
}

void LaurentMatrix::canonicalize() {
  for (auto it = coefficients_.begin(); it != coefficients_.end();) {
    if (it->second.cwiseAbs().maxCoeff() < kTrimThreshold) it = coefficients_.erase(it);
    else ++it;
  }
}

LaurentMatrix LaurentMatrix::identity(int n) { return constant(CMatrix::Identity(n, n)); }

LaurentMatrix LaurentMatrix::constant(const CMatrix& value) { return monomial(value, 0); }

LaurentMatrix LaurentMatrix::monomial(const CMatrix& value, int power) {
  return LaurentMatrix(static_cast<int>(value.rows()), static_cast<int>(value.cols()), {{power, value}});
}

LaurentMatrix LaurentMatrix::scalar(Complex value, int power) {
  return monomial(CMatrix::Constant(1, 1, value), power);
}

LaurentMatrix LaurentMatrix::fromPolynomial(const Polynomial& p, int shift) {
  std::map<int, CMatrix> c;
  for (int i = 0; i <= p.degree(); ++i) c[i + shift] = CMatrix::Constant(1, 1, p[i]);
  return LaurentMatrix(1, 1, std::move(c));
}

LaurentMatrix LaurentMatrix::fromStack(const CVector& stack, int rows, int firstPower) {
  require(rows > 0 && stack.size() % rows == 0, "stack length is not a multiple of the row count");
  std::map<int, CMatrix> c;
  for (Eigen::Index j = 0; j < stack.size() / rows; ++j)
    c[firstPower + static_cast<int>(j)] = stack.segment(j * rows, rows);
  return LaurentMatrix(rows, 1, std::move(c));
}

CMatrix LaurentMatrix::coefficient(int power) const {
  const auto it = coefficients_.find(power);
  return it == coefficients_.end() ? CMatrix::Zero(rows_, cols_) : it->second;
}

double LaurentMatrix::maxAbsCoefficient() const {
  double m = 0.0;
  for (const auto& [p, c] : coefficients_) m = std::max(m, c.cwiseAbs().maxCoeff());
  return m;
}

void requireOnCircle(Complex point) {
  require(std::abs(std::abs(point) - 1.0) <= kCircleTolerance, "evaluation point is not on the unit circle");
}

Complex unitPower(Complex point, int power) {
  return std::polar(1.0, static_cast<double>(power) * std::arg(point));
}

CMatrix LaurentMatrix::evaluate(Complex point) const {
  requireOnCircle(point);
  CMatrix value = CMatrix::Zero(rows_, cols_);
  for (const auto& [p, c] : coefficients_) value += c * unitPower(point, p);
  return value;
}

CMatrix LaurentMatrix::evaluateAt(Complex z) const {
  CMatrix value = CMatrix::Zero(rows_, cols_);
  for (const auto& [p, c] : coefficients_) value += c * std::pow(z, p);
  return value;
}

LaurentMatrix LaurentMatrix::transpose() const {
  std::map<int, CMatrix> c;
  for (const auto& [p, m] : coefficients_) c[p] = m.transpose();
  return LaurentMatrix(cols_, rows_, std::move(c));
}

LaurentMatrix LaurentMatrix::star() const {
  std::map<int, CMatrix> c;
  for (const auto& [p, m] : coefficients_) c[-p] = m.adjoint();
  return LaurentMatrix(cols_, rows_, std::move(c));
}

LaurentMatrix LaurentMatrix::conjugate() const {
  std::map<int, CMatrix> c;
  for (const auto& [p, m] : coefficients_) c[-p] = m.conjugate();
  return LaurentMatrix(rows_, cols_, std::move(c));
}

LaurentMatrix LaurentMatrix::shifted(int s) const {
  std::map<int, CMatrix> c;
  for (const auto& [p, m] : coefficients_) c[p + s] = m;
  return LaurentMatrix(rows_, cols_, std::move(c));
}

LaurentMatrix LaurentMatrix::scaled(Complex factor) const {
  std::map<int, CMatrix> c;
  for (const auto& [p, m] : coefficients_) c[p] = m * factor;
  return LaurentMatrix(rows_, cols_, std::move(c));
}

LaurentMatrix LaurentMatrix::block(int row, int col, int rows, int cols) const {
  require(row >= 0 && col >= 0 && row + rows <= rows_ && col + cols <= cols_, "block out of range");
  std::map<int, CMatrix> c;
  for (const auto& [p, m] : coefficients_) c[p] = m.block(row, col, rows, cols);
  return LaurentMatrix(rows, cols, std::move(c));
}

LaurentMatrix LaurentMatrix::analyticPart() const {
  std::map<int, CMatrix> c(coefficients_.lower_bound(0), coefficients_.end());
  return LaurentMatrix(rows_, cols_, std::move(c));
}

LaurentMatrix LaurentMatrix::antianalyticPart() const {
  std::map<int, CMatrix> c(coefficients_.begin(), coefficients_.lower_bound(0));
  return LaurentMatrix(rows_, cols_, std::move(c));
}

Polynomial LaurentMatrix::entryPolynomial(int row, int col, int shift) const {
  if (isZero()) return {};
  require(lo() + shift >= 0, "shift leaves negative powers");
  std::vector<Complex> c(static_cast<size_t>(hi() + shift) + 1, Complex{});
  for (const auto& [p, m] : coefficients_) c[static_cast<size_t>(p + shift)] = m(row, col);
  return Polynomial(std::move(c));
}

CVector LaurentMatrix::stack(int from, int to) const {
  require(cols_ == 1, "stack requires a column symbol");
  CVector s = CVector::Zero(static_cast<Eigen::Index>(std::max(0, to - from + 1)) * rows_);
  for (const auto& [p, m] : coefficients_)
    if (p >= from && p <= to) s.segment(static_cast<Eigen::Index>(p - from) * rows_, rows_) = m.col(0);
  return s;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch in add");
  std::map<int, CMatrix> c = a.coefficients_;
  for (const auto& [p, m] : b.coefficients_) {
    auto it = c.find(p);
    if (it == c.end()) c.emplace(p, m);
    else it->second += m;
  }
  return LaurentMatrix(a.rows_, a.cols_, std::move(c));
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) { return a + b.scaled(-1.0); }

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  require(a.cols_ == b.rows_, "shape mismatch in multiply");
  std::map<int, CMatrix> c;
  for (const auto& [pa, ma] : a.coefficients_) {
    for (const auto& [pb, mb] : b.coefficients_) {
      auto it = c.find(pa + pb);
      if (it == c.end()) c.emplace(pa + pb, ma * mb);
      else it->second += ma * mb;
    }
  }
  return LaurentMatrix(a.rows_, b.cols_, std::move(c));
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) { return a * b; }
LaurentMatrix add(const LaurentMatrix& a, const LaurentMatrix& b) { return a + b; }

LaurentMatrix scalarMultiply(const LaurentMatrix& scalar, const LaurentMatrix& a) {
  require(scalar.rows() == 1 && scalar.cols() == 1, "scalarMultiply expects a 1x1 factor");
  std::map<int, CMatrix> c;
  for (const auto& [ps, ms] : scalar.coefficients()) {
    for (const auto& [pa, ma] : a.coefficients()) {
      auto it = c.find(ps + pa);
      if (it == c.end()) c.emplace(ps + pa, ms(0, 0) * ma);
      else it->second += ms(0, 0) * ma;
    }
  }
  return LaurentMatrix(a.rows(), a.cols(), std::move(c));
}
LaurentMatrix transpose(const LaurentMatrix& a) { return a.transpose(); }
LaurentMatrix star(const LaurentMatrix& a) { return a.star(); }

namespace {

LaurentMatrix minorOf(const LaurentMatrix& a, int skipRow, int skipCol) {
  const int n = a.rows();
  std::map<int, CMatrix> c;
  for (const auto& [p, m] : a.coefficients()) {
    CMatrix r(n - 1, n - 1);
    for (int i = 0, ri = 0; i < n; ++i) {
      if (i == skipRow) continue;
      for (int j = 0, rj = 0; j < n; ++j) {
        if (j == skipCol) continue;
        r(ri, rj++) = m(i, j);
      }
      ++ri;
    }
    c[p] = r;
  }
  return LaurentMatrix(n - 1, n - 1, std::move(c));
}

}  // namespace

LaurentMatrix determinant(const LaurentMatrix& a) {
  require(a.rows() == a.cols(), "determinant of a non-square symbol");
  const int n = a.rows();
  if (n == 1) return a;
  LaurentMatrix det(1, 1);
  for (int j = 0; j < n; ++j) {
    const LaurentMatrix term = a.entry(0, j) * determinant(minorOf(a, 0, j));
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

LaurentMatrix adjugate(const LaurentMatrix& a) {
  require(a.rows() == a.cols(), "adjugate of a non-square symbol");
  const int n = a.rows();
  if (n == 1) return LaurentMatrix::scalar(1.0);
  std::map<int, CMatrix> c;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const LaurentMatrix cof = determinant(minorOf(a, i, j));
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      for (const auto& [p, m] : cof.coefficients()) {
        auto it = c.try_emplace(p, CMatrix::Zero(n, n)).first;
        it->second(j, i) = sign * m(0, 0);
      }
    }
  }
  return LaurentMatrix(n, n, std::move(c));
}

}  // namespace nehari
