#include "symalg/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace nehari {

namespace {

// Diagonal similarity with powers of two so that each row and column have
// comparable norms (Parlett–Reinsch); Eigen's complex solver does not balance,
// and companion matrices of badly scaled polynomials lose every small root
// without it.
void balance(CMatrix& a) {
  constexpr double kRadix = 2.0;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / kRadix;
      while (c < g) {
        f *= kRadix;
        c *= kRadix * kRadix;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kRadix * kRadix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

void Polynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == Complex{}) coefficients_.pop_back();
}

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, Complex c) {
  std::vector<Complex> coeffs(static_cast<size_t>(degree) + 1, Complex{});
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::fromRoots(const std::vector<Complex>& roots, Complex leading) {
  std::vector<Complex> coeffs{leading};
  for (const Complex r : roots) {
    std::vector<Complex> next(coeffs.size() + 1, Complex{});
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return Polynomial(std::move(coeffs));
}

Complex Polynomial::operator[](int power) const {
  if (power < 0 || power > degree()) return {};
  return coefficients_[static_cast<size_t>(power)];
}

Complex Polynomial::evaluate(Complex z) const {
  Complex acc{};
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::absoluteScale(double radius) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * radius + std::abs(*it);
  return acc;
}

double Polynomial::maxAbsCoefficient() const {
  double m = 0.0;
  for (const Complex c : coefficients_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Complex> d(coefficients_.size() - 1);
  for (size_t i = 1; i < coefficients_.size(); ++i) d[i - 1] = static_cast<double>(i) * coefficients_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::scaled(Complex factor) const {
  std::vector<Complex> c = coefficients_;
  for (Complex& x : c) x *= factor;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::trimmed(double relTol) const {
  const double threshold = relTol * maxAbsCoefficient();
  std::vector<Complex> c = coefficients_;
  while (!c.empty() && std::abs(c.back()) <= threshold) c.pop_back();
  return Polynomial(std::move(c));
}

Polynomial Polynomial::reflected() const {
  std::vector<Complex> c(coefficients_.rbegin(), coefficients_.rend());
  for (Complex& x : c) x = std::conj(x);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::deflate(Complex root) const {
  const int d = degree();
  if (d < 1) return {};
  std::vector<Complex> q(static_cast<size_t>(d), Complex{});
  if (std::abs(root) <= 1.0) {
    q[static_cast<size_t>(d - 1)] = coefficients_[static_cast<size_t>(d)];
    for (int i = d - 1; i >= 1; --i)
      q[static_cast<size_t>(i - 1)] = coefficients_[static_cast<size_t>(i)] + root * q[static_cast<size_t>(i)];
  } else {
    q[0] = -coefficients_[0] / root;
    for (int i = 1; i < d; ++i)
      q[static_cast<size_t>(i)] = (q[static_cast<size_t>(i - 1)] - coefficients_[static_cast<size_t>(i)]) / root;
  }
  return Polynomial(std::move(q));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& monicDivisor) const {
  const int dd = monicDivisor.degree();
  require(dd >= 0, "division by the zero polynomial");
  if (degree() < dd) return {Polynomial{}, *this};
  std::vector<Complex> rem = coefficients_;
  std::vector<Complex> quot(static_cast<size_t>(degree() - dd) + 1, Complex{});
  const Complex lead = monicDivisor.leading();
  for (int i = degree(); i >= dd; --i) {
    const Complex f = rem[static_cast<size_t>(i)] / lead;
    quot[static_cast<size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= f * monicDivisor[j];
  }
  rem.resize(static_cast<size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::vector<Complex> Polynomial::roots() const {
  const Polynomial p = trimmed(1e-14);
  if (p.degree() < 1) return {};
  const double scale = p.maxAbsCoefficient();
  int zeros = 0;
  while (zeros < p.degree() && std::abs(p[zeros]) <= 1e-14 * scale) ++zeros;
  std::vector<Complex> result(static_cast<size_t>(zeros), Complex{});

  const std::vector<Complex> tail(p.coefficients().begin() + zeros, p.coefficients().end());
  const Polynomial reduced(tail);
  const int d = reduced.degree();
  if (d >= 1) {
    CMatrix companion = CMatrix::Zero(d, d);
    const Complex lead = reduced.leading();
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -reduced[i] / lead;
    balance(companion);
    Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
    const CVector& eig = solver.eigenvalues();
    const Polynomial dp = reduced.derivative();
    for (int i = 0; i < d; ++i) {
      Complex r = eig(i);
      // Newton polish, never farther than a tenth of the way to a neighbour.
      double neighbour = std::numeric_limits<double>::infinity();
      for (int j = 0; j < d; ++j)
        if (j != i) neighbour = std::min(neighbour, std::abs(eig(j) - eig(i)));
      for (int iter = 0; iter < 3; ++iter) {
        const Complex value = reduced.evaluate(r);
        const Complex slope = dp.evaluate(r);
        if (std::abs(slope) < 1e-300) break;
        const Complex candidate = r - value / slope;
        if (std::abs(candidate - eig(i)) > 0.1 * neighbour) break;
        if (std::abs(reduced.evaluate(candidate)) < std::abs(value)) r = candidate;
        else break;
      }
      result.push_back(r);
    }
  }
  std::sort(result.begin(), result.end(), rootOrder);
  return result;
}

bool rootOrder(Complex a, Complex b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (std::abs(ma - mb) > kRootClusterRadius) return ma < mb;
  auto arg = [](Complex z) {
    double t = std::arg(z);
    return t < 0 ? t + 2.0 * kPi : t;
  };
  return arg(a) < arg(b);
}

std::vector<std::pair<Complex, int>> clusterRoots(const std::vector<Complex>& roots, double radius) {
  const size_t n = roots.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) <= radius) parent[find(i)] = find(j);

  std::vector<std::pair<Complex, int>> clusters;
  std::vector<long> slot(n, -1);
  for (size_t i = 0; i < n; ++i) {
    const size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(clusters.size());
      clusters.emplace_back(Complex{}, 0);
    }
    auto& c = clusters[static_cast<size_t>(slot[r])];
    c.first += roots[i];
    c.second += 1;
  }
  for (auto& c : clusters) c.first /= static_cast<double>(c.second);
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return rootOrder(a.first, b.first); });
  return clusters;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coefficients_.size(), b.coefficients_.size()), Complex{});
  for (size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled(-1.0); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Complex> c(a.coefficients_.size() + b.coefficients_.size() - 1, Complex{});
  for (size_t i = 0; i < a.coefficients_.size(); ++i)
    for (size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return Polynomial(std::move(c));
}

}  // namespace nehari
