#pragma once

#include <utility>
#include <vector>

#include "symalg/error.hpp"
#include "symalg/types.hpp"

namespace nehari {

/// Dense univariate polynomial with complex coefficients, stored in ascending
/// order of powers. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coefficients);

  static Polynomial constant(Complex c);
  static Polynomial monomial(int degree, Complex c = 1.0);
  /// leading · Π (z − r)
  static Polynomial fromRoots(const std::vector<Complex>& roots, Complex leading = 1.0);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool isZero() const { return coefficients_.empty(); }
  const std::vector<Complex>& coefficients() const { return coefficients_; }
  Complex operator[](int power) const;
  Complex leading() const { return isZero() ? Complex{} : coefficients_.back(); }

  Complex evaluate(Complex z) const;
  /// Σ |c_p| r^p; the natural scale for relative vanishing tests at |z| = r.
  double absoluteScale(double radius) const;
  double maxAbsCoefficient() const;

  Polynomial derivative() const;
  Polynomial scaled(Complex factor) const;
  /// Drops leading coefficients with |c| <= relTol · max|c|.
  Polynomial trimmed(double relTol) const;
  /// z^deg · conj(p(1/conj(z))): roots r map to 1/conj(r).
  Polynomial reflected() const;

  /// Quotient of p / (z − r), remainder discarded. Uses the numerically
  /// stable sweep direction for |r| <= 1 and |r| > 1.
  Polynomial deflate(Complex root) const;
  /// Long division by a monic divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& monicDivisor) const;

  /// Companion-matrix eigenvalues followed by a Newton polish; exact zero
  /// roots are split off first. Sorted by modulus, then argument.
  std::vector<Complex> roots() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();

  std::vector<Complex> coefficients_;
};

/// Orders complex numbers by modulus, ties (within kRootClusterRadius) by
/// ascending argument in [0, 2π).
bool rootOrder(Complex a, Complex b);

/// Groups roots lying within `radius` of each other (single linkage).
/// Each cluster is reported as (mean, multiplicity).
std::vector<std::pair<Complex, int>> clusterRoots(const std::vector<Complex>& roots,
                                                   double radius);

}  // namespace nehari
