#include "hankel/model_space.hpp"

#include <algorithm>
#include <cmath>

namespace nehari {

ModelSpace::ModelSpace(std::vector<Complex> nodes) : nodes_(std::move(nodes)) {
  for (const Complex l : nodes_) require(std::abs(l) < 1.0, "model-space node outside the open disc");
}

ModelSpace ModelSpace::forPoles(const RationalMatrix& symbol) {
  std::vector<Complex> nodes(static_cast<size_t>(std::max(0, -symbol.numerator().lo())), Complex{});
  for (const Complex r : symbol.rootsInside()) nodes.push_back(r);
  return ModelSpace(std::move(nodes));
}

bool ModelSpace::isPolynomial() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [](Complex l) { return l == Complex{}; });
}

CMatrix ModelSpace::samples(int gridSize) const {
  const int d = dimension();
  CMatrix s(gridSize, d);
  for (int t = 0; t < gridSize; ++t) {
    const Complex z = gridPoint(t, gridSize);
    Complex prefix = 1.0;
    for (int j = 0; j < d; ++j) {
      const Complex l = nodes_[static_cast<size_t>(j)];
      s(t, j) = std::sqrt(1.0 - std::norm(l)) / (1.0 - std::conj(l) * z) * prefix;
      prefix *= (z - l) / (1.0 - std::conj(l) * z);
    }
  }
  return s;
}

RationalMatrix ModelSpace::combination(const CVector& x, int n) const {
  const int d = dimension();
  require(x.size() == static_cast<Eigen::Index>(d) * n, "coordinate vector has the wrong length");
  // Over the common denominator D = Π (1 − λ̄_j z), φ_j·D is the polynomial
  // sqrt(1 − |λ_j|²) Π_{i<j} (z − λ_i) Π_{i>j} (1 − λ̄_i z).
  std::vector<Complex> roots;
  for (const Complex l : nodes_)
    if (l != Complex{}) roots.push_back(1.0 / std::conj(l));
  std::map<int, CMatrix> coeffs;
  for (int j = 0; j < d; ++j) {
    Polynomial p = Polynomial::constant(std::sqrt(1.0 - std::norm(nodes_[static_cast<size_t>(j)])));
    for (int i = 0; i < d; ++i) {
      const Complex l = nodes_[static_cast<size_t>(i)];
      if (i < j) p = p * Polynomial({-l, 1.0});
      else if (i > j && l != Complex{}) p = p * Polynomial({1.0, -std::conj(l)});
    }
    for (int power = 0; power <= p.degree(); ++power) {
      auto it = coeffs.try_emplace(power, CMatrix::Zero(n, 1)).first;
      it->second += p[power] * x.segment(static_cast<Eigen::Index>(j) * n, n);
    }
  }
  return RationalMatrix(LaurentMatrix(n, 1, std::move(coeffs)), std::move(roots));
}

CVector ModelSpace::coordinates(const GridSymbol& f) const {
  require(f.cols == 1, "coordinates expect a column function");
  const int n = f.rows;
  const int d = dimension();
  const CMatrix s = samples(f.gridSize());
  CVector x = CVector::Zero(static_cast<Eigen::Index>(d) * n);
  for (int t = 0; t < f.gridSize(); ++t)
    for (int j = 0; j < d; ++j)
      x.segment(static_cast<Eigen::Index>(j) * n, n) += std::conj(s(t, j)) * f.samples[static_cast<size_t>(t)].col(0);
  return x / static_cast<double>(f.gridSize());
}

}  // namespace nehari
