#include "io/examples.hpp"

#include <string>

namespace nehari::examples {

namespace {

// Closest doubles to 1/√2 and 1/(3√2), spelled out so the data does not
// depend on the platform's sqrt.
const double kA = std::stod("0.70710678118654746");
const double kB = std::stod("0.23570226039551581");

CMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

LaurentMatrix takagiSymbol() {
  return LaurentMatrix(2, 2,
                       {{-5, m2(kA, 0, 0, 0)},
                        {-4, m2(0, 0, kA, 0)},
                        {-2, m2(0, -kB, 0, 0)},
                        {-1, m2(kB, 0, 0, kB)}});
}

LaurentMatrix takagiApproximant() { return LaurentMatrix(2, 2, {{-1, m2(kB, 0, 0, 0)}}); }

LaurentMatrix takagiLeftFactor() {
  return LaurentMatrix(2, 2, {{-1, m2(kA, 0, 0, 0)}, {0, m2(0, -kA, kA, 0)}, {1, m2(0, 0, 0, kA)}});
}

LaurentMatrix takagiDiagonalFactor() {
  return LaurentMatrix(2, 2, {{-4, m2(1, 0, 0, 0)}, {-2, m2(0, 0, 0, 1.0 / 3.0)}});
}

}  // namespace nehari::examples
