#pragma once

#include "symalg/laurent.hpp"

namespace nehari::examples {

// 2×2 Nehari–Takagi instance used throughout the tests and by
// `nehari example nehari-takagi-2x2`:
//   Φ = (1/√2)[[z̄⁵ + z̄/3, −z̄²/3], [z̄⁴, z̄/3]],   level k = 1,
//   Q = (1/√2)·diag(z̄/3, 0),
//   Φ − Q = (1/√2)[[z̄, −1], [1, z]] · diag(z̄⁴, z̄²/3).
inline constexpr int kTakagiLevel = 1;

LaurentMatrix takagiSymbol();
LaurentMatrix takagiApproximant();
LaurentMatrix takagiLeftFactor();
LaurentMatrix takagiDiagonalFactor();

}  // namespace nehari::examples
