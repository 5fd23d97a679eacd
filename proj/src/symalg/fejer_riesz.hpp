#pragma once

#include "symalg/laurent.hpp"
#include "symalg/polynomial.hpp"

namespace nehari {

/// Outer spectral factor of a nonnegative trigonometric polynomial f:
/// |h(ζ)|² = f(ζ) on the circle, roots of h in |z| ≥ 1 (roots on the circle
/// are shared with f at half multiplicity), h(0) real and ≥ 0.
Polynomial fejerRiesz(const LaurentMatrix& f);

}  // namespace nehari
