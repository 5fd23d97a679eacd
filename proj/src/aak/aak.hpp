#pragma once

#include "symalg/laurent.hpp"
#include "symalg/rational.hpp"

namespace nehari {

/// Best approximation of a scalar symbol by functions with at most k poles
/// in the disc: q = φ − (H_φ v)/v = P₊(φv)/v for a Schmidt vector v at level k
/// (the canonical first basis vector when the level is degenerate).
///
/// Throws NotKAdmissible when s_k is not separated from s_(k−1). When
/// s_k = 0, φ already has at most k poles and q = φ.
RationalScalar bestMeromorphic(const LaurentMatrix& phi, int k);
/// Rational symbols: the Hankel operator lives on the model space of the
/// symbol's poles in the disc; v and H_φ v are rational there.
RationalScalar bestMeromorphic(const RationalScalar& phi, int k, int gridSize = kDefaultGridSize);
/// The error φ − q = (H_φ v)/v itself (0 when s_k = 0).
RationalScalar bestMeromorphicError(const RationalScalar& phi, int k, int gridSize = kDefaultGridSize);

struct ScalarIndexRecord {
  int mu = 0;
  int winding = 0;
  int ind = 0;
  bool formulaHolds = false;
  double errorModulus = 0.0;    // grid mean of |φ − q|
  double modulusDeviation = 0.0;  // max grid deviation from the mean
};

/// ind T_{φ−q} = −winding(φ − q) compared against 2k + μ. Throws
/// NotABestApproximant when |φ − q| is not constant within 1e-6.
ScalarIndexRecord verifyScalarIndex(const LaurentMatrix& phi, const RationalScalar& q, int k,
                                    int gridSize = kDefaultGridSize);

}  // namespace nehari
