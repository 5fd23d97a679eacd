#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symalg/settings.hpp"
#include "symalg/laurent.hpp"

namespace nehari {

/// One (φ, k) instance of the randomized scalar index suite.
struct ScalarSuiteCase {
  int index = 0;   // which random symbol
  int degree = 0;  // antianalytic degree of φ
  int k = 0;
  LaurentMatrix phi;
  double level = 0.0;  // s_k
  int mu = 0;
  int winding = 0;
  int ind = 0;
  int dimEJ = -1;
  double modulusDeviation = 0.0;
  bool constant = false;
  bool formulaHolds = false;  // ind = 2k + μ
  bool ejMatches = false;     // dim E_J = μ
  std::string error;          // set when the instance threw
  bool illConditioned = false;  // q has a pole too close to the circle; not scored

  bool passed() const { return error.empty() && constant && formulaHolds && ejMatches; }
};

struct ScalarSuiteResult {
  int count = 0;
  std::uint64_t seed = 0;
  int maxDegree = 0;
  std::vector<ScalarSuiteCase> cases;
  int skipped = 0;  // (φ, k) pairs rejected by the gap filter
  int illConditioned() const;
  /// Every scored (not ill-conditioned) instance passed.
  bool allPassed() const;
};

/// φ = Σ_{j=1..d} a_j z̄^j + b₀ + b₁z with real coefficients, d uniform in
/// [1, maxDegree], a_j uniform in [−1, 1], b uniform in [−½, ½]. Levels
/// k ∈ {0, 1, 2} are kept when s_k > 1e-6·s₀ and s_k is separated by more
/// than 1e-4 from its neighbours s_{k−1} and s_{k+μ}.
ScalarSuiteResult runScalarSuite(int count, std::uint64_t seed, int maxDegree,
                                 const Settings& settings = defaultSettings());

}  // namespace nehari
