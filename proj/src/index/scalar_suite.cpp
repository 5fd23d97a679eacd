#include "index/scalar_suite.hpp"

#include <random>

#include "aak/aak.hpp"
#include "hankel/hankel.hpp"
#include "index/index_audit.hpp"

namespace nehari {

namespace {

constexpr double kGap = 1e-4;

bool admissible(const SingularData& sd, int k) {
  const double s0 = sd.value(0);
  const double sk = sd.value(k);
  if (!(sk > 1e-6 * s0)) return false;
  if (k >= 1 && !(sd.value(k - 1) - sk > kGap)) return false;
  const int mu = sd.multiplicity(k);
  const double next = sd.value(sd.clusterBegin(k) + mu);
  return sk - next > kGap;
}

}  // namespace

int ScalarSuiteResult::illConditioned() const {
  int n = 0;
  for (const ScalarSuiteCase& c : cases) n += c.illConditioned;
  return n;
}

bool ScalarSuiteResult::allPassed() const {
  for (const ScalarSuiteCase& c : cases)
    if (!c.illConditioned && !c.passed()) return false;
  return true;
}

ScalarSuiteResult runScalarSuite(int count, std::uint64_t seed, int maxDegree, const Settings& settings) {
  require(count >= 0, "count must be nonnegative");
  require(maxDegree >= 1, "max degree must be at least 1");
  settings.validate();
  ScalarSuiteResult result;
  result.count = count;
  result.seed = seed;
  result.maxDegree = maxDegree;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degreeDist(1, maxDegree);
  std::uniform_real_distribution<double> anti(-1.0, 1.0);
  std::uniform_real_distribution<double> ana(-0.5, 0.5);

  for (int i = 0; i < count; ++i) {
    const int d = degreeDist(rng);
    std::map<int, CMatrix> c;
    for (int p = -d; p <= 1; ++p)
      c[p] = CMatrix::Constant(1, 1, Complex(p < 0 ? anti(rng) : ana(rng), 0.0));
    const LaurentMatrix phi(1, 1, std::move(c));
    const SingularData sd = singularValues(buildHankel(phi));

    for (int k = 0; k <= 2; ++k) {
      if (!admissible(sd, k)) {
        ++result.skipped;
        continue;
      }
      ScalarSuiteCase item;
      item.index = i;
      item.degree = -phi.lo();
      item.k = k;
      item.phi = phi;
      item.level = sd.value(k);
      item.mu = sd.multiplicity(k);
      try {
        const RationalScalar q = bestMeromorphic(phi, k);
        const ScalarIndexRecord rec = verifyScalarIndex(phi, q, k, settings.gridSize);
        item.winding = rec.winding;
        item.ind = rec.ind;
        item.modulusDeviation = rec.modulusDeviation;
        item.constant = rec.modulusDeviation <= settings.constancyTolerance;
        item.formulaHolds = rec.formulaHolds;
        const UFactorization f = buildU(phi, q, settings);
        item.dimEJ = kernelToeplitzExact(f.U, settings.gridSize).dimension();
        item.ejMatches = item.dimEJ == item.mu;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InternalInconsistency) throw;
        item.illConditioned = e.kind() == ErrorKind::IllConditioned;
        item.error = std::string(toString(e.kind())) + ": " + e.what();
      }
      result.cases.push_back(item);
    }
  }
  return result;
}

}  // namespace nehari
