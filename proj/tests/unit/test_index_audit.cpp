#include <cmath>

#include "aak/aak.hpp"
#include "doctest.h"
#include "index/index_audit.hpp"
#include "io/examples.hpp"
#include "support.hpp"

using namespace nehari;
using namespace testsupport;

namespace {

Settings small() {
  Settings s;
  s.gridSize = 1024;
  return s;
}

const AuditCheck& check(const std::vector<AuditCheck>& checks, const std::string& name) {
  const AuditCheck* c = findCheck(checks, name);
  REQUIRE(c != nullptr);
  return *c;
}

bool is(const AuditCheck& c, CheckStatus s) { return c.status == s; }

CMatrix column(std::initializer_list<LaurentMatrix> fs, int grid) {
  std::vector<RationalMatrix> cols;
  for (const LaurentMatrix& f : fs) cols.emplace_back(f);
  return sampleColumns(cols, grid);
}

LaurentMatrix vec2(std::map<int, std::pair<Complex, Complex>> c) {
  std::map<int, CMatrix> m;
  for (const auto& [p, v] : c) {
    CMatrix x(2, 1);
    x << v.first, v.second;
    m[p] = x;
  }
  return LaurentMatrix(2, 1, std::move(m));
}

LaurentMatrix scalarPhi() { return LaurentMatrix(1, 1, {{-2, CMatrix::Constant(1, 1, 1.0)}, {-1, CMatrix::Constant(1, 1, 2.0)}}); }

}  // namespace

TEST_CASE("buildU on the 2x2 example") {
  const UFactorization f = buildU(examples::takagiSymbol(), examples::takagiApproximant(), small());
  const double a = 1.0 / kRt2;
  const LaurentMatrix expected(2, 2, {{-3, mat2(a, 0, a, 0)}, {-1, mat2(0, -a / 3.0, 0, a / 3.0)}});
  for (int j = 0; j < 64; ++j) {
    const Complex z = gridPoint(j, 64);
    CHECK((f.U.evaluate(z) - naiveEvaluate(expected, z)).norm() < 1e-10);
    CHECK((f.B.evaluate(z) - mat2(z, 0, 0, 1)).norm() < 1e-10);
  }
  CHECK(f.singularValueResidual < 1e-10);
}

TEST_CASE("E spaces of the 2x2 example") {
  const int grid = 1024;
  const ESpaces e = computeESpaces(examples::takagiSymbol(), examples::takagiApproximant(), small());
  CHECK(e.kernel.dimension() == 6);
  CHECK(e.dimPlain() == 5);
  CHECK(e.plainByProduct.size() == 5);
  CHECK(e.dimJ() == 4);
  CHECK(e.jInPlain < 1e-8);
  CHECK(e.plainInJ > 1e-2);

  const CMatrix plain = sampleColumns(e.plain, grid);
  const CMatrix j = sampleColumns(e.j, grid);
  // Hand-checkable witnesses: z e₁, z² e₁, z³ e₁, e₂, (z⁴, −3z) span E_plain; e₂ ∈ E_J.
  const CMatrix oracle = column({vec2({{1, {1, 0}}}), vec2({{2, {1, 0}}}), vec2({{3, {1, 0}}}), vec2({{0, {0, 1}}}),
                                 vec2({{4, {1, 0}}, {1, {0, -3}}})},
                                grid);
  CHECK(subspaceResidual(oracle, plain) < 1e-9);
  CHECK(subspaceResidual(plain, oracle) < 1e-9);
  CHECK(subspaceResidual(column({vec2({{0, {0, 1}}})}, grid), j) < 1e-9);
}

TEST_CASE("E spaces and R for a scalar symbol") {
  const LaurentMatrix phi = scalarPhi();
  const RationalScalar q = bestMeromorphic(phi, 1);
  const ESpaces e = computeESpaces(phi, q, small());
  CHECK(e.dimJ() == 1);
  CHECK(e.dimPlain() == 2);

  const SchmidtCharacterization r = schmidtCharacterizationAudit(phi, q, 1, e, small());
  CHECK(r.mu == 1);
  CHECK(r.dimR() == 1);
  const CMatrix target = column({LaurentMatrix(1, 1, {{0, CMatrix::Constant(1, 1, 1.0 - kRt2)}, {1, CMatrix::Constant(1, 1, 1.0)}})}, 1024);
  CHECK(subspaceResidual(target, sampleColumns(r.basis, 1024)) < 1e-7);
  CHECK(check(r.checks, "R-vs-schmidt-space").passed());

  // k = 0 for z̄: R = span{1}.
  const LaurentMatrix zbar = LaurentMatrix::scalar(1.0, -1);
  const SchmidtCharacterization r0 = schmidtCharacterizationAudit(zbar, RationalMatrix(LaurentMatrix(1, 1)), 0, small());
  CHECK(r0.dimR() == 1);
  CHECK(check(r0.checks, "R-vs-schmidt-space").passed());
}

TEST_CASE("veryBadAudit") {
  const UFactorization f = buildU(examples::takagiSymbol(), examples::takagiApproximant(), small());
  const VeryBadReport u = veryBadAudit(f.U, small());
  CHECK(u.kernelDimension.value() == 4);
  CHECK(u.shiftedCokernel.value() == 0);
  CHECK(u.spans.size() == 2);
  for (const AuditCheck& c : u.checks) CHECK_MESSAGE(c.passed(), c.name << ": " << c.details);

  const VeryBadReport d = veryBadAudit(RationalMatrix(LaurentMatrix(2, 2, {{-1, mat2(1, 0, 0, 0.5)}})), small());
  CHECK(check(d.checks, "span").passed());

  const VeryBadReport id = veryBadAudit(RationalMatrix(LaurentMatrix::identity(2)), small());
  CHECK(is(check(id.checks, "span"), CheckStatus::Fail));
}

TEST_CASE("indexAudit on the 2x2 example") {
  const IndexAuditReport r = indexAudit(examples::takagiSymbol(), examples::takagiApproximant(), 1, small());
  CHECK(r.windingDet.value() == -6);
  CHECK(r.ind.value() == 6);
  CHECK(r.dimKer.value() == 6);
  CHECK(r.dimCoker.value() == 0);
  CHECK(r.mu == 3);
  CHECK(r.dimEPlain.value() == 5);
  CHECK(r.dimEJ.value() == 4);
  CHECK(r.rhsMu() == 5);
  CHECK(check(r.checks, "C1").passed());
  CHECK(check(r.checks, "C2").passed());
  CHECK(is(check(r.checks, "C3"), CheckStatus::Fail));
  CHECK(check(r.checks, "C4").passed());
  CHECK(is(check(r.checks, "C5"), CheckStatus::Fail));
  CHECK(is(check(r.checks, "C6"), CheckStatus::NotApplicable));
  CHECK(check(r.checks, "E_J-in-E_plain").passed());
  CHECK(check(r.checks, "rank-H_Q").passed());
}

TEST_CASE("indexAudit on a scalar symbol and a failed candidate") {
  const LaurentMatrix phi = scalarPhi();
  const IndexAuditReport r = indexAudit(phi, bestMeromorphic(phi, 1), 1, small());
  CHECK(r.ind.value() == 3);
  CHECK(r.dimEJ.value() == 1);
  CHECK(check(r.checks, "C4").passed());
  CHECK(check(r.checks, "C5").passed());
  CHECK(is(check(r.checks, "C3"), CheckStatus::Fail));

  // Q = 0 at k = 1: certificate fails, E-dependent checks do not apply.
  const IndexAuditReport bad = indexAudit(phi, RationalMatrix(LaurentMatrix(1, 1)), 1, small());
  CHECK_FALSE(check(bad.checks, "superoptimal-candidate").passed());
  CHECK(is(check(bad.checks, "C4"), CheckStatus::NotApplicable));
  CHECK_FALSE(bad.dimEJ.has_value());
}
