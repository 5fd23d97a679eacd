#include "io/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace nehari::io {

namespace {

Json optionalInt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json doubles(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json ints(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json complexList(const std::vector<Complex>& v) {
  Json a = Json::array();
  for (Complex c : v) a.push_back(Json::array({c.real(), c.imag()}));
  return a;
}

std::string formatFloat(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

void renderInto(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        renderInto(it.value(), indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const Json& e : j) flat = flat && !e.is_structured();
      if (flat) {
        out += "[";
        for (size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          renderInto(j[i], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        renderInto(j[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += formatFloat(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

Json configJson(const RunConfiguration& config) {
  const Settings& s = config.settings;
  return {{"grid_size", s.gridSize},
          {"tolerances", {{"rank", s.rankTolerance}, {"constancy", s.constancyTolerance}, {"unitarity", s.unitarityTolerance}}},
          {"seed", config.seed},
          {"output", config.output.empty() ? Json("-") : Json(config.output)}};
}

Json reportHeader(const std::string& command, const RunConfiguration& config) {
  return {{"schema", 1}, {"command", command}, {"config", configJson(config)}};
}

Json checksJson(const std::vector<AuditCheck>& checks) {
  Json a = Json::array();
  for (const AuditCheck& c : checks) a.push_back({{"name", c.name}, {"status", toString(c.status)}, {"details", c.details}});
  return a;
}

Json singularJson(const SingularData& sd) {
  Json clusters = Json::array();
  for (int k = 0; k < static_cast<int>(sd.values.size()); k = sd.clusterBegin(k) + sd.multiplicity(k)) {
    if (sd.value(k) == 0.0) {
      clusters.push_back({{"first_index", k}, {"value", 0.0}, {"multiplicity", nullptr}});
      break;
    }
    clusters.push_back({{"first_index", k}, {"value", sd.value(k)}, {"multiplicity", sd.multiplicity(k)}});
  }
  return {{"singular_values", doubles(sd.values)}, {"clusters", clusters}, {"hankel_rank", sd.rank()}};
}

Json certificateJson(const SuperoptCertificate& cert) {
  Json spans = Json::array();
  for (const PointwiseSchmidtSpan& s : cert.spans)
    spans.push_back({{"sigma", s.sigma},
                     {"kernel_dimension", s.kernelDimension},
                     {"witnesses", s.witnessCount},
                     {"expected_dimensions", ints(s.expected)},
                     {"observed_dimensions", ints(s.observed)},
                     {"passed", s.passed}});
  return {{"k", cert.k},
          {"s_k", cert.level},
          {"sup_norm", cert.supNorm},
          {"t_values", doubles(cert.values.t)},
          {"t_deviation", doubles(cert.values.deviation)},
          {"max_deviation", cert.values.maxDeviation},
          {"membership",
           {{"member", cert.membership.member},
            {"rank_H_Q", cert.membership.rank},
            {"residual", cert.membership.residual},
            {"blaschke_degree", cert.membership.product.degree()}}},
          {"spans", spans},
          {"checks", checksJson(cert.checks)},
          {"verdict", cert.verdict ? "pass" : "fail"}};
}

Json constructionJson(const PyConstruction& py) {
  Json attempts = Json::array();
  for (const PyAttempt& a : py.attempts)
    attempts.push_back({{"budget", a.budget}, {"passed", a.passed}, {"outcome", a.outcome}});
  return {{"k", py.k},
          {"s_k", py.s},
          {"q", symbolToJson(py.q)},
          {"budget", py.budget},
          {"attempts", attempts},
          {"xi", symbolToJson(py.xi)},
          {"eta", symbolToJson(py.eta)},
          {"xi_inner_zeros", complexList(py.xiSplit.zeros)},
          {"eta_inner_zeros", complexList(py.etaSplit.zeros)},
          {"V", symbolToJson(py.V)},
          {"W", symbolToJson(py.W)},
          {"u0", symbolToJson(py.u0)},
          {"psi_prime", symbolToJson(py.psiPrime)},
          {"e_prime", symbolToJson(py.errorPrime)},
          {"factorization_residual", py.factorizationResidual},
          {"unitarity_residual", py.unitarityResidual},
          {"certificate", certificateJson(py.certificate)}};
}

Json indexAuditJson(const IndexAuditReport& r) {
  return {{"k", r.k},
          {"singular_values", doubles(r.singularValues)},
          {"mu", r.mu},
          {"t_values", doubles(r.t)},
          {"winding_det", optionalInt(r.windingDet)},
          {"ind", optionalInt(r.ind)},
          {"dim_ker", optionalInt(r.dimKer)},
          {"dim_coker", optionalInt(r.dimCoker)},
          {"dim_E_plain", optionalInt(r.dimEPlain)},
          {"dim_E_J", optionalInt(r.dimEJ)},
          {"rhs_plain", optionalInt(r.rhsPlain())},
          {"rhs_J", optionalInt(r.rhsJ())},
          {"rhs_mu", r.mu > 0 ? Json(r.rhsMu()) : Json(nullptr)},
          {"checks", checksJson(r.checks)},
          {"certificate", certificateJson(r.certificate)}};
}

Json veryBadJson(const VeryBadReport& r) {
  Json spans = Json::array();
  for (const PointwiseSchmidtSpan& s : r.spans)
    spans.push_back({{"sigma", s.sigma},
                     {"witnesses", s.witnessCount},
                     {"expected_dimensions", ints(s.expected)},
                     {"observed_dimensions", ints(s.observed)},
                     {"passed", s.passed}});
  return {{"n", r.n},
          {"t_values", doubles(r.values.t)},
          {"dim_ker", optionalInt(r.kernelDimension)},
          {"dim_coker_shifted", optionalInt(r.shiftedCokernel)},
          {"spans", spans},
          {"checks", checksJson(r.checks)}};
}

Json schmidtJson(const SchmidtCharacterization& a) {
  Json basis = Json::array();
  for (const RationalMatrix& f : a.basis) basis.push_back(symbolToJson(f));
  return {{"k", a.k},
          {"s_k", a.level},
          {"mu", a.mu},
          {"dim_E_plain", a.dimPlain},
          {"dim_norm_attaining", a.dimNormAttaining},
          {"dim_R", a.dimR()},
          {"R_in_schmidt_residual", a.rInSchmidt},
          {"schmidt_in_R_residual", a.schmidtInR},
          {"R_basis", basis},
          {"checks", checksJson(a.checks)}};
}

Json scalarSuiteJson(const ScalarSuiteResult& result) {
  Json cases = Json::array();
  int formula = 0, ej = 0, constant = 0, errors = 0;
  double worst = 0.0;
  for (const ScalarSuiteCase& c : result.cases) {
    formula += c.formulaHolds;
    ej += c.ejMatches;
    constant += c.constant;
    errors += !c.error.empty();
    worst = std::max(worst, c.modulusDeviation);
    cases.push_back({{"index", c.index},
                     {"degree", c.degree},
                     {"k", c.k},
                     {"phi", symbolToJson(c.phi)},
                     {"s_k", c.level},
                     {"mu", c.mu},
                     {"winding", c.winding},
                     {"ind", c.ind},
                     {"two_k_plus_mu", 2 * c.k + c.mu},
                     {"dim_E_J", c.dimEJ},
                     {"modulus_deviation", c.modulusDeviation},
                     {"formula_holds", c.formulaHolds},
                     {"E_J_equals_mu", c.ejMatches},
                     {"ill_conditioned", c.illConditioned},
                     {"error", c.error.empty() ? Json(nullptr) : Json(c.error)}});
  }
  const int n = static_cast<int>(result.cases.size());
  return {{"count", result.count},
          {"seed", result.seed},
          {"max_degree", result.maxDegree},
          {"summary",
           {{"instances", n},
            {"skipped_levels", result.skipped},
            {"constant_modulus", constant},
            {"formula_holds", formula},
            {"E_J_equals_mu", ej},
            {"errors", errors},
            {"ill_conditioned", result.illConditioned()},
            {"max_modulus_deviation", worst},
            {"all_passed", result.allPassed()}}},
          {"instances", cases}};
}

std::string scalarSuiteTable(const ScalarSuiteResult& result) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%5s %3s %2s %20s %3s %4s %4s %8s %12s %s\n", "case", "deg", "k", "s_k", "mu", "ind",
                "2k+mu", "dim E_J", "|phi-q| dev", "status");
  os << line;
  int passed = 0;
  for (const ScalarSuiteCase& c : result.cases) {
    passed += c.passed();
    std::snprintf(line, sizeof line, "%5d %3d %2d %20.12e %3d %4d %5d %8d %12.3e %s\n", c.index, c.degree, c.k, c.level,
                  c.mu, c.ind, 2 * c.k + c.mu, c.dimEJ, c.modulusDeviation,
                  c.error.empty() ? (c.passed() ? "ok" : "FAIL") : c.error.c_str());
    os << line;
  }
  const size_t scored = result.cases.size() - static_cast<size_t>(result.illConditioned());
  os << passed << "/" << scored << " instances passed (" << result.skipped << " levels skipped by the gap filter, "
     << result.illConditioned() << " ill-conditioned)\n";
  return os.str();
}

std::string render(const Json& j) {
  std::string out;
  renderInto(j, 0, out);
  out += "\n";
  return out;
}

}  // namespace nehari::io
