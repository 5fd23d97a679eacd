#include "nehari/nehari.h"

#include <cstring>
#include <new>
#include <string>

#include "aak/aak.hpp"
#include "hankel/hankel.hpp"
#include "io/examples.hpp"
#include "io/report.hpp"

using namespace nehari;

struct nehari_config {
  io::RunConfiguration run;
};

struct nehari_symbol {
  RationalMatrix value;
};

struct nehari_report {
  std::string json;
  std::string text;
};

namespace {

thread_local std::string lastError;

nehari_status statusFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return NEHARI_INVALID_INPUT;
    case ErrorKind::NotInvertibleOnCircle: return NEHARI_NOT_INVERTIBLE_ON_CIRCLE;
    case ErrorKind::ResolutionFailure: return NEHARI_RESOLUTION_FAILURE;
    case ErrorKind::NotKAdmissible: return NEHARI_NOT_K_ADMISSIBLE;
    case ErrorKind::DegenerateLevel: return NEHARI_DEGENERATE_LEVEL;
    case ErrorKind::NotABestApproximant: return NEHARI_NOT_A_BEST_APPROXIMANT;
    case ErrorKind::ConstructionFailure: return NEHARI_CONSTRUCTION_FAILURE;
    case ErrorKind::IllConditioned: return NEHARI_ILL_CONDITIONED;
    case ErrorKind::InternalInconsistency: return NEHARI_INTERNAL_INCONSISTENCY;
  }
  return NEHARI_INTERNAL_ERROR;
}

template <class F>
nehari_status guarded(F&& body) {
  try {
    body();
    lastError.clear();
    return NEHARI_OK;
  } catch (const Error& e) {
    lastError = e.what();
    return statusFor(e.kind());
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
    return NEHARI_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    lastError = e.what();
    return NEHARI_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorKind::InvalidInput, std::string(what) + " is null");
}

io::Json merged(io::Json header, const io::Json& body) {
  for (auto it = body.begin(); it != body.end(); ++it) header[it.key()] = it.value();
  return header;
}

void emit(nehari_report** out, const io::Json& j, std::string text = {}) {
  *out = new nehari_report{io::render(j), std::move(text)};
}

const Settings& settingsOf(const nehari_config* c) { return c->run.settings; }

io::Json scalarAak(const LaurentMatrix& phi, int k, const Settings& settings) {
  require(phi.rows() == 1 && phi.cols() == 1, "aak needs a scalar symbol");
  require(k >= 0, "k must be nonnegative");
  const SingularData sd = singularValues(buildHankel(phi));
  const RationalScalar q = bestMeromorphic(phi, k);
  io::Json j = io::singularJson(sd);
  j["k"] = k;
  j["s_k"] = sd.value(k);
  j["mu"] = sd.multiplicity(k) > 0 ? io::Json(sd.multiplicity(k)) : io::Json(nullptr);
  j["q"] = io::symbolToJson(q);
  if (sd.value(k) == 0.0) {
    j["note"] = "s_k = 0: phi has at most k poles and q = phi";
    return j;
  }
  const ScalarIndexRecord rec = verifyScalarIndex(phi, q, k, settings.gridSize);
  j["error_modulus"] = rec.errorModulus;
  j["modulus_deviation"] = rec.modulusDeviation;
  j["winding"] = rec.winding;
  j["ind"] = rec.ind;
  j["two_k_plus_mu"] = 2 * k + rec.mu;
  j["checks"] = io::checksJson({{"ind-equals-2k-plus-mu", statusOf(rec.formulaHolds),
                                  "ind " + std::to_string(rec.ind) + " vs 2k + mu " + std::to_string(2 * k + rec.mu)}});
  return j;
}

io::Json indexAuditBody(const LaurentMatrix& phi, const RationalMatrix& q, int k, const Settings& settings) {
  const IndexAuditReport r = indexAudit(phi, q, k, settings);
  io::Json j = io::indexAuditJson(r);
  if (r.dimEPlain) j["schmidt_characterization"] = io::schmidtJson(schmidtCharacterizationAudit(phi, q, k, settings));
  else j["schmidt_characterization"] = nullptr;
  return j;
}

io::Json takagiPipeline(const Settings& settings) {
  const LaurentMatrix phi = examples::takagiSymbol();
  const LaurentMatrix q = examples::takagiApproximant();
  const int k = examples::kTakagiLevel;
  io::Json j;
  j["example"] = "nehari-takagi-2x2";
  j["phi"] = io::symbolToJson(phi);
  j["q"] = io::symbolToJson(q);

  const SingularData sd = singularValues(buildHankel(phi));
  j["analysis"] = io::singularJson(sd);

  // The displayed factorization of Φ − Q and unitarity of its left factor.
  const LaurentMatrix left = examples::takagiLeftFactor();
  const LaurentMatrix product = left * examples::takagiDiagonalFactor();
  const LaurentMatrix diff = product - (phi - q);
  double unitarity = 0.0;
  for (int t = 0; t < settings.gridSize; ++t) {
    const CMatrix l = left.evaluate(gridPoint(t, settings.gridSize));
    unitarity = std::max(unitarity, (l.adjoint() * l - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff());
  }
  j["factorization"] = {{"product_residual", diff.isZero() ? 0.0 : diff.maxAbsCoefficient()},
                        {"left_unitarity_residual", unitarity}};

  j["certificate"] = io::certificateJson(verifyCandidate(phi, q, k, settings));
  j["construction"] = io::constructionJson(pyConstruct2x2(phi, k, settings));
  j["index_audit"] = indexAuditBody(phi, q, k, settings);
  const UFactorization u = buildU(phi, q, settings);
  j["U"] = io::symbolToJson(u.U);
  j["very_bad_audit_U"] = io::veryBadJson(veryBadAudit(u.U, settings));
  return j;
}

}  // namespace

extern "C" {

const char* nehari_status_name(nehari_status status) {
  switch (status) {
    case NEHARI_OK: return "ok";
    case NEHARI_INVALID_INPUT: return "invalid-input";
    case NEHARI_NOT_INVERTIBLE_ON_CIRCLE: return "not-invertible-on-circle";
    case NEHARI_RESOLUTION_FAILURE: return "resolution-failure";
    case NEHARI_NOT_K_ADMISSIBLE: return "not-k-admissible";
    case NEHARI_DEGENERATE_LEVEL: return "degenerate-level";
    case NEHARI_NOT_A_BEST_APPROXIMANT: return "not-a-best-approximant";
    case NEHARI_CONSTRUCTION_FAILURE: return "construction-failure";
    case NEHARI_ILL_CONDITIONED: return "ill-conditioned";
    case NEHARI_INTERNAL_INCONSISTENCY: return "internal-inconsistency";
    case NEHARI_INTERNAL_ERROR: return "internal-error";
  }
  return "unknown";
}

const char* nehari_last_error(void) { return lastError.c_str(); }

nehari_status nehari_config_create(nehari_config** out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = new nehari_config{io::RunConfiguration{defaultSettings(), 0, {}}};
  });
}

nehari_status nehari_config_set_grid_size(nehari_config* config, int grid_size) {
  return guarded([&] {
    need(config, "config");
    Settings s = config->run.settings;
    s.gridSize = grid_size;
    s.validate();
    config->run.settings = s;
  });
}

nehari_status nehari_config_set_seed(nehari_config* config, uint64_t seed) {
  return guarded([&] {
    need(config, "config");
    config->run.seed = seed;
  });
}

nehari_status nehari_config_set_output(nehari_config* config, const char* path) {
  return guarded([&] {
    need(config, "config");
    config->run.output = path ? path : "";
  });
}

void nehari_config_destroy(nehari_config* config) { delete config; }

nehari_status nehari_symbol_from_file(const char* path, nehari_symbol** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "output pointer");
    *out = new nehari_symbol{io::readSymbolFile(path)};
  });
}

nehari_status nehari_symbol_from_json(const char* text, nehari_symbol** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new nehari_symbol{io::parseSymbol(text)};
  });
}

nehari_status nehari_symbol_example(const char* name, const char* part, nehari_symbol** out) {
  return guarded([&] {
    need(name, "name");
    need(part, "part");
    need(out, "output pointer");
    require(std::strcmp(name, "nehari-takagi-2x2") == 0, std::string("unknown example ") + name);
    const std::string p = part;
    LaurentMatrix value;
    if (p == "phi") value = examples::takagiSymbol();
    else if (p == "q") value = examples::takagiApproximant();
    else if (p == "left-factor") value = examples::takagiLeftFactor();
    else if (p == "diagonal-factor") value = examples::takagiDiagonalFactor();
    else fail(ErrorKind::InvalidInput, "unknown example part " + p);
    *out = new nehari_symbol{RationalMatrix(value)};
  });
}

int nehari_symbol_rows(const nehari_symbol* symbol) { return symbol ? symbol->value.rows() : 0; }
int nehari_symbol_cols(const nehari_symbol* symbol) { return symbol ? symbol->value.cols() : 0; }
void nehari_symbol_destroy(nehari_symbol* symbol) { delete symbol; }

nehari_status nehari_analyze(const nehari_config* config, const nehari_symbol* phi, nehari_report** out) {
  return guarded([&] {
    need(config, "config");
    need(phi, "phi");
    need(out, "output pointer");
    const BlockHankelMatrix h = phi->value.isLaurent() ? buildHankel(phi->value.numerator())
                                                       : buildHankel(phi->value, settingsOf(config).gridSize);
    io::Json body = io::singularJson(singularValues(h));
    body["rows"] = phi->value.rows();
    body["cols"] = phi->value.cols();
    body["depth"] = h.depth();
    emit(out, merged(io::reportHeader("analyze", config->run), body));
  });
}

nehari_status nehari_aak(const nehari_config* config, const nehari_symbol* phi, int k, nehari_report** out) {
  return guarded([&] {
    need(config, "config");
    need(phi, "phi");
    need(out, "output pointer");
    const io::Json body = scalarAak(io::requireLaurent(phi->value, "phi"), k, settingsOf(config));
    emit(out, merged(io::reportHeader("aak", config->run), body));
  });
}

nehari_status nehari_verify_superopt(const nehari_config* config, const nehari_symbol* phi, const nehari_symbol* q,
                                     int k, nehari_report** out) {
  return guarded([&] {
    need(config, "config");
    need(phi, "phi");
    need(q, "q");
    need(out, "output pointer");
    const SuperoptCertificate cert =
        verifyCandidate(io::requireLaurent(phi->value, "phi"), q->value, k, settingsOf(config));
    emit(out, merged(io::reportHeader("verify-superopt", config->run), io::certificateJson(cert)));
  });
}

nehari_status nehari_superopt_2x2(const nehari_config* config, const nehari_symbol* phi, int k, nehari_report** out) {
  return guarded([&] {
    need(config, "config");
    need(phi, "phi");
    need(out, "output pointer");
    const PyConstruction py = pyConstruct2x2(io::requireLaurent(phi->value, "phi"), k, settingsOf(config));
    emit(out, merged(io::reportHeader("superopt-2x2", config->run), io::constructionJson(py)));
  });
}

nehari_status nehari_index_audit(const nehari_config* config, const nehari_symbol* phi, const nehari_symbol* q, int k,
                                 nehari_report** out) {
  return guarded([&] {
    need(config, "config");
    need(phi, "phi");
    need(q, "q");
    need(out, "output pointer");
    const io::Json body = indexAuditBody(io::requireLaurent(phi->value, "phi"), q->value, k, settingsOf(config));
    emit(out, merged(io::reportHeader("index-audit", config->run), body));
  });
}

nehari_status nehari_very_bad_audit(const nehari_config* config, const nehari_symbol* psi, nehari_report** out) {
  return guarded([&] {
    need(config, "config");
    need(psi, "psi");
    need(out, "output pointer");
    const VeryBadReport r = veryBadAudit(psi->value, settingsOf(config));
    emit(out, merged(io::reportHeader("very-bad-audit", config->run), io::veryBadJson(r)));
  });
}

nehari_status nehari_example(const nehari_config* config, const char* name, nehari_report** out) {
  return guarded([&] {
    need(config, "config");
    need(name, "name");
    need(out, "output pointer");
    require(std::strcmp(name, "nehari-takagi-2x2") == 0, std::string("unknown example ") + name);
    emit(out, merged(io::reportHeader("example", config->run), takagiPipeline(settingsOf(config))));
  });
}

nehari_status nehari_scalar_suite(const nehari_config* config, int count, int max_degree, nehari_report** out) {
  return guarded([&] {
    need(config, "config");
    need(out, "output pointer");
    const ScalarSuiteResult r = runScalarSuite(count, config->run.seed, max_degree, settingsOf(config));
    emit(out, merged(io::reportHeader("scalar-suite", config->run), io::scalarSuiteJson(r)), io::scalarSuiteTable(r));
  });
}

const char* nehari_report_json(const nehari_report* report) { return report ? report->json.c_str() : ""; }
const char* nehari_report_text(const nehari_report* report) { return report ? report->text.c_str() : ""; }
void nehari_report_destroy(nehari_report* report) { delete report; }

}  // extern "C"
