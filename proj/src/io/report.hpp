#pragma once

#include <cstdint>
#include <string>

#include "hankel/hankel.hpp"
#include "index/index_audit.hpp"
#include "index/scalar_suite.hpp"
#include "io/symbol_io.hpp"

namespace nehari::io {

/// Everything a report needs to be reproduced.
struct RunConfiguration {
  Settings settings;
  std::uint64_t seed = 0;
  std::string output;  // empty: stdout
};

Json configJson(const RunConfiguration& config);
/// {"schema": 1, "command": ..., "config": {...}}
Json reportHeader(const std::string& command, const RunConfiguration& config);

Json checksJson(const std::vector<AuditCheck>& checks);
Json singularJson(const SingularData& sd);
Json certificateJson(const SuperoptCertificate& cert);
Json constructionJson(const PyConstruction& py);
Json indexAuditJson(const IndexAuditReport& report);
Json veryBadJson(const VeryBadReport& report);
Json schmidtJson(const SchmidtCharacterization& audit);
Json scalarSuiteJson(const ScalarSuiteResult& result);
/// Fixed-width summary, one row per instance plus totals.
std::string scalarSuiteTable(const ScalarSuiteResult& result);

/// Pretty-printed JSON with every float written as %.12e, so identical inputs
/// give byte-identical output.
std::string render(const Json& j);

}  // namespace nehari::io
