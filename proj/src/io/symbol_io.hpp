#pragma once

#include <string>

#include <json.hpp>

#include "symalg/rational.hpp"

namespace nehari::io {

using Json = nlohmann::ordered_json;

/// Symbol file:
///   { "rows": m, "cols": n,
///     "coefficients": [ { "power": p, "entries": [[[re, im], ...], ...] }, ... ],
///     "denominator_roots": [[re, im], ...] }      (optional)
/// Entries are row-major; powers must be unique. With denominator_roots the
/// symbol is the coefficient sum divided by Π(1 − z/r).
RationalMatrix symbolFromJson(const Json& j);
RationalMatrix readSymbolFile(const std::string& path);
RationalMatrix parseSymbol(const std::string& text);

/// Powers ascending; denominator_roots only when non-empty.
Json symbolToJson(const RationalMatrix& symbol);

/// Φ must be a Laurent polynomial for the Hankel machinery.
LaurentMatrix requireLaurent(const RationalMatrix& symbol, const std::string& what);

}  // namespace nehari::io
