#include "io/symbol_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace nehari::io {

namespace {

Complex complexFrom(const Json& j, const std::string& where) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          where + ": expected [re, im]");
  const Complex c(j[0].get<double>(), j[1].get<double>());
  require(std::isfinite(c.real()) && std::isfinite(c.imag()), where + ": non-finite number");
  return c;
}

Json complexTo(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

RationalMatrix symbolFromJson(const Json& j) {
  require(j.is_object(), "symbol must be a JSON object");
  require(j.contains("rows") && j["rows"].is_number_integer(), "symbol: integer \"rows\" required");
  require(j.contains("cols") && j["cols"].is_number_integer(), "symbol: integer \"cols\" required");
  require(j.contains("coefficients") && j["coefficients"].is_array(), "symbol: \"coefficients\" array required");
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  require(rows > 0 && cols > 0, "symbol: rows and cols must be positive");

  std::map<int, CMatrix> coeffs;
  for (const Json& c : j["coefficients"]) {
    require(c.is_object() && c.contains("power") && c["power"].is_number_integer(),
            "symbol: each coefficient needs an integer \"power\"");
    const int power = c["power"].get<int>();
    require(!coeffs.count(power), "symbol: duplicate power " + std::to_string(power));
    require(c.contains("entries") && c["entries"].is_array() && c["entries"].size() == static_cast<size_t>(rows),
            "symbol: power " + std::to_string(power) + " needs " + std::to_string(rows) + " entry rows");
    CMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      const Json& row = c["entries"][static_cast<size_t>(r)];
      require(row.is_array() && row.size() == static_cast<size_t>(cols),
              "symbol: power " + std::to_string(power) + " row " + std::to_string(r) + " needs " +
                  std::to_string(cols) + " entries");
      for (int s = 0; s < cols; ++s)
        m(r, s) = complexFrom(row[static_cast<size_t>(s)], "symbol power " + std::to_string(power));
    }
    coeffs[power] = m;
  }

  std::vector<Complex> roots;
  if (j.contains("denominator_roots")) {
    require(j["denominator_roots"].is_array(), "symbol: \"denominator_roots\" must be an array");
    for (const Json& r : j["denominator_roots"]) roots.push_back(complexFrom(r, "denominator root"));
  }
  return RationalMatrix(LaurentMatrix(rows, cols, std::move(coeffs)), std::move(roots));
}

RationalMatrix parseSymbol(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return symbolFromJson(j);
}

RationalMatrix readSymbolFile(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open symbol file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseSymbol(buffer.str());
}

Json symbolToJson(const RationalMatrix& symbol) {
  Json coeffs = Json::array();
  for (const auto& [p, m] : symbol.numerator().coefficients()) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index s = 0; s < m.cols(); ++s) row.push_back(complexTo(m(r, s)));
      entries.push_back(row);
    }
    coeffs.push_back({{"power", p}, {"entries", entries}});
  }
  Json j = {{"rows", symbol.rows()}, {"cols", symbol.cols()}, {"coefficients", coeffs}};
  if (!symbol.denominatorRoots().empty()) {
    Json roots = Json::array();
    for (Complex r : symbol.denominatorRoots()) roots.push_back(complexTo(r));
    j["denominator_roots"] = roots;
  }
  return j;
}

LaurentMatrix requireLaurent(const RationalMatrix& symbol, const std::string& what) {
  require(symbol.isLaurent(), what + " must be a Laurent polynomial (no denominator_roots)");
  return symbol.numerator();
}

}  // namespace nehari::io
