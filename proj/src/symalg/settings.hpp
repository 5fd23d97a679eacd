#pragma once

#include <cstdlib>
#include <string>

#include "symalg/error.hpp"
#include "symalg/types.hpp"

namespace nehari {

/// Knobs shared by the audits. gridSize is the quadrature grid for anything
/// rational; exact Laurent computations ignore it.
struct Settings {
  int gridSize = kDefaultGridSize;
  double rankTolerance = 1e-8;
  double constancyTolerance = 1e-6;
  double unitarityTolerance = 1e-8;

  void validate() const {
    require(isPowerOfTwo(gridSize) && gridSize >= 64, "grid size must be a power of two >= 64");
    require(rankTolerance > 0 && constancyTolerance > 0 && unitarityTolerance > 0, "tolerances must be positive");
  }
};

/// Defaults with NEHARI_GRID applied when set.
inline Settings defaultSettings() {
  Settings s;
  if (const char* env = std::getenv("NEHARI_GRID")) {
    try {
      s.gridSize = std::stoi(env);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, std::string("NEHARI_GRID is not an integer: ") + env);
    }
  }
  s.validate();
  return s;
}

}  // namespace nehari
