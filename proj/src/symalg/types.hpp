#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace nehari {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

// Absolute threshold below which Fourier coefficients are dropped.
inline constexpr double kTrimThreshold = 1e-12;
// |point| must equal 1 within this to count as a point of the circle.
inline constexpr double kCircleTolerance = 1e-12;
// Roots closer than this are treated as one cluster / cancelled pairs.
inline constexpr double kRootClusterRadius = 1e-7;
// Relative radius for grouping Hankel singular values into one cluster.
inline constexpr double kSingularClusterRadius = 1e-7;
inline constexpr int kDefaultGridSize = 4096;
inline constexpr int kMaxGridSize = 1 << 20;

// i-th point of the N-point grid of roots of unity.
inline Complex gridPoint(int j, int gridSize) {
  const double angle = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(gridSize);
  return {std::cos(angle), std::sin(angle)};
}

inline bool isPowerOfTwo(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline int nextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace nehari
