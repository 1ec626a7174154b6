#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nijcheck/sphere_chart.hpp"

namespace nijcheck {

/// Christoffel symbols from the Koszul formula with central-difference metric
/// derivatives, gamma(k, i, j) = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
/// Independent of the closed form used by christoffel_at.
Array3 koszul_christoffel_fd(const ChartPoint& p, double h = 0.0);

struct CheckLine {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SelfTestOptions {
  std::uint64_t seed = 7;
  std::size_t points = 100;
  /// Test hook: perturbs the Christoffel comparison so the suite must fail.
  bool inject_fault = false;
};

/// Geometry and algebra invariants: metric compatibility, Christoffel oracle,
/// chart round-trips, transition involution, octonion identities, J^2 = -I for
/// the S^6 structure, dual vs finite-difference derivatives.
std::vector<CheckLine> run_selftest(const SelfTestOptions& opts = {});

}  // namespace nijcheck
