#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nijcheck/field.hpp"
#include "nijcheck/sphere_chart.hpp"

namespace nijcheck {

/// Seeded list of north-chart evaluation points.
///
/// Points are drawn ambient-uniformly (normalized Gaussian in R^{n+1}) and
/// projected into the north chart; draws outside [r_min, r_max] are redrawn.
/// When `box` is set (tabulated fields), points are instead uniform in the
/// box interior. Ring and origin exclusions are not redrawn here: each claim
/// counts its own excluded points so that evaluated + excluded == count.
struct SamplePlan {
  std::size_t dim = 6;
  std::size_t count = 100;
  std::uint64_t seed = 42;
  double r_min = kDeltaBall;
  double r_max = 10.0;
  double delta_ball = kDeltaBall;
  double delta_ring = kDeltaRing;
  bool continuity_sweep = false;
  std::optional<Box> box;
};

/// Throws ConfigError on an inconsistent plan.
void validate_plan(const SamplePlan& plan);

std::vector<ChartPoint> sample_points(const SamplePlan& plan);

/// Plan whose box (if any) is taken from the field's domain.
SamplePlan plan_for(const Tensor11Field& field, SamplePlan plan);

/// Radii 1 - 10^-k and 1 + 10^-k for k = 1..6, ascending.
std::vector<double> continuity_sweep_radii();

}  // namespace nijcheck
