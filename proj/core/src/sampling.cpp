#include "nijcheck/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace nijcheck {

void validate_plan(const SamplePlan& plan) {
  if (plan.dim < 1) throw ConfigError("sample plan: dim must be positive");
  if (plan.r_min < plan.delta_ball) throw ConfigError("sample plan: r_min must be >= delta_ball");
  if (!(plan.r_max > plan.r_min)) throw ConfigError("sample plan: r_max must exceed r_min");
  if (plan.box && (plan.box->lo.size() != plan.dim || plan.box->hi.size() != plan.dim))
    throw ConfigError("sample plan: box dimension mismatch");
}

std::vector<ChartPoint> sample_points(const SamplePlan& plan) {
  validate_plan(plan);
  std::mt19937_64 rng(plan.seed);
  std::vector<ChartPoint> points;
  points.reserve(plan.count);
  const std::size_t n = plan.dim;

  if (plan.box) {
    const Box& b = *plan.box;
    for (std::size_t k = 0; k < plan.count; ++k) {
      ChartPoint p{Vec<double>(n), Chart::North};
      for (std::size_t i = 0; i < n; ++i) {
        const double margin = 0.1 * (b.hi[i] - b.lo[i]);
        std::uniform_real_distribution<double> u(b.lo[i] + margin, b.hi[i] - margin);
        p.x[i] = u(rng);
      }
      points.push_back(std::move(p));
    }
    return points;
  }

  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t max_attempts = 1000 * (plan.count + 1);
  std::size_t attempts = 0;
  Vec<double> y(n + 1);
  while (points.size() < plan.count) {
    if (++attempts > max_attempts)
      throw ConfigError("sample plan: radius range rejects nearly every draw");
    double r2 = 0.0;
    for (double& v : y) {
      v = gauss(rng);
      r2 += v * v;
    }
    if (r2 == 0.0) continue;
    const double r = std::sqrt(r2);
    for (double& v : y) v /= r;
    if (1.0 - y[n] < 1e-9) continue;
    ChartPoint p = sphere_to_chart(AmbientPoint{y}, Chart::North);
    const double radius = norm(p.x);
    if (radius < plan.r_min || radius > plan.r_max) continue;
    points.push_back(std::move(p));
  }
  return points;
}

SamplePlan plan_for(const Tensor11Field& field, SamplePlan plan) {
  plan.dim = field.dim();
  if (field.domain()) plan.box = field.domain();
  return plan;
}

std::vector<double> continuity_sweep_radii() {
  std::vector<double> radii;
  for (int k = 1; k <= 6; ++k) {
    radii.push_back(1.0 - std::pow(10.0, -k));
    radii.push_back(1.0 + std::pow(10.0, -k));
  }
  std::sort(radii.begin(), radii.end());
  return radii;
}

}  // namespace nijcheck
