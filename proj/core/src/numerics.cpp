#include "nijcheck/numerics.hpp"

namespace nijcheck {

double directional_derivative(const ScalarField& f, std::span<const double> x,
                              std::span<const double> dir) {
  if (dir.size() != x.size()) throw DimensionMismatch("directional_derivative: dir size");
  const Vec<Dual1> xd = seed_direction(x, dir);
  const Dual1 v = f.eval_dual(xd);
  require_finite(v.value, "directional_derivative");
  require_finite(v.deriv, "directional_derivative");
  return v.deriv;
}

double central_diff(const ScalarField& f, std::span<const double> x, std::size_t i, double h) {
  const double d = central_diff_of(f.eval, x, i, h);
  require_finite(d, "central_diff");
  return d;
}

double second_central_diff(const ScalarField& f, std::span<const double> x, std::size_t i,
                           std::size_t j, double h) {
  const double d = second_central_diff_of(f.eval, x, i, j, h);
  require_finite(d, "second_central_diff");
  return d;
}

double default_first_step(std::span<const double> x) { return 1e-5 * (1.0 + norm(x)); }

double default_second_step(std::span<const double> x) { return 1e-4 * (1.0 + norm(x)); }

}  // namespace nijcheck
