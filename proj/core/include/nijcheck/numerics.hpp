#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "nijcheck/dual.hpp"
#include "nijcheck/errors.hpp"
#include "nijcheck/matrix.hpp"

namespace nijcheck {

/// A scalar function of chart coordinates, callable on doubles and on duals.
///
/// Build one from a generic lambda (`[](auto x) { ... }` taking a span of the
/// scalar type) so both instantiations come from the same source.
struct ScalarField {
  std::function<double(std::span<const double>)> eval;
  std::function<Dual1(std::span<const Dual1>)> eval_dual;

  template <class F>
  static ScalarField from_generic(F f) {
    return {[f](std::span<const double> x) { return static_cast<double>(f(x)); },
            [f](std::span<const Dual1> x) { return Dual1(f(x)); }};
  }

  double operator()(std::span<const double> x) const { return eval(x); }
};

/// x + eps * dir as a dual vector.
inline Vec<Dual1> seed_direction(std::span<const double> x, std::span<const double> dir) {
  Vec<Dual1> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = Dual1(x[i], dir[i]);
  return out;
}

/// x + eps * e_i as a dual vector.
inline Vec<Dual1> seed_axis(std::span<const double> x, std::size_t axis) {
  Vec<Dual1> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = Dual1(x[i], i == axis ? 1.0 : 0.0);
  return out;
}

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericalFailure(std::string(what) + ": non-finite value");
}

/// df(x)[dir] by dual-number propagation.
double directional_derivative(const ScalarField& f, std::span<const double> x,
                              std::span<const double> dir);

/// (f(x + h e_i) - f(x - h e_i)) / 2h.
double central_diff(const ScalarField& f, std::span<const double> x, std::size_t i, double h);

/// Central stencil estimate of d_i d_j f(x): 3-point when i == j, 4-point otherwise.
double second_central_diff(const ScalarField& f, std::span<const double> x, std::size_t i,
                           std::size_t j, double h);

/// h = 1e-5 (1 + |x|).
double default_first_step(std::span<const double> x);
/// h = 1e-4 (1 + |x|).
double default_second_step(std::span<const double> x);

namespace detail {

inline Vec<double> offset(std::span<const double> x, std::size_t i, double h) {
  Vec<double> y(x.begin(), x.end());
  y[i] += h;
  return y;
}

inline Vec<double> offset2(std::span<const double> x, std::size_t i, double hi, std::size_t j,
                           double hj) {
  Vec<double> y(x.begin(), x.end());
  y[i] += hi;
  y[j] += hj;
  return y;
}

}  // namespace detail

/// Central difference of any callable returning a double or a Matrix<double>.
template <class F>
auto central_diff_of(F&& f, std::span<const double> x, std::size_t i, double h) {
  if (!(h > 0.0)) throw NumericalFailure("central_diff: step must be positive");
  auto plus = f(std::span<const double>(detail::offset(x, i, h)));
  auto minus = f(std::span<const double>(detail::offset(x, i, -h)));
  auto d = plus - minus;
  d *= 1.0 / (2.0 * h);
  return d;
}

/// Second central difference of any callable returning a double or a Matrix<double>.
template <class F>
auto second_central_diff_of(F&& f, std::span<const double> x, std::size_t i, std::size_t j,
                            double h) {
  if (!(h > 0.0)) throw NumericalFailure("second_central_diff: step must be positive");
  auto at = [&](double hi, double hj) {
    return f(std::span<const double>(detail::offset2(x, i, hi, j, hj)));
  };
  if (i == j) {
    auto d = at(h, 0.0) + at(-h, 0.0);
    auto c = f(x);
    c *= 2.0;
    d = d - c;
    d *= 1.0 / (h * h);
    return d;
  }
  auto d = at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h);
  d *= 1.0 / (4.0 * h * h);
  return d;
}

/// All first partials of a Matrix-valued generic evaluator via n dual passes.
/// Result(a, b, c) = d_a M(b, c).
template <class F>
Array3 dual_jacobian(F&& f, std::span<const double> x) {
  const std::size_t n = x.size();
  Array3 out(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vec<Dual1> xd = seed_axis(x, a);
    const Matrix<Dual1> m = f(std::span<const Dual1>(xd));
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const double d = m(b, c).deriv;
        require_finite(d, "dual_jacobian");
        out(a, b, c) = d;
      }
  }
  return out;
}

}  // namespace nijcheck
