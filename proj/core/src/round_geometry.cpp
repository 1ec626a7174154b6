#include "nijcheck/round_geometry.hpp"

#include <cmath>

namespace nijcheck {

Mat metric_at(const ChartPoint& p) { return metric_coords<double>(p.x); }

Array3 christoffel_at(const ChartPoint& p) {
  const std::size_t n = p.dim();
  const double mu = conformal_mu<double>(p.x);
  const auto& x = p.x;
  Array3 gamma(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        if (i == k) s += x[j];
        if (j == k) s += x[i];
        if (i == j) s -= x[k];
        gamma(k, i, j) = -mu * s;
      }
  return gamma;
}

GeometryAt geometry_at(const ChartPoint& p) {
  return {metric_at(p), christoffel_at(p), conformal_scalars(p)};
}

Array3 covariant_derivative_11(const Mat& j, const Array3& partials, const ChartPoint& p) {
  const std::size_t n = p.dim();
  const Array3 gamma = christoffel_at(p);
  Array3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q) {
        double s = partials(a, r, q);
        for (std::size_t k = 0; k < n; ++k) {
          s += gamma(q, a, k) * j(r, k);
          s -= gamma(k, a, r) * j(k, q);
        }
        out(a, r, q) = s;
      }
  return out;
}

Array3 covariant_derivative_11(const Tensor11Field& j, const ChartPoint& p) {
  return covariant_derivative_11(j(p), j.partials(p), p);
}

Array3 metric_covariant_derivative(const ChartPoint& p) {
  const std::size_t n = p.dim();
  const Array3 dg =
      dual_jacobian([](std::span<const Dual1> x) { return metric_coords(x); }, p.x);
  const Mat g = metric_at(p);
  const Array3 gamma = christoffel_at(p);
  Array3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = dg(a, j, k);
        for (std::size_t l = 0; l < n; ++l) {
          s -= gamma(l, a, j) * g(l, k);
          s -= gamma(l, a, k) * g(j, l);
        }
        out(a, j, k) = s;
      }
  return out;
}

Vec<double> lie_bracket(const VectorField& x, const VectorField& y, const ChartPoint& p) {
  const Vec<double> xv = x(p.x);
  const Vec<double> yv = y(p.x);
  const Vec<Dual1> along_x = seed_direction(p.x, xv);
  const Vec<Dual1> along_y = seed_direction(p.x, yv);
  const Vec<Dual1> dy = y.eval_dual(along_x);
  const Vec<Dual1> dx = x.eval_dual(along_y);
  Vec<double> out(p.dim());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = dy[k].deriv - dx[k].deriv;
    require_finite(out[k], "lie_bracket");
  }
  return out;
}

double g_norm(const ChartPoint& p, std::span<const double> v) {
  return conformal_mu<double>(p.x) * norm(v);
}

}  // namespace nijcheck
