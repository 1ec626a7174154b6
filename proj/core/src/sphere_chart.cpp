#include "nijcheck/sphere_chart.hpp"

#include <cmath>
#include <string>

namespace nijcheck {

std::string_view to_string(Chart c) { return c == Chart::North ? "north" : "south"; }

Chart opposite(Chart c) { return c == Chart::North ? Chart::South : Chart::North; }

AmbientPoint chart_to_sphere(const ChartPoint& p) {
  return {chart_to_sphere_coords<double>(p.x, p.chart)};
}

ChartPoint sphere_to_chart(const AmbientPoint& a, Chart chart) {
  if (a.y.size() < 2) throw DimensionMismatch("sphere_to_chart: ambient point needs n+1 >= 2");
  const std::size_t n = a.y.size() - 1;
  const double last = a.y[n];
  const double denom = chart == Chart::North ? 1.0 - last : 1.0 + last;
  if (!(denom >= 1e-9)) {
    throw PoleSingularity(std::string("sphere_to_chart: point is at the projection pole of the ") +
                          std::string(to_string(chart)) + " chart");
  }
  ChartPoint p{Vec<double>(n), chart};
  for (std::size_t i = 0; i < n; ++i) p.x[i] = a.y[i] / denom;
  return p;
}

ConformalScalars conformal_scalars(const ChartPoint& p, double delta_ring) {
  const double r2 = squared_radius<double>(p.x);
  ConformalScalars s;
  s.mu = 2.0 / (r2 + 1.0);
  s.nu = (r2 + 1.0) / 2.0;
  if (std::abs(std::sqrt(r2) - 1.0) >= delta_ring) s.xi = (r2 + 1.0) / (r2 - 1.0);
  return s;
}

Mat embedding_jacobian(const ChartPoint& p) {
  return embedding_jacobian_coords<double>(p.x, p.chart);
}

std::vector<Vec<double>> ambient_frame_in_chart(const ChartPoint& p) {
  const std::size_t n = p.dim();
  const double nu = conformal_scalars(p).nu;
  std::vector<Vec<double>> frame(n + 1, Vec<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) frame[i][i] = nu;
  for (std::size_t k = 0; k < n; ++k) frame[n][k] = nu * p.x[k];
  return frame;
}

ChartPoint chart_transition(const ChartPoint& p, double delta_ball) {
  if (norm(p.x) < delta_ball) {
    throw OriginSingularity("chart_transition: chart origin maps to the excluded pole");
  }
  return {inversion_coords<double>(p.x), opposite(p.chart)};
}

Mat transition_jacobian(const ChartPoint& p) { return inversion_jacobian_coords<double>(p.x); }

Mat transport_11(const Mat& components, const ChartPoint& p) {
  const ChartPoint q = chart_transition(p);
  const Mat to_new = transition_jacobian(p);   // d x'/d x
  const Mat to_old = transition_jacobian(q);   // d x/d x'
  return to_old * components * to_new;
}

Array3 transport_12(const Array3& components, const ChartPoint& p) {
  const std::size_t n = p.dim();
  const ChartPoint q = chart_transition(p);
  const Mat b = transition_jacobian(p);
  const Mat a = transition_jacobian(q);
  // Contract one index at a time: lower a, lower b, then upper c.
  Array3 t1(n), t2(n), out(n);
  for (std::size_t a_ = 0; a_ < n; ++a_)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += a(i, a_) * components(i, j, k);
        t1(a_, j, k) = s;
      }
  for (std::size_t a_ = 0; a_ < n; ++a_)
    for (std::size_t b_ = 0; b_ < n; ++b_)
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += a(j, b_) * t1(a_, j, k);
        t2(a_, b_, k) = s;
      }
  for (std::size_t a_ = 0; a_ < n; ++a_)
    for (std::size_t b_ = 0; b_ < n; ++b_)
      for (std::size_t c = 0; c < n; ++c) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += t2(a_, b_, k) * b(c, k);
        out(a_, b_, c) = s;
      }
  return out;
}

}  // namespace nijcheck
