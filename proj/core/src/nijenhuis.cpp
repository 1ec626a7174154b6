#include "nijcheck/nijenhuis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nijcheck/parallel.hpp"
#include "nijcheck/round_geometry.hpp"

namespace nijcheck {

std::string_view to_string(NijenhuisMethod m) {
  return m == NijenhuisMethod::Coordinate ? "coordinate" : "bracket";
}

Array3 nijenhuis_from_partials(const Mat& j, const Array3& d) {
  const std::size_t n = j.rows();
  Array3 raw(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
          s += j(i, p) * (d(p, jj, k) - d(jj, p, k));
          s -= j(jj, p) * (d(p, i, k) - d(i, p, k));
        }
        raw(i, jj, k) = s;
      }
  Array3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k) out(i, jj, k) = 0.5 * (raw(i, jj, k) - raw(jj, i, k));
  return out;
}

NijenhuisAt nijenhuis_coordinate(const Tensor11Field& j, const ChartPoint& p) {
  return {p, nijenhuis_from_partials(j(p), j.partials(p)), NijenhuisMethod::Coordinate};
}

Vec<double> nijenhuis_bracket(const Tensor11Field& j, const VectorField& x, const VectorField& y,
                              const ChartPoint& p) {
  const VectorField jx = apply(j, x, p.chart);
  const VectorField jy = apply(j, y, p.chart);
  const Mat jp = j(p);
  const Vec<double> t1 = lie_bracket(jx, jy, p);
  const Vec<double> t2 = apply_at(jp, lie_bracket(x, jy, p));
  const Vec<double> t3 = apply_at(jp, lie_bracket(jx, y, p));
  const Vec<double> t4 = lie_bracket(x, y, p);
  Vec<double> out(p.dim());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = t1[k] - t2[k] - t3[k] - t4[k];
  return out;
}

NijenhuisAt nijenhuis_bracket_components(const Tensor11Field& j, const ChartPoint& p) {
  const std::size_t n = p.dim();
  std::vector<VectorField> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(VectorField::coordinate(n, i));
  Array3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj) {
      const Vec<double> v = nijenhuis_bracket(j, basis[i], basis[jj], p);
      for (std::size_t k = 0; k < n; ++k) out(i, jj, k) = v[k];
    }
  return {p, std::move(out), NijenhuisMethod::Bracket};
}

NijenhuisAt nijenhuis(const Tensor11Field& j, const ChartPoint& p, NijenhuisMethod method) {
  return method == NijenhuisMethod::Coordinate ? nijenhuis_coordinate(j, p)
                                               : nijenhuis_bracket_components(j, p);
}

double nijenhuis_g_norm(const Array3& n, const ChartPoint& p) {
  const double nu = conformal_scalars(p).nu;
  return nu * norm(n.data());
}

CrosscheckReport crosscheck(const Tensor11Field& j, const SamplePlan& plan) {
  const std::vector<ChartPoint> points = sample_points(plan_for(j, plan));
  CrosscheckReport report;
  report.structure = j.name();
  report.points = points.size();
  report.g_norms.resize(points.size());
  report.deviations.resize(points.size());
  std::vector<double> max_comp(points.size());
  parallel_for(points.size(), [&](std::size_t idx) {
    const ChartPoint& p = points[idx];
    const Array3 coord = nijenhuis_coordinate(j, p).components;
    const Array3 brk = nijenhuis_bracket_components(j, p).components;
    double dev = 0.0;
    for (std::size_t k = 0; k < coord.data().size(); ++k)
      dev = std::max(dev, std::abs(coord.data()[k] - brk.data()[k]));
    report.deviations[idx] = dev;
    report.g_norms[idx] = nijenhuis_g_norm(coord, p);
    max_comp[idx] = sup_norm(coord.data());
  });
  report.min_max_component = points.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    report.max_deviation = std::max(report.max_deviation, report.deviations[idx]);
    report.max_component = std::max(report.max_component, max_comp[idx]);
    report.min_max_component = std::min(report.min_max_component, max_comp[idx]);
  }
  return report;
}

}  // namespace nijcheck
