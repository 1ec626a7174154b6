#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nijcheck/matrix.hpp"
#include "nijcheck/numerics.hpp"
#include "nijcheck/sphere_chart.hpp"

namespace nijcheck {

/// Axis-aligned coordinate box.
struct Box {
  Vec<double> lo;
  Vec<double> hi;

  bool contains(std::span<const double> x, double margin = 0.0) const {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < lo[i] + margin || x[i] > hi[i] - margin) return false;
    return true;
  }
};

/// Chart vector field X = X^k d_k, evaluable on doubles and duals.
struct VectorField {
  std::function<Vec<double>(std::span<const double>)> eval;
  std::function<Vec<Dual1>(std::span<const Dual1>)> eval_dual;

  /// `f` is a generic callable taking std::span<const T> and returning Vec<T>.
  template <class F>
  static VectorField from_generic(F f) {
    return {[f](std::span<const double> x) { return Vec<double>(f(x)); },
            [f](std::span<const Dual1> x) { return Vec<Dual1>(f(x)); }};
  }

  Vec<double> operator()(std::span<const double> x) const { return eval(x); }

  /// The constant-coefficient coordinate field d/dx^i.
  static VectorField coordinate(std::size_t dim, std::size_t i);
};

/// Components J_i^j of a (1,1)-tensor field in the stereographic charts.
///
/// The evaluator is generic over the scalar type so that exact first
/// derivatives come from dual numbers. A field either understands both
/// charts itself or is defined in the north chart only, in which case south
/// evaluations are obtained through the tensor transformation law.
class Tensor11Field {
 public:
  struct Options {
    bool both_charts = false;
    std::optional<Box> domain;
    std::map<std::string, std::string> metadata;
    /// Tabulated fields: the sample nodes, where validation takes place.
    std::shared_ptr<const std::vector<Vec<double>>> nodes;
  };

  /// `f(std::span<const T> x, Chart c) -> Matrix<T>`, generic in T.
  template <class F>
  static Tensor11Field from_generic(std::string name, std::size_t dim, F f, Options opts = {}) {
    Tensor11Field field;
    field.name_ = std::move(name);
    field.dim_ = dim;
    field.domain_ = std::move(opts.domain);
    field.metadata_ = std::move(opts.metadata);
    field.nodes_ = std::move(opts.nodes);
    if (opts.both_charts) {
      field.eval_ = f;
      field.eval_dual_ = f;
    } else {
      field.eval_ = north_native<double>(f);
      field.eval_dual_ = north_native<Dual1>(f);
    }
    return field;
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::optional<Box>& domain() const { return domain_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }
  const std::shared_ptr<const std::vector<Vec<double>>>& nodes() const { return nodes_; }

  Mat operator()(const ChartPoint& p) const { return at(p.x, p.chart); }
  Mat at(std::span<const double> x, Chart chart) const;
  Matrix<Dual1> at(std::span<const Dual1> x, Chart chart) const;

  /// (a, b, c) = d_a J_b^c by dual numbers.
  Array3 partials(const ChartPoint& p) const;
  /// (a, b, c) = d_a J_b^c by central differences; h <= 0 picks the default step.
  Array3 partials_fd(const ChartPoint& p, double h = 0.0) const;
  /// d_a d_b J by central differences; h <= 0 picks the default second-order step.
  Mat second_partial_fd(const ChartPoint& p, std::size_t a, std::size_t b, double h = 0.0) const;

  /// One component as a scalar field on the chart of p.
  ScalarField component(std::size_t row, std::size_t col, Chart chart) const;

 private:
  template <class T, class F>
  static std::function<Matrix<T>(std::span<const T>, Chart)> north_native(F f) {
    return [f](std::span<const T> x, Chart chart) -> Matrix<T> {
      if (chart == Chart::North) return f(x, Chart::North);
      // South coordinates x'; the north point is x = x'/|x'|^2 and
      // J' = (dx/dx') J (dx'/dx), both Jacobians symmetric.
      if (value_of(squared_radius(x)) < kDeltaBall * kDeltaBall)
        throw OriginSingularity("south evaluation of a north-chart field at the south origin");
      const Vec<T> xn = inversion_coords(x);
      const Matrix<T> m = f(std::span<const T>(xn), Chart::North);
      return inversion_jacobian_coords(x) * m * inversion_jacobian_coords(std::span<const T>(xn));
    };
  }

  std::string name_;
  std::size_t dim_ = 0;
  std::optional<Box> domain_;
  std::map<std::string, std::string> metadata_;
  std::shared_ptr<const std::vector<Vec<double>>> nodes_;
  std::function<Mat(std::span<const double>, Chart)> eval_;
  std::function<Matrix<Dual1>(std::span<const Dual1>, Chart)> eval_dual_;
};

/// The vector field J X, i.e. (JX)^k = X^i J_i^k.
VectorField apply(const Tensor11Field& j, const VectorField& x, Chart chart);

/// J at p applied to a tangent vector: (Jv)^k = v^i J_i^k.
Vec<double> apply_at(const Mat& j, std::span<const double> v);

}  // namespace nijcheck
