#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nijcheck/matrix.hpp"

namespace nijcheck {

/// Stereographic atlas of the unit sphere S^n in R^{n+1}.
///
/// North chart: projection from (0,...,0,1),
///   y^i = mu x^i (i <= n),  y^{n+1} = (|x|^2 - 1) / (|x|^2 + 1),  mu = 2 / (|x|^2 + 1).
/// South chart: projection from (0,...,0,-1), x'^i = y^i / (1 + y^{n+1}).
/// The two are related by the inversion x' = x / |x|^2.

enum class Chart { North, South };

std::string_view to_string(Chart c);
Chart opposite(Chart c);

/// Exclusion radius around the chart origin for operations dividing by |x|.
inline constexpr double kDeltaBall = 1e-3;
/// Exclusion half-width around the ring |x| = 1 where xi is undefined.
inline constexpr double kDeltaRing = 1e-3;

struct ChartPoint {
  Vec<double> x;
  Chart chart = Chart::North;

  std::size_t dim() const { return x.size(); }
  std::span<const double> coords() const { return x; }
};

struct AmbientPoint {
  Vec<double> y;
};

struct ConformalScalars {
  double mu = 0.0;
  double nu = 0.0;
  /// (|x|^2 + 1) / (|x|^2 - 1); absent within delta_ring of the unit ring.
  std::optional<double> xi;

  bool singular_ring() const { return !xi.has_value(); }
};

template <class T>
T squared_radius(std::span<const T> x) {
  T s{};
  for (const T& v : x) s += v * v;
  return s;
}

template <class T>
T conformal_mu(std::span<const T> x) {
  return T(2.0) / (squared_radius(x) + T(1.0));
}

template <class T>
Vec<T> chart_to_sphere_coords(std::span<const T> x, Chart chart) {
  const std::size_t n = x.size();
  const T r2 = squared_radius(x);
  const T mu = T(2.0) / (r2 + T(1.0));
  Vec<T> y(n + 1);
  for (std::size_t i = 0; i < n; ++i) y[i] = mu * x[i];
  y[n] = (r2 - T(1.0)) / (r2 + T(1.0));
  if (chart == Chart::South) y[n] = -y[n];
  return y;
}

/// d y / d x, an (n+1) x n matrix whose column i is the image of d/dx^i.
template <class T>
Matrix<T> embedding_jacobian_coords(std::span<const T> x, Chart chart) {
  const std::size_t n = x.size();
  const T mu = conformal_mu(x);
  const T mu2 = mu * mu;
  const T sign = chart == Chart::North ? T(1.0) : T(-1.0);
  Matrix<T> e(n + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) e(i, j) = T(0.0) - mu2 * x[i] * x[j];
    e(j, j) += mu;
    e(n, j) = sign * mu2 * x[j];
  }
  return e;
}

/// The chart inversion x -> x / |x|^2.
template <class T>
Vec<T> inversion_coords(std::span<const T> x) {
  const T r2 = squared_radius(x);
  Vec<T> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / r2;
  return out;
}

/// Derivative of the inversion at x; symmetric, (a, i) = d(x/|x|^2)^a / dx^i.
template <class T>
Matrix<T> inversion_jacobian_coords(std::span<const T> x) {
  const std::size_t n = x.size();
  const T r2 = squared_radius(x);
  const T r4 = r2 * r2;
  Matrix<T> d(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      T v = T(0.0) - T(2.0) * x[a] * x[i];
      if (a == i) v += r2;
      d(a, i) = v / r4;
    }
  return d;
}

AmbientPoint chart_to_sphere(const ChartPoint& p);

/// Throws PoleSingularity when the projection pole of `chart` is within 1e-9.
ChartPoint sphere_to_chart(const AmbientPoint& a, Chart chart);

ConformalScalars conformal_scalars(const ChartPoint& p, double delta_ring = kDeltaRing);

Mat embedding_jacobian(const ChartPoint& p);

/// The chart images of the ambient coordinate fields d/dy^1..d/dy^{n+1} in the
/// north-chart convention: d/dy^i = nu d/dx^i (i <= n), d/dy^{n+1} = nu x^p d/dx^p.
std::vector<Vec<double>> ambient_frame_in_chart(const ChartPoint& p);

/// Same sphere point in the opposite chart. Throws OriginSingularity for |x| < delta_ball.
ChartPoint chart_transition(const ChartPoint& p, double delta_ball = kDeltaBall);

/// d x' / d x at p, where x' are the coordinates in the opposite chart.
Mat transition_jacobian(const ChartPoint& p);

/// Components of a (1,1) tensor given at p, re-expressed in the opposite chart.
Mat transport_11(const Mat& components, const ChartPoint& p);

/// Components T_ij^k of a (1,2) tensor given at p, re-expressed in the opposite chart.
Array3 transport_12(const Array3& components, const ChartPoint& p);

}  // namespace nijcheck
