#pragma once

#include <span>

#include "nijcheck/field.hpp"
#include "nijcheck/matrix.hpp"
#include "nijcheck/sphere_chart.hpp"

namespace nijcheck {

/// Round metric of S^n in a stereographic chart: g_ij = mu^2 delta_ij.
///
/// Christoffel symbols are stored as gamma(k, i, j) = Gamma^k_{ij}, where i is
/// the differentiation direction and j the field index:
///   nabla_{d_i} d_j = Gamma^k_{ij} d_k,
///   Gamma^k_{ij} = -mu (delta_ik x^j + delta_jk x^i - delta_ij x^k).
/// The same closed form holds in both charts.
struct GeometryAt {
  Mat g;
  Array3 gamma;
  ConformalScalars scalars;
};

template <class T>
Matrix<T> metric_coords(std::span<const T> x) {
  const T mu = conformal_mu(x);
  Matrix<T> g(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g(i, i) = mu * mu;
  return g;
}

Mat metric_at(const ChartPoint& p);

/// gamma(k, i, j) = Gamma^k_{ij}.
Array3 christoffel_at(const ChartPoint& p);

GeometryAt geometry_at(const ChartPoint& p);

/// (a, p, q) = (nabla_a J)_p^q = d_a J_p^q + Gamma^q_{ak} J_p^k - Gamma^k_{ap} J_k^q.
Array3 covariant_derivative_11(const Tensor11Field& j, const ChartPoint& p);

/// Same as above with the partials supplied by the caller (dual or finite-difference).
Array3 covariant_derivative_11(const Mat& j, const Array3& partials, const ChartPoint& p);

/// (a, j, k) = (nabla_a g)_{jk}; vanishes for the Levi-Civita connection.
Array3 metric_covariant_derivative(const ChartPoint& p);

/// [X, Y]^k = X^i d_i Y^k - Y^i d_i X^k, by dual-number directional derivatives.
Vec<double> lie_bracket(const VectorField& x, const VectorField& y, const ChartPoint& p);

/// sqrt(v^T g v) = mu |v|.
double g_norm(const ChartPoint& p, std::span<const double> v);

}  // namespace nijcheck
