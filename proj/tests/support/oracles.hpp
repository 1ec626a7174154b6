#pragma once

// Reference computations used only by the test suite. Each one reaches its
// answer by a route that does not share code with the library routine it
// checks: finite differences instead of closed forms or dual numbers,
// least-squares projections instead of frame formulas, and the bracket
// definition of the Nijenhuis tensor written out term by term.

#include <cstddef>
#include <vector>

#include "nijcheck/field.hpp"
#include "nijcheck/matrix.hpp"
#include "nijcheck/sphere_chart.hpp"

namespace nijcheck::testing {

/// d y / d x by central differences of chart_to_sphere, (n+1) x n.
Mat fd_embedding_jacobian(const ChartPoint& p, double h = 1e-6);

/// Pullback of the ambient Euclidean metric, E^T E with E from finite differences.
Mat gram_metric(const ChartPoint& p, double h = 1e-6);

/// Christoffel symbols gamma(k, i, j) from the Koszul formula applied to the
/// Gram metric, derivatives by nested five-point stencils.
Array3 koszul_from_gram(const ChartPoint& p, double h = 1e-3);

/// Chart vectors v_i (i = 0..n) whose push-forward is the tangential part of
/// the ambient basis vector e_i, by least squares against E.
std::vector<Vec<double>> projected_ambient_frame(const ChartPoint& p);

/// Ambient Euclidean projection of e_i onto the tangent space at y.
Vec<double> tangential_part(const Vec<double>& y, std::size_t i);

/// N(d_i, d_j)^k from N(X, Y) = [JX, JY] - J[X, JY] - J[JX, Y] - [X, Y] with
/// constant coordinate fields, every derivative a central difference of J.
Array3 brute_force_nijenhuis(const Tensor11Field& j, const ChartPoint& p, double h = 1e-6);

/// A (1,1) field that satisfies J_i^k = xi x^p d_i J_p^k exactly away from
/// |x| = 0 and |x| = 1: J_p^k = x^p c^k (|x|^2 + 1) / |x|^2. Not almost complex.
Tensor11Field radial_rank_one_field(const Vec<double>& c);

/// A smooth non-constant almost-complex structure on R^n: J = S(x) J0 S(x)^-1
/// with S(x) = diag(1 + eps x^i x^(i+1) / (1 + |x|^2)) (indices cyclic) and J0
/// the block structure. Generically not integrable.
Tensor11Field conjugated_block_field(std::size_t dim, double eps = 0.2);

}  // namespace nijcheck::testing
