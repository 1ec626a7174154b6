#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "nijcheck/field.hpp"
#include "nijcheck/sampling.hpp"

namespace nijcheck {

enum class NijenhuisMethod { Coordinate, Bracket };

std::string_view to_string(NijenhuisMethod m);

/// components(i, j, k) = N_ij^k, where N(d_i, d_j) = N_ij^k d_k.
struct NijenhuisAt {
  ChartPoint point;
  Array3 components;
  NijenhuisMethod method = NijenhuisMethod::Coordinate;
};

/// N_ij^k = J_i^p (d_p J_j^k - d_j J_p^k) - J_j^p (d_p J_i^k - d_i J_p^k),
/// with partials(p, j, k) = d_p J_j^k. The result is antisymmetrized in (i, j)
/// so that N_ij^k = -N_ji^k holds exactly.
Array3 nijenhuis_from_partials(const Mat& j, const Array3& partials);

/// Coordinate formula with dual-number partials.
NijenhuisAt nijenhuis_coordinate(const Tensor11Field& j, const ChartPoint& p);

/// N(X, Y) = [JX, JY] - J[X, JY] - J[JX, Y] - [X, Y] at p.
Vec<double> nijenhuis_bracket(const Tensor11Field& j, const VectorField& x, const VectorField& y,
                              const ChartPoint& p);

/// All N_ij^k from the bracket definition with constant coordinate fields.
NijenhuisAt nijenhuis_bracket_components(const Tensor11Field& j, const ChartPoint& p);

NijenhuisAt nijenhuis(const Tensor11Field& j, const ChartPoint& p, NijenhuisMethod method);

/// |N|_g = sqrt(g^{ia} g^{jb} g_{kc} N_ij^k N_ab^c) = nu |N|_Euclid for the round metric.
double nijenhuis_g_norm(const Array3& n, const ChartPoint& p);

struct CrosscheckReport {
  std::string structure;
  std::size_t points = 0;
  /// max over points of sup |N_coordinate - N_bracket|
  double max_deviation = 0.0;
  /// max over points of sup |N_coordinate|
  double max_component = 0.0;
  /// min over points of sup |N_coordinate|
  double min_max_component = 0.0;
  std::vector<double> g_norms;
  std::vector<double> deviations;
};

CrosscheckReport crosscheck(const Tensor11Field& j, const SamplePlan& plan);

}  // namespace nijcheck
