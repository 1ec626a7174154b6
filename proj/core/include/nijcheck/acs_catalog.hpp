#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "nijcheck/field.hpp"
#include "nijcheck/sampling.hpp"

namespace nijcheck {

/// Chart-constant structure J_i^j = J0(i, j). Throws NotAlmostComplex unless
/// J0^2 = -I within 1e-10.
Tensor11Field constant_acs(const Mat& j0, std::string name = "constant");

/// Block-diagonal constant structure with 2x2 blocks [[0, 1], [-1, 0]]
/// (J d_{2m} = d_{2m+1}). `dim` must be even.
Mat standard_block_structure(std::size_t dim);

/// Constant structure on S^2 in the north chart: J d_1 = d_2, J d_2 = -d_1.
/// Throws DimensionMismatch unless dim == 2.
Tensor11Field s2_standard(std::size_t dim = 2);

/// Almost-complex structure on S^6 from octonion left multiplication, J_p(v) = p v,
/// with S^6 in Im O via y^i <-> e_i. Defined natively in both charts.
/// Throws DimensionMismatch unless dim == 6.
Tensor11Field octonionic_acs_s6(std::size_t dim = 6);

/// Tabulated field on a regular lattice.
///
/// Nodes are stored with axis 0 varying slowest. `values[k]` holds the
/// components J_i^j at node k.
struct GridSamples {
  std::size_t dim = 0;
  double spacing = 0.0;
  Vec<double> origin;
  std::vector<std::size_t> counts;
  std::vector<Mat> values;

  std::size_t node_count() const;
  Vec<double> node_position(std::size_t flat) const;
  Box bounds() const;
};

enum class Interpolation { Multilinear };

/// Throws NotAlmostComplex when a node violates J^2 = -I by more than 1e-6,
/// ConfigError for a malformed lattice. Evaluation outside the lattice box
/// throws OutOfDomain. North chart only.
Tensor11Field grid_acs(GridSamples samples, Interpolation scheme = Interpolation::Multilinear,
                       std::string name = "grid");

/// Tabulates `field` on a lattice with `per_axis` nodes per axis.
GridSamples tabulate(const Tensor11Field& field, const Vec<double>& origin, double spacing,
                     std::size_t per_axis);

/// Reads a lattice file (CSV or JSON, chosen by extension).
///
/// CSV: header `n,spacing,origin` (origin either one value for every axis or
/// n values), then one row per node `x1,...,xn,J11,...,Jnn`.
/// JSON: {"n": .., "spacing": .., "origin": [..], "nodes": [[x1..xn, J11..Jnn], ...]}.
GridSamples load_grid(const std::filesystem::path& path);

/// Writes CSV in the format accepted by load_grid.
void save_grid_csv(const GridSamples& grid, const std::filesystem::path& path);

struct ValidationReport {
  std::string structure;
  std::size_t points = 0;
  /// max over points of sup |J^2 + I|
  double max_square_residual = 0.0;
  /// max over points of sup |J g J^T - g| / mu^2
  double max_orthogonality_residual = 0.0;
  bool derivatives_finite = true;
  bool node_level = false;
  bool ok = true;
};

/// Checks J^2 = -I (tolerance 1e-8), g-orthogonality and derivative
/// finiteness over the plan. Tabulated fields are checked at their nodes.
ValidationReport validate_acs(const Tensor11Field& j, const SamplePlan& plan);

}  // namespace nijcheck
