#include "nijcheck/acs_catalog.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nijcheck/octonion.hpp"
#include "nijcheck/round_geometry.hpp"

namespace nijcheck {

namespace {

double square_residual(const Mat& j) {
  Mat sq = j * j;
  sq += Mat::identity(j.rows());
  return sup_norm(sq);
}

std::string format_matrix(const Mat& m) {
  std::ostringstream os;
  os << std::setprecision(17) << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

Tensor11Field constant_acs(const Mat& j0, std::string name) {
  if (j0.rows() != j0.cols() || j0.rows() == 0)
    throw DimensionMismatch("constant_acs: J0 must be square");
  const double res = square_residual(j0);
  if (!(res <= 1e-10)) {
    std::ostringstream os;
    os << "constant_acs: J0^2 + I has sup-norm " << res << " (tolerance 1e-10)";
    throw NotAlmostComplex(os.str());
  }
  Tensor11Field::Options opts;
  opts.metadata["kind"] = "constant";
  opts.metadata["J0"] = format_matrix(j0);
  return Tensor11Field::from_generic(
      std::move(name), j0.rows(),
      [j0](auto x, Chart) {
        using T = typename decltype(x)::value_type;
        Matrix<T> m(j0.rows(), j0.cols());
        for (std::size_t r = 0; r < j0.rows(); ++r)
          for (std::size_t c = 0; c < j0.cols(); ++c) m(r, c) = T(j0(r, c));
        return m;
      },
      std::move(opts));
}

Mat standard_block_structure(std::size_t dim) {
  if (dim == 0 || dim % 2 != 0) throw DimensionMismatch("block structure needs an even dimension");
  Mat j(dim, dim, 0.0);
  for (std::size_t m = 0; m < dim; m += 2) {
    j(m, m + 1) = 1.0;
    j(m + 1, m) = -1.0;
  }
  return j;
}

Tensor11Field s2_standard(std::size_t dim) {
  if (dim != 2) throw DimensionMismatch("structure requires dim 2");
  return constant_acs(standard_block_structure(2), "s2");
}

Tensor11Field octonionic_acs_s6(std::size_t dim) {
  if (dim != 6) throw DimensionMismatch("structure requires dim 6");
  Tensor11Field::Options opts;
  opts.both_charts = true;
  opts.metadata["kind"] = "octonion-s6";
  opts.metadata["convention"] = "J_p(v) = p v (left multiplication), y^i <-> e_i";
  return Tensor11Field::from_generic(
      "octonion-s6", 6,
      [](auto x, Chart chart) {
        using T = typename decltype(x)::value_type;
        const Vec<T> y = chart_to_sphere_coords(x, chart);
        const Matrix<T> e = embedding_jacobian_coords(x, chart);
        OctonionOf<T> p{};
        for (std::size_t k = 0; k < 7; ++k) p[k + 1] = y[k];
        // W = p E_i column by column, as the right-hand side of E J^T = W.
        Matrix<T> etw(6, 6);
        for (std::size_t i = 0; i < 6; ++i) {
          OctonionOf<T> v{};
          for (std::size_t k = 0; k < 7; ++k) v[k + 1] = e(k, i);
          const OctonionOf<T> w = octonion_multiply(p, v);
          for (std::size_t a = 0; a < 6; ++a) {
            T s{};
            for (std::size_t k = 0; k < 7; ++k) s += e(k, a) * w[k + 1];
            etw(a, i) = s;
          }
        }
        const Matrix<T> ete = e.transposed() * e;
        // Column i of the solution holds J(d_i) in chart components, i.e. row i of J.
        return solve(ete, etw).transposed();
      },
      std::move(opts));
}

// --- tabulated fields -------------------------------------------------------

std::size_t GridSamples::node_count() const {
  std::size_t total = 1;
  for (std::size_t c : counts) total *= c;
  return total;
}

Vec<double> GridSamples::node_position(std::size_t flat) const {
  Vec<double> x(dim);
  for (std::size_t a = dim; a-- > 0;) {
    x[a] = origin[a] + spacing * static_cast<double>(flat % counts[a]);
    flat /= counts[a];
  }
  return x;
}

Box GridSamples::bounds() const {
  Box b{origin, origin};
  for (std::size_t a = 0; a < dim; ++a) b.hi[a] += spacing * static_cast<double>(counts[a] - 1);
  return b;
}

Tensor11Field grid_acs(GridSamples samples, Interpolation, std::string name) {
  const std::size_t n = samples.dim;
  if (n == 0 || samples.origin.size() != n || samples.counts.size() != n)
    throw ConfigError("grid: inconsistent dimension");
  if (!(samples.spacing > 0.0)) throw ConfigError("grid: spacing must be positive");
  for (std::size_t c : samples.counts)
    if (c < 2) throw ConfigError("grid: every axis needs at least two nodes");
  if (samples.values.size() != samples.node_count())
    throw ConfigError("grid: lattice is incomplete");
  auto nodes = std::make_shared<std::vector<Vec<double>>>();
  for (std::size_t k = 0; k < samples.values.size(); ++k) {
    const Mat& m = samples.values[k];
    if (m.rows() != n || m.cols() != n) throw ConfigError("grid: component matrix shape");
    const double res = square_residual(m);
    if (!(res <= 1e-6)) {
      std::ostringstream os;
      os << "grid node " << k << ": J^2 + I has sup-norm " << res << " (tolerance 1e-6)";
      throw NotAlmostComplex(os.str());
    }
    nodes->push_back(samples.node_position(k));
  }

  Tensor11Field::Options opts;
  opts.domain = samples.bounds();
  opts.nodes = nodes;
  opts.metadata["kind"] = "grid";
  opts.metadata["interpolation"] = "multilinear";
  opts.metadata["nodes"] = std::to_string(samples.node_count());
  auto shared = std::make_shared<const GridSamples>(std::move(samples));
  return Tensor11Field::from_generic(
      std::move(name), n,
      [shared](auto x, Chart) {
        using T = typename decltype(x)::value_type;
        const GridSamples& g = *shared;
        const std::size_t dim = g.dim;
        std::vector<std::size_t> cell(dim);
        Vec<T> frac(dim);
        for (std::size_t a = 0; a < dim; ++a) {
          const T t = (x[a] - g.origin[a]) / g.spacing;
          const double tv = value_of(t);
          const double last = static_cast<double>(g.counts[a] - 1);
          if (tv < -1e-12 || tv > last + 1e-12) throw OutOfDomain("grid: point outside lattice");
          const double base = std::min(std::max(std::floor(tv), 0.0), last - 1.0);
          cell[a] = static_cast<std::size_t>(base);
          frac[a] = t - T(base);
        }
        Matrix<T> out(dim, dim);
        for (std::size_t corner = 0; corner < (std::size_t{1} << dim); ++corner) {
          T w(1.0);
          std::size_t flat = 0;
          for (std::size_t a = 0; a < dim; ++a) {
            const bool up = (corner >> a) & 1U;
            w = w * (up ? frac[a] : T(1.0) - frac[a]);
            flat = flat * g.counts[a] + cell[a] + (up ? 1 : 0);
          }
          const Mat& m = g.values[flat];
          for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) out(r, c) += w * m(r, c);
        }
        return out;
      },
      std::move(opts));
}

GridSamples tabulate(const Tensor11Field& field, const Vec<double>& origin, double spacing,
                     std::size_t per_axis) {
  GridSamples g;
  g.dim = field.dim();
  g.spacing = spacing;
  g.origin = origin;
  g.counts.assign(g.dim, per_axis);
  g.values.reserve(g.node_count());
  for (std::size_t k = 0; k < g.node_count(); ++k)
    g.values.push_back(field.at(g.node_position(k), Chart::North));
  return g;
}

namespace {

std::vector<double> split_numbers(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto first = cell.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    try {
      out.push_back(std::stod(cell.substr(first)));
    } catch (const std::exception&) {
      throw ConfigError("grid: cannot parse number '" + cell + "'");
    }
  }
  return out;
}

GridSamples assemble(std::size_t n, double spacing, Vec<double> origin,
                     const std::vector<std::vector<double>>& rows) {
  if (n == 0) throw ConfigError("grid: n must be positive");
  if (origin.size() == 1 && n > 1) origin.assign(n, origin[0]);
  if (origin.size() != n) throw ConfigError("grid: origin must have 1 or n entries");
  if (!(spacing > 0.0)) throw ConfigError("grid: spacing must be positive");
  GridSamples g;
  g.dim = n;
  g.spacing = spacing;
  g.origin = std::move(origin);
  g.counts.assign(n, 0);
  std::vector<std::vector<std::size_t>> index(rows.size(), std::vector<std::size_t>(n));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n + n * n)
      throw ConfigError("grid: row " + std::to_string(r) + " needs n + n*n values");
    for (std::size_t a = 0; a < n; ++a) {
      const double t = (rows[r][a] - g.origin[a]) / spacing;
      const double k = std::round(t);
      if (k < 0.0 || std::abs(t - k) > 1e-6) throw ConfigError("grid: node off lattice");
      index[r][a] = static_cast<std::size_t>(k);
      g.counts[a] = std::max(g.counts[a], index[r][a] + 1);
    }
  }
  g.values.assign(g.node_count(), Mat());
  std::vector<bool> seen(g.node_count(), false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < n; ++a) flat = flat * g.counts[a] + index[r][a];
    if (seen[flat]) throw ConfigError("grid: duplicate node");
    seen[flat] = true;
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[r][n + i * n + j];
    g.values[flat] = std::move(m);
  }
  for (bool s : seen)
    if (!s) throw ConfigError("grid: lattice is incomplete");
  return g;
}

}  // namespace

GridSamples load_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("grid: cannot open " + path.string());
  if (path.extension() == ".json") {
    nlohmann::json doc;
    try {
      in >> doc;
      const auto n = doc.at("n").get<std::size_t>();
      const auto spacing = doc.at("spacing").get<double>();
      Vec<double> origin;
      if (doc.at("origin").is_array())
        origin = doc.at("origin").get<Vec<double>>();
      else
        origin = {doc.at("origin").get<double>()};
      const auto rows = doc.at("nodes").get<std::vector<std::vector<double>>>();
      return assemble(n, spacing, std::move(origin), rows);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("grid: malformed JSON: ") + e.what());
    }
  }
  std::string line;
  std::vector<double> header;
  while (header.empty() && std::getline(in, line)) header = split_numbers(line);
  if (header.size() < 3) throw ConfigError("grid: header must be 'n,spacing,origin'");
  const auto n = static_cast<std::size_t>(header[0]);
  Vec<double> origin(header.begin() + 2, header.end());
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    auto row = split_numbers(line);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return assemble(n, header[1], std::move(origin), rows);
}

void save_grid_csv(const GridSamples& grid, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("grid: cannot write " + path.string());
  out << std::setprecision(17) << grid.dim << "," << grid.spacing;
  for (double o : grid.origin) out << "," << o;
  out << "\n";
  for (std::size_t k = 0; k < grid.node_count(); ++k) {
    const Vec<double> x = grid.node_position(k);
    for (std::size_t a = 0; a < grid.dim; ++a) out << (a ? "," : "") << x[a];
    for (double v : grid.values[k].data()) out << "," << v;
    out << "\n";
  }
}

// --- validation -------------------------------------------------------------

ValidationReport validate_acs(const Tensor11Field& j, const SamplePlan& plan) {
  ValidationReport report;
  report.structure = j.name();
  std::vector<ChartPoint> points;
  if (j.nodes()) {
    report.node_level = true;
    for (const auto& x : *j.nodes()) points.push_back({x, Chart::North});
  } else {
    points = sample_points(plan_for(j, plan));
  }
  for (const ChartPoint& p : points) {
    const Mat m = j(p);
    report.max_square_residual = std::max(report.max_square_residual, square_residual(m));
    const Mat g = metric_at(p);
    const double mu2 = g(0, 0);
    Mat orth = m * g * m.transposed();
    orth -= g;
    report.max_orthogonality_residual =
        std::max(report.max_orthogonality_residual, sup_norm(orth) / mu2);
    if (!report.node_level) {
      try {
        const Array3 d = j.partials(p);
        for (double v : d.data())
          if (!std::isfinite(v)) report.derivatives_finite = false;
      } catch (const NumericalFailure&) {
        report.derivatives_finite = false;
      }
    }
  }
  report.points = points.size();
  const double tol = report.node_level ? 1e-6 : 1e-8;
  report.ok = report.max_square_residual < tol && report.derivatives_finite;
  return report;
}

}  // namespace nijcheck
