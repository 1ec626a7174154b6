#include "nijcheck_app/app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nijcheck/claims.hpp"
#include "nijcheck/errors.hpp"
#include "nijcheck/nijenhuis.hpp"
#include "nijcheck/report.hpp"
#include "nijcheck/sampling.hpp"
#include "nijcheck/selfcheck.hpp"
#include "nijcheck/version.hpp"

namespace nijcheck::app {

namespace {

std::string fixed17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void require_even_dim(std::size_t dim) {
  if (dim < 2 || dim % 2 != 0)
    throw ConfigError("dimension must be even and at least 2 (got " + std::to_string(dim) + ")");
}

/// Maps library errors to exit codes and prints a one-line diagnostic.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const NumericalFailure& e) {
    err << "nijcheck: numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const Error& e) {
    // configuration, dimension, domain and pole errors: the input is at fault
    err << "nijcheck: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "nijcheck: unexpected failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open output file '" + path + "'");
  file << text;
  if (!file.flush()) throw ConfigError("cannot write output file '" + path + "'");
}

Chart parse_chart(const std::string& name) {
  if (name == "north") return Chart::North;
  if (name == "south") return Chart::South;
  throw ConfigError("unknown chart '" + name + "'");
}

NijenhuisMethod parse_method(const std::string& name) {
  if (name == "coordinate") return NijenhuisMethod::Coordinate;
  if (name == "bracket") return NijenhuisMethod::Bracket;
  throw ConfigError("unknown method '" + name + "'");
}

struct NijenhuisConfig {
  std::size_t dim = 6;
  std::string structure = "octonion-s6";
  std::string point;
  std::string ambient;
  std::string chart = "north";
  std::string method = "coordinate";
};

int cmd_nijenhuis(const NijenhuisConfig& cfg, std::ostream& out) {
  require_even_dim(cfg.dim);
  const Tensor11Field j = make_structure(cfg.structure, cfg.dim);
  const Chart chart = parse_chart(cfg.chart);
  const NijenhuisMethod method = parse_method(cfg.method);
  if (cfg.point.empty() == cfg.ambient.empty())
    throw ConfigError("exactly one of --point and --ambient is required");

  ChartPoint p;
  if (!cfg.point.empty()) {
    p = ChartPoint{parse_reals(cfg.point), chart};
    if (p.dim() != cfg.dim)
      throw ConfigError("--point needs " + std::to_string(cfg.dim) + " coordinates");
  } else {
    const Vec<double> y = parse_reals(cfg.ambient);
    if (y.size() != cfg.dim + 1)
      throw ConfigError("--ambient needs " + std::to_string(cfg.dim + 1) + " coordinates");
    if (std::abs(norm(y) - 1.0) > 1e-9) throw ConfigError("--ambient point is not on the unit sphere");
    p = sphere_to_chart(AmbientPoint{y}, chart);
  }

  const NijenhuisAt n = nijenhuis(j, p, method);
  out << "# structure=" << j.name() << " chart=" << to_string(p.chart)
      << " method=" << to_string(method) << "\n";
  out << "# i j k N_ij^k\n";
  for (std::size_t a = 0; a < cfg.dim; ++a)
    for (std::size_t b = 0; b < cfg.dim; ++b)
      for (std::size_t c = 0; c < cfg.dim; ++c)
        out << a + 1 << " " << b + 1 << " " << c + 1 << " " << fixed17(n.components(a, b, c))
            << "\n";
  return kSuccess;
}

int cmd_selftest(const SelfTestOptions& opts, bool verbose, std::ostream& out) {
  const std::vector<CheckLine> lines = run_selftest(opts);
  std::size_t passed = 0;
  for (const CheckLine& line : lines) {
    if (line.pass) ++passed;
    if (verbose || !line.pass) {
      out << (line.pass ? "PASS " : "FAIL ") << line.name << ": residual " << fixed17(line.residual)
          << " (tolerance " << fixed17(line.tolerance) << ")\n";
    }
  }
  out << "selftest: " << passed << "/" << lines.size() << " checks passed\n";
  return passed == lines.size() ? kSuccess : kSelfTestFailure;
}

int cmd_trace_sum(std::size_t dim, std::size_t trials, std::uint64_t seed, std::ostream& out) {
  require_even_dim(dim);
  if (trials == 0) throw ConfigError("--trials must be positive");
  const TraceSumValues v = trace_sum_values(dim, trials, seed);
  out << "dim " << dim << "\n";
  out << "trials " << v.trials << "\n";
  out << "independent_sum " << fixed17(v.independent_sum) << "\n";
  out << "spread " << fixed17(v.spread) << "\n";
  out << "stated_n_squared " << fixed17(v.stated_n_squared) << "\n";
  out << "stated_x_squared " << fixed17(v.stated_x_squared) << "\n";
  return kSuccess;
}

int cmd_conditional(std::size_t dim, std::size_t trials, std::uint64_t seed, bool no_sym,
                    std::ostream& out) {
  require_even_dim(dim);
  const ConditionalSummary s = conditional_nijk_check(dim, trials, seed, !no_sym);
  out << "dim " << dim << "\n";
  out << "trials " << s.trials << "\n";
  out << "max_residual " << fixed17(s.max_residual) << "\n";
  out << "max_square_residual " << fixed17(s.max_square_residual) << "\n";
  return kSuccess;
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  require_even_dim(cfg.dim);
  const Tensor11Field j = make_structure(cfg.structure, cfg.dim);
  SamplePlan plan;
  plan.dim = cfg.dim;
  plan.count = cfg.points;
  plan.seed = cfg.seed;
  const CrosscheckReport r = crosscheck(j, plan_for(j, plan));
  out << "structure " << r.structure << "\n";
  out << "points " << r.points << "\n";
  out << "max_deviation " << fixed17(r.max_deviation) << "\n";
  out << "max_component " << fixed17(r.max_component) << "\n";
  out << "min_max_component " << fixed17(r.min_max_component) << "\n";
  return kSuccess;
}

struct TabulateConfig {
  std::size_t dim = 6;
  std::string structure = "octonion-s6";
  std::string origin;
  double spacing = 0.05;
  std::size_t per_axis = 2;
  std::string output;
};

int cmd_tabulate(const TabulateConfig& cfg) {
  require_even_dim(cfg.dim);
  if (!(cfg.spacing > 0.0)) throw ConfigError("--spacing must be positive");
  if (cfg.per_axis < 2) throw ConfigError("--per-axis must be at least 2");
  if (cfg.output.empty()) throw ConfigError("--out is required");
  const Tensor11Field j = make_structure(cfg.structure, cfg.dim);
  Vec<double> origin = cfg.origin.empty() ? Vec<double>(cfg.dim, 0.0) : parse_reals(cfg.origin);
  if (origin.size() == 1) origin.assign(cfg.dim, origin[0]);
  if (origin.size() != cfg.dim) throw ConfigError("--origin needs 1 or dim values");
  save_grid_csv(tabulate(j, origin, cfg.spacing, cfg.per_axis), cfg.output);
  return kSuccess;
}

}  // namespace

void validate_config(const RunConfig& config) {
  require_even_dim(config.dim);
  if (!(config.tol_hold > 0.0) || !(config.tol_hold < config.tol_fail) ||
      !std::isfinite(config.tol_fail))
    throw ConfigError("tolerances must satisfy 0 < tol-hold < tol-fail");
  if (!(config.fd_step >= 0.0) || !std::isfinite(config.fd_step))
    throw ConfigError("--fd-step must be non-negative (0 selects the default)");
}

Tensor11Field make_structure(const std::string& spec, std::size_t dim) {
  if (spec == "constant") {
    require_even_dim(dim);
    return constant_acs(standard_block_structure(dim));
  }
  if (spec == "s2") return s2_standard(dim);
  if (spec == "octonion-s6") return octonionic_acs_s6(dim);
  if (spec.rfind("grid:", 0) == 0) {
    const std::string path = spec.substr(5);
    if (path.empty()) throw ConfigError("grid structure needs a file path");
    Tensor11Field field = grid_acs(load_grid(path));
    if (field.dim() != dim)
      throw DimensionMismatch("structure requires dim " + std::to_string(field.dim()));
    return field;
  }
  throw ConfigError("unknown structure '" + spec + "'");
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse number '" + cell + "'");
    }
    if (cell.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(v))
      throw ConfigError("cannot parse number '" + cell + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty coordinate list");
  return out;
}

int cmd_claims(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_config(config);
    const Tensor11Field j = make_structure(config.structure, config.dim);
    SamplePlan plan;
    plan.dim = config.dim;
    plan.count = config.points;
    plan.seed = config.seed;
    plan.continuity_sweep = config.sweep;
    plan = plan_for(j, plan);
    ClaimOptions opts;
    opts.tol = {config.tol_hold, config.tol_fail};
    opts.fd_step = config.fd_step;
    const ChainReport report = chain_report(j, plan, opts);
    write_output(config.format == OutputFormat::Json ? to_json(report) : to_csv(report),
                 config.output, out);
    return int(kSuccess);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Nijenhuis tensor and identity checker for round spheres in stereographic charts",
               "nijcheck"};
  cli.require_subcommand(1);
  cli.set_version_flag("--version", std::string(kLibraryVersion));

  RunConfig claims_cfg;
  auto* claims = cli.add_subcommand("claims", "Evaluate the identity chain and emit a report");
  claims->add_option("--dim", claims_cfg.dim, "Sphere dimension (even)")->capture_default_str();
  claims->add_option("--structure", claims_cfg.structure,
                     "constant | s2 | octonion-s6 | grid:<path>")
      ->capture_default_str();
  claims->add_option("--points", claims_cfg.points, "Number of sample points")->capture_default_str();
  claims->add_option("--seed", claims_cfg.seed, "Sampling seed")->capture_default_str();
  claims->add_option("--fd-step", claims_cfg.fd_step,
                     "Second-derivative step (0 selects 1e-4 (1 + |x|))")
      ->capture_default_str();
  claims->add_option("--tol-hold", claims_cfg.tol_hold, "Residual below which a claim holds")
      ->capture_default_str();
  claims->add_option("--tol-fail", claims_cfg.tol_fail, "Residual above which a claim fails")
      ->capture_default_str();
  claims->add_option("--out", claims_cfg.output, "Output file (default: standard output)");
  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::Json},
                                                    {"csv", OutputFormat::Csv}};
  claims->add_option("--format", claims_cfg.format, "json | csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  claims->add_flag("--sweep", claims_cfg.sweep, "Add the continuity sweep towards |x| = 1");

  NijenhuisConfig nij_cfg;
  auto* nij = cli.add_subcommand("nijenhuis", "Print N_ij^k at one point");
  nij->add_option("--dim", nij_cfg.dim, "Sphere dimension (even)")->capture_default_str();
  nij->add_option("--structure", nij_cfg.structure, "constant | s2 | octonion-s6 | grid:<path>")
      ->capture_default_str();
  nij->add_option("--point", nij_cfg.point, "Chart coordinates x1,...,xn");
  nij->add_option("--ambient", nij_cfg.ambient, "Unit-sphere coordinates y1,...,y(n+1)");
  nij->add_option("--chart", nij_cfg.chart, "north | south")->capture_default_str();
  nij->add_option("--method", nij_cfg.method, "coordinate | bracket")->capture_default_str();

  SelfTestOptions self_opts;
  bool verbose = false;
  auto* self = cli.add_subcommand("selftest", "Run the geometry and algebra invariant suite");
  self->add_flag("--verbose,-v", verbose, "Print one line per check");
  self->add_option("--seed", self_opts.seed, "Sampling seed")->capture_default_str();
  self->add_flag("--inject-fault", self_opts.inject_fault)->group("");  // test harness hook

  std::size_t trace_dim = 6, trace_trials = 20;
  std::uint64_t trace_seed = 1;
  auto* trace = cli.add_subcommand(
      "trace-sum", "Sum of N_ij^i over i, j at x = (1,...,1): independent value and closed forms");
  trace->add_option("--dim", trace_dim, "Dimension (even)")->capture_default_str();
  trace->add_option("--trials", trace_trials, "Random structures to average over")
      ->capture_default_str();
  trace->add_option("--seed", trace_seed, "Seed")->capture_default_str();

  std::size_t cond_dim = 6, cond_trials = 1000;
  std::uint64_t cond_seed = 1;
  bool cond_no_sym = false;
  auto* cond = cli.add_subcommand(
      "conditional", "Check the closed-form N under synthetic data that satisfies the premises");
  cond->add_option("--dim", cond_dim, "Dimension (even)")->capture_default_str();
  cond->add_option("--trials", cond_trials, "Number of trials")->capture_default_str();
  cond->add_option("--seed", cond_seed, "Seed")->capture_default_str();
  cond->add_flag("--no-symmetric", cond_no_sym, "Use a zero symmetric part");

  RunConfig cross_cfg;
  auto* cross = cli.add_subcommand("crosscheck", "Compare the coordinate and bracket methods");
  cross->add_option("--dim", cross_cfg.dim, "Sphere dimension (even)")->capture_default_str();
  cross->add_option("--structure", cross_cfg.structure, "constant | s2 | octonion-s6 | grid:<path>")
      ->capture_default_str();
  cross->add_option("--points", cross_cfg.points, "Number of sample points")->capture_default_str();
  cross->add_option("--seed", cross_cfg.seed, "Sampling seed")->capture_default_str();

  TabulateConfig tab_cfg;
  auto* tab = cli.add_subcommand("tabulate", "Sample a structure on a lattice and write a grid CSV");
  tab->add_option("--dim", tab_cfg.dim, "Sphere dimension (even)")->capture_default_str();
  tab->add_option("--structure", tab_cfg.structure, "constant | s2 | octonion-s6")
      ->capture_default_str();
  tab->add_option("--origin", tab_cfg.origin, "Lower corner (one value or one per axis)");
  tab->add_option("--spacing", tab_cfg.spacing, "Lattice spacing")->capture_default_str();
  tab->add_option("--per-axis", tab_cfg.per_axis, "Nodes per axis")->capture_default_str();
  tab->add_option("--out", tab_cfg.output, "Output CSV file")->required();

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e, out, err);
    return code == 0 ? int(kSuccess) : int(kConfigError);
  }

  if (claims->parsed()) return cmd_claims(claims_cfg, out, err);
  if (nij->parsed()) return guarded(err, [&] { return cmd_nijenhuis(nij_cfg, out); });
  if (self->parsed()) return guarded(err, [&] { return cmd_selftest(self_opts, verbose, out); });
  if (trace->parsed())
    return guarded(err, [&] { return cmd_trace_sum(trace_dim, trace_trials, trace_seed, out); });
  if (cond->parsed())
    return guarded(err,
                   [&] { return cmd_conditional(cond_dim, cond_trials, cond_seed, cond_no_sym, out); });
  if (cross->parsed()) return guarded(err, [&] { return cmd_crosscheck(cross_cfg, out); });
  if (tab->parsed()) return guarded(err, [&] { return cmd_tabulate(tab_cfg); });
  return kConfigError;
}

}  // namespace nijcheck::app
