#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gmi/csv.hpp"
#include "gmi/experiments.hpp"
#include "gmi/model_io.hpp"

namespace {

using namespace gmi;

// Write to the given path, or stdout when the path is empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
  if (!out) throw ConfigError("failed writing output file: " + path);
}

Vector flatten(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

struct SweepOptions {
  std::string scenario = "example1";
  std::string out;
  ExperimentConfig overrides;
  bool small = false;
};

int run_sweep(const CLI::App& cmd, SweepOptions& opt) {
  ExperimentConfig cfg = scenario_defaults(opt.scenario, opt.small);
  if (cmd.count("--n")) cfg.n = opt.overrides.n;
  if (cmd.count("--p")) cfg.p = opt.overrides.p;
  if (cmd.count("--m")) cfg.m = opt.overrides.m;
  if (cmd.count("--degree")) cfg.degree = opt.overrides.degree;
  if (cmd.count("--probes")) cfg.probes = opt.overrides.probes;
  if (cmd.count("--noise")) cfg.noise = opt.overrides.noise;
  if (cmd.count("--seed")) cfg.seed = opt.overrides.seed;
  if (cmd.count("--lo")) cfg.t_lo = opt.overrides.t_lo;
  if (cmd.count("--hi")) cfg.t_hi = opt.overrides.t_hi;
  if (cmd.count("--methods")) cfg.methods = opt.overrides.methods;
  if (cmd.count("--approach")) cfg.approach = opt.overrides.approach;
  if (cmd.count("--ref-index")) cfg.ref_index = opt.overrides.ref_index;
  std::ostringstream buf;
  run_error_sweep(cfg, buf);
  emit(opt.out, buf.str());
  return 0;
}

void add_override_flags(CLI::App* cmd, SweepOptions& opt) {
  cmd->add_option("--scenario", opt.scenario,
                  "example1 | example1_hard | example2 | helmholtz");
  cmd->add_option("--n", opt.overrides.n, "ambient dimension");
  cmd->add_option("--p", opt.overrides.p, "subspace dimension");
  cmd->add_option("--m", opt.overrides.m, "number of sample nodes");
  cmd->add_option("--degree", opt.overrides.degree, "polynomial degree");
  cmd->add_option("--probes", opt.overrides.probes, "number of evaluation points");
  cmd->add_option("--noise", opt.overrides.noise, "perturbation magnitude");
  cmd->add_option("--seed", opt.overrides.seed, "random seed");
  cmd->add_option("--lo", opt.overrides.t_lo, "interval start");
  cmd->add_option("--hi", opt.overrides.t_hi, "interval end");
  cmd->add_option("--methods", opt.overrides.methods, "comma-separated method list")
      ->delimiter(',');
  cmd->add_option("--approach", opt.overrides.approach, "augmented | surrogate");
  cmd->add_option("--ref-index", opt.overrides.ref_index,
                  "reference node index (-1 = midpoint rule)");
  cmd->add_flag("--small", opt.small, "shrink ambient dimension for quick runs");
  cmd->add_option("--out", opt.out, "output CSV path (default stdout)");
}

struct FitOptions {
  std::string mode = "hermite";
  std::string nodes_path;
  std::vector<std::string> sample_paths;
  std::vector<std::string> lift_paths;
  int degree = -1;
  std::string approach = "augmented";
  Index ref_index = -1;
  std::string out = "model.bin";
};

int run_fit(const FitOptions& opt) {
  const Vector nodes = flatten(read_matrix_text(opt.nodes_path));
  if (static_cast<Index>(opt.sample_paths.size()) != nodes.size())
    throw ConfigError("need one sample file per node");
  std::vector<StiefelPoint> samples;
  samples.reserve(opt.sample_paths.size());
  for (const auto& path : opt.sample_paths)
    samples.emplace_back(read_matrix_text(path));

  GrassmannInterpolant interp;
  if (opt.mode == "lagrange") {
    interp = fit_lagrange(nodes, samples, opt.degree, opt.ref_index);
  } else if (opt.mode == "hermite") {
    if (opt.lift_paths.size() != opt.sample_paths.size())
      throw ConfigError("hermite mode needs one lift file per sample");
    std::vector<TangentLift> lifts;
    lifts.reserve(opt.lift_paths.size());
    for (std::size_t i = 0; i < opt.lift_paths.size(); ++i)
      lifts.push_back(make_tangent_lift(samples[i], read_matrix_text(opt.lift_paths[i])));
    const HermiteApproach approach = opt.approach == "surrogate"
                                         ? HermiteApproach::Surrogate
                                         : HermiteApproach::Augmented;
    interp = fit_hermite(nodes, samples, lifts, opt.degree, approach, opt.ref_index);
  } else {
    throw ConfigError("mode must be lagrange or hermite");
  }
  save_model(interp, opt.out);
  if (interp.model.stacked_warning)
    std::cerr << "warning: stacked value/derivative system is ill-conditioned (cond2 = "
              << format_double(interp.model.stacked_cond) << ")\n";
  return 0;
}

struct EvalOptions {
  std::string model_path;
  std::string points_path;
  int probes = 0;
  double lo = 0.0, hi = 1.0;
  std::string out;
};

int run_eval(const CLI::App& cmd, const EvalOptions& opt) {
  const GrassmannInterpolant interp = load_model(opt.model_path);
  Vector points;
  if (!opt.points_path.empty()) {
    points = flatten(read_matrix_text(opt.points_path));
  } else if (opt.probes >= 2) {
    if (!(opt.lo < opt.hi)) throw ConfigError("need --lo < --hi");
    points.resize(opt.probes);
    for (int j = 0; j < opt.probes; ++j)
      points(j) = opt.lo + (opt.hi - opt.lo) * static_cast<double>(j) / (opt.probes - 1);
  } else {
    throw ConfigError("need --points or --probes (with --lo/--hi)");
  }
  (void)cmd;

  std::ostringstream buf;
  std::vector<std::string> header = {"t", "extrapolated"};
  for (Index i = 0; i < interp.n * interp.p; ++i)
    header.push_back("u" + std::to_string(i));
  write_csv_row(buf, header);
  for (Index j = 0; j < points.size(); ++j) {
    const Evaluation e = evaluate(interp, points(j));
    std::vector<std::string> row = {format_double(points(j)),
                                    e.extrapolated ? "1" : "0"};
    const Vector u = flatten(e.point.U);
    for (Index i = 0; i < u.size(); ++i) row.push_back(format_double(u(i)));
    write_csv_row(buf, row);
  }
  emit(opt.out, buf.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subspace trajectory interpolation experiments"};
  app.require_subcommand(1);

  std::string cond_out;
  CLI::App* cond = app.add_subcommand(
      "conditioning", "Vandermonde vs. orthogonal-basis condition numbers");
  cond->add_option("--out", cond_out, "output CSV path (default stdout)");

  SweepOptions geo_opt;
  CLI::App* geo = app.add_subcommand(
      "geometry", "per-node geometric condition numbers of three charts");
  add_override_flags(geo, geo_opt);

  SweepOptions sweep_opt;
  CLI::App* sweep =
      app.add_subcommand("sweep", "interpolation error sweep over probe points");
  add_override_flags(sweep, sweep_opt);

  FitOptions fit_opt;
  CLI::App* fit = app.add_subcommand("fit", "fit a model from matrix files");
  fit->add_option("--mode", fit_opt.mode, "lagrange | hermite");
  fit->add_option("--nodes", fit_opt.nodes_path, "text file with the node values")
      ->required();
  fit->add_option("--samples", fit_opt.sample_paths, "orthonormal basis files, one per node")
      ->required();
  fit->add_option("--lifts", fit_opt.lift_paths, "tangent lift files (hermite mode)");
  fit->add_option("--degree", fit_opt.degree, "polynomial degree (-1 = interpolating)");
  fit->add_option("--approach", fit_opt.approach, "augmented | surrogate");
  fit->add_option("--ref-index", fit_opt.ref_index, "reference node index");
  fit->add_option("--out", fit_opt.out, "model output path");

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a saved model at probe points");
  eval->add_option("--model", eval_opt.model_path, "model file")->required();
  eval->add_option("--points", eval_opt.points_path, "text file with probe points");
  eval->add_option("--probes", eval_opt.probes, "number of equispaced probes");
  eval->add_option("--lo", eval_opt.lo, "probe interval start");
  eval->add_option("--hi", eval_opt.hi, "probe interval end");
  eval->add_option("--out", eval_opt.out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
    if (cond->parsed()) {
      std::ostringstream buf;
      gmi::run_conditioning_table(buf);
      emit(cond_out, buf.str());
      return 0;
    }
    if (geo->parsed()) {
      gmi::ExperimentConfig cfg = gmi::scenario_defaults(geo_opt.scenario, geo_opt.small);
      if (geo->count("--n")) cfg.n = geo_opt.overrides.n;
      if (geo->count("--p")) cfg.p = geo_opt.overrides.p;
      if (geo->count("--m")) cfg.m = geo_opt.overrides.m;
      if (geo->count("--seed")) cfg.seed = geo_opt.overrides.seed;
      if (geo->count("--lo")) cfg.t_lo = geo_opt.overrides.t_lo;
      if (geo->count("--hi")) cfg.t_hi = geo_opt.overrides.t_hi;
      if (geo->count("--ref-index")) cfg.ref_index = geo_opt.overrides.ref_index;
      std::ostringstream buf;
      gmi::run_geometry_table(cfg, buf);
      emit(geo_opt.out, buf.str());
      return 0;
    }
    if (sweep->parsed()) return run_sweep(*sweep, sweep_opt);
    if (fit->parsed()) return run_fit(fit_opt);
    if (eval->parsed()) return run_eval(*eval, eval_opt);
    throw gmi::ConfigError("no subcommand given");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gmi::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const gmi::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
