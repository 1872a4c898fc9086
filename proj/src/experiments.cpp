#include "gmi/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "gmi/csv.hpp"

namespace gmi {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool known_scenario(const std::string& s) {
  return s == "example1" || s == "example1_hard" || s == "example2" || s == "helmholtz";
}

}  // namespace

const std::vector<std::string>& default_methods() {
  static const std::vector<std::string> methods = {"mv_cva", "monomial_local",
                                                   "monomial_maxvol", "normal_coords"};
  return methods;
}

void ExperimentConfig::validate() const {
  if (!known_scenario(scenario)) throw ConfigError("unknown scenario: " + scenario);
  if (n < 1 || p < 1 || n < p) throw ConfigError("need n >= p >= 1");
  if (m < 2) throw ConfigError("need at least two nodes");
  if (degree < 0) throw ConfigError("degree must be non-negative");
  if (probes < 2) throw ConfigError("need at least two probe points");
  if (noise < 0.0) throw ConfigError("noise must be non-negative");
  if (!(t_lo < t_hi)) throw ConfigError("interval must be non-empty");
  if (approach != "augmented" && approach != "surrogate")
    throw ConfigError("approach must be augmented or surrogate");
  for (const auto& mth : methods) {
    const auto& all = default_methods();
    if (std::find(all.begin(), all.end(), mth) == all.end())
      throw ConfigError("unknown method: " + mth);
  }
}

ExperimentConfig scenario_defaults(const std::string& name, bool small) {
  ExperimentConfig cfg;
  cfg.scenario = name;
  cfg.small = small;
  cfg.methods = default_methods();
  if (name == "example1") {
    cfg.n = small ? 200 : 1000;
    cfg.p = 10;
    cfg.m = 8;
    cfg.degree = 15;
    cfg.t_lo = 0.0;
    cfg.t_hi = 1.0;
  } else if (name == "example1_hard") {
    cfg.n = small ? 200 : 1000;
    cfg.p = 10;
    cfg.m = 18;
    cfg.degree = 35;
    cfg.t_lo = 0.0;
    cfg.t_hi = 1.0;
  } else if (name == "example2") {
    cfg.n = small ? 200 : 1000;
    cfg.p = 10;
    cfg.m = 10;
    cfg.degree = 19;
    cfg.noise = 1e-10;
    cfg.t_lo = 0.0;
    cfg.t_hi = 1.0;
  } else if (name == "helmholtz") {
    cfg.n = small ? 200 : 500;
    cfg.p = 8;
    cfg.m = 12;
    cfg.degree = 23;
    cfg.t_lo = 10.0;
    cfg.t_hi = 20.0;
  } else {
    throw ConfigError("unknown scenario: " + name);
  }
  return cfg;
}

ScenarioSample scenario_truth(const ExperimentConfig& cfg, double t) {
  if (cfg.scenario == "helmholtz") return gen_helmholtz(cfg.n, cfg.p, t);
  return gen_transcendental(cfg.n, cfg.p, t, cfg.seed);
}

ScenarioSample scenario_node_sample(const ExperimentConfig& cfg, double t,
                                    Index node_index) {
  if (cfg.scenario == "helmholtz") return gen_helmholtz(cfg.n, cfg.p, t);
  if (cfg.noise > 0.0)
    return gen_transcendental_noisy(cfg.n, cfg.p, t, cfg.seed, cfg.noise,
                                    static_cast<std::uint64_t>(node_index));
  return gen_transcendental(cfg.n, cfg.p, t, cfg.seed);
}

void run_conditioning_table(std::ostream& out) {
  write_csv_row(out, {"m", "cond_vandermonde", "cond_arnoldi_q"});
  for (int m : {12, 20, 30, 40}) {
    Vector nodes(m);
    for (int i = 0; i < m; ++i)
      nodes(i) = -1.0 + 2.0 * static_cast<double>(i) / (m - 1);
    Matrix v(m, m);
    for (int i = 0; i < m; ++i) {
      double pw = 1.0;
      for (int j = 0; j < m; ++j) {
        v(i, j) = pw;
        pw *= nodes(i);
      }
    }
    const ArnoldiModel model = va_fit(nodes, Matrix::Zero(m, 1), m - 1);
    write_csv_row(out, {std::to_string(m), format_double(cond2(v)),
                        format_double(cond2(model.Q))});
  }
}

void run_geometry_table(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  const Vector nodes = chebyshev_nodes(cfg.m, cfg.t_lo, cfg.t_hi);
  std::vector<StiefelPoint> samples;
  samples.reserve(static_cast<std::size_t>(cfg.m));
  for (Index i = 0; i < nodes.size(); ++i)
    samples.push_back(scenario_node_sample(cfg, nodes(i), i).U);

  const PermutationChart unstab = identity_chart(cfg.n, cfg.p);
  const PermutationChart mv = maxvol_chart(samples).chart;
  const Index ref = cfg.ref_index < 0 ? default_ref_index(nodes) : cfg.ref_index;
  const MvChart hh = build_chart(samples, ref);

  write_csv_row(out, {"t", "kappa_unstabilized", "kappa_maxvol", "kappa_householder"});
  for (Index i = 0; i < nodes.size(); ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    write_csv_row(out, {format_double(nodes(i)),
                        format_double(perm_geometric_condition(unstab, s)),
                        format_double(perm_geometric_condition(mv, s)),
                        format_double(geometric_condition(hh, s))});
  }
}

namespace {

struct ProbeResult {
  double rel_error = kNan;
  double defect = kNan;
  double vel_error = kNan;
};

// One fitted method inside a sweep; evaluate() must not throw.
struct MethodRun {
  virtual ~MethodRun() = default;
  virtual ProbeResult evaluate(double t, const ScenarioSample& truth) const = 0;
};

double velocity_rel_error(const StiefelPoint& point, const TangentLift& vel,
                          const ScenarioSample& truth) {
  const double dist = projector_velocity_distance(point, vel, truth.U, truth.Udot);
  const double denom = projector_velocity_norm(truth.Udot);
  return denom > 0.0 ? dist / denom : dist;
}

struct OursRun : MethodRun {
  GrassmannInterpolant interp;

  ProbeResult evaluate(double t, const ScenarioSample& truth) const override {
    ProbeResult r;
    try {
      const VelocityEvaluation e = evaluate_with_velocity(interp, t);
      r.rel_error = subspace_error(e.point, truth.U).relative;
      r.defect = orthonormality_defect(e.point.U);
      r.vel_error = velocity_rel_error(e.point, e.velocity, truth);
    } catch (const std::exception&) {
    }
    return r;
  }
};

// Confluent monomial fit of the coordinates of a permutation chart.
struct MonomialRun : MethodRun {
  PermutationChart chart;
  MonomialModel model;

  ProbeResult evaluate(double t, const ScenarioSample& truth) const override {
    ProbeResult r;
    try {
      Vector pt(1);
      pt(0) = t;
      const Vector v = monomial_eval(model, pt).row(0).transpose();
      const MvCoordinates c{MvCoordinates::unvec(v, chart.n - chart.p, chart.p),
                            std::nullopt};
      const StiefelPoint u = perm_reconstruct(chart, c);
      r.rel_error = subspace_error(u, truth.U).relative;
      r.defect = orthonormality_defect(u.U);
    } catch (const std::exception&) {
    }
    return r;
  }
};

struct NormalRun : MethodRun {
  NormalCoordInterpolant interp;

  explicit NormalRun(NormalCoordInterpolant i) : interp(std::move(i)) {}

  ProbeResult evaluate(double t, const ScenarioSample& truth) const override {
    ProbeResult r;
    try {
      const Matrix uhat = normal_coordinate_eval(interp, t);
      if (!uhat.allFinite()) return r;
      r.defect = orthonormality_defect(uhat);
      if (r.defect <= 1e-10) {
        r.rel_error = subspace_error(StiefelPoint(uhat), truth.U).relative;
      } else {
        r.rel_error = subspace_error_general(uhat, truth.U).relative;
      }
    } catch (const std::exception&) {
    }
    return r;
  }
};

std::unique_ptr<MethodRun> fit_method(const std::string& name,
                                      const ExperimentConfig& cfg, const Vector& nodes,
                                      const std::vector<StiefelPoint>& samples,
                                      const std::vector<TangentLift>& lifts) {
  if (name == "mv_cva") {
    auto run = std::make_unique<OursRun>();
    const HermiteApproach approach = cfg.approach == "surrogate"
                                         ? HermiteApproach::Surrogate
                                         : HermiteApproach::Augmented;
    run->interp = fit_hermite(nodes, samples, lifts, cfg.degree, approach, cfg.ref_index);
    return run;
  }
  if (name == "monomial_local" || name == "monomial_maxvol") {
    auto run = std::make_unique<MonomialRun>();
    run->chart = name == "monomial_local" ? identity_chart(cfg.n, cfg.p)
                                          : maxvol_chart(samples).chart;
    const Index m = nodes.size();
    const Index ncoord = (cfg.n - cfg.p) * cfg.p;
    Matrix values(m, ncoord), derivs(m, ncoord);
    for (Index i = 0; i < m; ++i) {
      const auto c = perm_coordinate_velocity(run->chart,
                                              samples[static_cast<std::size_t>(i)],
                                              lifts[static_cast<std::size_t>(i)]);
      values.row(i) = c.vec().transpose();
      derivs.row(i) =
          Eigen::Map<const Vector>(c.XiDot->data(), c.XiDot->size()).transpose();
    }
    run->model = monomial_fit(nodes, values, cfg.degree, &derivs);
    return run;
  }
  if (name == "normal_coords") {
    return std::make_unique<NormalRun>(
        normal_coordinate_interp(nodes, samples, &lifts, cfg.degree, cfg.ref_index));
  }
  throw ConfigError("unknown method: " + name);
}

}  // namespace

void run_error_sweep(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  const std::vector<std::string>& methods =
      cfg.methods.empty() ? default_methods() : cfg.methods;

  const Vector nodes = chebyshev_nodes(cfg.m, cfg.t_lo, cfg.t_hi);
  std::vector<StiefelPoint> samples;
  std::vector<TangentLift> lifts;
  samples.reserve(static_cast<std::size_t>(cfg.m));
  for (Index i = 0; i < nodes.size(); ++i) {
    ScenarioSample s = scenario_node_sample(cfg, nodes(i), i);
    samples.push_back(std::move(s.U));
    lifts.push_back(std::move(s.Udot));
  }

  // Fit every method up front; a failed fit yields nan records, not an abort.
  std::vector<std::unique_ptr<MethodRun>> runs(methods.size());
  for (std::size_t k = 0; k < methods.size(); ++k) {
    try {
      runs[k] = fit_method(methods[k], cfg, nodes, samples, lifts);
    } catch (const std::exception&) {
      runs[k] = nullptr;
    }
  }

  write_csv_row(out, {"t", "method", "rel_subspace_error", "orthonormality_defect",
                      "velocity_rel_error"});
  for (int j = 0; j < cfg.probes; ++j) {
    const double t =
        cfg.t_lo + (cfg.t_hi - cfg.t_lo) * static_cast<double>(j) / (cfg.probes - 1);
    const ScenarioSample truth = scenario_truth(cfg, t);
    for (std::size_t k = 0; k < methods.size(); ++k) {
      ProbeResult r;
      if (runs[k]) r = runs[k]->evaluate(t, truth);
      write_csv_row(out, {format_double(t), methods[k], format_double(r.rel_error),
                          format_double(r.defect), format_double(r.vel_error)});
    }
  }
}

}  // namespace gmi
