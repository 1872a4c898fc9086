#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "gmi/baselines.hpp"
#include "gmi/interpolant.hpp"
#include "gmi/scenarios.hpp"

namespace gmi {

struct ExperimentConfig {
  std::string scenario = "example1";  // example1 | example1_hard | example2 | helmholtz
  Index n = 1000;
  Index p = 10;
  int m = 8;
  int degree = 15;
  int probes = 200;
  double noise = 0.0;
  std::uint64_t seed = 7;
  double t_lo = 0.0;
  double t_hi = 1.0;
  std::vector<std::string> methods;  // defaults to all four methods
  std::string approach = "augmented";
  Index ref_index = -1;
  bool small = false;

  void validate() const;  // throws ConfigError
};

// Fill scenario-dependent defaults (dimensions, node count, degree, noise,
// interval); `small` shrinks n to 200 for quick runs.
ExperimentConfig scenario_defaults(const std::string& name, bool small = false);

// Clean (noise-free) sample of the configured trajectory at parameter t.
ScenarioSample scenario_truth(const ExperimentConfig& cfg, double t);
// Sample seen by the fit: example2 adds the calibrated perturbation using the
// node index as noise stream.
ScenarioSample scenario_node_sample(const ExperimentConfig& cfg, double t,
                                    Index node_index);

// Condition numbers of the monomial Vandermonde matrix vs. the recurrence
// basis matrix on m in {12,20,30,40} equispaced points in [-1,1].
// Columns: m,cond_vandermonde,cond_arnoldi_q
void run_conditioning_table(std::ostream& out);

// Per-node geometric condition numbers of three charts on the configured
// scenario. Columns: t,kappa_unstabilized,kappa_maxvol,kappa_householder
void run_geometry_table(const ExperimentConfig& cfg, std::ostream& out);

// Interpolation error sweep; one record per (probe, method).
// Columns: t,method,rel_subspace_error,orthonormality_defect,velocity_rel_error
// Diverged evaluations record nan; method fit failures record nan for every
// probe. Never throws on per-method numerical failures.
void run_error_sweep(const ExperimentConfig& cfg, std::ostream& out);

const std::vector<std::string>& default_methods();

}  // namespace gmi
