// Acceptance harness: checks every shipped guarantee end to end and prints
// one "PASS|FAIL criterion N: ..." line per criterion. Exit code 0 only when
// all criteria pass. Tolerances are pinned here on purpose — loosening one is
// a deliberate decision, not a test edit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gmi/baselines.hpp"
#include "gmi/errors.hpp"
#include "gmi/experiments.hpp"
#include "gmi/interpolant.hpp"
#include "gmi/kernels.hpp"
#include "gmi/manifold.hpp"
#include "gmi/polybasis.hpp"
#include "gmi/rng.hpp"
#include "gmi/scenarios.hpp"

using namespace gmi;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
  char buf[1024];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// CSV helpers

struct SweepRecord {
  double t = 0.0;
  std::string method;
  double err = 0.0;
  double defect = 0.0;
  double vel = 0.0;
};

std::vector<SweepRecord> parse_sweep(const std::string& csv) {
  std::vector<SweepRecord> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    SweepRecord rec;
    std::getline(ls, cell, ',');
    rec.t = std::stod(cell);
    std::getline(ls, rec.method, ',');
    std::getline(ls, cell, ',');
    rec.err = std::stod(cell);
    std::getline(ls, cell, ',');
    rec.defect = std::stod(cell);
    std::getline(ls, cell, ',');
    rec.vel = std::stod(cell);
    out.push_back(std::move(rec));
  }
  return out;
}

struct MethodStats {
  double max_err = 0.0;  // over finite records
  double max_defect = 0.0;
  int nan_count = 0;
  int rows = 0;
};

MethodStats stats_for(const std::vector<SweepRecord>& recs, const std::string& method) {
  MethodStats s;
  for (const auto& r : recs) {
    if (r.method != method) continue;
    ++s.rows;
    if (std::isfinite(r.err))
      s.max_err = std::max(s.max_err, r.err);
    else
      ++s.nan_count;
    if (std::isfinite(r.defect)) s.max_defect = std::max(s.max_defect, r.defect);
  }
  return s;
}

bool diverged(const MethodStats& s, double threshold) {
  return s.nan_count > 0 || s.max_err >= threshold;
}

bool within_factor(double value, double reference, double factor) {
  return std::isfinite(value) && value >= reference / factor && value <= reference * factor;
}

// ---------------------------------------------------------------------------
// Finite-difference oracle: central differences of a projector-valued curve
// against the claimed derivative, at h = 1e-4 and 1e-5. Passes on the
// second-order ratio (100 +- 20) or, when the h = 1e-5 error sits below the
// rounding floor, on a small absolute error.

struct FdCheck {
  double e4 = 0.0;
  double e5 = 0.0;
  bool pass = false;
};

template <typename Curve>
FdCheck fd_oracle(Curve&& value_at, const Matrix& claimed_derivative, double t) {
  FdCheck chk;
  auto error_at = [&](double h) {
    const Matrix fd = (value_at(t + h) - value_at(t - h)) / (2.0 * h);
    return (fd - claimed_derivative).norm();
  };
  chk.e4 = error_at(1e-4);
  chk.e5 = error_at(1e-5);
  const double ratio = chk.e5 > 0.0 ? chk.e4 / chk.e5 : 0.0;
  const bool ratio_ok = chk.e5 > 1e-9 && ratio >= 80.0 && ratio <= 120.0;
  chk.pass = ratio_ok || chk.e4 <= 1e-7;
  return chk;
}

Matrix projector_of(const StiefelPoint& u) { return u.U * u.U.transpose(); }

Matrix pdot_of(const ScenarioSample& s) {
  return s.Udot.Udot * s.U.U.transpose() + s.U.U * s.Udot.Udot.transpose();
}

// ---------------------------------------------------------------------------

struct NodeData {
  Vector nodes;
  std::vector<StiefelPoint> samples;
  std::vector<TangentLift> lifts;
};

NodeData scenario_nodes(const ExperimentConfig& cfg) {
  NodeData d;
  d.nodes = chebyshev_nodes(cfg.m, cfg.t_lo, cfg.t_hi);
  for (Index i = 0; i < d.nodes.size(); ++i) {
    ScenarioSample s = scenario_node_sample(cfg, d.nodes(i), i);
    d.samples.push_back(std::move(s.U));
    d.lifts.push_back(std::move(s.Udot));
  }
  return d;
}

}  // namespace

int main() {
  std::vector<std::string> report(11);
  int failures = 0;
  auto record = [&](int id, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    report[id] = fmt("%s criterion %d: %s", pass ? "PASS" : "FAIL", id, detail.c_str());
  };
  auto guarded = [&](int id, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      record(id, false, fmt("unexpected exception: %s", e.what()));
    }
  };

  // --- criterion 1: conditioning table -------------------------------------
  guarded(1, [&] {
    const auto t0 = Clock::now();
    std::ostringstream out;
    run_conditioning_table(out);
    const double secs = seconds_since(t0);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);  // header
    std::map<int, std::pair<double, double>> rows;  // m -> (cond_v, cond_q)
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string cell;
      std::getline(ls, cell, ',');
      const int m = std::stoi(cell);
      std::getline(ls, cell, ',');
      const double cv = std::stod(cell);
      std::getline(ls, cell, ',');
      rows[m] = {cv, std::stod(cell)};
    }
    double worst_q = 0.0;
    for (const auto& [m, vals] : rows)
      worst_q = std::max(worst_q, std::abs(vals.second - 1.0));
    const bool pass = rows.size() == 4 && within_factor(rows[12].first, 4.08e4, 10.0) &&
                      within_factor(rows[20].first, 2.72e8, 10.0) &&
                      within_factor(rows[30].first, 1.84e13, 10.0) &&
                      rows[40].first >= 1e16 && worst_q <= 1e-10 && secs < 5.0;
    record(1, pass,
           fmt("monomial conds %.3g/%.3g/%.3g/%.3g, max |cond(Q)-1| = %.2g, %.2fs",
               rows[12].first, rows[20].first, rows[30].first, rows[40].first, worst_q,
               secs));
  });

  // --- criterion 2: chart conditioning table -------------------------------
  guarded(2, [&] {
    const auto t0 = Clock::now();
    const ExperimentConfig cfg = scenario_defaults("example1");  // n=1000 p=10 m=8
    std::ostringstream out;
    run_geometry_table(cfg, out);
    const double secs = seconds_since(t0);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> k_unstab, k_mv, k_hh;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string cell;
      std::getline(ls, cell, ',');
      std::getline(ls, cell, ',');
      k_unstab.push_back(std::stod(cell));
      std::getline(ls, cell, ',');
      k_mv.push_back(std::stod(cell));
      std::getline(ls, cell, ',');
      k_hh.push_back(std::stod(cell));
    }
    const Vector nodes = chebyshev_nodes(cfg.m, cfg.t_lo, cfg.t_hi);
    const Index ref = default_ref_index(nodes);
    const double sqrt_p = std::sqrt(static_cast<double>(cfg.p));
    const double max_u = *std::max_element(k_unstab.begin(), k_unstab.end());
    const double max_m = *std::max_element(k_mv.begin(), k_mv.end());
    const double max_h = *std::max_element(k_hh.begin(), k_hh.end());
    const bool pass = static_cast<int>(k_hh.size()) == cfg.m &&
                      std::abs(k_hh[ref] - sqrt_p) <= 1e-8 && max_h <= 1.35 * sqrt_p &&
                      max_h < max_m && max_m < max_u && secs < 30.0;
    record(2, pass,
           fmt("kappa max: orthogonal-frame %.3f (ref %.6f, sqrt(p) %.6f), "
               "row-selected %.3f, unstabilized %.3f, %.1fs",
               max_h, k_hh[ref], sqrt_p, max_m, max_u, secs));
  });

  // --- criterion 3: node-wise exactness over 20 seeded scenarios -----------
  guarded(3, [&] {
    double worst_val = 0.0, worst_vel = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Index n = 40 + 3 * static_cast<Index>(seed);  // 43 .. 100
      const Index p = 2 + static_cast<Index>(seed % 4);
      const int m = 5 + static_cast<int>(seed % 6);  // 5 .. 10
      const Vector nodes = chebyshev_nodes(m, 0.0, 1.0);
      std::vector<StiefelPoint> samples;
      std::vector<TangentLift> lifts;
      for (int i = 0; i < m; ++i) {
        ScenarioSample s = gen_transcendental(n, p, nodes(i), seed);
        samples.push_back(std::move(s.U));
        lifts.push_back(std::move(s.Udot));
      }
      const GrassmannInterpolant lag = fit_lagrange(nodes, samples);
      const GrassmannInterpolant her = fit_hermite(nodes, samples, lifts);
      for (int i = 0; i < m; ++i) {
        worst_val = std::max(
            worst_val, subspace_error(samples[i], evaluate(lag, nodes(i)).point).relative);
        const VelocityEvaluation ve = evaluate_with_velocity(her, nodes(i));
        worst_val = std::max(worst_val, subspace_error(samples[i], ve.point).relative);
        worst_vel = std::max(worst_vel, projector_velocity_distance(samples[i], lifts[i],
                                                                    ve.point, ve.velocity));
      }
    }
    const bool pass = worst_val <= 1e-9 && worst_vel <= 1e-8;
    record(3, pass,
           fmt("worst node value error %.2e (gate 1e-9), worst node velocity mismatch "
               "%.2e (gate 1e-8)",
               worst_val, worst_vel));
  });

  // --- full-size sweeps shared by criteria 4-7 -----------------------------
  struct SweepOut {
    std::vector<SweepRecord> records;
    double secs = 0.0;
  };
  std::map<std::string, SweepOut> sweeps;
  std::map<std::string, std::string> sweep_errors;
  for (const char* name : {"example1", "example1_hard", "example2", "helmholtz"}) {
    try {
      const ExperimentConfig cfg = scenario_defaults(name);
      const auto t0 = Clock::now();
      std::ostringstream out;
      run_error_sweep(cfg, out);
      sweeps[name] = SweepOut{parse_sweep(out.str()), seconds_since(t0)};
    } catch (const std::exception& e) {
      sweep_errors[name] = e.what();
    }
  }
  auto sweep_missing = [&](int id, std::initializer_list<const char*> names) {
    for (const char* name : names)
      if (!sweeps.count(name)) {
        record(id, false, fmt("sweep %s failed: %s", name, sweep_errors[name].c_str()));
        return true;
      }
    return false;
  };

  // --- criterion 4: orthonormality of every evaluated representative -------
  guarded(4, [&] {
    if (sweep_missing(4, {"example1", "example1_hard", "example2", "helmholtz"})) return;
    double worst = 0.0;
    int bad = 0, rows = 0;
    for (const auto& [name, sw] : sweeps) {
      const MethodStats s = stats_for(sw.records, "mv_cva");
      worst = std::max(worst, s.max_defect);
      bad += s.nan_count;
      rows += s.rows;
    }
    const bool pass = rows > 0 && bad == 0 && worst <= 1e-12;
    record(4, pass,
           fmt("max orthonormality defect %.2e over %d evaluations (gate 1e-12, %d failed)",
               worst, rows, bad));
  });

  // --- criterion 5: smooth-trajectory gates at degrees 15 and 35 -----------
  guarded(5, [&] {
    if (sweep_missing(5, {"example1", "example1_hard"})) return;
    const MethodStats ours15 = stats_for(sweeps["example1"].records, "mv_cva");
    const MethodStats ours35 = stats_for(sweeps["example1_hard"].records, "mv_cva");
    const MethodStats mono_local = stats_for(sweeps["example1_hard"].records, "monomial_local");
    const MethodStats mono_mv = stats_for(sweeps["example1_hard"].records, "monomial_maxvol");
    const MethodStats normal35 = stats_for(sweeps["example1_hard"].records, "normal_coords");
    const double secs = sweeps["example1"].secs + sweeps["example1_hard"].secs;
    // The divergence gate binds on the unstabilized-chart baseline: backward-
    // stable QR keeps the fitted values of the other (stabilized-chart)
    // baselines benign even at cond ~1e19, so their maxima are informational.
    const bool pass = ours15.nan_count == 0 && ours15.max_err <= 1e-6 &&
                      ours35.nan_count == 0 && ours35.max_err <= 1e-6 &&
                      diverged(mono_local, 1e-2) && secs < 120.0;
    record(5, pass,
           fmt("mv_cva max %.2e (deg 15) / %.2e (deg 35) vs monomial %.2g/%.2g "
               "(nan %d/%d), normal_coords %.2g, %.1fs",
               ours15.max_err, ours35.max_err, mono_local.max_err, mono_mv.max_err,
               mono_local.nan_count, mono_mv.nan_count, normal35.max_err, secs));
  });

  // --- criterion 6: noise amplification gate --------------------------------
  guarded(6, [&] {
    if (sweep_missing(6, {"example2"})) return;
    const MethodStats ours = stats_for(sweeps["example2"].records, "mv_cva");
    const MethodStats mono = stats_for(sweeps["example2"].records, "monomial_local");
    const bool pass = ours.nan_count == 0 && ours.max_err <= 1e-7 && diverged(mono, 1e-4);
    record(6, pass,
           fmt("noise 1e-10: mv_cva max %.2e (gate 1e-7), monomial max %.2g with %d "
               "failures (gate >= 1e-4)",
               ours.max_err, mono.max_err, mono.nan_count));
  });

  // --- criterion 7: Helmholtz gates + generator oracles ---------------------
  guarded(7, [&] {
    if (sweep_missing(7, {"helmholtz"})) return;
    const auto t0 = Clock::now();
    const MethodStats ours = stats_for(sweeps["helmholtz"].records, "mv_cva");

    // Residual oracle at full size: the solved factor must span the solution
    // of the rebuilt dense operator, i.e. F lies in span(A * U).
    const Index n = 500, p = 8;
    const double k = 14.0;
    const ScenarioSample s = gen_helmholtz(n, p, k);
    const double h = 1.0 / static_cast<double>(n + 1);
    Matrix a = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      a(i, i) = 2.0 / (h * h) - k * k;
      if (i > 0) a(i, i - 1) = -1.0 / (h * h);
      if (i + 1 < n) a(i, i + 1) = -1.0 / (h * h);
    }
    Matrix f(n, p);
    for (Index j = 0; j < p; ++j) {
      const double c = static_cast<double>(j + 1) / static_cast<double>(p + 1);
      for (Index i = 0; i < n; ++i) {
        const double x = static_cast<double>(i + 1) * h;
        f(i, j) = std::exp(-(x - c) * (x - c) / (2.0 * 0.05 * 0.05));
      }
    }
    const Matrix au_q = thin_qr(a * s.U.U).Q;
    const double residual = (f - au_q * (au_q.transpose() * f)).norm() / f.norm();

    // Derivative oracle: central difference of the projector curve in k.
    const Matrix fd = (projector_of(gen_helmholtz(n, p, k + 1e-4).U) -
                       projector_of(gen_helmholtz(n, p, k - 1e-4).U)) /
                      2e-4;
    const Matrix pdot = pdot_of(s);
    const double deriv_err = (fd - pdot).norm() / std::max(1.0, pdot.norm());

    const double secs = sweeps["helmholtz"].secs + seconds_since(t0);
    const bool pass = ours.nan_count == 0 && ours.max_err <= 1e-8 && residual <= 1e-10 &&
                      deriv_err <= 1e-6 && secs < 120.0;
    record(7, pass,
           fmt("mv_cva max %.2e (gate 1e-8), residual %.2e (gate 1e-10), derivative FD "
               "%.2e (gate 1e-6), %.1fs",
               ours.max_err, residual, deriv_err, secs));
  });

  // --- criterion 8: Hermite approach equivalence ----------------------------
  guarded(8, [&] {
    double worst = 0.0;
    for (const char* name : {"example1", "helmholtz"}) {
      const ExperimentConfig cfg = scenario_defaults(name);
      const NodeData d = scenario_nodes(cfg);
      const GrassmannInterpolant aug = fit_hermite(d.nodes, d.samples, d.lifts, cfg.degree,
                                                   HermiteApproach::Augmented);
      const GrassmannInterpolant sur = fit_hermite(d.nodes, d.samples, d.lifts, cfg.degree,
                                                   HermiteApproach::Surrogate);
      for (int i = 0; i < 25; ++i) {
        const double t = cfg.t_lo + (cfg.t_hi - cfg.t_lo) * i / 24.0;
        worst = std::max(worst,
                         subspace_error(evaluate(aug, t).point, evaluate(sur, t).point)
                             .relative);
      }
    }
    record(8, worst <= 1e-8,
           fmt("max subspace distance between doubled-operator and auxiliary-grid "
               "Hermite fits %.2e (gate 1e-8)",
               worst));
  });

  // --- criterion 9: finite-difference derivative oracles --------------------
  guarded(9, [&] {
    const Index n = 60, p = 5;
    const std::uint64_t seed = 3;
    const Vector nodes = chebyshev_nodes(6, 0.0, 1.0);
    std::vector<StiefelPoint> samples;
    for (int i = 0; i < 6; ++i) samples.push_back(gen_transcendental(n, p, nodes(i), seed).U);
    const MvChart chart = build_chart(samples, default_ref_index(nodes));

    // (a) chart-coordinate velocity of the smooth trajectory.
    const double ta = 0.37;
    const ScenarioSample sa = gen_transcendental(n, p, ta, seed);
    const FdCheck a = fd_oracle(
        [&](double t) { return Matrix(to_coordinates(chart, gen_transcendental(n, p, t, seed).U).Xi); },
        *coordinate_velocity(chart, sa.U, sa.Udot).XiDot, ta);

    // (b) reconstruction velocity along a straight coordinate path.
    const Matrix xi0 = 0.4 * (uniform_matrix(substream_seed(17, 0), n - p, p).array() - 0.5);
    const Matrix xi1 = 0.7 * (uniform_matrix(substream_seed(17, 1), n - p, p).array() - 0.5);
    auto coords_at = [&](double t) {
      MvCoordinates c{Matrix(xi0 + t * xi1), std::nullopt};
      return c;
    };
    const auto [ub, hb] = reconstruct_velocity(chart, MvCoordinates{coords_at(0.3).Xi, xi1});
    const FdCheck b = fd_oracle(
        [&](double t) { return projector_of(reconstruct(chart, coords_at(t))); },
        Matrix(hb.Udot * ub.U.transpose() + ub.U * hb.Udot.transpose()), 0.3);

    // (c) derivative output of the Hermite polynomial evaluator.
    Matrix vals(6, 2), ders(6, 2);
    for (int i = 0; i < 6; ++i) {
      vals(i, 0) = std::sin(3.0 * nodes(i));
      ders(i, 0) = 3.0 * std::cos(3.0 * nodes(i));
      vals(i, 1) = std::exp(nodes(i));
      ders(i, 1) = std::exp(nodes(i));
    }
    const ArnoldiModel cva = cva_fit_augmented(nodes, vals, ders, 11);
    auto poly_at = [&](double t) {
      Vector pt(1);
      pt(0) = t;
      return Matrix(cva_eval(cva, pt).values);
    };
    Vector tc(1);
    tc(0) = 0.4;
    const FdCheck c = fd_oracle(poly_at, Matrix(cva_eval(cva, tc).derivs), 0.4);

    // (d) smooth-trajectory generator.
    const double td = 0.52;
    const FdCheck d = fd_oracle(
        [&](double t) { return projector_of(gen_transcendental(n, p, t, seed).U); },
        pdot_of(gen_transcendental(n, p, td, seed)), td);

    // (e) parametric-solve generator.
    const FdCheck e = fd_oracle(
        [&](double k) { return projector_of(gen_helmholtz(100, 4, k).U); },
        pdot_of(gen_helmholtz(100, 4, 14.0)), 14.0);

    const bool pass = a.pass && b.pass && c.pass && d.pass && e.pass;
    record(9, pass,
           fmt("FD ratios h=1e-4/1e-5: coords %.0f, reconstruct %.0f, poly %.0f, "
               "trajectory %.0f, solve %.0f (expect ~100 or below floor)",
               a.e5 > 0 ? a.e4 / a.e5 : 0.0, b.e5 > 0 ? b.e4 / b.e5 : 0.0,
               c.e5 > 0 ? c.e4 / c.e5 : 0.0, d.e5 > 0 ? d.e4 / d.e5 : 0.0,
               e.e5 > 0 ? e.e4 / e.e5 : 0.0));
  });

  // --- criterion 10: property suite -----------------------------------------
  guarded(10, [&] {
    std::vector<std::string> failed;

    {  // round trip in both directions
      const Index n = 40, p = 4;
      const Vector nodes = chebyshev_nodes(6, 0.0, 1.0);
      std::vector<StiefelPoint> samples;
      for (int i = 0; i < 6; ++i)
        samples.push_back(gen_transcendental(n, p, nodes(i), 11).U);
      const MvChart chart = build_chart(samples, default_ref_index(nodes));
      const StiefelPoint u = gen_transcendental(n, p, 0.7, 11).U;
      const MvCoordinates c = to_coordinates(chart, u);
      if (subspace_error(u, reconstruct(chart, c)).absolute > 1e-12)
        failed.push_back("subspace round trip");
      const Matrix xi = 2.0 * (uniform_matrix(substream_seed(23, 0), n - p, p).array() - 0.5);
      const MvCoordinates c2 =
          to_coordinates(chart, reconstruct(chart, MvCoordinates{xi, std::nullopt}));
      if ((c2.Xi - xi).norm() > 1e-10 * (1.0 + xi.norm()))
        failed.push_back("coordinate round trip");
    }

    {  // gauge invariance of the fitted interpolant
      const Index n = 30, p = 3;
      const Vector nodes = chebyshev_nodes(5, 0.0, 1.0);
      std::vector<StiefelPoint> samples, gauged;
      for (int i = 0; i < 5; ++i) {
        StiefelPoint u = gen_transcendental(n, p, nodes(i), 19).U;
        const Matrix g =
            thin_qr(Matrix(uniform_matrix(substream_seed(19, 100 + i), p, p).array() - 0.5)).Q;
        gauged.emplace_back(Matrix(u.U * g));
        samples.push_back(std::move(u));
      }
      const GrassmannInterpolant f1 = fit_lagrange(nodes, samples);
      const GrassmannInterpolant f2 = fit_lagrange(nodes, gauged);
      double worst = 0.0;
      for (int i = 0; i < 7; ++i) {
        const double t = i / 6.0;
        worst = std::max(
            worst, subspace_error(evaluate(f1, t).point, evaluate(f2, t).point).absolute);
      }
      if (worst > 1e-10) failed.push_back("gauge invariance");
    }

    {  // polynomial reproduction through the recurrence basis
      const Vector nodes = chebyshev_nodes(8, 0.0, 1.0);
      Matrix data(8, 1);
      for (int i = 0; i < 8; ++i) data(i, 0) = nodes(i) * nodes(i) + 2.0 * nodes(i);
      const ArnoldiModel model = va_fit(nodes, data, 7);
      Vector pt(1);
      pt(0) = 0.3;
      if (std::abs(va_eval(model, pt)(0, 0) - (0.09 + 0.6)) > 1e-11)
        failed.push_back("polynomial reproduction");
    }

    {  // greedy row-selection objective decreases monotonically
      const Index n = 120, p = 6;
      const Vector nodes = chebyshev_nodes(8, 0.0, 1.0);
      std::vector<StiefelPoint> samples;
      for (int i = 0; i < 8; ++i)
        samples.push_back(gen_transcendental(n, p, nodes(i), 29).U);
      const MaxvolResult mv = maxvol_chart(samples);
      bool monotone = mv.objective_history.size() >= 2;
      for (std::size_t i = 0; i + 1 < mv.objective_history.size(); ++i)
        monotone = monotone &&
                   mv.objective_history[i + 1] <= mv.objective_history[i] + 1e-9;
      if (!monotone || mv.objective_history.back() >
                           mv.objective_history.front() + 1e-12)
        failed.push_back("row-selection monotonicity");
    }

    {  // byte-identical determinism of a full sweep
      ExperimentConfig cfg = scenario_defaults("example1", /*small=*/true);
      cfg.n = 80;
      cfg.probes = 12;
      std::ostringstream s1, s2;
      run_error_sweep(cfg, s1);
      run_error_sweep(cfg, s2);
      if (s1.str() != s2.str() || s1.str().empty()) failed.push_back("determinism");
    }

    {  // monotone convergence in the node count
      const Index n = 40, p = 4;
      double prev = -1.0, last = 0.0;
      bool monotone = true;
      for (const int m : {4, 6, 8, 10, 12}) {
        const Vector nodes = chebyshev_nodes(m, 0.0, 1.0);
        std::vector<StiefelPoint> samples;
        std::vector<TangentLift> lifts;
        for (int i = 0; i < m; ++i) {
          ScenarioSample s = gen_transcendental(n, p, nodes(i), 5);
          samples.push_back(std::move(s.U));
          lifts.push_back(std::move(s.Udot));
        }
        const GrassmannInterpolant fit = fit_hermite(nodes, samples, lifts);
        double err = 0.0;
        for (int i = 0; i < 31; ++i) {
          const double t = i / 30.0;
          err = std::max(err, subspace_error(gen_transcendental(n, p, t, 5).U,
                                             evaluate(fit, t).point)
                                  .relative);
        }
        if (prev >= 0.0 && err > 1.05 * prev + 1e-13) monotone = false;
        prev = err;
        last = err;
      }
      if (!monotone || last > 1e-4) failed.push_back("monotone convergence");
    }

    std::string detail = "round trip, gauge invariance, polynomial reproduction, "
                         "row-selection monotonicity, determinism, monotone convergence";
    if (!failed.empty()) {
      detail = "failed:";
      for (const auto& f : failed) detail += " [" + f + "]";
    }
    record(10, failed.empty(), detail);
  });

  for (int i = 1; i <= 10; ++i) std::puts(report[i].c_str());
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
