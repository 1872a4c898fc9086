#include "gmi/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gmi/interpolant.hpp"

namespace gmi {

MonomialModel monomial_fit(const Vector& nodes, const Matrix& data, int degree,
                           const Matrix* derivs) {
  const Index m = nodes.size();
  if (m == 0) throw ConfigError("empty node set");
  if (data.rows() != m) throw ConfigError("data rows must match node count");
  if (degree < 0) throw ConfigError("degree must be non-negative");
  const bool confluent = derivs != nullptr;
  if (confluent && (derivs->rows() != m || derivs->cols() != data.cols()))
    throw ConfigError("derivative rows must match data");
  if (!confluent && degree > m - 1) throw DegreeTooHigh("degree exceeds node count - 1");
  if (confluent && degree > 2 * m - 1)
    throw DegreeTooHigh("degree exceeds 2 * node count - 1");

  const Index k = degree;
  const Index rows = confluent ? 2 * m : m;
  Matrix v(rows, k + 1);
  for (Index i = 0; i < m; ++i) {
    double pw = 1.0;
    for (Index j = 0; j <= k; ++j) {
      v(i, j) = pw;
      pw *= nodes(i);
    }
  }
  if (confluent) {
    for (Index i = 0; i < m; ++i) {
      v(m + i, 0) = 0.0;
      double pw = 1.0;
      for (Index j = 1; j <= k; ++j) {
        v(m + i, j) = static_cast<double>(j) * pw;
        pw *= nodes(i);
      }
    }
  }

  Matrix rhs(rows, data.cols());
  rhs.topRows(m) = data;
  if (confluent) rhs.bottomRows(m) = *derivs;

  MonomialModel model;
  model.nodes = nodes;
  model.degree = degree;
  model.confluent = confluent;
  model.cond = cond2(v);
  model.coefficients = Eigen::HouseholderQR<Matrix>(v).solve(rhs);
  model.failed = !model.coefficients.allFinite();
  return model;
}

Matrix monomial_eval(const MonomialModel& model, const Vector& points) {
  const Index k = model.degree, np = points.size();
  Matrix out(np, model.coefficients.cols());
  for (Index i = 0; i < np; ++i) {
    Eigen::RowVectorXd acc = model.coefficients.row(k);
    for (Index j = k - 1; j >= 0; --j)
      acc = acc * points(i) + model.coefficients.row(j);
    out.row(i) = acc;
  }
  return out;
}

MonomialValues monomial_eval_with_derivs(const MonomialModel& model,
                                         const Vector& points) {
  const Index k = model.degree, np = points.size();
  MonomialValues out;
  out.values.resize(np, model.coefficients.cols());
  out.derivs.resize(np, model.coefficients.cols());
  for (Index i = 0; i < np; ++i) {
    Eigen::RowVectorXd acc = model.coefficients.row(k);
    Eigen::RowVectorXd dacc = Eigen::RowVectorXd::Zero(model.coefficients.cols());
    for (Index j = k - 1; j >= 0; --j) {
      dacc = dacc * points(i) + acc;
      acc = acc * points(i) + model.coefficients.row(j);
    }
    out.values.row(i) = acc;
    out.derivs.row(i) = dacc;
  }
  return out;
}

PermutationChart identity_chart(Index n, Index p) {
  if (n < p || p < 1) throw ConfigError("invalid chart dimensions");
  PermutationChart chart;
  chart.perm.resize(static_cast<std::size_t>(n));
  std::iota(chart.perm.begin(), chart.perm.end(), Index{0});
  chart.n = n;
  chart.p = p;
  return chart;
}

namespace {

Matrix gather_rows(const PermutationChart& chart, const Matrix& u) {
  Matrix out(u.rows(), u.cols());
  for (Index i = 0; i < u.rows(); ++i)
    out.row(i) = u.row(chart.perm[static_cast<std::size_t>(i)]);
  return out;
}

Matrix scatter_rows(const PermutationChart& chart, const Matrix& ut) {
  Matrix out(ut.rows(), ut.cols());
  for (Index i = 0; i < ut.rows(); ++i)
    out.row(chart.perm[static_cast<std::size_t>(i)]) = ut.row(i);
  return out;
}

void check_perm_chart(const PermutationChart& chart, const StiefelPoint& u) {
  if (chart.n != u.n() || chart.p != u.p())
    throw ConfigError("chart and subspace dimensions do not match");
  if (static_cast<Index>(chart.perm.size()) != chart.n)
    throw ConfigError("permutation has wrong length");
}

}  // namespace

double maxvol_objective(const PermutationChart& chart,
                        const std::vector<StiefelPoint>& samples) {
  double worst = 0.0;
  for (const auto& s : samples) {
    check_perm_chart(chart, s);
    worst = std::max(worst,
                     geometric_condition_from_partition(gather_rows(chart, s.U), chart.p));
  }
  return worst;
}

MaxvolResult maxvol_chart(const std::vector<StiefelPoint>& samples, int max_iters) {
  if (samples.empty()) throw ConfigError("maxvol_chart requires samples");
  const Index n = samples[0].n(), p = samples[0].p();
  const Index nmp = n - p;
  const std::size_t ns = samples.size();

  MaxvolResult result;
  result.chart = identity_chart(n, p);
  auto& perm = result.chart.perm;

  bool swapped_last = false;
  for (int iter = 0; iter < max_iters; ++iter) {
    // Per-sample permuted blocks and inverse data.
    std::vector<Matrix> ainvs(ns), bas(ns);
    std::vector<Vector> rownorms(ns);
    std::vector<double> base_sq(ns);
    double cur = 0.0;
    for (std::size_t s = 0; s < ns; ++s) {
      Matrix top(p, p), bot(nmp, p);
      for (Index i = 0; i < p; ++i)
        top.row(i) = samples[s].U.row(perm[static_cast<std::size_t>(i)]);
      for (Index i = 0; i < nmp; ++i)
        bot.row(i) = samples[s].U.row(perm[static_cast<std::size_t>(p + i)]);
      ainvs[s] = top.partialPivLu().inverse();
      if (!ainvs[s].allFinite())
        throw ChartSingular("permuted block is singular during row selection");
      bas[s] = bot * ainvs[s];
      rownorms[s] = bas[s].rowwise().squaredNorm();
      base_sq[s] = ainvs[s].squaredNorm();
      cur = std::max(cur, std::sqrt(base_sq[s]));
    }
    result.objective_history.push_back(cur);
    swapped_last = false;

    // Score every candidate swap (bottom row i into top position j) by the
    // objective it would leave across all samples. Rank-one update of the
    // inverse: replacing top row j by bottom row u changes ||inv||_F^2 to
    // base - 2 (r.c)/d + ||a||^2 ||r||^2 / d^2 with a = inv e_j, c = inv^T a,
    // r^T = (u - top_j)^T inv and d = 1 + (u - top_j)^T a. Because top*inv = I
    // these reduce to the precomputed bottom*inv products.
    Matrix cand = Matrix::Zero(nmp, p);
    for (std::size_t s = 0; s < ns; ++s) {
      const Matrix& ainv = ainvs[s];
      const Matrix& ba = bas[s];
      for (Index j = 0; j < p; ++j) {
        const Vector a = ainv.col(j);
        const double na2 = a.squaredNorm();
        const Vector c = ainv.transpose() * a;
        const Vector bac = ba * c;
        const double cj = c(j);
        for (Index i = 0; i < nmp; ++i) {
          const double d = ba(i, j);
          double val;
          if (std::abs(d) < 1e-300) {
            val = std::numeric_limits<double>::infinity();
          } else {
            const double t1 = bac(i) - cj;
            const double r2 = rownorms[s](i) - 2.0 * ba(i, j) + 1.0;
            val = base_sq[s] - 2.0 * t1 / d + na2 * r2 / (d * d);
            val = std::sqrt(std::max(val, 0.0));
          }
          cand(i, j) = std::max(cand(i, j), val);
        }
      }
    }

    Index bi = -1, bj = -1;
    double best = cur;
    for (Index j = 0; j < p; ++j)
      for (Index i = 0; i < nmp; ++i)
        if (cand(i, j) < best) {
          best = cand(i, j);
          bi = i;
          bj = j;
        }
    if (bi < 0 || best >= cur - 1e-12) break;
    std::swap(perm[static_cast<std::size_t>(bj)], perm[static_cast<std::size_t>(p + bi)]);
    swapped_last = true;
  }
  if (swapped_last) result.objective_history.push_back(maxvol_objective(result.chart, samples));
  return result;
}

MvCoordinates perm_to_coordinates(const PermutationChart& chart, const StiefelPoint& u) {
  check_perm_chart(chart, u);
  return MvCoordinates{coords_from_partition(gather_rows(chart, u.U), chart.p),
                       std::nullopt};
}

MvCoordinates perm_coordinate_velocity(const PermutationChart& chart,
                                       const StiefelPoint& u, const TangentLift& lift) {
  check_perm_chart(chart, u);
  auto [xi, xidot] = coords_velocity_from_partition(gather_rows(chart, u.U),
                                                    gather_rows(chart, lift.Udot), chart.p);
  return MvCoordinates{std::move(xi), std::move(xidot)};
}

StiefelPoint perm_reconstruct(const PermutationChart& chart, const MvCoordinates& coords) {
  if (coords.Xi.rows() != chart.n - chart.p || coords.Xi.cols() != chart.p)
    throw ConfigError("coordinates do not match the chart dimensions");
  return StiefelPoint(scatter_rows(chart, local_reconstruct(coords.Xi)));
}

double perm_geometric_condition(const PermutationChart& chart, const StiefelPoint& u) {
  check_perm_chart(chart, u);
  return geometric_condition_from_partition(gather_rows(chart, u.U), chart.p);
}

Matrix grassmann_log(const StiefelPoint& base, const StiefelPoint& u) {
  if (base.n() != u.n() || base.p() != u.p())
    throw ConfigError("grassmann_log requires matching dimensions");
  const Matrix m = base.U.transpose() * u.U;  // p x p, singular values cos(theta)
  const SvdResult ms = svd(m);
  if (ms.sigma(ms.sigma.size() - 1) < 1e-6)
    throw OutOfChart("subspace has a principal angle too close to pi/2");
  // X = U M^{-1} - B, then scale singular values tan -> angle.
  const Matrix x =
      m.transpose().partialPivLu().solve(u.U.transpose()).transpose() - base.U;
  const SvdResult xs = svd(x);
  Vector ang(xs.sigma.size());
  for (Index i = 0; i < ang.size(); ++i) ang(i) = std::atan(xs.sigma(i));
  return xs.U * ang.asDiagonal() * xs.V.transpose();
}

Matrix grassmann_exp(const StiefelPoint& base, const Matrix& delta) {
  if (delta.rows() != base.n() || delta.cols() != base.p())
    throw ConfigError("grassmann_exp requires matching dimensions");
  const SvdResult ds = svd(delta);
  Vector cs(ds.sigma.size()), sn(ds.sigma.size());
  for (Index i = 0; i < ds.sigma.size(); ++i) {
    cs(i) = std::cos(ds.sigma(i));
    sn(i) = std::sin(ds.sigma(i));
  }
  return base.U * ds.V * cs.asDiagonal() * ds.V.transpose() +
         ds.U * sn.asDiagonal() * ds.V.transpose();
}

NormalCoordInterpolant normal_coordinate_interp(const Vector& nodes,
                                                const std::vector<StiefelPoint>& samples,
                                                const std::vector<TangentLift>* lifts,
                                                int degree, Index ref_index) {
  if (samples.empty()) throw ConfigError("no samples given");
  if (static_cast<Index>(samples.size()) != nodes.size())
    throw ConfigError("sample count must match node count");
  if (lifts && lifts->size() != samples.size())
    throw ConfigError("lift count must match sample count");
  const Index ref = ref_index < 0 ? default_ref_index(nodes) : ref_index;
  if (ref >= nodes.size()) throw ConfigError("reference index out of range");

  const StiefelPoint& base = samples[static_cast<std::size_t>(ref)];
  const Index m = nodes.size();
  const Index ncoord = base.n() * base.p();
  Matrix values(m, ncoord);
  Matrix derivs;
  if (lifts) derivs.resize(m, ncoord);
  const double h = 1e-6;
  for (Index i = 0; i < m; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    const Matrix g = grassmann_log(base, s);
    values.row(i) = Eigen::Map<const Vector>(g.data(), g.size()).transpose();
    if (lifts) {
      // Transport the velocity by central differences of the pullback along a
      // QR retraction of the lifted line.
      const Matrix& hdir = (*lifts)[static_cast<std::size_t>(i)].Udot;
      const Matrix gp = grassmann_log(base, StiefelPoint(thin_qr(s.U + h * hdir).Q));
      const Matrix gm = grassmann_log(base, StiefelPoint(thin_qr(s.U - h * hdir).Q));
      const Matrix gd = (gp - gm) / (2.0 * h);
      derivs.row(i) = Eigen::Map<const Vector>(gd.data(), gd.size()).transpose();
    }
  }

  return NormalCoordInterpolant{
      base, monomial_fit(nodes, values, degree, lifts ? &derivs : nullptr), base.n(),
      base.p()};
}

Matrix normal_coordinate_eval(const NormalCoordInterpolant& interp, double t) {
  Vector pt(1);
  pt(0) = t;
  const Vector v = monomial_eval(interp.model, pt).row(0).transpose();
  const Matrix delta = Eigen::Map<const Matrix>(v.data(), interp.n, interp.p);
  if (!delta.allFinite()) return delta;
  return grassmann_exp(interp.base, delta);
}

}  // namespace gmi
