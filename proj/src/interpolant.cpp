#include "gmi/interpolant.hpp"

#include <algorithm>
#include <cmath>

namespace gmi {

Index default_ref_index(const Vector& nodes) {
  if (nodes.size() == 0) throw ConfigError("empty node set");
  const double mid = 0.5 * (nodes.minCoeff() + nodes.maxCoeff());
  const double range = nodes.maxCoeff() - nodes.minCoeff();
  // Ties go to the smaller index; symmetric node sets produce midpoint
  // distances equal only up to rounding, so compare with a tolerance.
  const double tol = 1e-12 * (range > 0.0 ? range : 1.0);
  double best_d = std::abs(nodes(0) - mid);
  for (Index i = 1; i < nodes.size(); ++i)
    best_d = std::min(best_d, std::abs(nodes(i) - mid));
  for (Index i = 0; i < nodes.size(); ++i)
    if (std::abs(nodes(i) - mid) <= best_d + tol) return i;
  return 0;
}

namespace {

void check_samples(const Vector& nodes, const std::vector<StiefelPoint>& samples) {
  if (samples.empty()) throw ConfigError("no samples given");
  if (static_cast<Index>(samples.size()) != nodes.size())
    throw ConfigError("sample count must match node count");
  const Index n = samples[0].n(), p = samples[0].p();
  for (const auto& s : samples)
    if (s.n() != n || s.p() != p) throw ConfigError("samples have mixed dimensions");
}

Index resolve_ref(const Vector& nodes, Index ref_index) {
  if (ref_index < 0) return default_ref_index(nodes);
  if (ref_index >= nodes.size()) throw ConfigError("reference index out of range");
  return ref_index;
}

}  // namespace

GrassmannInterpolant fit_lagrange(const Vector& nodes,
                                  const std::vector<StiefelPoint>& samples,
                                  int degree, Index ref_index) {
  check_samples(nodes, samples);
  const Index m = nodes.size();
  const Index ref = resolve_ref(nodes, ref_index);
  if (degree < 0) degree = static_cast<int>(m) - 1;

  GrassmannInterpolant out;
  out.chart = build_chart(samples, ref);
  out.n = out.chart.n;
  out.p = out.chart.p;
  out.nodes = nodes;
  out.mode = FitMode::Lagrange;

  const Index ncoord = (out.n - out.p) * out.p;
  Matrix data(m, ncoord);
  for (Index i = 0; i < m; ++i)
    data.row(i) = to_coordinates(out.chart, samples[static_cast<std::size_t>(i)])
                      .vec()
                      .transpose();
  out.model = va_fit(nodes, data, degree);
  return out;
}

GrassmannInterpolant fit_hermite(const Vector& nodes,
                                 const std::vector<StiefelPoint>& samples,
                                 const std::vector<TangentLift>& lifts, int degree,
                                 HermiteApproach approach, Index ref_index) {
  check_samples(nodes, samples);
  if (lifts.size() != samples.size())
    throw ConfigError("lift count must match sample count");
  const Index m = nodes.size();
  const Index ref = resolve_ref(nodes, ref_index);
  if (degree < 0) degree = 2 * static_cast<int>(m) - 1;

  GrassmannInterpolant out;
  out.chart = build_chart(samples, ref);
  out.n = out.chart.n;
  out.p = out.chart.p;
  out.nodes = nodes;
  out.mode = FitMode::Hermite;

  const Index ncoord = (out.n - out.p) * out.p;
  Matrix values(m, ncoord), derivs(m, ncoord);
  for (Index i = 0; i < m; ++i) {
    const auto c = coordinate_velocity(out.chart, samples[static_cast<std::size_t>(i)],
                                       lifts[static_cast<std::size_t>(i)]);
    values.row(i) = c.vec().transpose();
    derivs.row(i) = Eigen::Map<const Vector>(c.XiDot->data(), c.XiDot->size()).transpose();
  }
  out.model = (approach == HermiteApproach::Augmented)
                  ? cva_fit_augmented(nodes, values, derivs, degree)
                  : cva_fit_surrogate(nodes, values, derivs, degree);
  return out;
}

namespace {

bool is_extrapolated(const Vector& nodes, double t) {
  const double lo = nodes.minCoeff(), hi = nodes.maxCoeff();
  const double slack = 0.1 * (hi - lo);
  return t < lo - slack || t > hi + slack;
}

}  // namespace

Evaluation evaluate(const GrassmannInterpolant& interp, double t) {
  Vector pt(1);
  pt(0) = t;
  Vector coords;
  if (interp.mode == FitMode::Lagrange) {
    coords = va_eval(interp.model, pt).row(0).transpose();
  } else {
    coords = cva_eval(interp.model, pt).values.row(0).transpose();
  }
  MvCoordinates c{MvCoordinates::unvec(coords, interp.n - interp.p, interp.p),
                  std::nullopt};
  return Evaluation{reconstruct(interp.chart, c), is_extrapolated(interp.nodes, t)};
}

VelocityEvaluation evaluate_with_velocity(const GrassmannInterpolant& interp, double t) {
  if (interp.mode != FitMode::Hermite)
    throw ConfigError("velocity evaluation requires a Hermite fit");
  Vector pt(1);
  pt(0) = t;
  const CvaValues v = cva_eval(interp.model, pt);
  const Index nmp = interp.n - interp.p;
  MvCoordinates c{MvCoordinates::unvec(v.values.row(0).transpose(), nmp, interp.p),
                  MvCoordinates::unvec(v.derivs.row(0).transpose(), nmp, interp.p)};
  auto [point, lift] = reconstruct_velocity(interp.chart, c);
  return VelocityEvaluation{std::move(point), std::move(lift),
                            is_extrapolated(interp.nodes, t)};
}

}  // namespace gmi
