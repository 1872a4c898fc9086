#include "gmi/polybasis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace gmi {

Vector chebyshev_nodes(int m, double lo, double hi) {
  if (m < 2) throw ConfigError("chebyshev_nodes requires m >= 2");
  const double pi = std::acos(-1.0);
  Vector t(m);
  for (int i = 0; i < m; ++i) {
    const double c = 0.5 - 0.5 * std::cos(pi * static_cast<double>(i) / (m - 1));
    t(i) = lo + (hi - lo) * c;
  }
  return t;
}

std::pair<Vector, AffineMap> node_rescale(const Vector& nodes) {
  if (nodes.size() == 0) throw ConfigError("node_rescale requires nodes");
  const double lo = nodes.minCoeff(), hi = nodes.maxCoeff();
  if (hi == lo) throw DegenerateRange("all nodes coincide");
  AffineMap map;
  map.a = 2.0 / (hi - lo);
  map.b = -(hi + lo) / (hi - lo);
  Vector tau(nodes.size());
  for (Index i = 0; i < nodes.size(); ++i) tau(i) = map(nodes(i));
  return {tau, map};
}

namespace {

void check_nodes(const Vector& nodes) {
  const Index m = nodes.size();
  if (m == 0) throw ConfigError("empty node set");
  if (!nodes.allFinite()) throw ConfigError("nodes must be finite");
  if (m == 1) return;
  std::vector<double> sorted(nodes.data(), nodes.data() + m);
  std::sort(sorted.begin(), sorted.end());
  const double range = sorted.back() - sorted.front();
  double min_gap = std::numeric_limits<double>::infinity();
  for (Index i = 0; i + 1 < m; ++i) min_gap = std::min(min_gap, sorted[i + 1] - sorted[i]);
  if (range == 0.0 || min_gap < 1e-14 * range)
    throw NodeCollision("nodes are too close together");
}

// Rescale nodes to [-1,1]; a single node maps to itself so that confluent
// one-node fits stay in the original variable.
std::pair<Vector, AffineMap> internal_rescale(const Vector& nodes) {
  if (nodes.size() == 1 || nodes.maxCoeff() == nodes.minCoeff())
    return {nodes, AffineMap{}};
  return node_rescale(nodes);
}

// One modified Gram-Schmidt sweep with an unconditional second pass; both
// passes' projections are accumulated into the same H column.
void orthogonalize(Matrix& q, Matrix& h, Vector& v, Index j) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Index i = 0; i <= j; ++i) {
      const double c = q.col(i).dot(v);
      v -= c * q.col(i);
      h(i, j) += c;
    }
  }
}

void finish_column(Matrix& q, Matrix& h, Vector& v, Index j) {
  const double nv = v.norm();
  h(j + 1, j) = nv;
  if (nv == 0.0 || nv < 1e-14 * h.leftCols(j + 1).norm())
    throw ArnoldiBreakdown("basis recurrence broke down");
  q.col(j + 1) = v / nv;
}

}  // namespace

ArnoldiModel va_fit(const Vector& nodes, const Matrix& data, int degree) {
  const Index m = nodes.size();
  check_nodes(nodes);
  if (data.rows() != m) throw ConfigError("data rows must match node count");
  if (degree < 0) throw ConfigError("degree must be non-negative");
  if (degree > m - 1) throw DegreeTooHigh("degree exceeds node count - 1");

  ArnoldiModel model;
  model.kind = BasisKind::Lagrange;
  model.nodes = nodes;
  model.degree = degree;
  auto [tau, map] = internal_rescale(nodes);
  model.map = map;
  model.start_scale = 1.0 / std::sqrt(static_cast<double>(m));

  const Index k = degree;
  Matrix q(m, k + 1);
  Matrix h = Matrix::Zero(k + 1, std::max<Index>(k, 1));
  q.col(0).setConstant(model.start_scale);
  for (Index j = 0; j < k; ++j) {
    Vector v = tau.cwiseProduct(q.col(j));
    orthogonalize(q, h, v, j);
    finish_column(q, h, v, j);
  }
  model.H = h.leftCols(k);
  model.Q = q;
  model.A = q.transpose() * data;
  return model;
}

Matrix va_eval(const ArnoldiModel& model, const Vector& points) {
  if (model.kind != BasisKind::Lagrange)
    throw ConfigError("va_eval requires a value-only model");
  const Index np = points.size(), k = model.degree;
  Vector s(np);
  for (Index i = 0; i < np; ++i) s(i) = model.map(points(i));
  Matrix w(np, k + 1);
  w.col(0).setConstant(model.start_scale);
  for (Index j = 0; j < k; ++j) {
    Vector v = s.cwiseProduct(w.col(j));
    for (Index i = 0; i <= j; ++i) v -= model.H(i, j) * w.col(i);
    w.col(j + 1) = v / model.H(j + 1, j);
  }
  return w * model.A;
}

namespace {

void check_hermite_inputs(const Vector& nodes, const Matrix& values,
                          const Matrix& derivs, int degree) {
  const Index m = nodes.size();
  check_nodes(nodes);
  if (values.rows() != m || derivs.rows() != m || values.cols() != derivs.cols())
    throw ConfigError("values/derivatives must have one row per node");
  if (degree < 0) throw ConfigError("degree must be non-negative");
  if (degree > 2 * m - 1) throw DegreeTooHigh("degree exceeds 2 * node count - 1");
}

}  // namespace

ArnoldiModel cva_fit_augmented(const Vector& nodes, const Matrix& values,
                               const Matrix& derivs, int degree) {
  check_hermite_inputs(nodes, values, derivs, degree);
  const Index m = nodes.size();

  ArnoldiModel model;
  model.kind = BasisKind::HermiteAugmented;
  model.nodes = nodes;
  model.degree = degree;
  auto [tau, map] = internal_rescale(nodes);
  model.map = map;
  model.start_scale = 1.0 / std::sqrt(static_cast<double>(m));

  const Index k = degree;
  // Doubled variable: the top block carries values, the bottom block carries
  // derivative information, and multiplication acts as [x.*f; f + x.*d].
  Matrix q = Matrix::Zero(2 * m, k + 1);
  Matrix h = Matrix::Zero(k + 1, std::max<Index>(k, 1));
  q.col(0).head(m).setConstant(model.start_scale);
  for (Index j = 0; j < k; ++j) {
    Vector v(2 * m);
    v.head(m) = tau.cwiseProduct(q.col(j).head(m));
    v.tail(m) = q.col(j).head(m) + tau.cwiseProduct(q.col(j).tail(m));
    orthogonalize(q, h, v, j);
    finish_column(q, h, v, j);
  }
  model.H = h.leftCols(k);
  model.Q = q;
  Matrix rhs(2 * m, values.cols());
  rhs.topRows(m) = values;
  rhs.bottomRows(m) = derivs / model.map.a;  // chain rule into the tau variable
  model.A = q.transpose() * rhs;
  return model;
}

ArnoldiModel cva_fit_surrogate(const Vector& nodes, const Matrix& values,
                               const Matrix& derivs, int degree, int aux_count) {
  check_hermite_inputs(nodes, values, derivs, degree);
  const Index m = nodes.size();
  const Index k = degree;

  ArnoldiModel model;
  model.kind = BasisKind::HermiteSurrogate;
  model.nodes = nodes;
  model.degree = degree;
  auto [tau, map] = internal_rescale(nodes);
  model.map = map;

  Index naux = aux_count > 0 ? aux_count : std::max<Index>(k + 1, 2 * m);
  if (naux < k + 1) throw ConfigError("auxiliary grid smaller than degree + 1");
  naux = std::max<Index>(naux, 2);
  model.aux_count = static_cast<int>(naux);
  model.start_scale = 1.0 / std::sqrt(static_cast<double>(naux));

  // Recurrence coefficients from a value-only build on the auxiliary grid.
  const Vector aux = chebyshev_nodes(static_cast<int>(naux), -1.0, 1.0);
  Matrix qa(naux, k + 1);
  Matrix h = Matrix::Zero(k + 1, std::max<Index>(k, 1));
  qa.col(0).setConstant(model.start_scale);
  for (Index j = 0; j < k; ++j) {
    Vector v = aux.cwiseProduct(qa.col(j));
    orthogonalize(qa, h, v, j);
    finish_column(qa, h, v, j);
  }
  model.H = h.leftCols(k);

  // Run the same recurrence and its derivative at the actual nodes.
  Matrix qf(m, k + 1), qd(m, k + 1);
  qf.col(0).setConstant(model.start_scale);
  qd.col(0).setZero();
  for (Index j = 0; j < k; ++j) {
    Vector vf = tau.cwiseProduct(qf.col(j));
    Vector vd = qf.col(j) + tau.cwiseProduct(qd.col(j));
    for (Index i = 0; i <= j; ++i) {
      vf -= model.H(i, j) * qf.col(i);
      vd -= model.H(i, j) * qd.col(i);
    }
    qf.col(j + 1) = vf / model.H(j + 1, j);
    qd.col(j + 1) = vd / model.H(j + 1, j);
  }
  Matrix g(2 * m, k + 1);
  g.topRows(m) = qf;
  g.bottomRows(m) = qd;
  model.Q = g;
  model.stacked_cond = cond2(g);
  model.stacked_warning = model.stacked_cond > 1e8;

  Matrix rhs(2 * m, values.cols());
  rhs.topRows(m) = values;
  rhs.bottomRows(m) = derivs / model.map.a;
  model.A = g.colPivHouseholderQr().solve(rhs);
  return model;
}

CvaValues cva_eval(const ArnoldiModel& model, const Vector& points) {
  if (model.kind == BasisKind::Lagrange)
    throw ConfigError("cva_eval requires a Hermite model");
  const Index np = points.size(), k = model.degree;
  Vector s(np);
  for (Index i = 0; i < np; ++i) s(i) = model.map(points(i));
  Matrix wf(np, k + 1), wd(np, k + 1);
  wf.col(0).setConstant(model.start_scale);
  wd.col(0).setZero();
  for (Index j = 0; j < k; ++j) {
    Vector vf = s.cwiseProduct(wf.col(j));
    Vector vd = wf.col(j) + s.cwiseProduct(wd.col(j));
    for (Index i = 0; i <= j; ++i) {
      vf -= model.H(i, j) * wf.col(i);
      vd -= model.H(i, j) * wd.col(i);
    }
    wf.col(j + 1) = vf / model.H(j + 1, j);
    wd.col(j + 1) = vd / model.H(j + 1, j);
  }
  CvaValues out;
  out.values = wf * model.A;
  out.derivs = (wd * model.A) * model.map.a;  // chain rule back to t
  return out;
}

}  // namespace gmi
