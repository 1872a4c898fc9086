#pragma once

#include <utility>

#include "gmi/kernels.hpp"

namespace gmi {

enum class BasisKind {
  Lagrange,           // values only
  HermiteAugmented,   // values + derivatives, doubled operator
  HermiteSurrogate,   // values + derivatives, recurrence from an auxiliary grid
};

// Affine node map tau = a * t + b used to rescale nodes onto [-1,1].
struct AffineMap {
  double a = 1.0;
  double b = 0.0;
  double operator()(double t) const { return a * t + b; }
};

// Chebyshev-Lobatto points t_i = lo + (hi-lo) * (1 - cos(pi i/(m-1))) / 2,
// ascending, endpoints included. Requires m >= 2.
Vector chebyshev_nodes(int m, double lo, double hi);

// Map with node_rescale(nodes).second sending min->-1, max->1. Throws
// DegenerateRange when all nodes coincide.
std::pair<Vector, AffineMap> node_rescale(const Vector& nodes);

// Orthogonal polynomial basis adapted to the node set, built by a Gram-
// Schmidt recurrence, together with the coefficients of a least-squares fit.
struct ArnoldiModel {
  Matrix H;            // (degree+1) x degree recurrence coefficients
  Matrix Q;            // basis columns at the nodes; rows: m or 2m (stacked)
  Matrix A;            // (degree+1) x N fitted coefficients
  BasisKind kind = BasisKind::Lagrange;
  Vector nodes;        // original (unmapped) nodes
  int degree = 0;
  AffineMap map;       // node rescaling applied before the recurrence
  double start_scale = 1.0;   // first basis column value
  int aux_count = 0;          // auxiliary grid size (surrogate kind only)
  bool stacked_warning = false;  // surrogate stacked system cond2 > 1e8
  double stacked_cond = 0.0;
};

// Least-squares polynomial fit of data rows at the nodes (m x N data, one row
// per node). degree <= m-1; degree == m-1 interpolates.
ArnoldiModel va_fit(const Vector& nodes, const Matrix& data, int degree);

// Values of the fitted polynomial at the given points (M x N).
Matrix va_eval(const ArnoldiModel& model, const Vector& points);

// Fit matching values and first derivatives at every node; degree <= 2m-1;
// degree == 2m-1 interpolates both. Derivatives are with respect to the
// original node variable.
ArnoldiModel cva_fit_augmented(const Vector& nodes, const Matrix& values,
                               const Matrix& derivs, int degree);

// Same fit, but the recurrence coefficients come from a standard basis build
// on an auxiliary Chebyshev-Lobatto grid (aux_count points, default
// max(degree+1, 2m)); the stacked value/derivative system is then solved by
// column-pivoted QR. Sets stacked_warning instead of failing when that system
// is ill-conditioned.
ArnoldiModel cva_fit_surrogate(const Vector& nodes, const Matrix& values,
                               const Matrix& derivs, int degree, int aux_count = 0);

struct CvaValues {
  Matrix values;  // M x N
  Matrix derivs;  // M x N, with respect to the original variable
};

// Values and derivatives of a Hermite fit at the given points.
CvaValues cva_eval(const ArnoldiModel& model, const Vector& points);

}  // namespace gmi
