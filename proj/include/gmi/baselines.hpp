#pragma once

#include <vector>

#include "gmi/manifold.hpp"
#include "gmi/polybasis.hpp"

namespace gmi {

// Plain (or confluent, when derivative rows are supplied) monomial
// least-squares fit on the raw nodes, solved by unpivoted Householder QR.
// Deliberately unstabilized: the recorded condition number documents the
// blow-up, and non-finite coefficients set `failed` instead of throwing.
struct MonomialModel {
  Matrix coefficients;  // (degree+1) x N, ascending powers
  Vector nodes;
  int degree = 0;
  double cond = 0.0;  // cond2 of the (confluent) Vandermonde matrix
  bool confluent = false;
  bool failed = false;  // coefficients were not finite
};

MonomialModel monomial_fit(const Vector& nodes, const Matrix& data, int degree,
                           const Matrix* derivs = nullptr);

struct MonomialValues {
  Matrix values;
  Matrix derivs;
};

// Horner evaluation (values M x N).
Matrix monomial_eval(const MonomialModel& model, const Vector& points);
MonomialValues monomial_eval_with_derivs(const MonomialModel& model,
                                         const Vector& points);

// Chart given by a row permutation: coordinates come from the permuted basis
// with the first p rows as the square block. ref_index = -1 means no
// distinguished reference sample.
struct PermutationChart {
  std::vector<Index> perm;  // length n; new row i is old row perm[i]
  Index n = 0;
  Index p = 0;
  Index ref_index = -1;
};

PermutationChart identity_chart(Index n, Index p);

// max over samples of ||Ut1^{-1}||_F in the permuted chart.
double maxvol_objective(const PermutationChart& chart,
                        const std::vector<StiefelPoint>& samples);

struct MaxvolResult {
  PermutationChart chart;
  std::vector<double> objective_history;  // objective before each swap + final
};

// Greedy row selection: starting from the identity permutation, repeatedly
// applies the single top/bottom row swap on the currently worst sample that
// most reduces the global objective (scored for every candidate with rank-one
// inverse updates); stops when no swap improves by more than 1e-12.
MaxvolResult maxvol_chart(const std::vector<StiefelPoint>& samples,
                          int max_iters = 200);

MvCoordinates perm_to_coordinates(const PermutationChart& chart, const StiefelPoint& u);
MvCoordinates perm_coordinate_velocity(const PermutationChart& chart,
                                       const StiefelPoint& u, const TangentLift& lift);
StiefelPoint perm_reconstruct(const PermutationChart& chart, const MvCoordinates& coords);
double perm_geometric_condition(const PermutationChart& chart, const StiefelPoint& u);

// Interpolation in the tangent space at a base sample: samples are pulled
// back with the subspace logarithm, fitted with monomial_fit (confluent when
// lifts are given, with derivatives transported by central differences), and
// mapped back with the exponential. Evaluation returns the raw basis estimate
// (it can lose orthonormality when the fit degrades).
struct NormalCoordInterpolant {
  StiefelPoint base;
  MonomialModel model;
  Index n = 0;
  Index p = 0;
};

NormalCoordInterpolant normal_coordinate_interp(const Vector& nodes,
                                                const std::vector<StiefelPoint>& samples,
                                                const std::vector<TangentLift>* lifts,
                                                int degree, Index ref_index = -1);

Matrix normal_coordinate_eval(const NormalCoordInterpolant& interp, double t);

// Subspace logarithm at `base`: the horizontal direction whose exponential
// reaches span(u). Throws OutOfChart when a principal angle is within 1e-6 of
// pi/2.
Matrix grassmann_log(const StiefelPoint& base, const StiefelPoint& u);

// Subspace exponential at `base` along a horizontal direction.
Matrix grassmann_exp(const StiefelPoint& base, const Matrix& delta);

}  // namespace gmi
