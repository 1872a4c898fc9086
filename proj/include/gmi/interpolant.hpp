#pragma once

#include <vector>

#include "gmi/manifold.hpp"
#include "gmi/polybasis.hpp"

namespace gmi {

enum class FitMode { Lagrange, Hermite };
enum class HermiteApproach { Augmented, Surrogate };

// Subspace-valued interpolant: a chart built at the reference sample plus a
// polynomial fit of the chart coordinates (and, in Hermite mode, their
// velocities).
struct GrassmannInterpolant {
  MvChart chart;
  ArnoldiModel model;
  FitMode mode = FitMode::Lagrange;
  Vector nodes;
  Index n = 0;
  Index p = 0;
};

// Node closest to the midpoint of the node range (ties take the smaller index).
Index default_ref_index(const Vector& nodes);

// degree < 0 selects the interpolating degree (m-1 / 2m-1); ref_index < 0
// selects default_ref_index.
GrassmannInterpolant fit_lagrange(const Vector& nodes,
                                  const std::vector<StiefelPoint>& samples,
                                  int degree = -1, Index ref_index = -1);

GrassmannInterpolant fit_hermite(const Vector& nodes,
                                 const std::vector<StiefelPoint>& samples,
                                 const std::vector<TangentLift>& lifts,
                                 int degree = -1,
                                 HermiteApproach approach = HermiteApproach::Augmented,
                                 Index ref_index = -1);

struct Evaluation {
  StiefelPoint point;
  bool extrapolated;  // query outside the node range by more than 10% of it
};

struct VelocityEvaluation {
  StiefelPoint point;
  TangentLift velocity;  // horizontal lift of the subspace velocity
  bool extrapolated;
};

Evaluation evaluate(const GrassmannInterpolant& interp, double t);
VelocityEvaluation evaluate_with_velocity(const GrassmannInterpolant& interp, double t);

}  // namespace gmi
