#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gmi/kernels.hpp"

namespace gmi {

// Frobenius orthonormality defect ||U^T U - I||_F.
double orthonormality_defect(const Matrix& u);

// Orthonormal basis of a p-dimensional subspace of R^n. The constructor
// rejects bases with orthonormality defect > 1e-10.
struct StiefelPoint {
  Matrix U;

  explicit StiefelPoint(Matrix u);
  Index n() const { return U.rows(); }
  Index p() const { return U.cols(); }
};

// Horizontal tangent direction at a basis: U^T Udot = 0. Build through
// make_tangent_lift, which enforces the horizontality policy.
struct TangentLift {
  Matrix Udot;
};

// Horizontality policy: defect ||U^T Udot||_F <= 1e-10 accepted as is;
// defect in (1e-10, 1e-6] projected onto the horizontal space; larger
// defects throw NonHorizontalTangent.
TangentLift make_tangent_lift(const StiefelPoint& base, Matrix udot);

// Local chart on the set of p-dimensional subspaces: an orthogonal frame
// together with the index of the sample whose coordinates vanish.
struct MvChart {
  Matrix Qframe;  // n x n orthogonal
  Index ref_index = 0;
  Index n = 0;
  Index p = 0;
};

// Coordinates of a subspace in a chart: the (n-p) x p matrix Xi with
// span(Qframe [I; Xi]) equal to the subspace, plus optionally its velocity.
struct MvCoordinates {
  Matrix Xi;
  std::optional<Matrix> XiDot;

  // Column-major flattening used by the polynomial fitting stage.
  Vector vec() const;
  static Matrix unvec(const Vector& v, Index nmp, Index p);
};

// Chart whose frame is the full QR factor of samples[ref_index]; the
// reference sample has exactly zero coordinates and geometric condition
// number sqrt(p).
MvChart build_chart(const std::vector<StiefelPoint>& samples, Index ref_index);

// --- block-level operations shared by every chart type ----------------------
// These act on the frame-aligned representative Ut = Qframe^T U (or a row
// permutation of U) and contain the actual coordinate algebra.

// Xi = Ut2 * Ut1^{-1} via a partial-pivot solve; throws ChartSingular when
// cond2(Ut1) > 1e12.
Matrix coords_from_partition(const Matrix& ut, Index p);
// XiDot = (Td2 - Xi * Td1) * Ut1^{-1} for a frame-aligned tangent Td.
std::pair<Matrix, Matrix> coords_velocity_from_partition(const Matrix& ut,
                                                         const Matrix& td, Index p);
// Orthonormal representative [I; Xi] (I + Xi^T Xi)^{-T/2} of the coordinates.
Matrix local_reconstruct(const Matrix& xi);
// Representative plus the horizontal lift matching XiDot.
std::pair<Matrix, Matrix> local_reconstruct_velocity(const Matrix& xi,
                                                     const Matrix& xidot);
// ----------------------------------------------------------------------------

MvCoordinates to_coordinates(const MvChart& chart, const StiefelPoint& u);
MvCoordinates coordinate_velocity(const MvChart& chart, const StiefelPoint& u,
                                  const TangentLift& lift);
StiefelPoint reconstruct(const MvChart& chart, const MvCoordinates& coords);
std::pair<StiefelPoint, TangentLift> reconstruct_velocity(const MvChart& chart,
                                                          const MvCoordinates& coords);

// Orthogonal projector U U^T (n x n; for diagnostics and small problems only).
Matrix projector(const StiefelPoint& u);

struct SubspaceError {
  double absolute;  // ||P1 - P2||_F
  double relative;  // absolute / sqrt(p)
};

// Projector distance ||U1 U1^T - U2 U2^T||_F computed cancellation-free from
// the p x p residual blocks U1 - U2 (U2^T U1) and U2 - U1 (U1^T U2); no n x n
// matrix is formed and the result stays accurate down to ~1e-13.
SubspaceError subspace_error(const StiefelPoint& u1, const StiefelPoint& u2);

// Same distance for a possibly non-orthonormal estimate Uhat against an
// orthonormal truth, via the Gram identity
// ||Uh Uh^T - U U^T||_F^2 = ||Uh^T Uh||_F^2 + p - 2 ||U^T Uh||_F^2.
// Accurate only down to ~1e-8; used for external estimates.
SubspaceError subspace_error_general(const Matrix& uhat, const StiefelPoint& u);

// ||Ut1^{-1}||_F of the chart-aligned top block (explicit p x p inverse).
double geometric_condition(const MvChart& chart, const StiefelPoint& u);
// Spectral variant 1/sigma_min(Ut1).
double geometric_condition_spectral(const MvChart& chart, const StiefelPoint& u);
// Shared block-level version used by permutation charts as well.
double geometric_condition_from_partition(const Matrix& ut, Index p);

// ||P1dot - P2dot||_F for horizontal velocities, computed from the thin QR of
// [U1 H1 U2 H2] (n x 4p); exact identity, no n x n matrix formed.
double projector_velocity_distance(const StiefelPoint& u1, const TangentLift& h1,
                                   const StiefelPoint& u2, const TangentLift& h2);
// ||Pdot||_F = sqrt(2) ||H||_F for a horizontal H.
double projector_velocity_norm(const TangentLift& h);

}  // namespace gmi
