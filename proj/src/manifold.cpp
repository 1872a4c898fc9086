#include "gmi/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gmi {

double orthonormality_defect(const Matrix& u) {
  const Index p = u.cols();
  return (u.transpose() * u - Matrix::Identity(p, p)).norm();
}

StiefelPoint::StiefelPoint(Matrix u) : U(std::move(u)) {
  if (U.rows() < U.cols())
    throw ConfigError("basis must have at least as many rows as columns");
  if (!U.allFinite() || orthonormality_defect(U) > 1e-10)
    throw ConfigError("basis columns are not orthonormal");
}

TangentLift make_tangent_lift(const StiefelPoint& base, Matrix udot) {
  if (udot.rows() != base.n() || udot.cols() != base.p())
    throw ConfigError("tangent direction has wrong dimensions");
  if (!udot.allFinite())
    throw NonHorizontalTangent("tangent direction has non-finite entries");
  const double defect = (base.U.transpose() * udot).norm();
  if (defect > 1e-6)
    throw NonHorizontalTangent("tangent direction is not horizontal");
  if (defect > 1e-10) udot -= base.U * (base.U.transpose() * udot);
  return TangentLift{std::move(udot)};
}

Vector MvCoordinates::vec() const {
  return Eigen::Map<const Vector>(Xi.data(), Xi.size());
}

Matrix MvCoordinates::unvec(const Vector& v, Index nmp, Index p) {
  if (v.size() != nmp * p) throw ConfigError("coordinate vector has wrong length");
  return Eigen::Map<const Matrix>(v.data(), nmp, p);
}

MvChart build_chart(const std::vector<StiefelPoint>& samples, Index ref_index) {
  if (samples.empty()) throw ConfigError("build_chart requires at least one sample");
  if (ref_index < 0 || ref_index >= static_cast<Index>(samples.size()))
    throw ConfigError("reference index out of range");
  const StiefelPoint& ref = samples[static_cast<std::size_t>(ref_index)];
  MvChart chart;
  chart.Qframe = householder_qr(ref.U).Q;
  chart.ref_index = ref_index;
  chart.n = ref.n();
  chart.p = ref.p();
  return chart;
}

namespace {

void check_chart_block(const Matrix& ut1) {
  if (cond2(ut1) > 1e12)
    throw ChartSingular("subspace is too far from the chart's domain");
}

}  // namespace

Matrix coords_from_partition(const Matrix& ut, Index p) {
  const Matrix ut1 = ut.topRows(p);
  check_chart_block(ut1);
  Eigen::PartialPivLU<Matrix> lu(ut1.transpose());
  // Xi^T solves Ut1^T Xi^T = Ut2^T.
  return lu.solve(ut.bottomRows(ut.rows() - p).transpose()).transpose();
}

std::pair<Matrix, Matrix> coords_velocity_from_partition(const Matrix& ut,
                                                         const Matrix& td, Index p) {
  const Index nmp = ut.rows() - p;
  const Matrix ut1 = ut.topRows(p);
  check_chart_block(ut1);
  Eigen::PartialPivLU<Matrix> lu(ut1.transpose());
  const Matrix xi = lu.solve(ut.bottomRows(nmp).transpose()).transpose();
  const Matrix rhs = td.bottomRows(nmp) - xi * td.topRows(p);
  const Matrix xidot = lu.solve(rhs.transpose()).transpose();
  return {xi, xidot};
}

Matrix local_reconstruct(const Matrix& xi) {
  const Index nmp = xi.rows(), p = xi.cols();
  const Matrix l = cholesky_spd(Matrix::Identity(p, p) + xi.transpose() * xi);
  Matrix b(nmp + p, p);
  b.topRows(p) = Matrix::Identity(p, p);
  b.bottomRows(nmp) = xi;
  // Ut = B L^{-T}
  return solve_triangular_right(l, b, TriShape::Lower, /*transpose=*/true);
}

std::pair<Matrix, Matrix> local_reconstruct_velocity(const Matrix& xi,
                                                     const Matrix& xidot) {
  const Index nmp = xi.rows(), p = xi.cols();
  const Matrix s = Matrix::Identity(p, p) + xi.transpose() * xi;
  const Matrix l = cholesky_spd(s);
  Matrix b(nmp + p, p);
  b.topRows(p) = Matrix::Identity(p, p);
  b.bottomRows(nmp) = xi;
  const Matrix ut = solve_triangular_right(l, b, TriShape::Lower, true);
  // K = -(I + Xi^T Xi)^{-1} Xi^T XiDot keeps the lift horizontal.
  Matrix k = xi.transpose() * xidot;
  k = -solve_triangular(l, solve_triangular(l, k, TriShape::Lower), TriShape::Lower,
                        /*transpose=*/true);
  Matrix d(nmp + p, p);
  d.topRows(p) = k;
  d.bottomRows(nmp) = xidot + xi * k;
  const Matrix lift = solve_triangular_right(l, d, TriShape::Lower, true);
  return {ut, lift};
}

namespace {

void check_chart_matches(const MvChart& chart, Index n, Index p) {
  if (chart.n != n || chart.p != p)
    throw ConfigError("chart and subspace dimensions do not match");
}

}  // namespace

MvCoordinates to_coordinates(const MvChart& chart, const StiefelPoint& u) {
  check_chart_matches(chart, u.n(), u.p());
  const Matrix ut = chart.Qframe.transpose() * u.U;
  return MvCoordinates{coords_from_partition(ut, chart.p), std::nullopt};
}

MvCoordinates coordinate_velocity(const MvChart& chart, const StiefelPoint& u,
                                  const TangentLift& lift) {
  check_chart_matches(chart, u.n(), u.p());
  const Matrix ut = chart.Qframe.transpose() * u.U;
  const Matrix td = chart.Qframe.transpose() * lift.Udot;
  auto [xi, xidot] = coords_velocity_from_partition(ut, td, chart.p);
  return MvCoordinates{std::move(xi), std::move(xidot)};
}

StiefelPoint reconstruct(const MvChart& chart, const MvCoordinates& coords) {
  if (coords.Xi.rows() != chart.n - chart.p || coords.Xi.cols() != chart.p)
    throw ConfigError("coordinates do not match the chart dimensions");
  return StiefelPoint(chart.Qframe * local_reconstruct(coords.Xi));
}

std::pair<StiefelPoint, TangentLift> reconstruct_velocity(const MvChart& chart,
                                                          const MvCoordinates& coords) {
  if (!coords.XiDot)
    throw ConfigError("reconstruct_velocity requires coordinate velocities");
  if (coords.Xi.rows() != chart.n - chart.p || coords.Xi.cols() != chart.p)
    throw ConfigError("coordinates do not match the chart dimensions");
  auto [ut, lift] = local_reconstruct_velocity(coords.Xi, *coords.XiDot);
  StiefelPoint point(chart.Qframe * ut);
  TangentLift tangent = make_tangent_lift(point, chart.Qframe * lift);
  return {std::move(point), std::move(tangent)};
}

Matrix projector(const StiefelPoint& u) { return u.U * u.U.transpose(); }

SubspaceError subspace_error(const StiefelPoint& u1, const StiefelPoint& u2) {
  if (u1.n() != u2.n() || u1.p() != u2.p())
    throw ConfigError("subspace_error requires matching dimensions");
  const Matrix m21 = u2.U.transpose() * u1.U;  // p x p
  const Matrix m12 = u1.U.transpose() * u2.U;
  const double f12 = (u1.U - u2.U * m21).squaredNorm();
  const double f21 = (u2.U - u1.U * m12).squaredNorm();
  SubspaceError e;
  e.absolute = std::sqrt(f12 + f21);
  e.relative = e.absolute / std::sqrt(static_cast<double>(u1.p()));
  return e;
}

SubspaceError subspace_error_general(const Matrix& uhat, const StiefelPoint& u) {
  if (uhat.rows() != u.n() || uhat.cols() != u.p())
    throw ConfigError("subspace_error_general requires matching dimensions");
  const double p = static_cast<double>(u.p());
  if (!uhat.allFinite()) {
    return SubspaceError{std::numeric_limits<double>::quiet_NaN(),
                         std::numeric_limits<double>::quiet_NaN()};
  }
  const double gh = (uhat.transpose() * uhat).squaredNorm();
  const double cross = (u.U.transpose() * uhat).squaredNorm();
  const double sq = std::max(gh + p - 2.0 * cross, 0.0);
  SubspaceError e;
  e.absolute = std::sqrt(sq);
  e.relative = e.absolute / std::sqrt(p);
  return e;
}

double geometric_condition_from_partition(const Matrix& ut, Index p) {
  const Matrix ut1 = ut.topRows(p);
  check_chart_block(ut1);
  return ut1.inverse().norm();
}

double geometric_condition(const MvChart& chart, const StiefelPoint& u) {
  check_chart_matches(chart, u.n(), u.p());
  const Matrix ut = chart.Qframe.transpose() * u.U;
  return geometric_condition_from_partition(ut, chart.p);
}

double geometric_condition_spectral(const MvChart& chart, const StiefelPoint& u) {
  check_chart_matches(chart, u.n(), u.p());
  const Matrix ut1 = (chart.Qframe.transpose() * u.U).topRows(chart.p);
  check_chart_block(ut1);
  const SvdResult s = svd(ut1);
  return 1.0 / s.sigma(s.sigma.size() - 1);
}

double projector_velocity_distance(const StiefelPoint& u1, const TangentLift& h1,
                                   const StiefelPoint& u2, const TangentLift& h2) {
  const Index n = u1.n(), p = u1.p();
  if (u2.n() != n || u2.p() != p)
    throw ConfigError("projector_velocity_distance requires matching dimensions");
  // P1dot - P2dot = Z K Z^T with Z = [U1 H1 U2 H2]; the norm only depends on
  // the R factor of Z.
  Matrix z(n, 4 * p);
  z << u1.U, h1.Udot, u2.U, h2.Udot;
  Eigen::HouseholderQR<Matrix> qr(z);
  // R is trapezoidal (min(n,4p) x 4p) when the stacked block is wide.
  const Matrix r =
      qr.matrixQR().topRows(std::min(n, 4 * p)).triangularView<Eigen::Upper>();
  Matrix k = Matrix::Zero(4 * p, 4 * p);
  k.block(0, p, p, p) = Matrix::Identity(p, p);
  k.block(p, 0, p, p) = Matrix::Identity(p, p);
  k.block(2 * p, 3 * p, p, p) = -Matrix::Identity(p, p);
  k.block(3 * p, 2 * p, p, p) = -Matrix::Identity(p, p);
  return (r * k * r.transpose()).norm();
}

double projector_velocity_norm(const TangentLift& h) {
  return std::sqrt(2.0) * h.Udot.norm();
}

}  // namespace gmi
