#include "gmi/kernels.hpp"

#include <cmath>
#include <limits>

namespace gmi {

namespace {

// Flip signs so that diag(R) >= 0; the corresponding columns of Q flip too.
void fix_qr_signs(Matrix& q, Matrix& r) {
  const Index p = r.cols();
  for (Index j = 0; j < p; ++j) {
    if (r(j, j) < 0.0) {
      r.row(j) *= -1.0;
      q.col(j) *= -1.0;
    }
  }
}

void check_full_rank(const Matrix& r, double norm_m) {
  for (Index j = 0; j < r.cols(); ++j) {
    if (std::abs(r(j, j)) < 1e-12 * norm_m)
      throw RankDeficient("matrix is numerically rank deficient");
  }
}

}  // namespace

QrResult householder_qr(const Matrix& m) {
  const Index n = m.rows(), p = m.cols();
  if (n < p) throw ConfigError("householder_qr requires rows >= cols");
  Eigen::HouseholderQR<Matrix> qr(m);
  QrResult out;
  out.Q = qr.householderQ() * Matrix::Identity(n, n);
  out.R = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
  fix_qr_signs(out.Q, out.R);
  check_full_rank(out.R, m.norm());
  return out;
}

QrResult thin_qr(const Matrix& m) {
  const Index n = m.rows(), p = m.cols();
  if (n < p) throw ConfigError("thin_qr requires rows >= cols");
  Eigen::HouseholderQR<Matrix> qr(m);
  QrResult out;
  out.Q = qr.householderQ() * Matrix::Identity(n, p);
  out.R = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
  fix_qr_signs(out.Q, out.R);
  check_full_rank(out.R, m.norm());
  return out;
}

Matrix cholesky_spd(const Matrix& s) {
  if (s.rows() != s.cols()) throw ConfigError("cholesky_spd requires a square matrix");
  if (!s.allFinite()) throw NotSpd("matrix has non-finite entries");
  Eigen::LLT<Matrix> llt(s);
  if (llt.info() != Eigen::Success)
    throw NotSpd("matrix is not symmetric positive definite");
  return llt.matrixL();
}

namespace {

void check_triangular(const Matrix& t) {
  if (t.rows() != t.cols())
    throw ConfigError("solve_triangular requires a square matrix");
  const Vector d = t.diagonal().cwiseAbs();
  if (d.minCoeff() <= 1e-14 * d.maxCoeff())
    throw SingularTriangular("triangular factor is numerically singular");
}

}  // namespace

Matrix solve_triangular(const Matrix& t, const Matrix& b, TriShape shape,
                        bool transpose) {
  check_triangular(t);
  if (t.cols() != b.rows()) throw ConfigError("solve_triangular: size mismatch");
  const bool lower = (shape == TriShape::Lower) != transpose;
  if (!transpose) {
    if (lower) return t.triangularView<Eigen::Lower>().solve(b);
    return t.triangularView<Eigen::Upper>().solve(b);
  }
  if (lower) return t.triangularView<Eigen::Upper>().transpose().solve(b);
  return t.triangularView<Eigen::Lower>().transpose().solve(b);
}

Matrix solve_triangular_right(const Matrix& t, const Matrix& b, TriShape shape,
                              bool transpose) {
  // X op(T) = B  <=>  op(T)^T X^T = B^T; `shape` still describes T itself.
  return solve_triangular(t, b.transpose(), shape, !transpose).transpose();
}

SvdResult svd(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (dec.info() != Eigen::Success)
    throw SvdNoConvergence("singular value decomposition failed to converge");
  SvdResult out;
  out.U = dec.matrixU();
  out.sigma = dec.singularValues();
  out.V = dec.matrixV();
  return out;
}

double cond2(const Matrix& m) {
  const SvdResult s = svd(m);
  const double smax = s.sigma.size() ? s.sigma(0) : 0.0;
  const double smin = s.sigma.size() ? s.sigma(s.sigma.size() - 1) : 0.0;
  if (smin < 1e-300) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

}  // namespace gmi
