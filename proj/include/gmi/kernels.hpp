#pragma once

#include <Eigen/Dense>

#include "gmi/errors.hpp"

namespace gmi {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

struct QrResult {
  Matrix Q;  // orthogonal factor; n x n for householder_qr, n x p for thin_qr
  Matrix R;  // p x p upper triangular with non-negative diagonal
};

// Full Householder QR of an n x p matrix (n >= p) with the sign convention
// diag(R) >= 0. Throws RankDeficient when |R(j,j)| < 1e-12 * ||M||_F.
QrResult householder_qr(const Matrix& m);

// Same factorization, returning only the first p columns of Q.
QrResult thin_qr(const Matrix& m);

// Lower Cholesky factor L with L L^T = S. Throws NotSpd.
Matrix cholesky_spd(const Matrix& s);

enum class TriShape { Lower, Upper };

// Solve T X = B (or T^T X = B with transpose = true) for square triangular T.
// Throws SingularTriangular when min|diag(T)| <= 1e-14 * max|diag(T)|.
Matrix solve_triangular(const Matrix& t, const Matrix& b, TriShape shape,
                        bool transpose = false);

// Solve X T = B (or X T^T = B with transpose = true).
Matrix solve_triangular_right(const Matrix& t, const Matrix& b, TriShape shape,
                              bool transpose = false);

struct SvdResult {
  Matrix U;      // n x r thin left factor
  Vector sigma;  // descending singular values
  Matrix V;      // p x r thin right factor
};

// Thin SVD with reconstruction residual <= 1e-12 * ||M||_F.
SvdResult svd(const Matrix& m);

// Two-norm condition number; +infinity when sigma_min < 1e-300.
double cond2(const Matrix& m);

}  // namespace gmi
