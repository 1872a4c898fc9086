#include "gmi/scenarios.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <cmath>

#include "gmi/rng.hpp"

namespace gmi {

namespace {

ScenarioSample sample_from_factorization(const Matrix& y, const Matrix& ydot) {
  const QrResult qr = thin_qr(y);
  StiefelPoint u(qr.Q);
  // Horizontal lift: H = (I - U U^T) Ydot R^{-1}.
  const Matrix w = ydot - u.U * (u.U.transpose() * ydot);
  const Matrix h = solve_triangular_right(qr.R, w, TriShape::Upper);
  TangentLift lift = make_tangent_lift(u, h);
  return ScenarioSample{std::move(u), std::move(lift)};
}

ScenarioSample gen_transcendental_impl(Index n, Index p, double t, std::uint64_t seed,
                                       double eps, std::uint64_t noise_stream) {
  if (n < p || p < 1) throw ConfigError("invalid dimensions");
  const Matrix y0 = uniform_matrix(substream_seed(seed, 0), n, p);
  const Matrix y1 = uniform_matrix(substream_seed(seed, 1), n, p);
  const Matrix y2 = uniform_matrix(substream_seed(seed, 2), n, p);
  const Matrix y3 = uniform_matrix(substream_seed(seed, 3), n, p);
  Matrix y = y0 + std::sin(3.0 * t) * y1 + std::cos(3.0 * t) * y2 + std::exp(t) * y3;
  const Matrix ydot =
      3.0 * std::cos(3.0 * t) * y1 - 3.0 * std::sin(3.0 * t) * y2 + std::exp(t) * y3;
  if (eps != 0.0) {
    const Matrix e = uniform_matrix(substream_seed(seed, 1000 + noise_stream), n, p);
    y += (eps / e.norm()) * e;
  }
  return sample_from_factorization(y, ydot);
}

}  // namespace

ScenarioSample gen_transcendental(Index n, Index p, double t, std::uint64_t seed) {
  return gen_transcendental_impl(n, p, t, seed, 0.0, 0);
}

ScenarioSample gen_transcendental_noisy(Index n, Index p, double t, std::uint64_t seed,
                                        double eps, std::uint64_t noise_stream) {
  return gen_transcendental_impl(n, p, t, seed, eps, noise_stream);
}

ScenarioSample gen_helmholtz(Index n, Index p, double k) {
  if (n < p || p < 1) throw ConfigError("invalid dimensions");
  const double h = 1.0 / static_cast<double>(n + 1);
  const double pi = std::acos(-1.0);

  // Eigen-wavenumbers of the discrete operator: sqrt(lambda_j),
  // lambda_j = (2/h)^2 sin^2(j pi h / 2).
  for (Index j = 1; j <= n; ++j) {
    const double s = (2.0 / h) * std::sin(0.5 * pi * static_cast<double>(j) * h);
    if (std::abs(k - s) < 1e-6)
      throw NearResonance("wavenumber too close to an eigen-wavenumber");
  }

  Eigen::SparseMatrix<double> a(n, n);
  a.reserve(Eigen::VectorXi::Constant(static_cast<int>(n), 3));
  const double off = -1.0 / (h * h);
  const double diag = 2.0 / (h * h) - k * k;
  for (Index i = 0; i < n; ++i) {
    if (i > 0) a.insert(i, i - 1) = off;
    a.insert(i, i) = diag;
    if (i + 1 < n) a.insert(i, i + 1) = off;
  }
  a.makeCompressed();

  Matrix f(n, p);
  const double sigma = 0.05;
  for (Index j = 0; j < p; ++j) {
    const double c = static_cast<double>(j + 1) / static_cast<double>(p + 1);
    for (Index i = 0; i < n; ++i) {
      const double x = static_cast<double>(i + 1) * h;
      f(i, j) = std::exp(-(x - c) * (x - c) / (2.0 * sigma * sigma));
    }
  }

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(a);
  if (lu.info() != Eigen::Success)
    throw NearResonance("shifted operator could not be factorized");
  const Matrix y = lu.solve(f);
  if (!y.allFinite() || y.norm() > 1e8 * f.norm())
    throw NearResonance("solution magnitude indicates near-resonance");
  const Matrix ydot = lu.solve(Matrix(2.0 * k * y));
  return sample_from_factorization(y, ydot);
}

}  // namespace gmi
