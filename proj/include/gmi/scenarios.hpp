#pragma once

#include <cstdint>

#include "gmi/manifold.hpp"

namespace gmi {

struct ScenarioSample {
  StiefelPoint U;
  TangentLift Udot;  // horizontal lift of the subspace velocity
};

// Smooth synthetic trajectory Y(t) = Y0 + sin(3t) Y1 + cos(3t) Y2 + e^t Y3
// with fixed uniform random factors (substreams 0..3 of `seed`), orthonormalized
// by thin QR; the lift is the horizontal projection of the analytic Ydot
// composed with R^{-1}. Deterministic in (n, p, t, seed).
ScenarioSample gen_transcendental(Index n, Index p, double t, std::uint64_t seed);

// Same trajectory with a relative perturbation added to Y before
// orthonormalization: Y + eps * E / ||E||_F, E from substream 1000 +
// noise_stream. The derivative stays the exact analytic one.
ScenarioSample gen_transcendental_noisy(Index n, Index p, double t, std::uint64_t seed,
                                        double eps, std::uint64_t noise_stream);

// Parametric 1-D Helmholtz solves: (L - k^2 I) Y = F for p Gaussian source
// columns on a uniform interior grid, L the standard three-point Laplacian
// with homogeneous Dirichlet ends. Y' solves (L - k^2 I) Y' = 2k Y. Throws
// NearResonance when k is within 1e-6 of an eigen-wavenumber or the solution
// blows up past 1e8 ||F||.
ScenarioSample gen_helmholtz(Index n, Index p, double k);

}  // namespace gmi
