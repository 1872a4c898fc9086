#pragma once

#include <doctest.h>

#include <cstdint>

#include "gmi/manifold.hpp"
#include "gmi/rng.hpp"

namespace gmi_test {

inline gmi::StiefelPoint random_stiefel(std::uint64_t seed, gmi::Index n, gmi::Index p) {
  return gmi::StiefelPoint(gmi::thin_qr(gmi::uniform_matrix(seed, n, p)).Q);
}

inline gmi::Matrix random_matrix(std::uint64_t seed, gmi::Index r, gmi::Index c) {
  return gmi::uniform_matrix(seed, r, c).array() - 0.5;
}

// Random p x p orthogonal matrix (a gauge transformation).
inline gmi::Matrix random_gauge(std::uint64_t seed, gmi::Index p) {
  return gmi::thin_qr(random_matrix(seed, p, p)).Q;
}

inline gmi::TangentLift random_lift(std::uint64_t seed, const gmi::StiefelPoint& u) {
  gmi::Matrix w = random_matrix(seed, u.n(), u.p());
  w -= u.U * (u.U.transpose() * w);
  return gmi::make_tangent_lift(u, w);
}

}  // namespace gmi_test
