#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace gmi {

// SplitMix64 generator (Steele/Lea/Flood constants). Deterministic across
// platforms: 64-bit integer arithmetic only.
//
// Test vectors, seed = 0, first three outputs:
//   0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0,1) using the top 53 bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Seed for an independent substream: scramble seed ^ id*phi once more so that
// nearby stream ids give unrelated sequences.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream_id) {
  SplitMix64 g(seed ^ (stream_id * 0x9E3779B97F4A7C15ULL));
  return g.next();
}

// rows x cols matrix of i.i.d. uniform [0,1) entries, filled column by column.
inline Eigen::MatrixXd uniform_matrix(std::uint64_t seed, Eigen::Index rows,
                                      Eigen::Index cols) {
  SplitMix64 g(seed);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = g.next_double();
  return m;
}

}  // namespace gmi
