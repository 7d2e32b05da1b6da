#ifndef GOMP_RNG_HPP
#define GOMP_RNG_HPP

// Portable seeded random stream.
//
// The engine is std::mt19937_64 seeded with the 64-bit seed directly (its
// output sequence is fixed by the C++ standard). The standard library
// distributions are implementation-defined, so the transforms are spelled out
// here and form part of the reproducibility contract:
//
//   uniform()      (w >> 11) * 2^-53                     in [0, 1)
//   uniform(a, b)  a + (b - a) * uniform()
//   below(n)       floor(uniform() * n)                  in {0..n-1}
//   normal()       Box-Muller, one output per two words:
//                  u1 = ((w1 >> 11) + 1) * 2^-53          in (0, 1]
//                  u2 = (w2 >> 11) * 2^-53
//                  sqrt(-2 ln u1) * cos(2 pi u2)
//
// Reimplementations reproduce the stream bit for bit up to the last-ulp
// behaviour of log/cos in their math library.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gomp/types.hpp"

namespace gomp {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Index below(Index n) {
    const auto i = static_cast<Index>(uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  double normal() {
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Vector normal_vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  // Row-major fill.
  Matrix normal_matrix(Index rows, Index cols) {
    Matrix M(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) M(i, j) = normal();
    return M;
  }

  // `count` distinct values from {0..n-1} by partial Fisher-Yates over the
  // identity permutation; returned in draw order.
  IndexSet sample_without_replacement(Index n, Index count) {
    IndexSet pool(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) pool[i] = i;
    for (Index i = 0; i < count; ++i) std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(static_cast<std::size_t>(count));
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gomp

#endif  // GOMP_RNG_HPP
