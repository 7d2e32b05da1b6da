#ifndef GOMP_BATCH_HPP
#define GOMP_BATCH_HPP

// Randomized batches of the verify.hpp checks, as run by `gomp verify`.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gomp/greedy.hpp"
#include "gomp/instance.hpp"
#include "gomp/rip.hpp"
#include "gomp/rng.hpp"
#include "gomp/verify.hpp"

namespace gomp {

struct BatchResult {
  Index passed = 0;
  Index failed = 0;
  Index skipped = 0;  // drawn but not certified (delta >= 1), not counted
  double worst_margin = std::numeric_limits<double>::infinity();

  bool ok() const { return failed == 0; }
};

// Small random matrix for lemma checks. Three families: D U with a random
// diagonal spread, square Gaussian, and slightly wide Gaussian (whose high
// orders usually fail certification and get skipped).
inline SensingMatrix random_lemma_matrix(Rng &rng, Index max_n) {
  const Index n = 3 + rng.below(std::max<Index>(1, max_n - 2));
  switch (rng.below(3)) {
    case 0: {
      const Matrix U = orthogonal_factor(rng.normal_matrix(n, n));
      const double spread = rng.uniform(0.0, 0.99);
      Vector d(n);
      for (Index i = 0; i < n; ++i) d[i] = std::sqrt(rng.uniform(1.0 - spread, 1.0 + spread));
      return SensingMatrix(d.asDiagonal() * U);
    }
    case 1:
      return SensingMatrix(rng.normal_matrix(n, n) / std::sqrt(static_cast<double>(n)));
    default: {
      const Index m = std::max<Index>(2, n - 1 - rng.below(2));
      return SensingMatrix(rng.normal_matrix(m, n) / std::sqrt(static_cast<double>(m)));
    }
  }
}

// `count` certified lemma-4 instances on matrices with at most max_n columns,
// `per_matrix` instances per matrix. delta is the exact RIC of the order the
// bound needs.
inline BatchResult verify_lemma4_batch(Index count, std::uint64_t seed, Index max_n = 12,
                                       Index per_matrix = 50) {
  BatchResult result;
  Rng rng(seed);
  const Index max_draws = 50 * std::max<Index>(count, 1);
  Index draws = 0;
  while (result.passed + result.failed < count && draws < max_draws) {
    const SensingMatrix A = random_lemma_matrix(rng, max_n);
    std::vector<std::optional<double>> ric(static_cast<std::size_t>(A.cols() + 1));
    for (Index t = 0; t < per_matrix && result.passed + result.failed < count; ++t, ++draws) {
      const auto inst = sample_lemma_instance(A, rng, 3, rng.uniform() < 0.5);
      if (!inst) continue;
      const auto order = static_cast<std::size_t>(inst->ric_order());
      if (!ric[order]) ric[order] = exact_ric(A, inst->ric_order()).value;
      if (*ric[order] >= 1.0) {
        ++result.skipped;
        continue;
      }
      const Lemma4Sides s = lemma4_sides(*inst, *ric[order]);
      result.worst_margin = std::min(result.worst_margin, s.lhs - s.rhs);
      if (s.lhs >= s.rhs - kLemmaSlack)
        ++result.passed;
      else
        ++result.failed;
    }
  }
  return result;
}

// (K, N) with NK + 1 <= max_n, uniformly over the admissible pairs.
inline std::pair<Index, Index> random_shape(Rng &rng, Index max_n) {
  std::vector<std::pair<Index, Index>> shapes;
  for (Index K = 1; K + 1 <= max_n; ++K)
    for (Index N = 1; N * K + 1 <= max_n; ++N) shapes.emplace_back(K, N);
  return shapes[static_cast<std::size_t>(rng.below(static_cast<Index>(shapes.size())))];
}

// Stopping-rule check on noise-free generated instances; instance i uses seed + i.
inline BatchResult verify_stopping_batch(Index count, std::uint64_t seed, Index max_n = 33) {
  BatchResult result;
  Rng shapes(seed);
  for (Index i = 0; i < count; ++i) {
    const auto [K, N] = random_shape(shapes, max_n);
    const Instance inst = gen_instance(K, N, seed + static_cast<std::uint64_t>(i));
    const RecoveryTrace trace = gomp_run(inst.A, inst.y, {K, N, inst.epsilon});
    if (verify_stopping(inst.A, inst.x, trace, N, inst.v))
      ++result.passed;
    else
      ++result.failed;
  }
  return result;
}

// Selection condition along noisy generated instances; instance i uses seed + i.
inline BatchResult verify_selection_batch(Index count, std::uint64_t seed, Index max_n = 33) {
  BatchResult result;
  Rng shapes(seed);
  for (Index i = 0; i < count; ++i) {
    const auto [K, N] = random_shape(shapes, max_n);
    const Instance inst = gen_instance(K, N, seed + static_cast<std::uint64_t>(i), {true, false});
    const RecoveryTrace trace = gomp_run(inst.A, inst.y, {K, N, inst.epsilon});
    if (verify_selection_condition(inst.A, inst.x, trace, N))
      ++result.passed;
    else
      ++result.failed;
  }
  return result;
}

}  // namespace gomp

#endif  // GOMP_BATCH_HPP
