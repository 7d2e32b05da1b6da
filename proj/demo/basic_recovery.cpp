// Recover one noisy K-sparse signal with gOMP and print the iteration trace.

#include <cstdio>

#include "gomp/gomp.hpp"

int main() {
  const gomp::Index K = 4, N = 2;
  const gomp::Instance inst = gomp::gen_instance(K, N, 7, {.noisy = true});

  std::printf("n = %ld, delta_{NK+1} <= %.4f (threshold %.4f), sqrt(SNR) = %.4f\n",
              static_cast<long>(inst.n()), inst.claimed_delta.value,
              gomp::condition_threshold(K, N, gomp::Condition::Main),
              std::sqrt(gomp::snr(inst.A, inst.x, inst.v)));

  const gomp::RecoveryTrace trace = gomp::gomp_run(inst.A, inst.y, {K, N, inst.epsilon});
  for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
    const auto &it = trace.iterations[k];
    std::printf("iteration %zu: selected", k + 1);
    for (auto i : it.selected) std::printf(" %ld", static_cast<long>(i + 1));
    std::printf("  residual %.3e\n", it.residual_norm);
  }
  std::printf("support found: %s\n",
              gomp::is_subset(inst.x.support(), trace.final_support) ? "yes" : "no");
  return 0;
}
