#ifndef GOMP_TRIALS_HPP
#define GOMP_TRIALS_HPP

// Monte-Carlo recovery trials over a (K, N) grid.

#include <cstdint>
#include <string>
#include <vector>

#include "gomp/greedy.hpp"
#include "gomp/instance.hpp"
#include "gomp/parallel.hpp"
#include "gomp/types.hpp"

namespace gomp {

// ||x_hat - x||_inf <= kExactTolerance * ||x||_inf counts as exact recovery.
inline constexpr double kExactTolerance = 1e-8;

struct TrialReport {
  std::uint64_t seed = 0;
  bool exact_recovery = false;
  bool support_recovery = false;
  Index iterations_used = 0;
  double residual_final = 0.0;
  std::string error;  // nonempty if the trial threw; both flags are then false

  bool operator==(const TrialReport &) const = default;
};

struct TrialOutcome {
  TrialReport report;
  RecoveryTrace trace;
};

struct CellResult {
  Index K = 1;
  Index N = 1;
  bool noisy = false;
  Index trials = 0;
  double exact_rate = 0.0;
  double support_rate = 0.0;
  double mean_iterations = 0.0;
  double mean_final_residual = 0.0;
  Index errors = 0;
  std::vector<TrialReport> reports;

  // Exact recovery for noise-free cells, support recovery for noisy ones.
  double success_rate() const { return noisy ? support_rate : exact_rate; }

  bool operator==(const CellResult &) const = default;
};

struct TrialGrid {
  Index k_min = 2, k_max = 6;
  Index nsel_min = 1, nsel_max = 4;
  Index trials = 100;
  bool noisy = false;
  bool flat_signal = false;
  std::uint64_t base_seed = 0;
  unsigned threads = 0;  // 0: default_thread_count()
};

// Runs gOMP on one instance and scores it. Support recovery means Omega is
// contained in the final support; exact recovery additionally requires the
// estimate to match x to kExactTolerance (relative, max norm).
inline TrialOutcome run_trial(const Instance &inst) {
  TrialOutcome out;
  out.report.seed = inst.seed;
  out.trace = gomp_run(inst.A, inst.y, {inst.K, inst.N, inst.epsilon});
  const RecoveryTrace &trace = out.trace;
  out.report.iterations_used = trace.iterations_used();
  out.report.residual_final = trace.final_residual_norm();
  out.report.support_recovery = is_subset(inst.x.support(), trace.final_support);
  const double scale = inst.x.values().cwiseAbs().maxCoeff();
  const double err = (trace.final_estimate - inst.x.values()).cwiseAbs().maxCoeff();
  out.report.exact_recovery = out.report.support_recovery &&
                              trace.iterations_used() <= inst.K && err <= kExactTolerance * scale;
  return out;
}

inline std::vector<CellResult> run_trials(const TrialGrid &grid) {
  std::vector<CellResult> cells;
  if (grid.trials <= 0) return cells;
  for (Index K = grid.k_min; K <= grid.k_max; ++K)
    for (Index N = grid.nsel_min; N <= grid.nsel_max; ++N) {
      CellResult cell;
      cell.K = K;
      cell.N = N;
      cell.noisy = grid.noisy;
      cell.trials = grid.trials;
      cell.reports.resize(static_cast<std::size_t>(grid.trials));
      cells.push_back(std::move(cell));
    }

  const auto per_cell = static_cast<std::size_t>(grid.trials);
  const std::size_t total = cells.size() * per_cell;
  const unsigned threads = grid.threads ? grid.threads : default_thread_count();
  parallel_for(total, threads, [&](std::size_t job) {
    CellResult &cell = cells[job / per_cell];
    const std::size_t t = job % per_cell;
    const std::uint64_t seed = grid.base_seed + t;
    TrialReport &report = cell.reports[t];
    try {
      const Instance inst =
          gen_instance(cell.K, cell.N, seed, {grid.noisy, grid.flat_signal});
      report = run_trial(inst).report;
    } catch (const std::exception &e) {
      report = TrialReport{};
      report.seed = seed;
      report.error = e.what();
    }
  });

  for (CellResult &cell : cells) {
    Index exact = 0, support = 0, ok = 0;
    double iterations = 0.0, residual = 0.0;
    for (const TrialReport &r : cell.reports) {
      if (!r.error.empty()) {
        ++cell.errors;
        continue;
      }
      ++ok;
      exact += r.exact_recovery;
      support += r.support_recovery;
      iterations += static_cast<double>(r.iterations_used);
      residual += r.residual_final;
    }
    const auto trials = static_cast<double>(cell.trials);
    cell.exact_rate = static_cast<double>(exact) / trials;
    cell.support_rate = static_cast<double>(support) / trials;
    cell.mean_iterations = ok ? iterations / static_cast<double>(ok) : 0.0;
    cell.mean_final_residual = ok ? residual / static_cast<double>(ok) : 0.0;
  }
  return cells;
}

}  // namespace gomp

#endif  // GOMP_TRIALS_HPP
