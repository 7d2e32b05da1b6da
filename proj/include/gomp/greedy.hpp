#ifndef GOMP_GREEDY_HPP
#define GOMP_GREEDY_HPP

// Generalized orthogonal matching pursuit (gOMP): N columns are added to the
// support per iteration, followed by a least-squares refit on the enlarged
// support. N = 1 is plain OMP.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gomp/error.hpp"
#include "gomp/linops.hpp"
#include "gomp/types.hpp"

namespace gomp {

struct GompParams {
  Index K = 1;           // sparsity level, also the iteration cap
  Index N = 1;           // indices selected per iteration
  double epsilon = 0.0;  // stop once ||r^k||_2 <= epsilon

  // Hard requirements for the algorithm to be well defined on an m-row
  // matrix: K, N >= 1, epsilon >= 0, and the final support (N*K columns)
  // must fit into m rows.
  void validate(Index m) const {
    if (K < 1) throw Error(Errc::InvalidParams, "K must be >= 1");
    if (N < 1) throw Error(Errc::InvalidParams, "N must be >= 1");
    if (!(epsilon >= 0.0)) throw Error(Errc::InvalidParams, "epsilon must be >= 0");
    if (N * K > m)
      throw Error(Errc::InvalidParams, "N*K = " + std::to_string(N * K) + " exceeds m = " +
                                           std::to_string(m));
  }

  // N <= (m-1)/K, the range in which the recovery guarantees are stated.
  bool within_guarantee_range(Index m) const { return N * K <= m - 1; }
};

enum class Termination { MaxIterations, ResidualBelowEpsilon };

constexpr const char *to_string(Termination t) {
  return t == Termination::MaxIterations ? "MaxIterations" : "ResidualBelowEpsilon";
}

struct IterationRecord {
  IndexSet selected;      // the N new indices, by decreasing correlation
  IndexSet support_after; // S_k in selection order; aligned with `estimate`
  Vector estimate;        // least-squares coefficients on support_after
  double residual_norm = 0.0;
  Vector correlations;    // |A^T r^{k-1}|, the values the selection was made from
};

struct RecoveryTrace {
  std::vector<IterationRecord> iterations;
  Vector final_estimate;  // length n, zero outside final_support
  IndexSet final_support; // ascending
  Termination termination = Termination::MaxIterations;
  double epsilon = 0.0;
  double initial_residual_norm = 0.0;  // ||y||_2

  Index iterations_used() const { return static_cast<Index>(iterations.size()); }
  double final_residual_norm() const {
    return iterations.empty() ? initial_residual_norm : iterations.back().residual_norm;
  }
};

// The N indices outside `excluded` with the largest |correlation|, ordered by
// decreasing magnitude; equal magnitudes go to the lower index first.
inline IndexSet select_top_n(const Vector &correlations, Index N, const IndexSet &excluded) {
  if (N < 1) throw Error(Errc::InvalidParams, "N must be >= 1");
  IndexSet candidates;
  candidates.reserve(static_cast<std::size_t>(correlations.size()));
  for (Index i = 0; i < correlations.size(); ++i)
    if (!contains(excluded, i)) candidates.push_back(i);
  if (static_cast<Index>(candidates.size()) < N)
    throw Error(Errc::InsufficientCandidates,
                std::to_string(candidates.size()) + " candidates for N = " + std::to_string(N));

  auto before = [&](Index a, Index b) {
    const double ma = std::abs(correlations[a]);
    const double mb = std::abs(correlations[b]);
    return ma > mb || (ma == mb && a < b);
  };
  std::partial_sort(candidates.begin(), candidates.begin() + N, candidates.end(), before);
  candidates.resize(static_cast<std::size_t>(N));
  return candidates;
}

inline RecoveryTrace gomp_run(const SensingMatrix &A, const Vector &y, const GompParams &params) {
  if (y.size() != A.rows())
    throw Error(Errc::DimensionMismatch, "y has length " + std::to_string(y.size()) +
                                             ", expected " + std::to_string(A.rows()));
  params.validate(A.rows());

  RecoveryTrace trace;
  trace.epsilon = params.epsilon;
  trace.initial_residual_norm = y.norm();

  Vector residual = y;
  double residual_norm = trace.initial_residual_norm;
  IndexSet support;
  Vector coefficients;

  for (Index k = 0; k < params.K && residual_norm > params.epsilon; ++k) {
    IterationRecord record;
    record.correlations = (A.matrix().transpose() * residual).cwiseAbs();
    record.selected = select_top_n(record.correlations, params.N, support);
    support.insert(support.end(), record.selected.begin(), record.selected.end());

    coefficients = least_squares(A, support, y);
    residual = y - A.columns(support) * coefficients;
    residual_norm = residual.norm();

    record.support_after = support;
    record.estimate = coefficients;
    record.residual_norm = residual_norm;
    trace.iterations.push_back(std::move(record));
  }

  trace.termination = residual_norm <= params.epsilon ? Termination::ResidualBelowEpsilon
                                                      : Termination::MaxIterations;
  trace.final_estimate = Vector::Zero(A.cols());
  for (std::size_t i = 0; i < support.size(); ++i)
    trace.final_estimate[support[i]] = coefficients[static_cast<Index>(i)];
  trace.final_support = sorted(support);
  return trace;
}

}  // namespace gomp

#endif  // GOMP_GREEDY_HPP
