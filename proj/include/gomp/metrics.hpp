#ifndef GOMP_METRICS_HPP
#define GOMP_METRICS_HPP

#include <cmath>
#include <limits>
#include <string>

#include "gomp/error.hpp"
#include "gomp/types.hpp"

namespace gomp {

// ||Ax||^2 / ||v||^2, +infinity for v = 0.
inline double snr(const SensingMatrix &A, const SparseSignal &x, const Vector &v) {
  if (v.size() != A.rows()) throw Error(Errc::DimensionMismatch, "noise length differs from m");
  const double noise = v.squaredNorm();
  if (noise == 0.0) return std::numeric_limits<double>::infinity();
  return (A * x.values()).squaredNorm() / noise;
}

// Minimum-to-average ratio K min_{i in support} x_i^2 / ||x||^2, in (0, 1].
inline double mar(const SparseSignal &x, Index K) {
  if (x.support().empty()) throw Error(Errc::EmptySupport, "MAR of the zero signal");
  if (K < static_cast<Index>(x.support().size()))
    throw Error(Errc::InvalidParams, "K is smaller than the support size");
  double smallest = std::numeric_limits<double>::infinity();
  for (Index i : x.support()) smallest = std::min(smallest, x.values()[i] * x.values()[i]);
  return static_cast<double>(K) * smallest / x.values().squaredNorm();
}

// Lower bound on sqrt(SNR) under which gOMP with delta_{NK+1} = delta picks
// at least one support index per iteration:
//   sqrt(2K)(1 + delta) / ((1 - sqrt(K/N + 1) delta) sqrt(MAR)).
inline double snr_threshold(Index K, Index N, double delta, double mar_value) {
  if (K < 1 || N < 1) throw Error(Errc::InvalidParams, "K and N must be >= 1");
  if (!(delta >= 0.0)) throw Error(Errc::InvalidParams, "delta must be >= 0");
  if (!(mar_value > 0.0 && mar_value <= 1.0))
    throw Error(Errc::InvalidParams, "MAR must lie in (0, 1]");
  const double scale = std::sqrt(static_cast<double>(K) / static_cast<double>(N) + 1.0);
  const double denom = 1.0 - scale * delta;
  if (!(denom > 0.0))
    throw Error(Errc::ConditionViolated,
                "delta = " + std::to_string(delta) + " is not below 1/sqrt(K/N+1)");
  return std::sqrt(2.0 * static_cast<double>(K)) * (1.0 + delta) / (denom * std::sqrt(mar_value));
}

// Earlier OMP-only bound, 2 sqrt(K)(1 + delta) / ((1 - (sqrt(K) + 1) delta) sqrt(MAR)),
// stated under delta_{K+1} < 1/(sqrt(K) + 1).
inline double snr_threshold_wang2015(Index K, double delta, double mar_value) {
  if (K < 1) throw Error(Errc::InvalidParams, "K must be >= 1");
  if (!(delta >= 0.0)) throw Error(Errc::InvalidParams, "delta must be >= 0");
  if (!(mar_value > 0.0 && mar_value <= 1.0))
    throw Error(Errc::InvalidParams, "MAR must lie in (0, 1]");
  const double root = std::sqrt(static_cast<double>(K));
  const double denom = 1.0 - (root + 1.0) * delta;
  if (!(denom > 0.0))
    throw Error(Errc::ConditionViolated, "delta is not below 1/(sqrt(K)+1)");
  return 2.0 * root * (1.0 + delta) / (denom * std::sqrt(mar_value));
}

}  // namespace gomp

#endif  // GOMP_METRICS_HPP
