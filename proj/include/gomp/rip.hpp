#ifndef GOMP_RIP_HPP
#define GOMP_RIP_HPP

// Restricted isometry constants.
//
// delta_k is the smallest constant with
//   (1 - delta_k)||x||^2 <= ||Ax||^2 <= (1 + delta_k)||x||^2
// for all k-sparse x. For a fixed support S the tight constant comes from the
// extreme eigenvalues of the Gram block A_S^T A_S, so the exact value is the
// maximum of max(lambda_max - 1, 1 - lambda_min) over all supports of size k.
// That is exponential in k; exact_ric refuses to enumerate past a budget.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gomp/error.hpp"
#include "gomp/types.hpp"

namespace gomp {

enum class RicKind { ExactEnumeration, AnalyticDU, UpperBoundSpectral };

constexpr std::string_view to_string(RicKind kind) {
  switch (kind) {
    case RicKind::ExactEnumeration: return "ExactEnumeration";
    case RicKind::AnalyticDU: return "AnalyticDU";
    case RicKind::UpperBoundSpectral: return "UpperBoundSpectral";
  }
  return "Unknown";
}

struct RicEstimate {
  Index order = 1;
  double value = 0.0;
  RicKind kind = RicKind::ExactEnumeration;

  // Analytic and spectral bounds hold for every order at once.
  bool covers_order(Index k) const { return kind != RicKind::ExactEnumeration || order >= k; }
};

inline constexpr std::uint64_t kDefaultRicBudget = 1'000'000;

// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (Index i = 1; i <= k; ++i) {
    const auto num = static_cast<std::uint64_t>(n - k + i);
    // result * num / i is exact at every step; guard the multiplication.
    if (result > std::numeric_limits<std::uint64_t>::max() / num)
      return std::numeric_limits<std::uint64_t>::max();
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

namespace detail {

// Advances `c` (ascending, values in [0, n)) to the next k-combination in
// lexicographic order. Returns false after the last one.
inline bool next_combination(IndexSet &c, Index n) {
  const Index k = static_cast<Index>(c.size());
  Index i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (Index j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

inline double support_ric(const Matrix &gram, const IndexSet &S) {
  if (S.size() == 1) {
    const double g = gram(S[0], S[0]);
    return std::max(g - 1.0, 1.0 - g);
  }
  const Matrix block = gram(S, S);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(block, Eigen::EigenvaluesOnly);
  const auto &ev = eig.eigenvalues();  // ascending
  return std::max(ev(ev.size() - 1) - 1.0, 1.0 - ev(0));
}

}  // namespace detail

inline RicEstimate exact_ric(const SensingMatrix &A, Index order,
                             std::uint64_t budget = kDefaultRicBudget) {
  const Index n = A.cols();
  if (order < 1 || order > n)
    throw Error(Errc::DimensionError,
                "order " + std::to_string(order) + " outside 1.." + std::to_string(n));
  const std::uint64_t count = binomial(n, order);
  if (count > budget)
    throw Error(Errc::BudgetExceeded, "C(" + std::to_string(n) + ", " + std::to_string(order) +
                                          ") supports exceed the budget of " +
                                          std::to_string(budget));

  const Matrix gram = A.matrix().transpose() * A.matrix();
  IndexSet support(static_cast<std::size_t>(order));
  for (Index i = 0; i < order; ++i) support[i] = i;

  double delta = 0.0;
  do {
    delta = std::max(delta, detail::support_ric(gram, support));
  } while (detail::next_combination(support, n));
  return {order, delta, RicKind::ExactEnumeration};
}

// exact_ric for orders 1..max_order; element k-1 holds delta_k.
inline std::vector<RicEstimate> exact_ric_table(const SensingMatrix &A, Index max_order,
                                                std::uint64_t budget = kDefaultRicBudget) {
  std::vector<RicEstimate> table;
  for (Index k = 1; k <= max_order; ++k) table.push_back(exact_ric(A, k, budget));
  return table;
}

// For A = D U with U orthogonal and D = diag(d): ||DUx||^2 lies between
// min d^2 ||x||^2 and max d^2 ||x||^2, which bounds delta of every order.
inline RicEstimate du_ric_bound(const Vector &d) {
  if (d.size() < 1) throw Error(Errc::DimensionError, "empty diagonal");
  for (Index i = 0; i < d.size(); ++i)
    if (!(d[i] > 0.0))
      throw Error(Errc::NonPositiveDiagonal, "d_" + std::to_string(i + 1) + " is not positive");
  const double lo = d.cwiseAbs2().minCoeff();
  const double hi = d.cwiseAbs2().maxCoeff();
  return {d.size(), std::max(1.0 - lo, hi - 1.0), RicKind::AnalyticDU};
}

// Bound from the extreme singular values of the whole matrix; valid for every
// order. When m < n the lower side degenerates to 1.
inline RicEstimate spectral_ric_bound(const SensingMatrix &A) {
  Eigen::JacobiSVD<Matrix> svd(A.matrix());
  const auto &sv = svd.singularValues();
  const double hi = sv(0) * sv(0);
  const double lo = A.rows() >= A.cols() ? sv(sv.size() - 1) * sv(sv.size() - 1) : 0.0;
  return {A.cols(), std::max(hi - 1.0, 1.0 - lo), RicKind::UpperBoundSpectral};
}

// Sufficient RIC conditions for gOMP to recover K-sparse signals.
//   Main          delta_{NK+1} < 1/sqrt(K/N + 1)
//   Wang2012      delta_{NK}   < 1/(sqrt(K/N) + 3)
//   Liu2012       delta_{NK}   < 1/((2 + sqrt 2) sqrt(K/N))
//   Satpathi2013a delta_{NK}   < 1/(sqrt(K/N) + 2)
//   Satpathi2013b delta_{NK+1} < 1/(sqrt(K/N) + 1)
//   Shen2014      delta_{NK}   < 1/(sqrt(K/N) + 1.27)
enum class Condition { Main, Wang2012, Liu2012, Satpathi2013a, Satpathi2013b, Shen2014 };

inline constexpr Condition kAllConditions[] = {Condition::Main,          Condition::Wang2012,
                                               Condition::Liu2012,       Condition::Satpathi2013a,
                                               Condition::Satpathi2013b, Condition::Shen2014};

constexpr std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Main: return "Main";
    case Condition::Wang2012: return "Wang2012";
    case Condition::Liu2012: return "Liu2012";
    case Condition::Satpathi2013a: return "Satpathi2013a";
    case Condition::Satpathi2013b: return "Satpathi2013b";
    case Condition::Shen2014: return "Shen2014";
  }
  return "Unknown";
}

inline double condition_threshold(Index K, Index N, Condition which) {
  if (K < 1 || N < 1) throw Error(Errc::InvalidParams, "K and N must be >= 1");
  const double ratio = static_cast<double>(K) / static_cast<double>(N);
  const double root = std::sqrt(ratio);
  switch (which) {
    case Condition::Main: return 1.0 / std::sqrt(ratio + 1.0);
    case Condition::Wang2012: return 1.0 / (root + 3.0);
    case Condition::Liu2012: return 1.0 / ((2.0 + std::sqrt(2.0)) * root);
    case Condition::Satpathi2013a: return 1.0 / (root + 2.0);
    case Condition::Satpathi2013b: return 1.0 / (root + 1.0);
    case Condition::Shen2014: return 1.0 / (root + 1.27);
  }
  throw Error(Errc::InvalidParams, "unknown condition");
}

// RIC order each condition is stated for.
inline Index condition_order(Index K, Index N, Condition which) {
  switch (which) {
    case Condition::Main:
    case Condition::Satpathi2013b: return N * K + 1;
    default: return N * K;
  }
}

// Wang2012 and Liu2012 were derived under N <= K.
inline bool condition_applies(Index K, Index N, Condition which) {
  if (which == Condition::Wang2012 || which == Condition::Liu2012) return N <= K;
  return true;
}

// delta_{NK+1} < 1/sqrt(K/N + 1).
inline bool check_recovery_condition(const RicEstimate &delta, Index K, Index N) {
  if (K < 1 || N < 1) throw Error(Errc::InvalidParams, "K and N must be >= 1");
  if (!delta.covers_order(N * K + 1))
    throw Error(Errc::OrderMismatch, "estimate of order " + std::to_string(delta.order) +
                                         " cannot certify order " + std::to_string(N * K + 1));
  return delta.value < condition_threshold(K, N, Condition::Main);
}

}  // namespace gomp

#endif  // GOMP_RIP_HPP
