#ifndef GOMP_VERIFY_HPP
#define GOMP_VERIFY_HPP

// Numeric checks of the recovery analysis on concrete instances:
//   * the per-iteration correlation gap inequality,
//   * zero residual with enough correct picks implies full support,
//   * the selection condition max_{i in Omega}|A_i^T r| > mean_{j in W}|A_j^T r|
//     along a recorded trace.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "gomp/error.hpp"
#include "gomp/greedy.hpp"
#include "gomp/linops.hpp"
#include "gomp/rip.hpp"
#include "gomp/rng.hpp"
#include "gomp/types.hpp"

namespace gomp {

inline constexpr double kLemmaSlack = 1e-12;

struct LemmaInstance {
  SensingMatrix A;
  SparseSignal x;
  IndexSet S;  // |S| = kN
  IndexSet W;  // |W| = N, W in the complement of the support, disjoint from S
  Index k = 0;
  Index N = 1;

  Index overlap() const { return intersection_size(x.support(), S); }

  // N(k+1) + |Omega| - l: the order whose RIC enters the bound.
  Index ric_order() const {
    return N * (k + 1) + static_cast<Index>(x.support().size()) - overlap();
  }

  void validate() const {
    const auto omega = static_cast<Index>(x.support().size());
    const Index l = overlap();
    auto fail = [](const std::string &why) { throw Error(Errc::InvalidParams, why); };
    if (x.size() != A.cols()) fail("signal length differs from n");
    if (N < 1) fail("N must be >= 1");
    if (static_cast<Index>(S.size()) != k * N) fail("|S| must equal kN");
    if (static_cast<Index>(W.size()) != N) fail("|W| must equal N");
    IndexSet s = sorted(S), w = sorted(W);
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail("S has duplicates");
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) fail("W has duplicates");
    for (Index j : W) {
      if (j < 0 || j >= A.cols()) fail("W index out of range");
      if (contains(x.support(), j)) fail("W intersects the support");
      if (contains(S, j)) fail("W intersects S");
    }
    for (Index j : S)
      if (j < 0 || j >= A.cols()) fail("S index out of range");
    if (!(0 <= k && k <= l && l <= omega - 1)) fail("need 0 <= k <= l <= |Omega| - 1");
    if (N * (k + 1) + omega - k > A.rows()) fail("need N(k+1) + |Omega| - k <= m");
  }
};

struct Lemma4Sides {
  double lhs = 0.0;
  double rhs = 0.0;
  double delta = 0.0;
};

// Both sides of the correlation-gap bound with a caller-supplied delta of
// order inst.ric_order().
inline Lemma4Sides lemma4_sides(const LemmaInstance &inst, double delta) {
  inst.validate();
  IndexSet rest;  // Omega \ S
  for (Index i : inst.x.support())
    if (!contains(inst.S, i)) rest.push_back(i);
  const Vector x_rest = inst.x.restricted(rest);
  const Vector u = project_complement(inst.A, inst.S, inst.A.columns(rest) * x_rest);

  double best = 0.0;
  for (Index i : rest) best = std::max(best, std::abs(inst.A.col(i).dot(u)));
  double w_sum = 0.0;
  for (Index j : inst.W) w_sum += std::abs(inst.A.col(j).dot(u));

  const auto remaining = static_cast<double>(rest.size());
  const double scale = std::sqrt(remaining / static_cast<double>(inst.N) + 1.0);
  Lemma4Sides out;
  out.delta = delta;
  out.lhs = best - w_sum / static_cast<double>(inst.N);
  out.rhs = (1.0 - scale * delta) * x_rest.norm() / std::sqrt(remaining);
  return out;
}

inline Lemma4Sides lemma4_sides(const LemmaInstance &inst,
                                std::uint64_t budget = kDefaultRicBudget) {
  inst.validate();
  return lemma4_sides(inst, exact_ric(inst.A, inst.ric_order(), budget).value);
}

inline bool verify_lemma4(const LemmaInstance &inst, double delta) {
  const Lemma4Sides s = lemma4_sides(inst, delta);
  return s.lhs >= s.rhs - kLemmaSlack;
}

inline bool verify_lemma4(const LemmaInstance &inst) {
  const Lemma4Sides s = lemma4_sides(inst);
  return s.lhs >= s.rhs - kLemmaSlack;
}

// Draws an admissible LemmaInstance on A. S takes l support indices first and
// then kN - l off-support ones so every (k, l) pair is reachable. With
// `adversarial_w`, W is the N off-support columns most correlated with the
// projected signal (the choice the greedy step actually faces); otherwise W
// is uniform. Returns nullopt if no admissible shape was found.
inline std::optional<LemmaInstance> sample_lemma_instance(const SensingMatrix &A, Rng &rng,
                                                          Index max_n_select = 3,
                                                          bool adversarial_w = false) {
  const Index m = A.rows();
  const Index n = A.cols();
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Index N = 1 + rng.below(max_n_select);
    if (n - N < 1) continue;
    const Index omega = 1 + rng.below(n - N);
    const Index k = rng.below(omega);
    const Index l = k + rng.below(omega - k);
    const Index off = k * N - l;
    if (off < 0 || off > n - omega - N) continue;
    if (N * (k + 1) + omega - k > m) continue;

    const IndexSet support = rng.sample_without_replacement(n, omega);
    const IndexSet outside = complement(support, n);

    IndexSet S;
    for (Index i : rng.sample_without_replacement(omega, l)) S.push_back(support[i]);
    const IndexSet off_pick = rng.sample_without_replacement(static_cast<Index>(outside.size()), off);
    for (Index i : off_pick) S.push_back(outside[i]);

    Vector values = Vector::Zero(n);
    for (Index i : support) {
      double v = 0.0;
      while (v == 0.0) v = rng.normal();
      values[i] = v;
    }

    IndexSet free_cols;
    for (Index j : outside)
      if (!contains(S, j)) free_cols.push_back(j);

    LemmaInstance inst{A, SparseSignal(values, support), S, {}, k, N};
    if (adversarial_w) {
      IndexSet rest;
      for (Index i : support)
        if (!contains(S, i)) rest.push_back(i);
      const Vector u = project_complement(A, S, A.columns(rest) * values(rest));
      Vector corr = Vector::Zero(n);
      for (Index j : free_cols) corr[j] = std::abs(A.col(j).dot(u));
      IndexSet excluded = complement(free_cols, n);
      inst.W = select_top_n(corr, N, excluded);
    } else {
      for (Index i : rng.sample_without_replacement(static_cast<Index>(free_cols.size()), N))
        inst.W.push_back(free_cols[i]);
    }
    return inst;
  }
  return std::nullopt;
}

// Zero residual with at least k0 correct indices after k0 iterations must
// mean the whole support was found. `v` is the noise the observation carried;
// the property is only claimed for v = 0.
inline bool verify_stopping(const SensingMatrix &A, const SparseSignal &x,
                            const RecoveryTrace &trace, Index N, const Vector &v = Vector()) {
  if (v.size() > 0 && !v.isZero(0.0))
    throw Error(Errc::NotNoiseFree, "instance carries nonzero noise");
  if (x.size() != A.cols()) throw Error(Errc::DimensionMismatch, "signal length differs from n");
  const IndexSet &omega = x.support();
  for (std::size_t t = 0; t < trace.iterations.size(); ++t) {
    const auto k0 = static_cast<Index>(t + 1);
    const IterationRecord &it = trace.iterations[t];
    if (static_cast<Index>(it.support_after.size()) != k0 * N)
      throw Error(Errc::InvalidParams, "support size differs from k*N");
    if (it.residual_norm > trace.epsilon) continue;
    if (intersection_size(omega, it.support_after) < k0) continue;
    if (!is_subset(omega, it.support_after)) return false;
  }
  return true;
}

// At every iteration that starts with part of the support still missing,
// max_{i in Omega}|A_i^T r| must exceed the mean of the N largest
// off-support correlations.
inline bool verify_selection_condition(const SensingMatrix &A, const SparseSignal &x,
                                       const RecoveryTrace &trace, Index N) {
  const Index n = A.cols();
  const IndexSet &omega = x.support();
  if (omega.empty()) return true;
  for (std::size_t t = 0; t < trace.iterations.size(); ++t) {
    const IndexSet before = t == 0 ? IndexSet{} : trace.iterations[t - 1].support_after;
    if (is_subset(omega, before)) break;
    const Vector &c = trace.iterations[t].correlations;
    if (c.size() != n) throw Error(Errc::TraceIncomplete, "correlations were not recorded");

    double best = 0.0;
    for (Index i : omega) best = std::max(best, std::abs(c[i]));
    const Index width = std::min<Index>(N, n - static_cast<Index>(omega.size()));
    if (width < 1) continue;
    double w_sum = 0.0;
    for (Index j : select_top_n(c, width, omega)) w_sum += std::abs(c[j]);
    if (!(best > w_sum / static_cast<double>(width))) return false;
  }
  return true;
}

}  // namespace gomp

#endif  // GOMP_VERIFY_HPP
