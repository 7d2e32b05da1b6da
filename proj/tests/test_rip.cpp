#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "gomp/instance.hpp"
#include "gomp/linops.hpp"
#include "gomp/rip.hpp"
#include "gomp/rng.hpp"

using gomp::Condition;
using gomp::Errc;
using gomp::Error;
using gomp::IndexSet;
using gomp::Matrix;
using gomp::RicKind;
using gomp::SensingMatrix;
using gomp::Vector;

namespace {

Errc code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no gomp::Error thrown";
  return Errc::IoError;
}

SensingMatrix upper_ones() {
  Matrix M(2, 2);
  M << 1, 1, 0, 1;
  return SensingMatrix(M);
}

}  // namespace

TEST(ExactRic, IdentityIsIsometry) {
  const SensingMatrix A(Matrix::Identity(6, 6));
  for (gomp::Index k = 1; k <= 6; ++k) {
    const auto est = gomp::exact_ric(A, k);
    EXPECT_EQ(est.value, 0.0);
    EXPECT_EQ(est.order, k);
    EXPECT_EQ(est.kind, RicKind::ExactEnumeration);
  }
}

// Columns (1,0) and (1,1): squared norms 1 and 2, so delta_1 = 1. The full
// Gram matrix [[1,1],[1,2]] has eigenvalues (3 +- sqrt 5)/2, so
// delta_2 = max((3+sqrt5)/2 - 1, 1 - (3-sqrt5)/2) = (sqrt5 + 1)/2.
TEST(ExactRic, HandComputedTwoByTwo) {
  EXPECT_NEAR(gomp::exact_ric(upper_ones(), 1).value, 1.0, 1e-15);
  EXPECT_NEAR(gomp::exact_ric(upper_ones(), 2).value, 1.6180339887498948482, 1e-14);
}

TEST(ExactRic, ScaledIdentity) {
  const SensingMatrix A(1.2 * Matrix::Identity(5, 5));
  EXPECT_NEAR(gomp::exact_ric(A, 3).value, 0.44, 1e-14);
}

TEST(ExactRic, Errors) {
  gomp::Rng rng(1);
  const SensingMatrix wide(rng.normal_matrix(4, 30));
  EXPECT_EQ(code_of([&] { gomp::exact_ric(wide, 15); }), Errc::BudgetExceeded);
  EXPECT_EQ(code_of([&] { gomp::exact_ric(wide, 3, 100); }), Errc::BudgetExceeded);
  EXPECT_EQ(code_of([&] { gomp::exact_ric(wide, 31); }), Errc::DimensionError);
  EXPECT_EQ(code_of([&] { gomp::exact_ric(wide, 0); }), Errc::DimensionError);
}

TEST(Binomial, SmallAndSaturating) {
  EXPECT_EQ(gomp::binomial(12, 6), 924u);
  EXPECT_EQ(gomp::binomial(5, 0), 1u);
  EXPECT_EQ(gomp::binomial(3, 4), 0u);
  EXPECT_EQ(gomp::binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(ExactRic, MonotoneInOrder) {
  gomp::Rng rng(2);
  for (int rep = 0; rep < 30; ++rep) {
    const gomp::Index n = 3 + rng.below(6);
    const SensingMatrix A(rng.normal_matrix(n, n) / std::sqrt(static_cast<double>(n)));
    const auto table = gomp::exact_ric_table(A, n);
    for (std::size_t k = 1; k < table.size(); ++k)
      EXPECT_LE(table[k - 1].value, table[k].value + 1e-12);
  }
}

TEST(ExactRic, AdjointBound) {
  gomp::Rng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const gomp::Index m = 4 + rng.below(5), n = m + rng.below(3);
    const SensingMatrix A(rng.normal_matrix(m, n) / std::sqrt(static_cast<double>(m)));
    const gomp::Index K = 1 + rng.below(std::min(m, n));
    const double delta = gomp::exact_ric(A, K).value;
    const IndexSet S = rng.sample_without_replacement(n, 1 + rng.below(K));
    const Vector u = rng.normal_vector(m);
    EXPECT_LE((A.columns(S).transpose() * u).squaredNorm(), (1 + delta) * u.squaredNorm() * (1 + 1e-12));
  }
}

TEST(ExactRic, ProjectedSandwich) {
  gomp::Rng rng(4);
  for (int rep = 0; rep < 100; ++rep) {
    const gomp::Index n = 4 + rng.below(6);
    const Matrix U = gomp::orthogonal_factor(rng.normal_matrix(n, n));
    Vector d(n);
    for (gomp::Index i = 0; i < n; ++i) d[i] = std::sqrt(rng.uniform(0.5, 1.5));
    const SensingMatrix A(d.asDiagonal() * U);
    const IndexSet S1 = rng.sample_without_replacement(n, rng.below(n - 1));
    IndexSet S2;
    for (gomp::Index i : rng.sample_without_replacement(n, 1 + rng.below(n - 1)))
      if (!gomp::contains(S1, i)) S2.push_back(i);
    if (S2.empty()) continue;
    IndexSet uni = S1;
    uni.insert(uni.end(), S2.begin(), S2.end());
    const double delta = gomp::exact_ric(A, static_cast<gomp::Index>(uni.size())).value;
    const Vector x = rng.normal_vector(static_cast<gomp::Index>(S2.size()));
    const double proj = gomp::project_complement(A, S1, A.columns(S2) * x).squaredNorm();
    EXPECT_GE(proj, (1 - delta) * x.squaredNorm() * (1 - 1e-12));
    EXPECT_LE(proj, (1 + delta) * x.squaredNorm() * (1 + 1e-12));
  }
}

TEST(DuRicBound, Examples) {
  EXPECT_EQ(gomp::du_ric_bound(Vector::Ones(4)).value, 0.0);
  const auto est = gomp::du_ric_bound(Vector{{std::sqrt(0.5), std::sqrt(1.5)}});
  EXPECT_NEAR(est.value, 0.5, 1e-15);
  EXPECT_EQ(est.kind, RicKind::AnalyticDU);
  EXPECT_EQ(code_of([] { gomp::du_ric_bound(Vector{{1.0, 0.0}}); }), Errc::NonPositiveDiagonal);
  EXPECT_EQ(code_of([] { gomp::du_ric_bound(Vector{{-1.0}}); }), Errc::NonPositiveDiagonal);
}

// K = N = 2: diagonal in [sqrt(1 - 0.99/sqrt2), sqrt(1 + 0.99/sqrt2)], so the
// bound is at most 0.99/sqrt2 = 0.70003571337468205.
TEST(DuRicBound, GeneratedDiagonalMatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gomp::gen_instance(2, 2, seed);
    const double bound = gomp::du_ric_bound(inst.d).value;
    EXPECT_LE(bound, 0.70003571337468205 + 1e-15);
    EXPECT_LT(bound, 1.0 / std::sqrt(2.0));
    for (gomp::Index k = 1; k <= inst.n(); ++k)
      EXPECT_LE(gomp::exact_ric(inst.A, k).value, bound + 1e-9);
    // The full support sees every eigenvalue d_i^2.
    EXPECT_NEAR(gomp::exact_ric(inst.A, inst.n()).value, bound, 1e-9);
  }
}

TEST(SpectralRicBound, DominatesEnumeration) {
  gomp::Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const SensingMatrix A(rng.normal_matrix(6, 6) / std::sqrt(6.0));
    const auto bound = gomp::spectral_ric_bound(A);
    EXPECT_EQ(bound.kind, RicKind::UpperBoundSpectral);
    for (gomp::Index k = 1; k <= 6; ++k)
      EXPECT_LE(gomp::exact_ric(A, k).value, bound.value + 1e-10);
  }
}

TEST(ConditionThreshold, Values) {
  EXPECT_NEAR(gomp::condition_threshold(4, 1, Condition::Main), 0.44721359549995794, 1e-15);
  EXPECT_NEAR(gomp::condition_threshold(4, 1, Condition::Satpathi2013b), 1.0 / 3.0, 1e-15);
  for (gomp::Index K = 1; K < 10; ++K)
    EXPECT_NEAR(gomp::condition_threshold(K, K, Condition::Main), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(gomp::condition_threshold(4, 1, Condition::Wang2012), 0.2, 1e-15);
  EXPECT_NEAR(gomp::condition_threshold(4, 1, Condition::Satpathi2013a), 0.25, 1e-15);
  EXPECT_NEAR(gomp::condition_threshold(4, 1, Condition::Shen2014), 1 / 3.27, 1e-15);
  EXPECT_NEAR(gomp::condition_threshold(4, 1, Condition::Liu2012), 1 / (2 * (2 + std::sqrt(2.0))),
              1e-15);
  EXPECT_EQ(gomp::condition_order(3, 2, Condition::Main), 7);
  EXPECT_EQ(gomp::condition_order(3, 2, Condition::Shen2014), 6);
}

TEST(ConditionThreshold, MainIsLeastRestrictive) {
  for (gomp::Index K = 1; K <= 64; ++K)
    for (gomp::Index N = 1; N <= 64; ++N)
      for (Condition c : gomp::kAllConditions)
        if (c != Condition::Main && gomp::condition_applies(K, N, c)) {
          EXPECT_GT(gomp::condition_threshold(K, N, Condition::Main),
                    gomp::condition_threshold(K, N, c));
        }
}

TEST(CheckRecoveryCondition, Examples) {
  EXPECT_TRUE(gomp::check_recovery_condition({11, 0.0, RicKind::ExactEnumeration}, 5, 2));
  EXPECT_FALSE(gomp::check_recovery_condition({5, 0.5, RicKind::ExactEnumeration}, 4, 1));
  EXPECT_TRUE(gomp::check_recovery_condition({9, 0.57, RicKind::ExactEnumeration}, 4, 2));
  EXPECT_FALSE(gomp::check_recovery_condition({9, 0.58, RicKind::ExactEnumeration}, 4, 2));
  EXPECT_TRUE(gomp::check_recovery_condition({1, 0.57, RicKind::AnalyticDU}, 4, 2));
  EXPECT_EQ(code_of([] {
              gomp::check_recovery_condition({8, 0.1, RicKind::ExactEnumeration}, 4, 2);
            }),
            Errc::OrderMismatch);
}
