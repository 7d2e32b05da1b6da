#include <cmath>

#include <gtest/gtest.h>

#include "gomp/linops.hpp"
#include "gomp/rng.hpp"
#include "oracles.hpp"

using gomp::Errc;
using gomp::Error;
using gomp::IndexSet;
using gomp::Matrix;
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

}  // namespace

TEST(LeastSquares, IdentityPicksCoordinates) {
  const SensingMatrix A(Matrix::Identity(3, 3));
  const Vector x = gomp::least_squares(A, {0, 2}, Vector{{5.0, 7.0, -2.0}});
  ASSERT_EQ(x.size(), 2);
  EXPECT_DOUBLE_EQ(x[0], 5.0);
  EXPECT_DOUBLE_EQ(x[1], -2.0);
}

TEST(LeastSquares, SingleUnitColumn) {
  const SensingMatrix A(Matrix::Constant(3, 1, 1.0 / std::sqrt(3.0)));
  const Vector x = gomp::least_squares(A, {0}, Vector::Ones(3));
  EXPECT_NEAR(x[0], std::sqrt(3.0), 1e-15);
}

TEST(LeastSquares, MatchesNormalEquationsOracle) {
  gomp::Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const SensingMatrix A(rng.normal_matrix(6, 5));
    const IndexSet S{4, 0, 2};
    const Vector y = rng.normal_vector(6);
    const Vector got = gomp::least_squares(A, S, y);
    const auto want = oracle::normal_equations(oracle::to_dense(A.matrix()), S, oracle::to_vec(y));
    for (std::size_t i = 0; i < want.size(); ++i)
      EXPECT_NEAR(got[static_cast<gomp::Index>(i)], want[i], 1e-10 * std::abs(want[i]) + 1e-12);
  }
}

TEST(LeastSquares, ResidualOrthogonalToSelectedColumns) {
  gomp::Rng rng(12);
  for (int rep = 0; rep < 100; ++rep) {
    const gomp::Index m = 4 + rng.below(8);
    const SensingMatrix A(rng.normal_matrix(m, m + 3));
    const IndexSet S = rng.sample_without_replacement(m + 3, 1 + rng.below(m));
    const Vector y = rng.normal_vector(m);
    const Vector r = y - A.columns(S) * gomp::least_squares(A, S, y);
    const Vector At_r = A.columns(S).transpose() * r;
    EXPECT_LE(At_r.cwiseAbs().maxCoeff(), 1e-8 * y.norm());
  }
}

TEST(LeastSquares, Errors) {
  Matrix M(3, 2);
  M << 1, 2, 1, 2, 1, 2;  // second column is twice the first
  const SensingMatrix A(M);
  EXPECT_EQ(code_of([&] { gomp::least_squares(A, {0, 1}, Vector::Ones(3)); }),
            Errc::RankDeficient);
  EXPECT_EQ(code_of([&] { gomp::least_squares(A, {0}, Vector::Ones(2)); }),
            Errc::DimensionMismatch);
  EXPECT_EQ(code_of([&] { gomp::least_squares(A, {}, Vector::Ones(3)); }), Errc::InvalidParams);
  EXPECT_EQ(code_of([&] { gomp::least_squares(A, {5}, Vector::Ones(3)); }), Errc::DimensionError);
}

TEST(ProjectComplement, EmptySetIsIdentity) {
  gomp::Rng rng(1);
  const SensingMatrix A(rng.normal_matrix(4, 4));
  const Vector u = rng.normal_vector(4);
  EXPECT_EQ(gomp::project_complement(A, {}, u), u);
}

TEST(ProjectComplement, CoordinateProjector) {
  const SensingMatrix A(Matrix::Identity(3, 3));
  const Vector p = gomp::project_complement(A, {0, 1}, Vector{{3.0, 4.0, 5.0}});
  EXPECT_NEAR(p[0], 0.0, 1e-15);
  EXPECT_NEAR(p[1], 0.0, 1e-15);
  EXPECT_NEAR(p[2], 5.0, 1e-15);
}

TEST(ProjectComplement, OrthonormalColumnsMatchExplicitInverse) {
  gomp::Rng rng(2);
  for (int rep = 0; rep < 20; ++rep) {
    const SensingMatrix A(gomp::orthogonal_factor(rng.normal_matrix(7, 7)));
    const IndexSet S = rng.sample_without_replacement(7, 3);
    const Vector u = rng.normal_vector(7);
    const Vector got = gomp::project_complement(A, S, u);
    const Vector direct = u - A.columns(S) * (A.columns(S).transpose() * u);
    const auto explicit_inv =
        oracle::project_complement_explicit(oracle::to_dense(A.matrix()), S, oracle::to_vec(u));
    for (gomp::Index i = 0; i < 7; ++i) {
      EXPECT_NEAR(got[i], direct[i], 1e-12);
      EXPECT_NEAR(got[i], explicit_inv[static_cast<std::size_t>(i)], 1e-12);
    }
  }
}

TEST(ProjectComplement, IdempotentSymmetricContractive) {
  gomp::Rng rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const gomp::Index m = 3 + rng.below(8);
    const SensingMatrix A(rng.normal_matrix(m, m));
    const IndexSet S = rng.sample_without_replacement(m, rng.below(m));
    const Vector u = rng.normal_vector(m), w = rng.normal_vector(m);
    const Vector pu = gomp::project_complement(A, S, u);
    const Vector pw = gomp::project_complement(A, S, w);
    EXPECT_LE((gomp::project_complement(A, S, pu) - pu).cwiseAbs().maxCoeff(), 1e-10 * u.norm());
    EXPECT_NEAR(pu.dot(w), u.dot(pw), 1e-10 * u.norm() * w.norm());
    EXPECT_LE(pu.norm(), u.norm() * (1 + 1e-12));
    if (!S.empty()) {
      EXPECT_LE((A.columns(S).transpose() * pu).cwiseAbs().maxCoeff(), 1e-8 * u.norm());
    }
  }
}

TEST(OrthogonalFactor, IdentityAndDiagonal) {
  EXPECT_TRUE(gomp::orthogonal_factor(Matrix::Identity(4, 4)).isApprox(Matrix::Identity(4, 4)));
  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 2.0;
  D(1, 1) = 3.0;
  const Matrix U = gomp::orthogonal_factor(D);
  EXPECT_NEAR((U - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 0.0, 1e-15);
}

TEST(OrthogonalFactor, RandomGaussianIsOrthogonalWithSameSpan) {
  gomp::Rng rng(4);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix M = rng.normal_matrix(5, 5);
    const Matrix U = gomp::orthogonal_factor(M);
    EXPECT_LE((U.transpose() * U - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff(), 1e-10);
    // R = U^T M must be upper triangular with a nonnegative diagonal.
    const Matrix R = U.transpose() * M;
    for (int i = 0; i < 5; ++i) {
      EXPECT_GE(R(i, i), 0.0);
      for (int j = 0; j < i; ++j) EXPECT_NEAR(R(i, j), 0.0, 1e-10);
    }
  }
}

TEST(OrthogonalFactor, Errors) {
  EXPECT_EQ(code_of([] { gomp::orthogonal_factor(Matrix::Zero(3, 3)); }), Errc::Singular);
  Matrix M = Matrix::Identity(3, 3);
  M.col(2) = M.col(1);
  EXPECT_EQ(code_of([&] { gomp::orthogonal_factor(M); }), Errc::Singular);
  EXPECT_EQ(code_of([] { gomp::orthogonal_factor(Matrix::Ones(2, 3)); }), Errc::DimensionError);
}
