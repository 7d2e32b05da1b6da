#ifndef GOMP_LINOPS_HPP
#define GOMP_LINOPS_HPP

// Dense least squares on column submatrices, orthogonal-complement
// projection, and the sign-normalized orthogonal factor of a QR
// decomposition. All functions are pure.

#include <algorithm>
#include <string>

#include <Eigen/Dense>

#include "gomp/error.hpp"
#include "gomp/types.hpp"

namespace gomp {

// sigma_min < kRankTolerance * sigma_max is treated as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

namespace detail {

inline void check_columns(const SensingMatrix &A, const IndexSet &S) {
  for (Index j : S)
    if (j < 0 || j >= A.cols())
      throw Error(Errc::DimensionError, "column index " + std::to_string(j + 1) +
                                            " outside 1.." + std::to_string(A.cols()));
  IndexSet s = sorted(S);
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(Errc::InvalidParams, "index set has duplicates");
}

inline bool full_column_rank(const Matrix &M) {
  if (M.cols() > M.rows()) return false;
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto &sv = svd.singularValues();
  const double largest = sv(0);
  const double smallest = sv(sv.size() - 1);
  return largest > 0.0 && smallest >= kRankTolerance * largest;
}

}  // namespace detail

// argmin_z ||y - A_S z||_2, solved through a Householder QR of A_S.
inline Vector least_squares(const SensingMatrix &A, const IndexSet &S, const Vector &y) {
  if (y.size() != A.rows())
    throw Error(Errc::DimensionMismatch, "y has length " + std::to_string(y.size()) +
                                             ", expected " + std::to_string(A.rows()));
  if (S.empty()) throw Error(Errc::InvalidParams, "least squares over an empty support");
  detail::check_columns(A, S);
  if (static_cast<Index>(S.size()) > A.rows())
    throw Error(Errc::RankDeficient, "more columns than rows");

  const Matrix AS = A.columns(S);
  if (!detail::full_column_rank(AS))
    throw Error(Errc::RankDeficient, "column submatrix is numerically rank deficient");
  return AS.householderQr().solve(y);
}

// P⊥_S u = u - A_S (A_S^T A_S)^{-1} A_S^T u; identity when S is empty.
inline Vector project_complement(const SensingMatrix &A, const IndexSet &S, const Vector &u) {
  if (u.size() != A.rows())
    throw Error(Errc::DimensionMismatch, "u has length " + std::to_string(u.size()) +
                                             ", expected " + std::to_string(A.rows()));
  if (S.empty()) return u;
  return u - A.columns(S) * least_squares(A, S, u);
}

// Q of M = QR with diag(R) >= 0, so the result is a deterministic function of M.
inline Matrix orthogonal_factor(const Matrix &M) {
  if (M.rows() != M.cols() || M.rows() < 1)
    throw Error(Errc::DimensionError, "orthogonal_factor needs a nonempty square matrix");
  if (!M.allFinite()) throw Error(Errc::InvalidParams, "matrix has non-finite entries");
  if (!detail::full_column_rank(M)) throw Error(Errc::Singular, "matrix is numerically singular");

  Eigen::HouseholderQR<Matrix> qr(M);
  Matrix Q = qr.householderQ() * Matrix::Identity(M.rows(), M.cols());
  const Matrix &R = qr.matrixQR();
  for (Index j = 0; j < M.cols(); ++j)
    if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
  return Q;
}

}  // namespace gomp

#endif  // GOMP_LINOPS_HPP
