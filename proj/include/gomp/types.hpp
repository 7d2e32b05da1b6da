#ifndef GOMP_TYPES_HPP
#define GOMP_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gomp/error.hpp"

namespace gomp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Column indices, 0-based. Order is meaningful where it records a selection
// order (IterationRecord::selected); use sorted() when set semantics matter.
// External interfaces (JSON, CLI, reports) are 1-based.
using IndexSet = std::vector<Index>;

inline bool contains(const IndexSet &set, Index i) {
  return std::find(set.begin(), set.end(), i) != set.end();
}

inline IndexSet sorted(IndexSet set) {
  std::sort(set.begin(), set.end());
  return set;
}

// a ⊆ b
inline bool is_subset(const IndexSet &a, const IndexSet &b) {
  return std::all_of(a.begin(), a.end(), [&](Index i) { return contains(b, i); });
}

inline Index intersection_size(const IndexSet &a, const IndexSet &b) {
  return static_cast<Index>(
      std::count_if(a.begin(), a.end(), [&](Index i) { return contains(b, i); }));
}

// {0..n-1} \ set, ascending.
inline IndexSet complement(const IndexSet &set, Index n) {
  IndexSet out;
  for (Index i = 0; i < n; ++i)
    if (!contains(set, i)) out.push_back(i);
  return out;
}

inline std::vector<long long> to_one_based(const IndexSet &set) {
  std::vector<long long> out;
  out.reserve(set.size());
  for (Index i : set) out.push_back(static_cast<long long>(i) + 1);
  return out;
}

inline IndexSet from_one_based(const std::vector<long long> &set, Index n) {
  IndexSet out;
  out.reserve(set.size());
  for (long long i : set) {
    if (i < 1 || i > n)
      throw Error(Errc::DimensionError, "index " + std::to_string(i) + " outside 1.." +
                                            std::to_string(n));
    out.push_back(static_cast<Index>(i - 1));
  }
  return out;
}

// Real m x n sensing matrix with finite entries.
class SensingMatrix {
 public:
  SensingMatrix() = default;

  explicit SensingMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.cols() < 1)
      throw Error(Errc::DimensionError, "sensing matrix must be at least 1x1");
    if (!entries_.allFinite())
      throw Error(Errc::InvalidParams, "sensing matrix has non-finite entries");
  }

  Index rows() const { return entries_.rows(); }
  Index cols() const { return entries_.cols(); }
  const Matrix &matrix() const { return entries_; }

  auto col(Index j) const { return entries_.col(j); }

  // A_S, columns in the order given by S.
  Matrix columns(const IndexSet &S) const {
    for (Index j : S)
      if (j < 0 || j >= cols())
        throw Error(Errc::DimensionError, "column index out of range");
    return entries_(Eigen::all, S);
  }

  Vector operator*(const Vector &x) const {
    if (x.size() != cols())
      throw Error(Errc::DimensionMismatch, "vector length differs from column count");
    return entries_ * x;
  }

 private:
  Matrix entries_;
};

// Length-n vector with an explicit support: zero outside, nonzero inside.
class SparseSignal {
 public:
  SparseSignal() = default;

  SparseSignal(Vector values, IndexSet support)
      : values_(std::move(values)), support_(sorted(std::move(support))) {
    const Index n = values_.size();
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
      throw Error(Errc::InvalidParams, "support has duplicate indices");
    for (Index i = 0; i < n; ++i) {
      const bool in = std::binary_search(support_.begin(), support_.end(), i);
      if (in && values_[i] == 0.0)
        throw Error(Errc::InvalidParams, "zero value on the declared support");
      if (!in && values_[i] != 0.0)
        throw Error(Errc::InvalidParams, "nonzero value outside the declared support");
    }
    for (Index i : support_)
      if (i < 0 || i >= n) throw Error(Errc::DimensionError, "support index out of range");
  }

  // Support taken as the nonzero pattern of `values`.
  static SparseSignal from_dense(Vector values) {
    IndexSet support;
    for (Index i = 0; i < values.size(); ++i)
      if (values[i] != 0.0) support.push_back(i);
    return SparseSignal(std::move(values), std::move(support));
  }

  Index size() const { return values_.size(); }
  const Vector &values() const { return values_; }
  const IndexSet &support() const { return support_; }

  // x restricted to `set`, in the order of `set`.
  Vector restricted(const IndexSet &set) const { return values_(set); }

 private:
  Vector values_;
  IndexSet support_;
};

}  // namespace gomp

#endif  // GOMP_TYPES_HPP
