#pragma once

#include "hirsch/integer.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hirsch {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

namespace detail {

template <typename Scalar>
Scalar scalar_abs(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

}  // namespace detail

/// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ... (all d_i >= 0).
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> D;
  Matrix<Scalar> U;
  Matrix<Scalar> V;
  Index rank = 0;

  /// The nonzero diagonal entries, in divisibility order.
  [[nodiscard]] std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(rank));
    for (Index i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

/// Smith normal form by unimodular row and column operations.
///
/// Pivots are chosen by minimal absolute value in the remaining block, which
/// keeps entry growth small on the integer matrices this library produces.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using detail::is_zero;
  using detail::scalar_abs;

  SmithDecomposition<Scalar> s;
  s.D = m;
  const Index rows = s.D.rows();
  const Index cols = s.D.cols();
  s.U = Matrix<Scalar>::Identity(rows, rows);
  s.V = Matrix<Scalar>::Identity(cols, cols);
  auto& D = s.D;

  auto swap_rows = [&](Index a, Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    s.U.row(a).swap(s.U.row(b));
  };
  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    s.V.col(a).swap(s.V.col(b));
  };

  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    Index pi = -1;
    Index pj = -1;
    for (Index j = t; j < cols; ++j) {
      for (Index i = t; i < rows; ++i) {
        if (is_zero(D(i, j))) continue;
        if (pi < 0 || scalar_abs(D(i, j)) < scalar_abs(D(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (is_zero(D(i, t))) continue;
        const Scalar q = D(i, t) / D(t, t);
        if (!is_zero(q)) {
          D.row(i) -= q * D.row(t);
          s.U.row(i) -= q * s.U.row(t);
        }
        if (!is_zero(D(i, t))) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (is_zero(D(t, j))) continue;
        const Scalar q = D(t, j) / D(t, t);
        if (!is_zero(q)) {
          D.col(j) -= q * D.col(t);
          s.V.col(j) -= q * s.V.col(t);
        }
        if (!is_zero(D(t, j))) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived; move it to (t, t)
        Index bi = t;
        Index bj = t;
        for (Index i = t + 1; i < rows; ++i) {
          if (!is_zero(D(i, t)) && scalar_abs(D(i, t)) < scalar_abs(D(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (Index j = t + 1; j < cols; ++j) {
          if (!is_zero(D(t, j)) && scalar_abs(D(t, j)) < scalar_abs(D(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (!is_zero(D(i, j) % D(t, t))) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      D.row(t) += D.row(bad);
      s.U.row(t) += s.U.row(bad);
    }
    if (D(t, t) < Scalar(0)) {
      D.row(t) = -D.row(t);
      s.U.row(t) = -s.U.row(t);
    }
  }
  s.rank = t;
  return s;
}

/// Integer solutions of A x = b: one particular solution plus a kernel basis
/// (columns of `kernel`). Every solution is particular + kernel * c.
template <typename Scalar>
struct IntegerSolution {
  Vector<Scalar> particular;
  Matrix<Scalar> kernel;
};

template <typename DerivedA, typename DerivedB>
std::optional<IntegerSolution<typename DerivedA::Scalar>> solve_integer(
    const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const auto snf = smith_normal_form(A);
  const Vector<Scalar> c = snf.U * b;
  Vector<Scalar> y = Vector<Scalar>::Zero(A.cols());
  for (Index i = 0; i < snf.rank; ++i) {
    if (!detail::is_zero(c(i) % snf.D(i, i))) return std::nullopt;
    y(i) = c(i) / snf.D(i, i);
  }
  for (Index i = snf.rank; i < c.size(); ++i) {
    if (!detail::is_zero(c(i))) return std::nullopt;
  }
  IntegerSolution<Scalar> out;
  out.particular = snf.V * y;
  out.kernel = snf.V.rightCols(A.cols() - snf.rank);
  return out;
}

/// Row-wise sparse integer matrix, used for large cellular and resolution
/// boundary maps.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(Index rows, Index cols) : cols_(cols), rows_(static_cast<std::size_t>(rows)) {}

  [[nodiscard]] Index rows() const { return static_cast<Index>(rows_.size()); }
  [[nodiscard]] Index cols() const { return cols_; }

  /// Accumulates v into entry (r, c).
  void add(Index r, Index c, const Integer& v);
  [[nodiscard]] const std::map<Index, Integer>& row(Index r) const {
    return rows_[static_cast<std::size_t>(r)];
  }
  [[nodiscard]] std::size_t nonzeros() const;
  [[nodiscard]] bool is_zero() const { return nonzeros() == 0; }

  [[nodiscard]] IntMatrix to_dense() const;
  static SparseIntMatrix from_dense(const IntMatrix& m);

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) = default;

 private:
  Index cols_ = 0;
  std::vector<std::map<Index, Integer>> rows_;
};

/// Canonical invariant factors (d_1 | d_2 | ..., all >= 1) of a multiset of
/// nonzero diagonal entries.
std::vector<Integer> canonical_invariant_factors(std::vector<Integer> diagonal);

/// Invariant factors of a sparse matrix by sparse unimodular elimination.
/// Only the diagonal is produced; use smith_normal_form for transforms.
std::vector<Integer> invariant_factors(const SparseIntMatrix& m);

}  // namespace hirsch
