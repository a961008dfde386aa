#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "copath/scalar.hpp"

namespace copath {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exact Gauss-Jordan reduction in place; returns the pivot columns.
/// Works over any exact field scalar (pivot = first nonzero entry).
template <class Scalar>
std::vector<Eigen::Index> rref_in_place(Mat<Scalar>& m) {
  Eigen::Index rows = m.rows(), cols = m.cols(), r = 0;
  std::vector<Eigen::Index> pivots;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (Eigen::Index j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Scalar>
Eigen::Index rank(Mat<Scalar> m) {
  return Eigen::Index(rref_in_place(m).size());
}

/// Columns spanning ker(m); (cols x nullity), identity on the free
/// coordinates.
template <class Scalar>
Mat<Scalar> kernel_basis(Mat<Scalar> m) {
  Eigen::Index cols = m.cols();
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivots) is_pivot[c] = true;
  Eigen::Index nullity = cols - Eigen::Index(pivots.size());
  Mat<Scalar> basis = Mat<Scalar>::Zero(cols, nullity);
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -m(Eigen::Index(i), f);
    ++k;
  }
  return basis;
}

/// One solution of a x = b, or nullopt when inconsistent.
template <class Scalar>
std::optional<Vec<Scalar>> solve(const Mat<Scalar>& a, const Vec<Scalar>& b) {
  Mat<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(Eigen::Index(i), a.cols());
  return x;
}

/// A maximal independent subset of the columns of m, as column indices.
template <class Scalar>
std::vector<Eigen::Index> independent_columns(Mat<Scalar> m) {
  return rref_in_place(m);
}

/// Map q with ker(q) = column span of b; q is (n - rank(b)) x n.
template <class Scalar>
Mat<Scalar> cokernel_map(const Mat<Scalar>& b) {
  Mat<Scalar> bt = b.transpose();
  Mat<Scalar> k = kernel_basis(bt);
  return k.transpose();
}

/// Right inverse of a surjective map q (q * r = identity).
template <class Scalar>
Mat<Scalar> right_inverse(const Mat<Scalar>& q) {
  Mat<Scalar> r(q.cols(), q.rows());
  for (Eigen::Index j = 0; j < q.rows(); ++j) {
    Vec<Scalar> e = Vec<Scalar>::Zero(q.rows());
    e(j) = Scalar(1);
    auto x = solve(q, e);
    if (!x) fail(Errc::BadArgument, "right_inverse of a non-surjective map");
    r.col(j) = *x;
  }
  return r;
}

/// True when v lies in the column span of b.
template <class Scalar>
bool in_column_span(const Mat<Scalar>& b, const Vec<Scalar>& v) {
  return solve(b, v).has_value();
}

template <class Scalar>
bool is_zero_matrix(const Mat<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

}  // namespace copath
