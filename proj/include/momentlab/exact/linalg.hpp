#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "momentlab/exact/quad_scalar.hpp"
#include "momentlab/exact/rational.hpp"

namespace momentlab {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Reduced row-echelon basis of a row span. Zero rows are dropped, pivot
/// columns are strictly increasing and every pivot entry is 1.
template <typename Scalar>
struct EchelonForm {
  MatrixX<Scalar> rows;
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Exact Gauss-Jordan elimination; the first nonzero entry in each column is
/// taken as pivot.
template <typename Scalar>
EchelonForm<Scalar> rref(MatrixX<Scalar> m) {
  const Eigen::Index nrows = m.rows();
  const Eigen::Index ncols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < ncols && r < nrows; ++c) {
    Eigen::Index p = r;
    while (p < nrows && is_zero(m(p, c))) ++p;
    if (p == nrows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < ncols; ++j) {
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    }
    for (Eigen::Index i = 0; i < nrows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < ncols; ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  EchelonForm<Scalar> out;
  out.rows = m.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

template <typename Scalar>
Eigen::Index rank(const MatrixX<Scalar>& m) {
  return rref<Scalar>(m).rank();
}

/// Basis of the right nullspace as the columns of the result. Each free
/// column f contributes the vector with x_f = 1, zero on the other free
/// columns, and x_p = -R(i, f) on pivot p of echelon row i.
template <typename Scalar>
MatrixX<Scalar> nullspace(const MatrixX<Scalar>& m) {
  const EchelonForm<Scalar> e = rref<Scalar>(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    const auto col = static_cast<Eigen::Index>(k);
    basis(f, col) = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const auto row = static_cast<Eigen::Index>(i);
      if (!is_zero(e.rows(row, f))) basis(e.pivots[i], col) = -e.rows(row, f);
    }
  }
  return basis;
}

/// Subspace of Scalar^n kept as a reduced row-echelon basis.
template <typename Scalar>
class Subspace {
 public:
  explicit Subspace(Eigen::Index ambient_dim = 0)
      : ambient_(ambient_dim), rows_(0, ambient_dim) {}

  static Subspace span(const MatrixX<Scalar>& generators_as_rows) {
    Subspace s(generators_as_rows.cols());
    EchelonForm<Scalar> e = rref<Scalar>(generators_as_rows);
    s.rows_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  Eigen::Index ambient_dim() const noexcept { return ambient_; }
  Eigen::Index dim() const noexcept { return rows_.rows(); }
  const MatrixX<Scalar>& rows() const noexcept { return rows_; }
  const std::vector<Eigen::Index>& pivots() const noexcept { return pivots_; }

  /// Residue of v after elimination against the basis.
  VectorX<Scalar> reduce(VectorX<Scalar> v) const {
    check_length(v);
    for (Eigen::Index i = 0; i < dim(); ++i) {
      const Scalar f = v(pivots_[static_cast<std::size_t>(i)]);
      if (is_zero(f)) continue;
      for (Eigen::Index j = 0; j < ambient_; ++j) {
        if (!is_zero(rows_(i, j))) v(j) -= f * rows_(i, j);
      }
    }
    return v;
  }

  bool contains(const VectorX<Scalar>& v) const {
    const VectorX<Scalar> r = reduce(v);
    for (Eigen::Index j = 0; j < r.size(); ++j) {
      if (!is_zero(r(j))) return false;
    }
    return true;
  }

  /// Adds v to the span; returns false when v was already a member.
  bool insert(const VectorX<Scalar>& v) {
    VectorX<Scalar> r = reduce(v);
    Eigen::Index p = 0;
    while (p < ambient_ && is_zero(r(p))) ++p;
    if (p == ambient_) return false;
    const Scalar inv = Scalar(1) / r(p);
    for (Eigen::Index j = p; j < ambient_; ++j) {
      if (!is_zero(r(j))) r(j) *= inv;
    }
    for (Eigen::Index i = 0; i < dim(); ++i) {
      const Scalar f = rows_(i, p);
      if (is_zero(f)) continue;
      for (Eigen::Index j = p; j < ambient_; ++j) {
        if (!is_zero(r(j))) rows_(i, j) -= f * r(j);
      }
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto at = static_cast<Eigen::Index>(it - pivots_.begin());
    MatrixX<Scalar> grown(dim() + 1, ambient_);
    grown.topRows(at) = rows_.topRows(at);
    grown.row(at) = r.transpose();
    grown.bottomRows(dim() - at) = rows_.bottomRows(dim() - at);
    rows_ = std::move(grown);
    pivots_.insert(it, p);
    return true;
  }

  Subspace sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspace dimension mismatch");
    Subspace s = *this;
    for (Eigen::Index i = 0; i < other.dim(); ++i) s.insert(other.rows_.row(i).transpose());
    return s;
  }

  bool contains(const Subspace& other) const {
    for (Eigen::Index i = 0; i < other.dim(); ++i) {
      if (!contains(VectorX<Scalar>(other.rows_.row(i).transpose()))) return false;
    }
    return true;
  }

  /// Reduced echelon bases are unique, so equality is structural.
  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_ == y.ambient_ && x.pivots_ == y.pivots_ && x.rows_ == y.rows_;
  }

 private:
  void check_length(const VectorX<Scalar>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length does not match subspace dimension");
  }

  Eigen::Index ambient_;
  MatrixX<Scalar> rows_;
  std::vector<Eigen::Index> pivots_;
};

using SubspaceBasis = Subspace<Rational>;

/// Intersection of two subspaces of the same ambient space.
template <typename Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& x, const Subspace<Scalar>& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw std::invalid_argument("subspace dimension mismatch");
  // Solve a^T X = b^T Y: nullspace of [X; -Y]^T, then map through X.
  const Eigen::Index n = x.ambient_dim();
  MatrixX<Scalar> stacked(n, x.dim() + y.dim());
  for (Eigen::Index i = 0; i < x.dim(); ++i) stacked.col(i) = x.rows().row(i).transpose();
  for (Eigen::Index i = 0; i < y.dim(); ++i) {
    for (Eigen::Index j = 0; j < n; ++j) stacked(j, x.dim() + i) = -y.rows()(i, j);
  }
  const MatrixX<Scalar> kernel = nullspace<Scalar>(stacked);
  Subspace<Scalar> out(n);
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
    for (Eigen::Index i = 0; i < x.dim(); ++i) {
      if (is_zero(kernel(i, k))) continue;
      for (Eigen::Index j = 0; j < n; ++j) v(j) += kernel(i, k) * x.rows()(i, j);
    }
    out.insert(v);
  }
  return out;
}

}  // namespace momentlab
