#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "calib/multivector.hpp"
#include "calib/param_expr.hpp"
#include "calib/rational.hpp"

namespace calib {

// Dense exact matrix. Row-major.
template <class S>
class MatrixT {
 public:
  MatrixT() : rows_(0), cols_(0) {}
  MatrixT(int r, int c) : rows_(r), cols_(c), data_(size_t(r) * c, S(0)) {}

  static MatrixT identity(int n) {
    MatrixT m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(Rational(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const S& operator()(int r, int c) const {
    return data_[size_t(r) * cols_ + c];
  }

  bool operator==(const MatrixT& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_zero() const {
    for (const auto& v : data_)
      if (!calib::is_zero(v)) return false;
    return true;
  }

  MatrixT transpose() const {
    MatrixT t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  MatrixT operator*(const MatrixT& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul shape");
    MatrixT out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& a = (*this)(i, k);
        if (calib::is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const S& b = o(k, j);
          if (calib::is_zero(b)) continue;
          out(i, j) += a * b;
        }
      }
    return out;
  }
  MatrixT operator+(const MatrixT& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matadd shape");
    MatrixT out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }
  MatrixT operator-(const MatrixT& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matsub shape");
    MatrixT out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }
  MatrixT operator*(const S& c) const {
    MatrixT out = *this;
    for (auto& v : out.data_) v = v * c;
    return out;
  }

  std::vector<S> apply(const std::vector<S>& x) const {
    if ((int)x.size() != cols_) throw std::invalid_argument("apply shape");
    std::vector<S> out(rows_, S(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const S& a = (*this)(i, j);
        if (!calib::is_zero(a) && !calib::is_zero(x[j])) out[i] += a * x[j];
      }
    return out;
  }

  MatrixT columns(const std::vector<int>& idx) const {
    MatrixT out(rows_, (int)idx.size());
    for (int i = 0; i < rows_; ++i)
      for (size_t j = 0; j < idx.size(); ++j) out(i, (int)j) = (*this)(i, idx[j]);
    return out;
  }

  void append_column(const std::vector<S>& col) {
    if (rows_ == 0 && cols_ == 0) rows_ = (int)col.size();
    if ((int)col.size() != rows_) throw std::invalid_argument("column size");
    std::vector<S> next(size_t(rows_) * (cols_ + 1), S(0));
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) next[size_t(i) * (cols_ + 1) + j] = (*this)(i, j);
      next[size_t(i) * (cols_ + 1) + cols_] = col[i];
    }
    data_ = std::move(next);
    ++cols_;
  }

  std::vector<S> column(int j) const {
    std::vector<S> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<S> data_;
};

using Matrix = MatrixT<Rational>;

// Reduced row echelon form in place; returns pivot column list.
inline std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(Matrix m) { return (int)rref(m).size(); }

// Basis of {x : Mx = 0}, returned as columns.
inline Matrix nullspace(Matrix m) {
  int n = m.cols();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  Matrix out(n, n - (int)pivots.size());
  int col = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    out(f, col) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) out(pivots[r], col) = -m((int)r, f);
    ++col;
  }
  return out;
}

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> pivots = rref(aug);
  int lead = 0;
  for (int p : pivots)
    if (p < n) ++lead;
  if (lead != n) throw std::domain_error("inverse: singular matrix");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// Exact solve of A x = b where b has symbolic right-hand sides. Inconsistency
// is a reported outcome: a dropped row whose ParamExpr rhs is not identically
// zero lands in `residuals` and clears `consistent`.
struct SolveResult {
  bool consistent = true;
  int rank = 0;
  std::vector<ParamExpr> particular;    // one solution, free vars set to 0
  Matrix nullspace_basis;               // columns span the homogeneous space
  std::vector<ParamExpr> residuals;     // nonzero rhs of zero rows
};

inline SolveResult solve_exact(const Matrix& a, std::vector<ParamExpr> b) {
  if ((int)b.size() != a.rows()) throw std::invalid_argument("solve shape");
  Matrix m = a;
  // forward elimination, mirroring row operations on b
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
      std::swap(b[r], b[piv]);
    }
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    b[r] *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      b[i] -= b[r] * f;
    }
    pivots.push_back(c);
    ++r;
  }
  SolveResult out;
  out.rank = (int)pivots.size();
  for (int i = out.rank; i < m.rows(); ++i)
    if (!b[i].is_zero()) {
      out.consistent = false;
      out.residuals.push_back(b[i]);
    }
  out.particular.assign(a.cols(), ParamExpr());
  if (out.consistent)
    for (size_t k = 0; k < pivots.size(); ++k) out.particular[pivots[k]] = b[k];
  out.nullspace_basis = nullspace(a);
  return out;
}

// Column span utilities -------------------------------------------------

// Orthogonal projector onto the column span of B, with respect to the
// standard coordinate inner product: P = B (B^T B)^{-1} B^T.
inline Matrix span_projector(const Matrix& basis) {
  if (basis.cols() == 0) return Matrix(basis.rows(), basis.rows());
  Matrix bt = basis.transpose();
  Matrix gram = bt * basis;
  return basis * inverse(gram) * bt;
}

// Independent columns of m (first spanning subset in order).
inline Matrix column_basis(const Matrix& m) {
  Matrix t = m;
  // pivot columns of the rref of m give an independent spanning subset
  std::vector<int> pivots = rref(t);
  return m.columns(pivots);
}

// {x : x in span(P1) and x in span(P2)} for orthogonal projectors P1, P2:
// the nullspace of (2I - P1 - P2).
inline Matrix projector_intersection(const Matrix& p1, const Matrix& p2) {
  Matrix m = Matrix::identity(p1.rows()) * Rational(2) - p1 - p2;
  return nullspace(m);
}

// Eigenspace {x : Mx = lambda x}.
inline Matrix eigenspace(const Matrix& m, const Rational& lambda) {
  return nullspace(m - Matrix::identity(m.rows()) * lambda);
}

// Matrix of a linear operator on a form space, columns = images of basis.
template <class Fn>
Matrix operator_matrix(const FormSpace& dom, const FormSpace& cod, Fn&& f) {
  Matrix out(cod.dim(), dom.dim());
  for (int j = 0; j < dom.dim(); ++j) {
    Multivector img = f(basis_form<Rational>(dom.ambient_dim(), dom.index_at(j)));
    auto coords = cod.coords(img);
    for (int i = 0; i < cod.dim(); ++i) out(i, j) = coords[i];
  }
  return out;
}

// Columns of `basis` as multivectors.
inline std::vector<Multivector> span_forms(const FormSpace& space,
                                           const Matrix& basis) {
  std::vector<Multivector> out;
  out.reserve(basis.cols());
  for (int j = 0; j < basis.cols(); ++j)
    out.push_back(space.from_coords(basis.column(j)));
  return out;
}

}  // namespace calib
