#pragma once

#include <stdexcept>
#include <vector>

#include "calib/rational.hpp"

namespace calib {

// Symmetric n x n tensor with exact entries, 1-based accessors.
template <class S>
class SymTensorT {
 public:
  SymTensorT() : dim_(7), entries_(49, S(0)) {}
  explicit SymTensorT(int dim) : dim_(dim), entries_(size_t(dim) * dim, S(0)) {
    if (dim != 7 && dim != 8) throw std::invalid_argument("dim must be 7 or 8");
  }

  int dim() const { return dim_; }

  const S& at(int i, int j) const { return entries_[pos(i, j)]; }
  void set(int i, int j, S v) {
    entries_[pos(i, j)] = v;
    entries_[pos(j, i)] = std::move(v);
  }
  void add(int i, int j, const S& v) {
    entries_[pos(i, j)] += v;
    if (i != j) entries_[pos(j, i)] += v;
  }

  S trace() const {
    S t(0);
    for (int i = 1; i <= dim_; ++i) t += at(i, i);
    return t;
  }
  bool is_zero() const {
    for (const auto& v : entries_)
      if (!calib::is_zero(v)) return false;
    return true;
  }

  SymTensorT& operator+=(const SymTensorT& o) {
    check(o);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  SymTensorT& operator-=(const SymTensorT& o) {
    check(o);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  SymTensorT& operator*=(const S& c) {
    for (auto& v : entries_) v = v * c;
    return *this;
  }
  friend SymTensorT operator+(SymTensorT a, const SymTensorT& b) { return a += b; }
  friend SymTensorT operator-(SymTensorT a, const SymTensorT& b) { return a -= b; }
  friend SymTensorT operator*(SymTensorT a, const S& c) { return a *= c; }
  bool operator==(const SymTensorT& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }

  // e^i o e^j, the symmetrized product (E_ij + E_ji)/2.
  static SymTensorT sym_product(int dim, int i, int j) {
    SymTensorT t(dim);
    if (i == j) {
      t.set(i, i, S(Rational(1)));
    } else {
      t.set(i, j, S(Rational(1, 2)));
    }
    return t;
  }

 private:
  size_t pos(int i, int j) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
      throw std::invalid_argument("sym tensor index");
    return size_t(i - 1) * dim_ + (j - 1);
  }
  void check(const SymTensorT& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("sym tensor dim mismatch");
  }

  int dim_;
  std::vector<S> entries_;
};

using SymTensor = SymTensorT<Rational>;
using SymTensorExpr = SymTensorT<ParamExpr>;

}  // namespace calib
