#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "calib/param_expr.hpp"
#include "calib/rational.hpp"

namespace calib {

// Strictly increasing sequence of indices in 1..dim. Indices are 1-based
// everywhere, matching the e^1..e^n conventions of the domain.
using MultiIndex = std::vector<int>;

inline void check_multi_index(const MultiIndex& idx, int dim) {
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > dim)
      throw std::invalid_argument("index out of range 1.." +
                                  std::to_string(dim));
    if (i > 0 && idx[i] <= idx[i - 1])
      throw std::invalid_argument("multi-index not strictly increasing");
  }
}

// Sorts `idx` ascending; returns the permutation sign, or 0 on a repeat.
inline int sort_sign(MultiIndex& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

// Graded alternating tensor over R^7 or R^8 with exact coefficients.
// S is Rational for numeric work or ParamExpr for symbolic work.
template <class S>
class MultivectorT {
 public:
  MultivectorT() : dim_(7), grade_(0) {}
  MultivectorT(int dim, int grade) : dim_(dim), grade_(grade) {
    if (dim != 7 && dim != 8) throw std::invalid_argument("dim must be 7 or 8");
    if (grade < 0 || grade > dim) throw std::invalid_argument("bad grade");
  }

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const std::map<MultiIndex, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * e^{idx}; idx may be unsorted, repeats annihilate.
  void add(MultiIndex idx, S c) {
    if (calib::is_zero(c)) return;
    int sign = sort_sign(idx);
    if (sign == 0) return;
    if ((int)idx.size() != grade_)
      throw std::invalid_argument("term grade mismatch");
    check_multi_index(idx, dim_);
    if (sign < 0) c = c * Rational(-1);
    auto [it, inserted] = terms_.try_emplace(std::move(idx), c);
    if (!inserted) {
      it->second += c;
      if (calib::is_zero(it->second)) terms_.erase(it);
    }
  }

  S coeff(MultiIndex idx) const {
    int sign = sort_sign(idx);
    if (sign == 0) return S(0);
    auto it = terms_.find(idx);
    if (it == terms_.end()) return S(0);
    return sign < 0 ? it->second * Rational(-1) : it->second;
  }

  MultivectorT& operator+=(const MultivectorT& o) {
    require_same_shape(o);
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  MultivectorT& operator-=(const MultivectorT& o) {
    require_same_shape(o);
    for (const auto& [k, v] : o.terms_) add(k, v * Rational(-1));
    return *this;
  }
  MultivectorT& operator*=(const S& c) {
    if (calib::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v = v * c;
    return *this;
  }
  friend MultivectorT operator+(MultivectorT a, const MultivectorT& b) {
    return a += b;
  }
  friend MultivectorT operator-(MultivectorT a, const MultivectorT& b) {
    return a -= b;
  }
  friend MultivectorT operator*(MultivectorT a, const S& c) { return a *= c; }
  friend MultivectorT operator*(const S& c, MultivectorT a) { return a *= c; }
  friend MultivectorT operator-(MultivectorT a) {
    return a *= S(Rational(-1));
  }

  bool operator==(const MultivectorT& o) const {
    return dim_ == o.dim_ && grade_ == o.grade_ && terms_ == o.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : terms_) {
      if (!out.empty()) out += " + ";
      std::string cs;
      if constexpr (std::is_same_v<S, Rational>)
        cs = to_string(v);
      else
        cs = "(" + v.str() + ")";
      out += cs;
      if (!k.empty()) {
        out += "*e";
        for (int i : k) out += std::to_string(i);
      }
    }
    return out;
  }

 private:
  void require_same_shape(const MultivectorT& o) const {
    if (dim_ != o.dim_ || grade_ != o.grade_)
      throw std::invalid_argument("dim/grade mismatch");
  }

  int dim_;
  int grade_;
  std::map<MultiIndex, S> terms_;  // no zero coefficients stored
};

using Multivector = MultivectorT<Rational>;
using FormExpr = MultivectorT<ParamExpr>;

template <class S>
MultivectorT<S> basis_form(int dim, MultiIndex idx, S c = S(Rational(1))) {
  MultivectorT<S> out(dim, (int)idx.size());
  out.add(std::move(idx), std::move(c));
  return out;
}

inline Multivector basis_e(int dim, std::initializer_list<int> idx) {
  return basis_form<Rational>(dim, MultiIndex(idx));
}

template <class S>
MultivectorT<S> promote(const Multivector& a) {
  MultivectorT<S> out(a.dim(), a.grade());
  for (const auto& [k, v] : a.terms()) out.add(k, S(v));
  return out;
}

// Exterior product with the sign coming from index sorting.
template <class S>
MultivectorT<S> wedge(const MultivectorT<S>& a, const MultivectorT<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dim mismatch");
  if (a.grade() + b.grade() > a.dim())
    throw std::invalid_argument("wedge: grade overflow");
  MultivectorT<S> out(a.dim(), a.grade() + b.grade());
  for (const auto& [ia, va] : a.terms()) {
    for (const auto& [ib, vb] : b.terms()) {
      MultiIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(std::move(idx), va * vb);
    }
  }
  return out;
}

inline FormExpr wedge(const FormExpr& a, const Multivector& b) {
  return wedge(a, promote<ParamExpr>(b));
}
inline FormExpr wedge(const Multivector& a, const FormExpr& b) {
  return wedge(promote<ParamExpr>(a), b);
}

// Hodge dual for the orientation vol = e^{1..n}: *(e^I) = sign * e^{I^c} with
// e^I ^ *(e^I) = vol.
template <class S>
MultivectorT<S> hodge(const MultivectorT<S>& a) {
  MultivectorT<S> out(a.dim(), a.dim() - a.grade());
  for (const auto& [idx, v] : a.terms()) {
    MultiIndex comp;
    comp.reserve(a.dim() - idx.size());
    size_t p = 0;
    for (int i = 1; i <= a.dim(); ++i) {
      if (p < idx.size() && idx[p] == i)
        ++p;
      else
        comp.push_back(i);
    }
    MultiIndex full = idx;
    full.insert(full.end(), comp.begin(), comp.end());
    int sign = sort_sign(full);
    out.add(std::move(comp), sign < 0 ? v * Rational(-1) : v);
  }
  return out;
}

// Interior product (contraction in the first slot) with a vector X = X_i e_i,
// X given as a grade-1 multivector.
template <class S, class SX>
MultivectorT<S> interior(const MultivectorT<SX>& x, const MultivectorT<S>& a) {
  if (x.dim() != a.dim()) throw std::invalid_argument("interior: dim mismatch");
  if (x.grade() != 1) throw std::invalid_argument("interior: X must be grade 1");
  if (a.grade() < 1) throw std::invalid_argument("interior: grade-0 input");
  MultivectorT<S> out(a.dim(), a.grade() - 1);
  for (const auto& [xi, xv] : x.terms()) {
    int i = xi[0];
    for (const auto& [idx, v] : a.terms()) {
      for (size_t pos = 0; pos < idx.size(); ++pos) {
        if (idx[pos] != i) continue;
        MultiIndex rest;
        rest.reserve(idx.size() - 1);
        for (size_t q = 0; q < idx.size(); ++q)
          if (q != pos) rest.push_back(idx[q]);
        S c = v * xv;
        if (pos % 2 == 1) c = c * Rational(-1);
        out.add(std::move(rest), std::move(c));
        break;
      }
    }
  }
  return out;
}

// Inner product: bilinear extension of <e^I, e^J> = delta_IJ.
template <class S>
S inner(const MultivectorT<S>& a, const MultivectorT<S>& b) {
  if (a.dim() != b.dim() || a.grade() != b.grade())
    throw std::invalid_argument("inner: dim/grade mismatch");
  S out(0);
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& big = a.terms().size() <= b.terms().size() ? b : a;
  for (const auto& [k, v] : small.terms()) {
    auto it = big.terms().find(k);
    if (it != big.terms().end()) out += v * it->second;
  }
  return out;
}

template <class S>
S norm_sq(const MultivectorT<S>& a) {
  return inner(a, a);
}

// Musical isomorphisms. In the orthonormal frame they are the coordinate
// identity between grade-1 forms and vectors, so both directions share a
// representation; they are kept as named maps for call-site clarity.
template <class S>
MultivectorT<S> sharp(const MultivectorT<S>& alpha) {
  if (alpha.grade() != 1) throw std::invalid_argument("sharp: grade-1 only");
  return alpha;
}
template <class S>
MultivectorT<S> flat(const MultivectorT<S>& x) {
  if (x.grade() != 1) throw std::invalid_argument("flat: grade-1 only");
  return x;
}

// Pullback A^*(omega) under the linear map with matrix A (A^*e^i = A_ij e^j),
// extended multiplicatively over wedge products.
template <class S>
MultivectorT<S> pullback(const std::vector<std::vector<Rational>>& A,
                         const MultivectorT<S>& a) {
  int n = a.dim();
  MultivectorT<S> out(n, a.grade());
  for (const auto& [idx, v] : a.terms()) {
    // expand A^*e^{i1} ^ ... ^ A^*e^{ik}
    std::vector<MultivectorT<S>> rows;
    MultivectorT<S> acc(n, 0);
    acc.add({}, S(Rational(1)));
    for (int i : idx) {
      MultivectorT<S> row(n, 1);
      for (int j = 1; j <= n; ++j)
        if (!calib::is_zero(A[i - 1][j - 1]))
          row.add({j}, S(A[i - 1][j - 1]));
      acc = wedge(acc, row);
    }
    acc *= v;
    out += acc;
  }
  return out;
}

// sqrt(root) * value, for the outputs of the normalized isometries. The
// radical is carried symbolically; it only ever cancels against another
// radical, never becomes a float.
template <class S>
struct RadicalScaled {
  long root = 1;
  S value;
};

template <class S>
struct RadicalVector {
  long root = 1;
  MultivectorT<S> vec;
};

template <class S>
RadicalVector<S> scale(const RadicalVector<S>& v, const Radical& c) {
  Radical merged = Radical(c.rat, c.root) * Radical(1, v.root);
  RadicalVector<S> out;
  out.root = merged.root;
  out.vec = v.vec;
  out.vec *= S(merged.rat);
  return out;
}

template <class S>
RadicalScaled<S> scale(const RadicalScaled<S>& v, const Radical& c) {
  Radical merged = Radical(c.rat, c.root) * Radical(1, v.root);
  return {merged.root, v.value * merged.rat};
}

// Lexicographically ordered basis of Lambda^k((R^dim)^*); fixes coordinates
// for every matrix representation of an operator on forms.
class FormSpace {
 public:
  FormSpace(int dim, int grade) : dim_(dim), grade_(grade) {
    MultiIndex cur(grade);
    build(cur, 0, 1);
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  }

  int dim() const { return (int)basis_.size(); }
  int ambient_dim() const { return dim_; }
  int grade() const { return grade_; }
  const MultiIndex& index_at(int i) const { return basis_[i]; }
  int position(const MultiIndex& idx) const { return index_.at(idx); }

  template <class S>
  std::vector<S> coords(const MultivectorT<S>& a) const {
    if (a.dim() != dim_ || a.grade() != grade_)
      throw std::invalid_argument("coords: wrong space");
    std::vector<S> out(basis_.size(), S(0));
    for (const auto& [k, v] : a.terms()) out[index_.at(k)] = v;
    return out;
  }

  template <class S>
  MultivectorT<S> from_coords(const std::vector<S>& c) const {
    if ((int)c.size() != dim()) throw std::invalid_argument("coords size");
    MultivectorT<S> out(dim_, grade_);
    for (size_t i = 0; i < c.size(); ++i)
      if (!calib::is_zero(c[i])) out.add(basis_[i], c[i]);
    return out;
  }

 private:
  void build(MultiIndex& cur, int depth, int start) {
    if (depth == grade_) {
      basis_.push_back(cur);
      return;
    }
    for (int i = start; i <= dim_ - (grade_ - depth - 1); ++i) {
      cur[depth] = i;
      build(cur, depth + 1, i + 1);
    }
  }

  int dim_;
  int grade_;
  std::vector<MultiIndex> basis_;
  std::map<MultiIndex, size_t> index_;
};

}  // namespace calib
