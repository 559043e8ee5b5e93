#pragma once

#include <array>
#include <memory>
#include <vector>

#include "calib/linalg.hpp"
#include "calib/multivector.hpp"
#include "calib/sym_tensor.hpp"

namespace calib {

// so(n) basis E_ab - E_ba for a < b, lex ordered; shared by both structures.
std::vector<std::pair<int, int>> so_basis_pairs(int n);
Matrix antisym_unit(int n, int a, int b);

// Derivation action of X in so(n) on forms, extending X.e^i = -X_ji e^j.
template <class S>
MultivectorT<S> lie_act(const Matrix& x, const MultivectorT<S>& w) {
  int n = w.dim();
  MultivectorT<S> out(n, w.grade());
  for (const auto& [idx, v] : w.terms()) {
    for (size_t slot = 0; slot < idx.size(); ++slot) {
      for (int j = 1; j <= n; ++j) {
        const Rational& c = x(j - 1, idx[slot] - 1);  // -X_ji
        if (is_zero(c)) continue;
        MultiIndex next = idx;
        next[slot] = j;
        out.add(std::move(next), v * (-c));
      }
    }
  }
  return out;
}

Matrix lie_action_matrix(const Matrix& x, const FormSpace& space);

template <class S>
std::vector<S> apply_rational(const Matrix& m, const std::vector<S>& x) {
  std::vector<S> out(m.rows(), S(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& a = m(i, j);
      if (!is_zero(a) && !calib::is_zero(x[j])) out[i] += x[j] * a;
    }
  return out;
}

template <class S>
MultivectorT<S> project(const Matrix& projector, const FormSpace& space,
                        const MultivectorT<S>& w) {
  return space.from_coords(apply_rational(projector, space.coords(w)));
}

template <class S>
struct Lambda2PartsG2 {
  MultivectorT<S> part7, part14;
};
template <class S>
struct Lambda3PartsG2 {
  MultivectorT<S> part1, part7, part27;
};

// The G2 structure constants on R^7: the associative 3-form, its dual, the
// epsilon tables read off them, the module projectors for Lambda^2/Lambda^3,
// and the annihilating Lie subalgebra of so(7).
//
// Projectors are derived from their defining eigenvalue/wedge conditions, not
// transcribed, so printed descriptions stay checkable against them.
class G2 {
 public:
  static const G2& standard();
  static G2 from_phi(const Multivector& phi);  // no validation; for fault tests

  const Multivector& phi() const { return phi_; }
  const Multivector& star_phi() const { return star_phi_; }
  const Multivector& vol() const { return vol_; }

  int epsilon3(int i, int j, int k) const;
  int epsilon4(int i, int j, int k, int l) const;

  const FormSpace& space(int grade) const { return *spaces_[grade]; }

  const Matrix& p2_7() const { return p2_7_; }
  const Matrix& p2_14() const { return p2_14_; }
  const Matrix& p3_1() const { return p3_1_; }
  const Matrix& p3_7() const { return p3_7_; }
  const Matrix& p3_27() const { return p3_27_; }

  template <class S>
  Lambda2PartsG2<S> project_lambda2(const MultivectorT<S>& beta) const {
    return {project(p2_7_, space(2), beta), project(p2_14_, space(2), beta)};
  }
  template <class S>
  Lambda3PartsG2<S> project_lambda3(const MultivectorT<S>& gamma) const {
    return {project(p3_1_, space(3), gamma), project(p3_7_, space(3), gamma),
            project(p3_27_, space(3), gamma)};
  }

  // i(h) = eps_ikl h_ij e^{jkl}; requires trace(h) = 0.
  Multivector map_i(const SymTensor& h) const;
  FormExpr map_i(const SymTensorExpr& h) const;
  // j(gamma)(v,w) = *(i_v phi ^ i_w phi ^ gamma); requires gamma in Lambda^3_27.
  SymTensor map_j(const Multivector& gamma) const;

  // cross(u,v) = sharp(i_v i_u phi)
  Multivector cross(const Multivector& u, const Multivector& v) const;

  bool is_associative(const std::vector<Multivector>& span3) const;
  bool is_coassociative(const std::vector<Multivector>& span4) const;

  // Basis of {X in so(7) : X.phi = 0}; dimension 14 for the standard form.
  const std::vector<Matrix>& lie_basis() const { return lie_basis_; }

  // The embedding v -> (eps_ijk v_k) of R^7 into so(7), complementary to the
  // Lie algebra under the trace pairing.
  Matrix gamma_embedding(const std::vector<Rational>& v) const;

 private:
  explicit G2(const Multivector& phi);

  Multivector phi_, star_phi_, vol_;
  std::array<std::array<std::array<int, 8>, 8>, 8> eps3_{};
  std::array<std::array<std::array<std::array<int, 8>, 8>, 8>, 8> eps4_{};
  std::vector<std::unique_ptr<FormSpace>> spaces_;
  Matrix p2_7_, p2_14_, p3_1_, p3_7_, p3_27_;
  std::vector<Matrix> lie_basis_;
};

}  // namespace calib
