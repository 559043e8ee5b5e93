#pragma once

#include <array>
#include <vector>

#include "calib/spin7.hpp"

namespace calib {

// Orthonormal frame split into a Cayley 4-plane K# = <f_1..f_4> and its
// orthogonal complement L# = <f_5..f_8>.
class CayleyFrame {
 public:
  static const CayleyFrame& standard();
  static CayleyFrame from_matrix(const Spin7& sp, const Matrix& g);

  const Multivector& covector(int i) const { return cov_.at(i - 1); }
  const Multivector& vector(int i) const { return cov_.at(i - 1); }

 private:
  CayleyFrame() = default;
  std::vector<Multivector> cov_;
};

template <class S>
struct Refine3PartsSpin7 {
  MultivectorT<S> p8K, p8L;               // the two Lambda^3_8 pieces
  MultivectorT<S> p48K, p48L;             // (1,1,0) and (0,1,1) in Lambda^3_48
  MultivectorT<S> p031, p211, p130, p112; // the four large Lambda^3_48 pieces
};

// Spin^h(4)-refined decompositions relative to a Cayley splitting, with the
// six Lambda^3_48 projectors built as joint eigenspaces of the Casimir
// operators of the three commuting su(2) stabilizer factors.
class Sph4Refine {
 public:
  Sph4Refine(const Spin7& sp, const CayleyFrame& frame);
  static const Sph4Refine& standard();

  const Spin7& spin7() const { return sp_; }
  const CayleyFrame& frame() const { return frame_; }

  // 2-form families
  const std::array<Multivector, 3>& theta() const { return theta_; }
  const std::array<Multivector, 3>& gamma2() const { return gamma_; }
  const std::array<Multivector, 3>& omega() const { return omega_; }
  const std::array<Multivector, 3>& upsilon() const { return upsilon_; }
  // 3-form families
  const std::array<Multivector, 8>& upsilon3() const { return ups3_; }  // i_e Phi
  const std::array<Multivector, 8>& rho() const { return rho_; }
  const std::array<Multivector, 12>& mu() const { return mu_; }
  const std::array<Multivector, 12>& nu() const { return nu_; }
  const std::array<Multivector, 8>& lambda3() const { return lambda_; }
  const std::array<Multivector, 8>& kappa() const { return kappa_; }

  // refined Lambda^2 projectors
  const Matrix& p2_7_020() const { return p2_7_020_; }
  const Matrix& p2_7_101() const { return p2_7_101_; }
  const Matrix& p2_21_200() const { return p2_21_200_; }
  const Matrix& p2_21_020() const { return p2_21_020_; }
  const Matrix& p2_21_002() const { return p2_21_002_; }
  const Matrix& p2_21_121() const { return p2_21_121_; }

  // refined Lambda^3 projectors
  const Matrix& p3_8K() const { return p3_8K_; }
  const Matrix& p3_8L() const { return p3_8L_; }
  const Matrix& p3_48K() const { return p3_48K_; }
  const Matrix& p3_48L() const { return p3_48L_; }
  const Matrix& p3_48_031() const { return p3_48_031_; }
  const Matrix& p3_48_211() const { return p3_48_211_; }
  const Matrix& p3_48_130() const { return p3_48_130_; }
  const Matrix& p3_48_112() const { return p3_48_112_; }

  template <class S>
  Refine3PartsSpin7<S> refine3(const MultivectorT<S>& gamma) const {
    const FormSpace& s = sp_.space(3);
    return {project(p3_8K_, s, gamma),     project(p3_8L_, s, gamma),
            project(p3_48K_, s, gamma),    project(p3_48L_, s, gamma),
            project(p3_48_031_, s, gamma), project(p3_48_211_, s, gamma),
            project(p3_48_130_, s, gamma), project(p3_48_112_, s, gamma)};
  }

  RadicalVector<Rational> iso_dagger(const Multivector& gamma) const;
  RadicalVector<ParamExpr> iso_dagger(const FormExpr& gamma) const;

  // {X in spin(7) : X.K# <= K#}, dimension 9, and its three su(2) factors
  const std::vector<Matrix>& stabilizer() const { return stabilizer_; }
  const std::array<std::vector<Matrix>, 3>& su2_factors() const {
    return factors_;
  }

  // dim V_{p,q,r} = (p+1)(q+1)(r+1); p+q+r must be even
  static int rep_dim(int p, int q, int r);

  // Exact decomposition of Sym^2(K) (x) L under the stabilizer, as a list of
  // (p,q,r,dim) tuples; the published list for this carrier is wrong by a
  // spurious summand (see the errata registry).
  std::vector<std::array<int, 4>> sym2k_l_decomposition() const;

 private:
  std::vector<ParamExpr> rho_l_coords(const std::vector<FormExpr>& w) const;

  const Spin7& sp_;
  CayleyFrame frame_;

  std::array<Multivector, 3> theta_, gamma_, omega_, upsilon_;
  std::array<Multivector, 8> ups3_, rho_, lambda_, kappa_;
  std::array<Multivector, 12> mu_, nu_;

  Matrix p2_7_020_, p2_7_101_, p2_21_200_, p2_21_020_, p2_21_002_, p2_21_121_;
  Matrix p3_8K_, p3_8L_, p3_48K_, p3_48L_, p3_48_031_, p3_48_211_, p3_48_130_,
      p3_48_112_;

  std::vector<Matrix> stabilizer_;
  std::array<std::vector<Matrix>, 3> factors_;
  std::array<Rational, 3> casimir_unit_;  // Casimir eigenvalue on the spin-1/2
  std::array<Matrix, 3> casimir3_;        // Casimir action on Lambda^3

  Matrix casimir_on(const FormSpace& space, int factor) const;
  Rational casimir_eigenvalue(int factor, int p) const;
  friend class Spin7Torsion;
};

}  // namespace calib
