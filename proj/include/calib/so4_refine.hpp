#pragma once

#include <array>
#include <vector>

#include "calib/g2.hpp"
#include "calib/linalg.hpp"
#include "calib/multivector.hpp"
#include "calib/sym_tensor.hpp"

namespace calib {

// Orthonormal frame split into an associative 3-plane A# = <f_1,f_2,f_3> and
// its coassociative complement C# = <f_4..f_7>. Only rational frames are
// representable; the standard frame is the identity.
class SplitFrame {
 public:
  static const SplitFrame& standard();
  // columns of g are the frame vectors expressed in the standard basis
  static SplitFrame from_matrix(const G2& g2, const Matrix& g);

  const Multivector& covector(int i) const { return cov_.at(i - 1); }  // f^i
  const Multivector& vector(int i) const { return cov_.at(i - 1); }    // f_i

 private:
  SplitFrame() = default;
  std::vector<Multivector> cov_;
};

template <class S>
struct Refine1Parts {
  MultivectorT<S> a_part, c_part;
};
template <class S>
struct Refine2Parts {
  MultivectorT<S> p7A, p7C, p14A, p14_13, p14_20;
};
template <class S>
struct Refine3Parts {
  MultivectorT<S> p1, p7A, p7C, p27_00, p27_04, p27_22, p27_13, p27_C;
};

// SO(4)-refined decompositions of Lambda^1, Lambda^2, Lambda^3 relative to a
// split frame, the explicit basis families, and the normalized isometries.
//
// Refined projectors are intersections of the G2 projectors with bidegree
// projectors, or images of the i-map on Sym^2 summands; the published basis
// elements are test vectors against them, never the source of truth.
class SO4Refine {
 public:
  SO4Refine(const G2& g2, const SplitFrame& frame);
  static const SO4Refine& standard();

  const G2& g2() const { return g2_; }
  const SplitFrame& frame() const { return frame_; }

  // basis families
  const std::array<Multivector, 3>& upsilon() const { return upsilon_; }
  const std::array<Multivector, 3>& omega() const { return omega_; }
  const std::array<Multivector, 3>& gamma_basis() const { return gamma_; }
  const std::array<Multivector, 8>& delta() const { return delta_; }
  const Multivector& phi_a() const { return phi_a_; }
  const Multivector& phi_c() const { return phi_c_; }
  const Multivector& phi00() const { return phi00_; }  // 6 phi_A - phi_C
  const std::array<Multivector, 5>& kappa() const { return kappa_; }
  const Multivector& lambda(int p, int q) const {
    return lambda_.at((p - 1) * 3 + (q - 1));
  }
  const std::array<Multivector, 8>& mu() const { return mu_; }
  const std::array<Multivector, 4>& nu() const { return nu_; }  // nu_4..nu_7
  const SymTensor& e0() const { return e0_; }

  // refined projectors (lex coordinates of the ambient form spaces)
  const Matrix& p2_7A() const { return p2_7A_; }
  const Matrix& p2_7C() const { return p2_7C_; }
  const Matrix& p2_14A() const { return p2_14A_; }
  const Matrix& p2_14_13() const { return p2_14_13_; }
  const Matrix& p2_14_20() const { return p2_14_20_; }
  const Matrix& p3_7A() const { return p3_7A_; }
  const Matrix& p3_7C() const { return p3_7C_; }
  const Matrix& p3_27_00() const { return p3_27_00_; }
  const Matrix& p3_27_04() const { return p3_27_04_; }
  const Matrix& p3_27_22() const { return p3_27_22_; }
  const Matrix& p3_27_13() const { return p3_27_13_; }
  const Matrix& p3_27_C() const { return p3_27_C_; }

  // auxiliary bidegree projectors
  const Matrix& p2_lambda2A() const { return p2_aa_; }
  const Matrix& p2_ac() const { return p2_ac_; }
  const Matrix& p2_plusC() const { return p2_cp_; }
  const Matrix& p2_minusC() const { return p2_cm_; }

  template <class S>
  Refine1Parts<S> refine1(const MultivectorT<S>& alpha) const {
    return {project(p1_a_, g2_.space(1), alpha),
            project(p1_c_, g2_.space(1), alpha)};
  }
  template <class S>
  Refine2Parts<S> refine2(const MultivectorT<S>& beta) const {
    const FormSpace& s = g2_.space(2);
    return {project(p2_7A_, s, beta), project(p2_7C_, s, beta),
            project(p2_14A_, s, beta), project(p2_14_13_, s, beta),
            project(p2_14_20_, s, beta)};
  }
  template <class S>
  Refine3Parts<S> refine3(const MultivectorT<S>& gamma) const {
    const FormSpace& s = g2_.space(3);
    return {project(g2_.p3_1(), s, gamma), project(p3_7A_, s, gamma),
            project(p3_7C_, s, gamma),     project(p3_27_00_, s, gamma),
            project(p3_27_04_, s, gamma),  project(p3_27_22_, s, gamma),
            project(p3_27_13_, s, gamma),  project(p3_27_C_, s, gamma)};
  }

  // maps of the refinement
  Multivector map_l(const Multivector& alpha) const;    // i_{a#} phi
  Multivector map_l_a(const Multivector& alpha) const;  // Lambda^2(A) part
  Multivector map_l_c(const Multivector& alpha) const;  // Lambda^2_+(C) part
  Multivector map_w(const Multivector& alpha) const;    // 2 L_A - L_C
  SymTensor map_s(const Multivector& beta) const;       // wedge -> sym product
  // *_A on the A-leg of A (x) C, sending f^p ^ f^alpha to (*_A f^p) ^ f^alpha
  Multivector star_a_tensor(const Multivector& beta) const;

  // isometries; inputs are checked to lie in the stated module
  RadicalVector<Rational> iso_natural(const Multivector& beta) const;
  RadicalVector<ParamExpr> iso_natural(const FormExpr& beta) const;
  RadicalScaled<Rational> iso_dagger(const Multivector& gamma) const;
  RadicalScaled<ParamExpr> iso_dagger(const FormExpr& gamma) const;
  RadicalVector<Rational> iso_ddagger(const Multivector& gamma) const;
  RadicalVector<ParamExpr> iso_ddagger(const FormExpr& gamma) const;

  // {X in g2 : X.A# <= A#}; dimension 6
  const std::vector<Matrix>& stabilizer() const { return stabilizer_; }

 private:
  template <class S>
  std::vector<ParamExpr> module_coords(const std::vector<Multivector>& basis,
                                       const MultivectorT<S>& w,
                                       const char* what) const;

  const G2& g2_;
  SplitFrame frame_;

  std::array<Multivector, 3> upsilon_, omega_, gamma_;
  std::array<Multivector, 8> delta_, mu_;
  std::array<Multivector, 5> kappa_;
  std::vector<Multivector> lambda_;
  std::array<Multivector, 4> nu_;
  Multivector phi_a_, phi_c_, phi00_;
  SymTensor e0_;

  Matrix p1_a_, p1_c_;
  Matrix p2_aa_, p2_ac_, p2_cc_, p2_cp_, p2_cm_;
  Matrix p2_7A_, p2_7C_, p2_14A_, p2_14_13_, p2_14_20_;
  Matrix p3_7A_, p3_7C_, p3_27_00_, p3_27_04_, p3_27_22_, p3_27_13_, p3_27_C_;
  std::vector<Matrix> stabilizer_;
};

}  // namespace calib
