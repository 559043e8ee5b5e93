#pragma once

#include <array>
#include <memory>
#include <vector>

#include "calib/g2.hpp"
#include "calib/linalg.hpp"
#include "calib/multivector.hpp"

namespace calib {

template <class S>
struct Lambda2PartsSpin7 {
  MultivectorT<S> part7, part21;
};
template <class S>
struct Lambda3PartsSpin7 {
  MultivectorT<S> part8, part48;
};

// The Spin(7) structure constants on R^8: the Cayley 4-form, its coefficient
// table, the Lambda^2/Lambda^3 module projectors, the annihilating Lie
// subalgebra of so(8), and the complementary R^7 embedding.
class Spin7 {
 public:
  static const Spin7& standard();
  static Spin7 from_form(const Multivector& big_phi);  // unvalidated

  const Multivector& form() const { return phi_; }  // Phi_0
  const Multivector& vol() const { return vol_; }
  int coefficient(int i, int j, int k, int l) const;  // Phi_ijkl

  const FormSpace& space(int grade) const { return *spaces_[grade]; }

  const Matrix& p2_7() const { return p2_7_; }
  const Matrix& p2_21() const { return p2_21_; }
  const Matrix& p3_8() const { return p3_8_; }
  const Matrix& p3_48() const { return p3_48_; }

  template <class S>
  Lambda2PartsSpin7<S> project_lambda2(const MultivectorT<S>& beta) const {
    return {project(p2_7_, space(2), beta), project(p2_21_, space(2), beta)};
  }
  template <class S>
  Lambda3PartsSpin7<S> project_lambda3(const MultivectorT<S>& gamma) const {
    return {project(p3_8_, space(3), gamma), project(p3_48_, space(3), gamma)};
  }

  bool is_cayley(const std::vector<Multivector>& span4) const;

  // {X in so(8) : X.Phi = 0}; dimension 21 for the standard form.
  const std::vector<Matrix>& lie_basis() const { return lie_basis_; }

  // The complementary embedding (gamma_1..gamma_7) -> so(8).
  Matrix gamma_embedding(const std::vector<Rational>& v) const;

 private:
  explicit Spin7(const Multivector& big_phi);

  Multivector phi_, vol_;
  std::vector<std::unique_ptr<FormSpace>> spaces_;
  Matrix p2_7_, p2_21_, p3_8_, p3_48_;
  std::vector<Matrix> lie_basis_;
};

}  // namespace calib
