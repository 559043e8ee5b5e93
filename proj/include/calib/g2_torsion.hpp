#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "calib/so4_refine.hpp"

namespace calib {

// The 49 refined torsion coefficients, in the normalization that makes the
// solved torsion matrix integral: tau1 carries 6A/6B, tau2 carries 12C/12D/
// 12E, tau3 carries 12F/6G/12J/12L/6M.
struct RefinedTorsionG2 {
  Rational tau0{0};
  std::array<Rational, 3> a{};  // A1..A3
  std::array<Rational, 4> b{};  // B4..B7
  std::array<Rational, 3> c{};  // C1..C3
  std::array<Rational, 8> d{};  // D1..D8
  std::array<Rational, 3> e{};  // E1..E3
  Rational f{0};
  std::array<Rational, 5> g{};               // G1..G5
  std::array<std::array<Rational, 3>, 3> j{};  // J11..J33
  std::array<Rational, 8> l{};               // L1..L8
  std::array<Rational, 4> m{};               // M4..M7

  // canonical atom order used by every matrix representation
  static const std::vector<std::string>& atom_names();
  std::map<std::string, Rational> values() const;
  static RefinedTorsionG2 from_values(const std::map<std::string, Rational>& v);

  bool tau1_is_zero() const;
  bool tau2_is_zero() const;
  bool tau3_is_zero() const;
  bool is_zero() const;
};

struct TorsionFormsExpr {
  ParamExpr tau0;
  FormExpr tau1, tau2, tau3;
};
struct TorsionForms {
  Rational tau0;
  Multivector tau1, tau2, tau3;
};

using TorsionMatrixG2 = std::array<std::array<ParamExpr, 7>, 7>;

struct MinimalityReportG2 {
  bool associative_minimal = false;
  bool coassociative_minimal = false;
  std::string torsion_class;  // e.g. "W1+W14", "0" when torsion-free
};

// First-structure-equation linear system relating the torsion functions T_ij
// to the refined torsion coefficients, solved exactly once with symbolic
// right-hand sides; everything numeric is substitution into that solution.
class G2Torsion {
 public:
  explicit G2Torsion(const SO4Refine& so4);
  static const G2Torsion& standard();

  const SO4Refine& so4() const { return so4_; }

  TorsionFormsExpr assemble_symbolic() const;
  TorsionForms assemble(const RefinedTorsionG2& rt) const;

  // the 56 x 49 system over the T unknowns (4-form rows then 5-form rows)
  const Matrix& system_matrix() const { return sys_matrix_; }
  const std::vector<ParamExpr>& system_rhs() const { return sys_rhs_; }
  int system_rank() const { return sys_rank_; }
  // the published condensed forms of both sides agree with the first-
  // principles expansion; recorded at construction
  bool condensed_lhs_matches() const { return condensed_ok_; }

  // solved T as linear expressions in the refined atoms; 1-based indices
  const ParamExpr& t_entry(int i, int j) const { return t_sol_[i - 1][j - 1]; }
  const TorsionMatrixG2& t_solution() const { return t_sol_; }

  std::array<std::array<Rational, 7>, 7> solve_T(const RefinedTorsionG2& rt) const;
  RefinedTorsionG2 invert_T(const std::array<std::array<Rational, 7>, 7>& t) const;

  TorsionFormsExpr tau_from_T(const TorsionMatrixG2& t) const;
  bool inverse_roundtrip_ok() const { return roundtrip_ok_; }

  // sum of the C-diagonal of the solved T equals diag_c() * (3F + tau0/24)
  const Rational& diag_c() const { return diag_c_; }
  ParamExpr obstruction_symbolic() const;  // 3F + tau0/24
  Rational coassoc_obstruction(const RefinedTorsionG2& rt) const;

  // H components against the frame covectors; index alpha-4 resp. p-1
  const std::array<ParamExpr, 4>& mean_curvature_assoc_symbolic() const {
    return h_assoc_;
  }
  const std::array<ParamExpr, 3>& mean_curvature_coassoc_symbolic() const {
    return h_coassoc_;
  }
  Multivector mean_curvature_associative(const RefinedTorsionG2& rt) const;
  Multivector mean_curvature_coassociative(const RefinedTorsionG2& rt) const;

  MinimalityReportG2 minimality_class(const RefinedTorsionG2& rt) const;

 private:
  const SO4Refine& so4_;
  TorsionFormsExpr tau_sym_;
  Matrix sys_matrix_;
  std::vector<ParamExpr> sys_rhs_;
  int sys_rank_ = 0;
  bool condensed_ok_ = false;
  bool roundtrip_ok_ = false;
  TorsionMatrixG2 t_sol_;
  Matrix rt_to_t_, t_to_rt_;  // the 49x49 linear bijection and its inverse
  Rational diag_c_{0};
  std::array<ParamExpr, 4> h_assoc_;
  std::array<ParamExpr, 3> h_coassoc_;
};

}  // namespace calib
