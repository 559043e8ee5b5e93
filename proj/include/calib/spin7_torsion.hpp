#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "calib/sph4_refine.hpp"

namespace calib {

// The 56 refined torsion coefficients of a Cayley splitting, normalized so
// the solved torsion matrix is integral: tau1 carries 32A/32B, tau3 carries
// 16C/16D on the rho families and 8E/8F/8X/8Y on the 12- and 8-dimensional
// families.
struct RefinedTorsionSpin7 {
  std::array<Rational, 4> a{};   // A1..A4
  std::array<Rational, 4> b{};   // B5..B8
  std::array<Rational, 4> c{};   // C1..C4
  std::array<Rational, 4> d{};   // D5..D8
  std::array<Rational, 12> e{};  // E1..E12
  std::array<Rational, 12> f{};  // F1..F12
  std::array<Rational, 8> x{};   // X1..X8
  std::array<Rational, 8> y{};   // Y1..Y8

  static const std::vector<std::string>& atom_names();
  std::map<std::string, Rational> values() const;
  static RefinedTorsionSpin7 from_values(
      const std::map<std::string, Rational>& v);
  bool is_zero() const;
};

struct TorsionFormsSpin7Expr {
  FormExpr tau1, tau3;
};
struct TorsionFormsSpin7 {
  Multivector tau1, tau3;
};

// 7 x 8, rows indexed by the spin(7)-complement coordinate a = 1..7
using TorsionMatrixSpin7 = std::array<std::array<ParamExpr, 8>, 7>;

struct MinimalityReportSpin7 {
  bool torsion_free = false;
  bool mean_curvature_zero = false;
  std::vector<std::string> nonzero_pieces;
};

class Spin7Torsion {
 public:
  explicit Spin7Torsion(const Sph4Refine& sph4);
  static const Spin7Torsion& standard();

  const Sph4Refine& sph4() const { return sph4_; }

  TorsionFormsSpin7Expr assemble_symbolic() const { return tau_sym_; }
  TorsionFormsSpin7 assemble(const RefinedTorsionSpin7& rt) const;

  const Matrix& system_matrix() const { return sys_matrix_; }
  int system_rank() const { return sys_rank_; }

  const ParamExpr& t_entry(int a, int i) const { return t_sol_[a - 1][i - 1]; }
  const TorsionMatrixSpin7& t_solution() const { return t_sol_; }

  std::array<std::array<Rational, 8>, 7> solve_T(
      const RefinedTorsionSpin7& rt) const;
  RefinedTorsionSpin7 invert_T(
      const std::array<std::array<Rational, 8>, 7>& t) const;

  const std::array<ParamExpr, 4>& mean_curvature_symbolic() const {
    return h_cayley_;
  }
  Multivector mean_curvature_cayley(const RefinedTorsionSpin7& rt) const;
  MinimalityReportSpin7 cayley_minimality(const RefinedTorsionSpin7& rt) const;

 private:
  const Sph4Refine& sph4_;
  TorsionFormsSpin7Expr tau_sym_;
  Matrix sys_matrix_;
  int sys_rank_ = 0;
  TorsionMatrixSpin7 t_sol_;
  Matrix rt_to_t_, t_to_rt_;
  std::array<ParamExpr, 4> h_cayley_;  // components on f_5..f_8
};

}  // namespace calib
