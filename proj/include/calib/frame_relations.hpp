#pragma once

#include <array>
#include <string>
#include <vector>

#include "calib/g2_torsion.hpp"
#include "calib/spin7_torsion.hpp"

namespace calib {

enum class Family { Assoc, Coassoc, Cayley };

std::string family_name(Family f);

// The connection and torsion 1-form blocks of an adapted frame, as published:
// theta over the atoms z* (zeta), x* (xi), c* (chi, Cayley only), s* (sigma);
// gamma over g1..g7. Entries are ParamExpr-valued matrix slots.
struct ConnectionBlocks {
  int n = 0;
  std::vector<std::vector<ParamExpr>> theta, gamma;
};
const ConnectionBlocks& g2_connection_blocks();
const ConnectionBlocks& spin7_connection_blocks();

// Derives the semibasic linear relations of one adapted-frame family from
// the structure equation, reduces the published mean-curvature integrand
// modulo them, and substitutes the solved torsion functions. Everything is
// re-derived; the published relation displays are test data diffed in the
// verification suite.
class FrameRelations {
 public:
  explicit FrameRelations(Family family);
  static const FrameRelations& assoc();
  static const FrameRelations& coassoc();
  static const FrameRelations& cayley();

  Family family() const { return family_; }
  // homogeneous relations among the S and T atoms; each entry reads "= 0"
  const std::vector<ParamExpr>& relations() const { return relations_; }
  const std::vector<std::string>& s_atoms() const { return s_atoms_; }
  const std::vector<std::string>& t_atoms() const { return t_atoms_; }
  // dimension of the subspace of relations involving only S atoms
  int pure_s_dimension() const { return pure_s_dim_; }

  // true iff the expression is a linear consequence of the relations
  bool is_consequence(const ParamExpr& e) const;
  // normal form of e modulo the relations (S atoms eliminated first)
  ParamExpr reduce(const ParamExpr& e) const;

  // H components in the raw S/T atoms (before reduction)
  const std::vector<ParamExpr>& h_raw() const { return h_raw_; }
  // H after eliminating S via the relations; contains only T atoms
  const std::vector<ParamExpr>& h_reduced() const { return h_reduced_; }
  // H after substituting the solved torsion functions; refined atoms only
  const std::vector<ParamExpr>& h_refined() const { return h_refined_; }
  int reduction_steps() const { return reduction_steps_; }

  // combinations of the relations containing no S atoms (pure T constraints)
  const std::vector<ParamExpr>& s_free_consequences() const {
    return s_free_;
  }
  // Coassoc only: the S-free constraint after substituting the solved
  // torsion, a multiple of 3F + tau0/24.
  const ParamExpr& obstruction_constraint() const { return obstruction_; }

  // block validation performed at construction
  bool gamma_matches_embedding() const { return gamma_ok_; }
  bool theta_annihilates_form() const { return theta_ok_; }

 private:
  void derive(const ConnectionBlocks& blocks);

  Family family_;
  std::vector<ParamExpr> relations_;
  std::vector<std::string> s_atoms_, t_atoms_;
  int pure_s_dim_ = 0;
  // rref of the relation matrix (S atoms ordered first) for reduction
  Matrix rel_rref_;
  std::vector<int> rel_pivots_;
  std::vector<std::string> atom_order_;
  std::vector<ParamExpr> h_raw_, h_reduced_, h_refined_;
  std::vector<ParamExpr> s_free_;
  ParamExpr obstruction_;
  int reduction_steps_ = 0;
  bool gamma_ok_ = false, theta_ok_ = false;
};

}  // namespace calib
