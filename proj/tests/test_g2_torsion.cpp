#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calib/g2_torsion.hpp"
#include "calib/reference_tables.hpp"
#include "test_util.hpp"

using namespace calib;

namespace {
RefinedTorsionG2 rand_rt() {
  std::map<std::string, Rational> v;
  for (const auto& n : RefinedTorsionG2::atom_names())
    v[n] = testutil::rand_rational();
  return RefinedTorsionG2::from_values(v);
}
}  // namespace

TEST_CASE("system shape, rank and condensed forms") {
  const G2Torsion& t = G2Torsion::standard();
  CHECK(t.system_matrix().rows() == 56);
  CHECK(t.system_matrix().cols() == 49);
  CHECK(t.system_rank() == 49);
  CHECK(t.condensed_lhs_matches());
}

TEST_CASE("assembly examples") {
  const G2Torsion& t = G2Torsion::standard();
  RefinedTorsionG2 zero;
  TorsionForms forms = t.assemble(zero);
  CHECK(forms.tau1.is_zero());
  CHECK(forms.tau2.is_zero());
  CHECK(forms.tau3.is_zero());

  RefinedTorsionG2 fonly;
  fonly.f = 1;
  CHECK(t.assemble(fonly).tau3 == t.so4().phi00() * Rational(12));

  RefinedTorsionG2 conly;
  conly.c[0] = 1;
  Multivector tau2 = t.assemble(conly).tau2;
  CHECK(tau2 == t.so4().gamma_basis()[0] * Rational(12));
  CHECK(t.so4().g2().project_lambda2(tau2).part7.is_zero());
}

TEST_CASE("zero torsion forces T = 0") {
  const G2Torsion& t = G2Torsion::standard();
  RefinedTorsionG2 zero;
  auto T = t.solve_T(zero);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(T[i][j] == Rational(0));
}

TEST_CASE("tau0-only torsion gives T = Id/24") {
  const G2Torsion& t = G2Torsion::standard();
  RefinedTorsionG2 rt;
  rt.tau0 = 1;
  auto T = t.solve_T(rt);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      CHECK(T[i][j] == (i == j ? Rational(1, 24) : Rational(0)));
}

TEST_CASE("solved blocks match the corrected reference tables") {
  const G2Torsion& t = G2Torsion::standard();
  const auto& blocks = ref::g2_blocks_corrected();
  auto half = Rational(1, 2);
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      ParamExpr asym = (t.t_entry(p, q) - t.t_entry(q, p)) * half;
      ParamExpr sym = (t.t_entry(p, q) + t.t_entry(q, p)) * half;
      CHECK(asym == blocks.asym_a[p - 1][q - 1]);
      CHECK(sym == blocks.sym_a[p - 1][q - 1]);
    }
  for (int al = 4; al <= 7; ++al)
    for (int p = 1; p <= 3; ++p) {
      ParamExpr sym = (t.t_entry(al, p) + t.t_entry(p, al)) * half;
      ParamExpr asym = (t.t_entry(al, p) - t.t_entry(p, al)) * half;
      CHECK(sym == blocks.sym_ca[al - 4][p - 1]);
      CHECK(asym == blocks.asym_ca[al - 4][p - 1]);
    }
  for (int al = 4; al <= 7; ++al)
    for (int be = 4; be <= 7; ++be) {
      ParamExpr asym = (t.t_entry(al, be) - t.t_entry(be, al)) * half;
      ParamExpr sym = (t.t_entry(al, be) + t.t_entry(be, al)) * half;
      CHECK(asym == blocks.asym_c[al - 4][be - 4]);
      CHECK(sym == blocks.sym_c[al - 4][be - 4]);
    }
}

TEST_CASE("printed blocks differ exactly at the documented entries") {
  const G2Torsion& t = G2Torsion::standard();
  const auto& printed = ref::g2_blocks_printed();
  auto half = Rational(1, 2);
  int mismatches = 0;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      if (!((t.t_entry(p, q) - t.t_entry(q, p)) * half ==
            printed.asym_a[p - 1][q - 1]))
        ++mismatches;
  CHECK(mismatches == 1);  // the (1,2) entry
  CHECK(!((t.t_entry(1, 2) - t.t_entry(2, 1)) * half == printed.asym_a[0][1]));
  mismatches = 0;
  for (int al = 4; al <= 7; ++al)
    for (int be = 4; be <= 7; ++be)
      if (!((t.t_entry(al, be) - t.t_entry(be, al)) * half ==
            printed.asym_c[al - 4][be - 4]))
        ++mismatches;
  CHECK(mismatches == 1);  // the (3,1) entry
}

TEST_CASE("key relations") {
  const G2Torsion& t = G2Torsion::standard();
  const G2& g2 = t.so4().g2();
  // the epsilon-weighted C-row combination: with the A-index in the middle
  // epsilon slot it reproduces the stated constant -3(B_alpha + M_alpha);
  // in the displayed slot order the same sum is +3(B_alpha + M_alpha)
  // (see the eps-contraction-order erratum)
  for (int al = 4; al <= 7; ++al) {
    ParamExpr stated, displayed;
    for (int be = 4; be <= 7; ++be)
      for (int p = 1; p <= 3; ++p) {
        int e_mid = g2.epsilon3(al, p, be);
        int e_disp = g2.epsilon3(al, be, p);
        if (e_mid != 0) stated += t.t_entry(be, p) * Rational(e_mid);
        if (e_disp != 0) displayed += t.t_entry(be, p) * Rational(e_disp);
      }
    ParamExpr rhs = ParamExpr::atom("B" + std::to_string(al), -3) +
                    ParamExpr::atom("M" + std::to_string(al), -3);
    CHECK(stated == rhs);
    CHECK(displayed == -rhs);
  }
  // antisymmetric A-block spot value
  CHECK((t.t_entry(2, 1) - t.t_entry(1, 2)) * Rational(1, 2) ==
        ref::lin("-A3-2C3"));
  // the three C-block combinations equal -4(A_p - C_p)
  auto d = [&](int i, int j) { return t.t_entry(i, j) - t.t_entry(j, i); };
  CHECK(-d(4, 5) - d(6, 7) == ref::lin("-4A1+4C1"));
  CHECK(d(5, 7) - d(4, 6) == ref::lin("-4A2+4C2"));
  CHECK(d(4, 7) + d(5, 6) == ref::lin("-4A3+4C3"));
  // trace of the C-diagonal carries the derived factor
  CHECK(t.diag_c() == Rational(4));
  ParamExpr trace;
  for (int al = 4; al <= 7; ++al) trace += t.t_entry(al, al);
  CHECK(trace == ref::lin("12F+1/6tau0"));
}

TEST_CASE("inverse relations roundtrip") {
  const G2Torsion& t = G2Torsion::standard();
  CHECK(t.inverse_roundtrip_ok());
  // T = Id: tau0 = 24
  TorsionMatrixG2 id;
  for (int i = 0; i < 7; ++i) id[i][i] = ParamExpr(Rational(1));
  TorsionFormsExpr f = t.tau_from_T(id);
  CHECK(f.tau0 == ParamExpr(Rational(24)));
  CHECK(f.tau2.is_zero());
  CHECK(f.tau3.is_zero());
  // antisymmetric T: tau0 = 0, no symmetric tau3 content
  TorsionMatrixG2 anti;
  anti[0][1] = ParamExpr(Rational(1));
  anti[1][0] = ParamExpr(Rational(-1));
  TorsionFormsExpr g = t.tau_from_T(anti);
  CHECK(g.tau0.is_zero());

  // 20 random numeric roundtrips through solve/assemble
  for (int trial = 0; trial < 20; ++trial) {
    RefinedTorsionG2 rt = rand_rt();
    auto T = t.solve_T(rt);
    TorsionMatrixG2 sym;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) sym[i][j] = ParamExpr(T[i][j]);
    TorsionFormsExpr back = t.tau_from_T(sym);
    TorsionForms direct = t.assemble(rt);
    CHECK(back.tau0 == ParamExpr(direct.tau0));
    CHECK(back.tau1 == promote<ParamExpr>(direct.tau1));
    CHECK(back.tau2 == promote<ParamExpr>(direct.tau2));
    CHECK(back.tau3 == promote<ParamExpr>(direct.tau3));
  }
}

TEST_CASE("refined <-> T is a linear bijection") {
  const G2Torsion& t = G2Torsion::standard();
  for (int trial = 0; trial < 20; ++trial) {
    RefinedTorsionG2 rt = rand_rt();
    RefinedTorsionG2 back = t.invert_T(t.solve_T(rt));
    CHECK(back.values() == rt.values());
  }
  // linearity
  RefinedTorsionG2 r1 = rand_rt(), r2 = rand_rt();
  auto v1 = r1.values(), v2 = r2.values();
  std::map<std::string, Rational> sum;
  for (const auto& [k, v] : v1) sum[k] = v + v2.at(k);
  auto t1 = t.solve_T(r1), t2 = t.solve_T(r2),
       ts = t.solve_T(RefinedTorsionG2::from_values(sum));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(ts[i][j] == t1[i][j] + t2[i][j]);
}

TEST_CASE("obstruction") {
  const G2Torsion& t = G2Torsion::standard();
  RefinedTorsionG2 nearly;
  nearly.tau0 = 1;
  CHECK(t.coassoc_obstruction(nearly) == Rational(1, 24));
  RefinedTorsionG2 tuned;
  tuned.tau0 = -72;
  tuned.f = 1;
  CHECK(t.coassoc_obstruction(tuned) == Rational(0));
  RefinedTorsionG2 zero;
  CHECK(t.coassoc_obstruction(zero) == Rational(0));

  // equivalence with tau0 + (sqrt42/7) [tau3_00]^dagger = 0: both sides are
  // linear in (tau0, F); the dagger of 12F phi00 is 12 sqrt42 F, and
  // (sqrt42/7)*12*sqrt42 = 72, so the locus is tau0 + 72F = 0 = 24*(3F+tau0/24)
  auto dag = t.so4().iso_dagger(t.so4().phi00() * Rational(12));
  Radical coeff = Radical(frac(1, 7), 42) * Radical(dag.value, dag.root);
  CHECK(coeff.is_rational());
  CHECK(coeff.rat == Rational(72));  // per unit F
}

TEST_CASE("mean curvature identities") {
  const G2Torsion& t = G2Torsion::standard();
  for (int al = 4; al <= 7; ++al) {
    ParamExpr expected = ParamExpr::atom("B" + std::to_string(al), -18) +
                         ParamExpr::atom("M" + std::to_string(al), -18);
    CHECK(t.mean_curvature_assoc_symbolic()[al - 4] == expected);
  }
  for (int p = 1; p <= 3; ++p) {
    ParamExpr expected = ParamExpr::atom("A" + std::to_string(p), -24) +
                         ParamExpr::atom("C" + std::to_string(p), 24);
    CHECK(t.mean_curvature_coassoc_symbolic()[p - 1] == expected);
  }
  RefinedTorsionG2 rt;
  rt.b[0] = 1;  // B4
  CHECK(t.mean_curvature_associative(rt) == basis_e(7, {4}) * Rational(-18));
  RefinedTorsionG2 rt2;
  rt2.a[0] = 1;  // A1
  CHECK(t.mean_curvature_coassociative(rt2) == basis_e(7, {1}) * Rational(-24));
  RefinedTorsionG2 zero;
  CHECK(t.mean_curvature_associative(zero).is_zero());
  CHECK(t.mean_curvature_coassociative(zero).is_zero());
}

TEST_CASE("minimality classes") {
  const G2Torsion& t = G2Torsion::standard();
  RefinedTorsionG2 rt;
  rt.tau0 = 1;
  auto rep = t.minimality_class(rt);
  CHECK(rep.associative_minimal);
  CHECK(rep.coassociative_minimal);
  CHECK(rep.torsion_class == "W1");

  RefinedTorsionG2 d2;
  d2.d[1] = 1;
  auto rep2 = t.minimality_class(d2);
  CHECK(rep2.associative_minimal);
  CHECK(!rep2.coassociative_minimal);
  CHECK(rep2.torsion_class == "W14");

  RefinedTorsionG2 g1;
  g1.g[0] = 1;
  auto rep3 = t.minimality_class(g1);
  CHECK(!rep3.associative_minimal);
  CHECK(rep3.coassociative_minimal);
  CHECK(rep3.torsion_class == "W27");

  RefinedTorsionG2 zero;
  CHECK(t.minimality_class(zero).torsion_class == "0");
}
