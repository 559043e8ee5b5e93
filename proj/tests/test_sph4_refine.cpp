#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calib/sph4_refine.hpp"
#include "test_util.hpp"

using namespace calib;

namespace {
bool lies_in(const Matrix& p, const Multivector& w, const FormSpace& s) {
  return s.from_coords(apply_rational(p, s.coords(w))) == w;
}
}  // namespace

TEST_CASE("2-form families and identifications") {
  const Sph4Refine& r = Sph4Refine::standard();
  const Spin7& sp = r.spin7();
  const FormSpace& s2 = sp.space(2);
  for (const auto& t : r.theta()) CHECK(lies_in(r.p2_21_200(), t, s2));
  for (const auto& o : r.omega()) CHECK(lies_in(r.p2_21_002(), o, s2));
  for (int p = 0; p < 3; ++p) {
    CHECK(lies_in(r.p2_21_020(), r.gamma2()[p] - r.upsilon()[p], s2));
    CHECK(lies_in(r.p2_7_020(), r.gamma2()[p] + r.upsilon()[p], s2));
  }
  // ranks: 3+4 over Lambda^2_7 and 3+3+3+12 over Lambda^2_21
  CHECK(rank(r.p2_7_020()) == 3);
  CHECK(rank(r.p2_7_101()) == 4);
  CHECK(rank(r.p2_21_200()) == 3);
  CHECK(rank(r.p2_21_020()) == 3);
  CHECK(rank(r.p2_21_002()) == 3);
  CHECK(rank(r.p2_21_121()) == 12);
  Matrix sum = r.p2_7_020() + r.p2_7_101() + r.p2_21_200() + r.p2_21_020() +
               r.p2_21_002() + r.p2_21_121();
  CHECK(sum == Matrix::identity(28));
}

TEST_CASE("rho family") {
  const Sph4Refine& r = Sph4Refine::standard();
  const Spin7& sp = r.spin7();
  for (int i = 0; i < 8; ++i) {
    CHECK(norm_sq(r.rho()[i]) == Rational(42));
    CHECK(sp.project_lambda3(r.rho()[i]).part8.is_zero());
    // upsilon_i = i_{e_i} Phi is pure Lambda^3_8
    CHECK(sp.project_lambda3(r.upsilon3()[i]).part48.is_zero());
  }
}

TEST_CASE("errata evidence: printed kappa_6") {
  const Sph4Refine& r = Sph4Refine::standard();
  const FormSpace& s3 = r.spin7().space(3);
  auto f = [&](int i) { return CayleyFrame::standard().covector(i); };
  Multivector printed = wedge(f(1), r.upsilon()[0]) * Rational(2) -
                        wedge(f(3), r.upsilon()[1]) + wedge(f(4), r.upsilon()[2]);
  CHECK_FALSE(lies_in(r.p3_48_130(), printed, s3));
  CHECK(r.kappa()[5] == wedge(f(2), r.upsilon()[0]) * Rational(2) -
                            wedge(f(3), r.upsilon()[1]) +
                            wedge(f(4), r.upsilon()[2]));
  // the corrected element is, up to scale, the unique direction of the
  // module orthogonal to the other seven kappas
  for (int k = 0; k < 8; ++k)
    if (k != 5) CHECK(inner(r.kappa()[5], r.kappa()[k]) == Rational(0));
}

TEST_CASE("stabilizer and factors") {
  const Sph4Refine& r = Sph4Refine::standard();
  CHECK(r.stabilizer().size() == 9);
  auto f = [&](int i) { return CayleyFrame::standard().covector(i); };
  for (const auto& x : r.stabilizer()) {
    CHECK(lie_act(x, r.spin7().form()).is_zero());
    for (int p = 1; p <= 4; ++p)
      for (int rr = 5; rr <= 8; ++rr) {
        CHECK(inner(lie_act(x, f(p)), f(rr)) == Rational(0));
        CHECK(inner(lie_act(x, f(rr)), f(p)) == Rational(0));
      }
  }
  for (const auto& fac : r.su2_factors()) CHECK(fac.size() == 3);
  // the factors commute pairwise
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (const auto& x : r.su2_factors()[a])
        for (const auto& y : r.su2_factors()[b])
          CHECK((x * y - y * x).is_zero());
}

TEST_CASE("lambda3 refined projectors") {
  const Sph4Refine& r = Sph4Refine::standard();
  const Spin7& sp = r.spin7();
  const FormSpace& s3 = sp.space(3);
  CHECK(rank(r.p3_8K()) == 4);
  CHECK(rank(r.p3_8L()) == 4);
  CHECK(rank(r.p3_48K()) == 4);
  CHECK(rank(r.p3_48L()) == 4);
  CHECK(rank(r.p3_48_031()) == 8);
  CHECK(rank(r.p3_48_211()) == 12);
  CHECK(rank(r.p3_48_130()) == 8);
  CHECK(rank(r.p3_48_112()) == 12);
  Matrix sum48 = r.p3_48K() + r.p3_48L() + r.p3_48_031() + r.p3_48_211() +
                 r.p3_48_130() + r.p3_48_112();
  CHECK(rank(sum48) == 48);
  Matrix total = sum48 + r.p3_8K() + r.p3_8L();
  CHECK(total == Matrix::identity(56));

  // membership of the printed families
  for (int p = 0; p < 4; ++p) CHECK(lies_in(r.p3_48K(), r.rho()[p], s3));
  for (int rr = 4; rr < 8; ++rr) CHECK(lies_in(r.p3_48L(), r.rho()[rr], s3));
  for (const auto& m : r.mu()) CHECK(lies_in(r.p3_48_211(), m, s3));
  for (const auto& n : r.nu()) CHECK(lies_in(r.p3_48_112(), n, s3));
  for (const auto& l : r.lambda3()) CHECK(lies_in(r.p3_48_031(), l, s3));
  for (const auto& k : r.kappa()) CHECK(lies_in(r.p3_48_130(), k, s3));

  // completeness on random forms
  for (int trial = 0; trial < 5; ++trial) {
    Multivector g = testutil::rand_form(8, 3);
    auto parts = r.refine3(g);
    Multivector back = parts.p8K + parts.p8L + parts.p48K + parts.p48L +
                       parts.p031 + parts.p211 + parts.p130 + parts.p112;
    CHECK(back == g);
  }
  // spot checks on the basis families
  auto pk = r.refine3(r.kappa()[0]);
  CHECK(pk.p130 == r.kappa()[0]);
  CHECK(pk.p031.is_zero());
  Multivector e123 = basis_e(8, {1, 2, 3});
  auto pe = r.refine3(e123);
  Multivector sum_e = pe.p8K + pe.p8L + pe.p48K + pe.p48L + pe.p031 + pe.p211 +
                      pe.p130 + pe.p112;
  CHECK(sum_e == e123);
}

TEST_CASE("equivariance of refined projectors under the stabilizer") {
  const Sph4Refine& r = Sph4Refine::standard();
  const FormSpace& s2 = r.spin7().space(2);
  const FormSpace& s3 = r.spin7().space(3);
  for (const auto& x : r.stabilizer()) {
    Matrix a2 = lie_action_matrix(x, s2);
    for (const Matrix* p : {&r.p2_7_020(), &r.p2_7_101(), &r.p2_21_200(),
                            &r.p2_21_020(), &r.p2_21_002(), &r.p2_21_121()})
      CHECK(*p * a2 == a2 * *p);
    Matrix a3 = lie_action_matrix(x, s3);
    for (const Matrix* p :
         {&r.p3_8K(), &r.p3_8L(), &r.p3_48K(), &r.p3_48L(), &r.p3_48_031(),
          &r.p3_48_211(), &r.p3_48_130(), &r.p3_48_112()})
      CHECK(*p * a3 == a3 * *p);
  }
}

TEST_CASE("dagger isometry") {
  const Sph4Refine& r = Sph4Refine::standard();
  auto dag = r.iso_dagger(r.rho()[4] * Rational(16));  // 16 D_5 rho_5
  CHECK(dag.root == 42);
  CHECK(dag.vec == basis_e(8, {5}) * Rational(16));
  CHECK(norm_sq(dag.vec) * Rational(dag.root) ==
        norm_sq(r.rho()[4] * Rational(16)));
  CHECK(r.iso_dagger(Multivector(8, 3)).vec.is_zero());
  auto dag6 = r.iso_dagger(r.rho()[5]);
  CHECK(norm_sq(dag6.vec) * Rational(dag6.root) == Rational(42));
  CHECK_THROWS_AS(r.iso_dagger(r.rho()[0]), std::invalid_argument);
  CHECK_THROWS_AS(r.iso_dagger(r.mu()[0]), std::invalid_argument);
}

TEST_CASE("rep dimensions and the Sym2(K)xL audit") {
  CHECK(Sph4Refine::rep_dim(1, 1, 0) == 4);
  CHECK(Sph4Refine::rep_dim(0, 3, 1) == 8);
  CHECK(Sph4Refine::rep_dim(2, 1, 1) == 12);
  CHECK_THROWS_AS(Sph4Refine::rep_dim(1, 0, 0), std::invalid_argument);

  const Sph4Refine& r = Sph4Refine::standard();
  auto decomp = r.sym2k_l_decomposition();
  int total = 0;
  bool has_031 = false;
  for (const auto& [p, q, rr, d] : decomp) {
    total += d;
    CHECK(d == Sph4Refine::rep_dim(p, q, rr));
    if (p == 0 && q == 3 && rr == 1) has_031 = true;
  }
  CHECK(total == 40);
  CHECK(decomp.size() == 3);
  CHECK(!has_031);  // the published list wrongly includes V_{0,3,1}
  // expected: V_{2,3,1} + V_{2,1,1} + L = 24 + 12 + 4
  bool has_231 = false, has_211 = false, has_011 = false;
  for (const auto& [p, q, rr, d] : decomp) {
    if (p == 2 && q == 3 && rr == 1) has_231 = d == 24;
    if (p == 2 && q == 1 && rr == 1) has_211 = d == 12;
    if (p == 0 && q == 1 && rr == 1) has_011 = d == 4;
  }
  CHECK(has_231);
  CHECK(has_211);
  CHECK(has_011);
}

TEST_CASE("general cayley frames") {
  const Spin7& sp = Spin7::standard();
  // simultaneous quarter turns in both K-planes and both L-planes preserve
  // the Cayley form
  Matrix g = Matrix(8, 8);
  g(1, 0) = 1;
  g(0, 1) = -1;
  g(3, 2) = 1;
  g(2, 3) = -1;
  g(5, 4) = 1;
  g(4, 5) = -1;
  g(7, 6) = 1;
  g(6, 7) = -1;
  bool preserved = true;
  try {
    CayleyFrame frame = CayleyFrame::from_matrix(sp, g);
    Sph4Refine r(sp, frame);
    CHECK(r.stabilizer().size() == 9);
    for (const auto& rho : r.rho()) CHECK(norm_sq(rho) == Rational(42));
    const FormSpace& fs3 = sp.space(3);
    for (const auto& m : r.mu()) CHECK(lies_in(r.p3_48_211(), m, fs3));
    for (const auto& k : r.kappa()) CHECK(lies_in(r.p3_48_130(), k, fs3));
    for (int p = 0; p < 4; ++p) CHECK(lies_in(r.p3_48K(), r.rho()[p], fs3));
  } catch (const std::invalid_argument&) {
    preserved = false;
  }
  CHECK(preserved);

  Matrix bad = Matrix::identity(8);
  bad(0, 0) = -1;
  CHECK_THROWS_AS(CayleyFrame::from_matrix(sp, bad), std::invalid_argument);
}
