#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calib/so4_refine.hpp"
#include "test_util.hpp"

using namespace calib;

namespace {
Multivector in_image(const Matrix& p, const Multivector& w, const FormSpace& s) {
  return s.from_coords(apply_rational(p, s.coords(w)));
}
bool lies_in(const Matrix& p, const Multivector& w, const FormSpace& s) {
  return in_image(p, w, s) == w;
}
}  // namespace

TEST_CASE("printed 2-form families match their derived constructions") {
  const SO4Refine& r = SO4Refine::standard();
  // Upsilon_p = L_C(e^p), as printed
  CHECK(r.upsilon()[0] == basis_e(7, {4, 5}) + basis_e(7, {6, 7}));
  CHECK(r.upsilon()[1] == basis_e(7, {4, 6}) - basis_e(7, {5, 7}));
  CHECK(r.upsilon()[2] == basis_e(7, {4, 7}) * Rational(-1) - basis_e(7, {5, 6}));
  // Gamma_p = 2 *_A e^p - Upsilon_p
  CHECK(r.gamma_basis()[0] ==
        basis_e(7, {2, 3}) * Rational(2) - basis_e(7, {4, 5}) - basis_e(7, {6, 7}));
  // Delta family: the seven printed elements plus the derived Delta_4
  CHECK(r.delta()[0] == basis_e(7, {1, 7}) + basis_e(7, {2, 4}));
  CHECK(r.delta()[6] == basis_e(7, {3, 6}) - basis_e(7, {1, 4}));
  CHECK(r.delta()[3] == basis_e(7, {2, 7}) - basis_e(7, {1, 4}));
  CHECK(r.delta()[3] != r.delta()[6]);
}

TEST_CASE("module membership of every family") {
  const SO4Refine& r = SO4Refine::standard();
  const G2& g2 = r.g2();
  const FormSpace& s2 = g2.space(2);
  const FormSpace& s3 = g2.space(3);
  for (const auto& g : r.gamma_basis()) CHECK(lies_in(r.p2_14A(), g, s2));
  for (const auto& d : r.delta()) CHECK(lies_in(r.p2_14_13(), d, s2));
  for (const auto& o : r.omega()) CHECK(lies_in(r.p2_14_20(), o, s2));
  for (const auto& u : r.upsilon()) CHECK(lies_in(r.p2_plusC(), u, s2));
  CHECK(lies_in(r.p3_27_00(), r.phi00(), s3));
  for (const auto& k : r.kappa()) CHECK(lies_in(r.p3_27_04(), k, s3));
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) CHECK(lies_in(r.p3_27_22(), r.lambda(p, q), s3));
  for (const auto& m : r.mu()) CHECK(lies_in(r.p3_27_13(), m, s3));
  for (const auto& n : r.nu()) CHECK(lies_in(r.p3_27_C(), n, s3));
}

TEST_CASE("errata evidence: printed Delta_4 and kappa_1") {
  const SO4Refine& r = SO4Refine::standard();
  const G2& g2 = r.g2();
  // printed Delta_4 equals printed Delta_7 (the duplication)
  Multivector printed_delta4 = basis_e(7, {3, 6}) - basis_e(7, {1, 4});
  CHECK(printed_delta4 == r.delta()[6]);
  // printed kappa_1 has the opposite sign on the second term and fails the
  // 27-module conditions
  Multivector printed_kappa1 =
      wedge(basis_e(7, {1}), r.upsilon()[1]) - wedge(basis_e(7, {2}), r.upsilon()[0]);
  CHECK(!wedge(printed_kappa1, g2.phi()).is_zero());
  CHECK(r.kappa()[0] ==
        wedge(basis_e(7, {1}), r.upsilon()[1]) + wedge(basis_e(7, {2}), r.upsilon()[0]));
  // remaining printed kappas match the derived family
  CHECK(r.kappa()[1] ==
        wedge(basis_e(7, {1}), r.upsilon()[2]) + wedge(basis_e(7, {3}), r.upsilon()[0]));
  CHECK(r.kappa()[2] ==
        wedge(basis_e(7, {2}), r.upsilon()[2]) + wedge(basis_e(7, {3}), r.upsilon()[1]));
  CHECK(r.kappa()[3] ==
        wedge(basis_e(7, {1}), r.upsilon()[0]) - wedge(basis_e(7, {2}), r.upsilon()[1]));
  CHECK(r.kappa()[4] ==
        wedge(basis_e(7, {2}), r.upsilon()[1]) - wedge(basis_e(7, {3}), r.upsilon()[2]));
}

TEST_CASE("i(E0) evaluates to 4 (6 phi_A - phi_C)") {
  const SO4Refine& r = SO4Refine::standard();
  CHECK(r.g2().map_i(r.e0()) == r.phi00() * Rational(4));
  CHECK(r.e0().trace() == Rational(0));
}

TEST_CASE("squared norm table") {
  const SO4Refine& r = SO4Refine::standard();
  for (const auto& g : r.gamma_basis()) CHECK(norm_sq(g) == Rational(6));
  for (const auto& d : r.delta()) CHECK(norm_sq(d) == Rational(2));
  for (const auto& o : r.omega()) CHECK(norm_sq(o) == Rational(2));
  for (const auto& m : r.mu()) CHECK(norm_sq(m) == Rational(2));
  for (const auto& k : r.kappa()) CHECK(norm_sq(k) == Rational(4));
  CHECK(norm_sq(r.phi00()) == Rational(42));
  for (const auto& n : r.nu()) CHECK(norm_sq(n) == Rational(12));
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) CHECK(norm_sq(r.lambda(p, q)) == Rational(2));
}

TEST_CASE("refine1") {
  const SO4Refine& r = SO4Refine::standard();
  auto p = r.refine1(basis_e(7, {1}));
  CHECK(p.a_part == basis_e(7, {1}));
  CHECK(p.c_part.is_zero());
  auto q = r.refine1(basis_e(7, {5}));
  CHECK(q.a_part.is_zero());
  CHECK(q.c_part == basis_e(7, {5}));
  auto m = r.refine1(basis_e(7, {1}) + basis_e(7, {5}));
  CHECK(m.a_part == basis_e(7, {1}));
  CHECK(m.c_part == basis_e(7, {5}));
}

TEST_CASE("refine2 ranks and completeness") {
  const SO4Refine& r = SO4Refine::standard();
  CHECK(rank(r.p2_7A()) == 3);
  CHECK(rank(r.p2_7C()) == 4);
  CHECK(rank(r.p2_14A()) == 3);
  CHECK(rank(r.p2_14_13()) == 8);
  CHECK(rank(r.p2_14_20()) == 3);
  CHECK(r.p2_7A() + r.p2_7C() + r.p2_14A() + r.p2_14_13() + r.p2_14_20() ==
        Matrix::identity(21));

  const G2& g2 = r.g2();
  auto parts = r.refine2(interior(basis_e(7, {1}), g2.phi()));
  CHECK(parts.p7A == interior(basis_e(7, {1}), g2.phi()));
  CHECK(parts.p7C.is_zero());
  CHECK(parts.p14A.is_zero());
  CHECK(parts.p14_13.is_zero());
  CHECK(parts.p14_20.is_zero());

  auto po = r.refine2(r.omega()[1]);
  CHECK(po.p14_20 == r.omega()[1]);
  CHECK(po.p7A.is_zero());

  // Lambda^2_-(C) sits inside Lambda^2_14
  const FormSpace& s2 = g2.space(2);
  for (const auto& o : r.omega())
    CHECK(lies_in(g2.p2_14(), o, s2));

  for (int trial = 0; trial < 10; ++trial) {
    Multivector beta = testutil::rand_form(7, 2);
    auto p = r.refine2(beta);
    CHECK(p.p7A + p.p7C + p.p14A + p.p14_13 + p.p14_20 == beta);
    CHECK(inner(p.p7A, p.p14A) == Rational(0));
    CHECK(inner(p.p7C, p.p14_13) == Rational(0));
  }
}

TEST_CASE("refine3 ranks and completeness") {
  const SO4Refine& r = SO4Refine::standard();
  const G2& g2 = r.g2();
  CHECK(rank(g2.p3_1()) == 1);
  CHECK(rank(r.p3_7A()) == 3);
  CHECK(rank(r.p3_7C()) == 4);
  CHECK(rank(r.p3_27_00()) == 1);
  CHECK(rank(r.p3_27_04()) == 5);
  CHECK(rank(r.p3_27_22()) == 9);
  CHECK(rank(r.p3_27_13()) == 8);
  CHECK(rank(r.p3_27_C()) == 4);
  Matrix sum = g2.p3_1() + r.p3_7A() + r.p3_7C() + r.p3_27_00() +
               r.p3_27_04() + r.p3_27_22() + r.p3_27_13() + r.p3_27_C();
  CHECK(sum == Matrix::identity(35));

  auto p0 = r.refine3(r.phi00());
  CHECK(p0.p27_00 == r.phi00());
  CHECK(p0.p1.is_zero());
  auto pk = r.refine3(r.kappa()[2]);
  CHECK(pk.p27_04 == r.kappa()[2]);
  auto pp = r.refine3(g2.phi());
  CHECK(pp.p1 == g2.phi());
  CHECK(pp.p27_00.is_zero());

  for (int trial = 0; trial < 10; ++trial) {
    Multivector gamma = testutil::rand_form(7, 3);
    auto p = r.refine3(gamma);
    Multivector back = p.p1 + p.p7A + p.p7C + p.p27_00 + p.p27_04 + p.p27_22 +
                       p.p27_13 + p.p27_C;
    CHECK(back == gamma);
  }
}

TEST_CASE("s map worked example") {
  const SO4Refine& r = SO4Refine::standard();
  Multivector beta = basis_e(7, {1, 5}) * Rational(-1) -
                     basis_e(7, {2, 6}) + basis_e(7, {3, 7});
  SymTensor h = r.map_s(beta);
  SymTensor expected(7);
  expected.set(1, 5, Rational(-1, 2));
  expected.set(2, 6, Rational(-1, 2));
  expected.set(3, 7, Rational(1, 2));
  CHECK(h == expected);
  CHECK_THROWS_AS(r.map_s(r.omega()[0]), std::invalid_argument);
}

TEST_CASE("mu family is the *_A image of the Delta family") {
  const SO4Refine& r = SO4Refine::standard();
  for (int d = 0; d < 8; ++d)
    CHECK(r.star_a_tensor(r.delta()[d]) == r.mu()[d]);
}

TEST_CASE("remark equalities between alternative splittings") {
  const SO4Refine& r = SO4Refine::standard();
  const G2& g2 = r.g2();
  const FormSpace& s3 = g2.space(3);
  auto f = [&](int i) { return SplitFrame::standard().covector(i); };

  // A (x) Lambda^2_-(C) = (Lambda^3_27)_{2,2}
  for (int p = 1; p <= 3; ++p)
    for (int q = 0; q < 3; ++q)
      CHECK(lies_in(r.p3_27_22(), wedge(f(p), r.omega()[q]), s3));
  // *_A[(Lambda^2_14)_{1,3}] = (Lambda^3_27)_{1,3}
  for (const auto& d : r.delta())
    CHECK(lies_in(r.p3_27_13(), r.star_a_tensor(d), s3));
  // L_C(Sym^2_0(A)) = (Lambda^3_27)_{0,4}: kappa checked already; converse rank
  // L_C(Lambda^2(A)) = (Lambda^3_7)_A
  for (int p = 1; p <= 3; ++p)
    for (int q = p + 1; q <= 3; ++q) {
      Multivector anti = wedge(f(p), r.upsilon()[q - 1]) -
                         wedge(f(q), r.upsilon()[p - 1]);
      CHECK(lies_in(r.p3_7A(), anti, s3));
    }
}

TEST_CASE("isometries") {
  const SO4Refine& r = SO4Refine::standard();
  // natural: 12 C_p Gamma_p -> 12 sqrt6 C_p e_p with C = (2, -1, 3)
  Multivector beta = r.gamma_basis()[0] * Rational(24) +
                     r.gamma_basis()[1] * Rational(-12) +
                     r.gamma_basis()[2] * Rational(36);
  auto nat = r.iso_natural(beta);
  CHECK(nat.root == 6);
  CHECK(nat.vec == basis_e(7, {1}) * Rational(24) +
                       basis_e(7, {2}) * Rational(-12) +
                       basis_e(7, {3}) * Rational(36));
  CHECK(norm_sq(nat.vec) * Rational(nat.root) == norm_sq(beta));

  // dagger: 12F (6phi_A - phi_C) -> 12 sqrt42 F
  auto dag = r.iso_dagger(r.phi00() * Rational(12));
  CHECK(dag.root == 42);
  CHECK(dag.value == Rational(12));
  CHECK(dag.value * dag.value * Rational(dag.root) == norm_sq(r.phi00() * Rational(12)));

  // ddagger: 6 M_alpha nu_alpha -> 12 sqrt3 M_alpha e_alpha with M_5 = 1
  auto dd = r.iso_ddagger(r.nu()[1] * Rational(6));
  CHECK(dd.root == 3);
  CHECK(dd.vec == basis_e(7, {5}) * Rational(12));
  CHECK(norm_sq(dd.vec) * Rational(dd.root) == norm_sq(r.nu()[1] * Rational(6)));

  // out-of-module inputs are rejected
  CHECK_THROWS_AS(r.iso_natural(r.omega()[0]), std::invalid_argument);
  CHECK_THROWS_AS(r.iso_dagger(r.kappa()[0]), std::invalid_argument);
  CHECK_THROWS_AS(r.iso_ddagger(r.phi00()), std::invalid_argument);
}

TEST_CASE("stabilizer") {
  const SO4Refine& r = SO4Refine::standard();
  CHECK(r.stabilizer().size() == 6);
  const G2& g2 = r.g2();
  auto f = [&](int i) { return SplitFrame::standard().covector(i); };
  for (const auto& x : r.stabilizer()) {
    CHECK(lie_act(x, g2.phi()).is_zero());
    // preserves A# and C#
    for (int p = 1; p <= 3; ++p)
      for (int al = 4; al <= 7; ++al) {
        CHECK(inner(lie_act(x, f(p)), f(al)) == Rational(0));
        CHECK(inner(lie_act(x, f(al)), f(p)) == Rational(0));
      }
  }
  // refined projectors commute with the stabilizer action
  const FormSpace& s2 = g2.space(2);
  const FormSpace& s3 = g2.space(3);
  for (const auto& x : r.stabilizer()) {
    Matrix a2 = lie_action_matrix(x, s2);
    Matrix a3 = lie_action_matrix(x, s3);
    for (const Matrix* p : {&r.p2_7A(), &r.p2_7C(), &r.p2_14A(), &r.p2_14_13(),
                            &r.p2_14_20()})
      CHECK(*p * a2 == a2 * *p);
    for (const Matrix* p :
         {&r.p3_7A(), &r.p3_7C(), &r.p3_27_00(), &r.p3_27_04(), &r.p3_27_22(),
          &r.p3_27_13(), &r.p3_27_C()})
      CHECK(*p * a3 == a3 * *p);
  }
}

TEST_CASE("orthogonality of distinct refined components") {
  const SO4Refine& r = SO4Refine::standard();
  for (int trial = 0; trial < 5; ++trial) {
    Multivector b1 = testutil::rand_form(7, 2);
    Multivector b2 = testutil::rand_form(7, 2);
    auto p1 = r.refine2(b1);
    auto p2 = r.refine2(b2);
    CHECK(inner(p1.p7A, p2.p7C) == Rational(0));
    CHECK(inner(p1.p7A, p2.p14A) == Rational(0));
    CHECK(inner(p1.p14_13, p2.p14_20) == Rational(0));
    Multivector g1 = testutil::rand_form(7, 3);
    Multivector g2f = testutil::rand_form(7, 3);
    auto q1 = r.refine3(g1);
    auto q2 = r.refine3(g2f);
    CHECK(inner(q1.p27_00, q2.p27_04) == Rational(0));
    CHECK(inner(q1.p27_22, q2.p27_13) == Rational(0));
    CHECK(inner(q1.p7A, q2.p27_C) == Rational(0));
  }
}

TEST_CASE("general adapted frames") {
  const G2& g2 = G2::standard();
  // an exact SO(4) element inside G2: rotate both C-planes by a quarter turn
  // and compensate with the A-reflection diag(1,-1,-1)
  Matrix g(7, 7);
  g(0, 0) = 1;
  g(1, 1) = -1;
  g(2, 2) = -1;
  g(4, 3) = 1;   // f4 = e5
  g(3, 4) = -1;  // f5 = -e4
  g(6, 5) = 1;   // f6 = e7
  g(5, 6) = -1;  // f7 = -e6
  SplitFrame frame = SplitFrame::from_matrix(g2, g);
  SO4Refine r(g2, frame);
  CHECK(rank(r.p2_14_13()) == 8);
  CHECK(norm_sq(r.phi00()) == Rational(42));
  for (const auto& d : r.delta()) CHECK(norm_sq(d) == Rational(2));
  CHECK(r.stabilizer().size() == 6);
  const FormSpace& fs2 = g2.space(2);
  const FormSpace& fs3 = g2.space(3);
  for (const auto& d : r.delta()) CHECK(lies_in(r.p2_14_13(), d, fs2));
  for (const auto& m : r.mu()) CHECK(lies_in(r.p3_27_13(), m, fs3));
  for (const auto& n : r.nu()) CHECK(lies_in(r.p3_27_C(), n, fs3));
  for (int d = 0; d < 8; ++d)
    CHECK(r.star_a_tensor(r.delta()[d]) == r.mu()[d]);

  Matrix bad = Matrix::identity(7);
  bad(0, 0) = -1;  // orthogonal but does not preserve phi
  CHECK_THROWS_AS(SplitFrame::from_matrix(g2, bad), std::invalid_argument);
}
