#include "calib/spin7.hpp"

#include <stdexcept>

namespace calib {

namespace {

Multivector standard_cayley_form() {
  // e1234 + (e12+e34)^(e56+e78) + (e13-e24)^(e57-e68)
  //       + (-e14-e23)^(e58+e67) + e5678
  auto two = [](std::initializer_list<int> a, int s) {
    Multivector m(8, 2);
    m.add(MultiIndex(a), s);
    return m;
  };
  Multivector phi(8, 4);
  phi.add({1, 2, 3, 4}, 1);
  phi.add({5, 6, 7, 8}, 1);
  phi += wedge(two({1, 2}, 1) + two({3, 4}, 1), two({5, 6}, 1) + two({7, 8}, 1));
  phi += wedge(two({1, 3}, 1) + two({2, 4}, -1), two({5, 7}, 1) + two({6, 8}, -1));
  phi += wedge(two({1, 4}, -1) + two({2, 3}, -1), two({5, 8}, 1) + two({6, 7}, 1));
  return phi;
}

}  // namespace

const Spin7& Spin7::standard() {
  static const Spin7 instance(standard_cayley_form());
  return instance;
}

Spin7 Spin7::from_form(const Multivector& big_phi) { return Spin7(big_phi); }

Spin7::Spin7(const Multivector& big_phi) : phi_(big_phi) {
  vol_ = Multivector(8, 8);
  vol_.add({1, 2, 3, 4, 5, 6, 7, 8}, 1);
  for (int g = 0; g <= 8; ++g)
    spaces_.push_back(std::make_unique<FormSpace>(8, g));

  // Lambda^2: 3- and (-1)-eigenspaces of beta -> *(Phi ^ beta)
  const FormSpace& s2 = space(2);
  Matrix op2 = operator_matrix(s2, s2, [&](const Multivector& b) {
    return hodge(wedge(phi_, b));
  });
  p2_7_ = span_projector(eigenspace(op2, 3));
  p2_21_ = span_projector(eigenspace(op2, -1));

  // Lambda^3_8 = {*(Phi ^ alpha)}; Lambda^3_48 = ker(gamma -> Phi ^ gamma)
  const FormSpace& s1 = space(1);
  const FormSpace& s3 = space(3);
  Matrix l38(s3.dim(), s1.dim());
  for (int j = 0; j < s1.dim(); ++j) {
    Multivector alpha = basis_form<Rational>(8, s1.index_at(j));
    auto c = s3.coords(hodge(wedge(phi_, alpha)));
    for (int i = 0; i < s3.dim(); ++i) l38(i, j) = c[i];
  }
  p3_8_ = span_projector(column_basis(l38));
  const FormSpace& s7 = space(7);
  Matrix wedge_phi = operator_matrix(s3, s7, [&](const Multivector& g) {
    return wedge(phi_, g);
  });
  p3_48_ = span_projector(nullspace(wedge_phi));

  // Lie algebra as the annihilator of Phi in so(8)
  const FormSpace& s4 = space(4);
  auto pairs = so_basis_pairs(8);
  Matrix action(s4.dim(), (int)pairs.size());
  for (size_t j = 0; j < pairs.size(); ++j) {
    Matrix x = antisym_unit(8, pairs[j].first, pairs[j].second);
    auto c = s4.coords(lie_act(x, phi_));
    for (int i = 0; i < s4.dim(); ++i) action(i, (int)j) = c[i];
  }
  Matrix kernel = nullspace(action);
  for (int j = 0; j < kernel.cols(); ++j) {
    Matrix x(8, 8);
    for (size_t k = 0; k < pairs.size(); ++k) {
      const Rational& c = kernel((int)k, j);
      if (is_zero(c)) continue;
      x(pairs[k].first - 1, pairs[k].second - 1) += c;
      x(pairs[k].second - 1, pairs[k].first - 1) -= c;
    }
    lie_basis_.push_back(std::move(x));
  }
}

int Spin7::coefficient(int i, int j, int k, int l) const {
  if (i < 1 || i > 8 || j < 1 || j > 8 || k < 1 || k > 8 || l < 1 || l > 8)
    throw std::invalid_argument("Cayley coefficient index out of range 1..8");
  Rational c = phi_.coeff({i, j, k, l});
  return (int)c.get_num().get_si();
}

bool Spin7::is_cayley(const std::vector<Multivector>& span4) const {
  if (span4.size() != 4) throw std::invalid_argument("need 4 spanning vectors");
  FormSpace s1(8, 1);
  Matrix m(4, 8);
  for (int i = 0; i < 4; ++i) {
    auto c = s1.coords(span4[i]);
    for (int j = 0; j < 8; ++j) m(i, j) = c[j];
  }
  if (rank(m) != 4) throw std::invalid_argument("rank-deficient span");
  // |Phi(b1..b4)|^2 = det Gram(b1..b4) characterizes calibrated planes and
  // needs no orthonormalization
  Multivector val = phi_;
  for (int i = 3; i >= 0; --i) val = interior(span4[i], val);
  Rational phi_val = val.coeff(MultiIndex{});
  Matrix gram = m * m.transpose();
  // det of the 4x4 Gram matrix by elimination
  Matrix g = gram;
  Rational det = 1;
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r)
      if (!is_zero(g(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) return false;  // unreachable for full-rank input
    if (piv != c) {
      for (int j = 0; j < 4; ++j) std::swap(g(c, j), g(piv, j));
      det = -det;
    }
    det *= g(c, c);
    Rational inv = 1 / g(c, c);
    for (int r = c + 1; r < 4; ++r) {
      Rational f = g(r, c) * inv;
      for (int j = c; j < 4; ++j) g(r, j) -= f * g(c, j);
    }
  }
  return phi_val * phi_val == det;
}

Matrix Spin7::gamma_embedding(const std::vector<Rational>& v) const {
  if (v.size() != 7)
    throw std::invalid_argument("gamma embedding needs 7 entries");
  const Rational& g1 = v[0];
  const Rational& g2 = v[1];
  const Rational& g3 = v[2];
  const Rational& g4 = v[3];
  const Rational& g5 = v[4];
  const Rational& g6 = v[5];
  const Rational& g7 = v[6];
  Matrix m(8, 8);
  auto row = [&](int r, std::initializer_list<Rational> vals) {
    int c = 0;
    for (const Rational& x : vals) m(r, c++) = x;
  };
  Rational z(0);
  row(0, {z, g1, g2, g3, g4, g5, g6, g7});
  row(1, {-g1, z, g3, -g2, g5, -g4, g7, -g6});
  row(2, {-g2, -g3, z, g1, g6, -g7, -g4, g5});
  row(3, {-g3, g2, -g1, z, -g7, -g6, g5, g4});
  row(4, {-g4, -g5, -g6, g7, z, g1, g2, -g3});
  row(5, {-g5, g4, g7, g6, -g1, z, -g3, -g2});
  row(6, {-g6, -g7, g4, -g5, -g2, g3, z, g1});
  row(7, {-g7, g6, -g5, -g4, g3, g2, -g1, z});
  return m;
}

}  // namespace calib
