#include "calib/g2.hpp"

#include <stdexcept>

namespace calib {

std::vector<std::pair<int, int>> so_basis_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  return out;
}

Matrix antisym_unit(int n, int a, int b) {
  Matrix m(n, n);
  m(a - 1, b - 1) = 1;
  m(b - 1, a - 1) = -1;
  return m;
}

Matrix lie_action_matrix(const Matrix& x, const FormSpace& space) {
  return operator_matrix(space, space, [&](const Multivector& w) {
    return lie_act(x, w);
  });
}

namespace {

Multivector standard_phi() {
  Multivector phi(7, 3);
  phi.add({1, 2, 3}, 1);
  phi.add({1, 4, 5}, 1);
  phi.add({1, 6, 7}, 1);
  phi.add({2, 4, 6}, 1);
  phi.add({2, 5, 7}, -1);
  phi.add({3, 4, 7}, -1);
  phi.add({3, 5, 6}, -1);
  return phi;
}

}  // namespace

const G2& G2::standard() {
  static const G2 instance(standard_phi());
  return instance;
}

G2 G2::from_phi(const Multivector& phi) { return G2(phi); }

G2::G2(const Multivector& phi) : phi_(phi), star_phi_(hodge(phi)) {
  vol_ = Multivector(7, 7);
  vol_.add({1, 2, 3, 4, 5, 6, 7}, 1);

  for (int g = 0; g <= 7; ++g)
    spaces_.push_back(std::make_unique<FormSpace>(7, g));

  // epsilon tables: phi = (1/6) eps_ijk e^ijk, *phi = (1/24) eps_ijkl e^ijkl
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k) {
        Rational c = phi_.coeff({i, j, k});
        eps3_[i][j][k] = (int)c.get_num().get_si();
        for (int l = 1; l <= 7; ++l) {
          Rational d = star_phi_.coeff({i, j, k, l});
          eps4_[i][j][k][l] = (int)d.get_num().get_si();
        }
      }

  // Lambda^2 = 2-eigenspace (+) (-1)-eigenspace of beta -> *(phi ^ beta)
  const FormSpace& s2 = space(2);
  Matrix op2 = operator_matrix(s2, s2, [&](const Multivector& b) {
    return hodge(wedge(phi_, b));
  });
  p2_7_ = span_projector(eigenspace(op2, 2));
  p2_14_ = span_projector(eigenspace(op2, -1));

  // Lambda^3_1 = R phi; Lambda^3_7 = {*(alpha ^ phi)};
  // Lambda^3_27 = joint kernel of gamma ^ phi and gamma ^ *phi.
  const FormSpace& s3 = space(3);
  Matrix phi_col(s3.dim(), 1);
  {
    auto c = s3.coords(phi_);
    for (int i = 0; i < s3.dim(); ++i) phi_col(i, 0) = c[i];
  }
  p3_1_ = span_projector(phi_col);

  const FormSpace& s1 = space(1);
  Matrix l37(s3.dim(), s1.dim());
  for (int j = 0; j < s1.dim(); ++j) {
    Multivector alpha = basis_form<Rational>(7, s1.index_at(j));
    auto c = s3.coords(hodge(wedge(alpha, phi_)));
    for (int i = 0; i < s3.dim(); ++i) l37(i, j) = c[i];
  }
  p3_7_ = span_projector(column_basis(l37));

  const FormSpace& s6 = space(6);
  const FormSpace& s7 = space(7);
  Matrix wedge_phi = operator_matrix(s3, s6, [&](const Multivector& g) {
    return wedge(g, phi_);
  });
  Matrix wedge_star = operator_matrix(s3, s7, [&](const Multivector& g) {
    return wedge(g, star_phi_);
  });
  Matrix stacked(s6.dim() + s7.dim(), s3.dim());
  for (int j = 0; j < s3.dim(); ++j) {
    for (int i = 0; i < s6.dim(); ++i) stacked(i, j) = wedge_phi(i, j);
    for (int i = 0; i < s7.dim(); ++i) stacked(s6.dim() + i, j) = wedge_star(i, j);
  }
  p3_27_ = span_projector(nullspace(stacked));

  // Lie algebra: nullspace of X -> X.phi over so(7)
  auto pairs = so_basis_pairs(7);
  Matrix action(s3.dim(), (int)pairs.size());
  for (size_t j = 0; j < pairs.size(); ++j) {
    Matrix x = antisym_unit(7, pairs[j].first, pairs[j].second);
    auto c = s3.coords(lie_act(x, phi_));
    for (int i = 0; i < s3.dim(); ++i) action(i, (int)j) = c[i];
  }
  Matrix kernel = nullspace(action);
  for (int j = 0; j < kernel.cols(); ++j) {
    Matrix x(7, 7);
    for (size_t k = 0; k < pairs.size(); ++k) {
      const Rational& c = kernel((int)k, j);
      if (is_zero(c)) continue;
      x(pairs[k].first - 1, pairs[k].second - 1) += c;
      x(pairs[k].second - 1, pairs[k].first - 1) -= c;
    }
    lie_basis_.push_back(std::move(x));
  }
}

int G2::epsilon3(int i, int j, int k) const {
  if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7)
    throw std::invalid_argument("epsilon3 index out of range 1..7");
  return eps3_[i][j][k];
}

int G2::epsilon4(int i, int j, int k, int l) const {
  if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7 || l < 1 || l > 7)
    throw std::invalid_argument("epsilon4 index out of range 1..7");
  return eps4_[i][j][k][l];
}

Multivector G2::map_i(const SymTensor& h) const {
  if (!is_zero(h.trace())) throw std::invalid_argument("map_i: nonzero trace");
  Multivector out(7, 3);
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      const Rational& hij = h.at(i, j);
      if (is_zero(hij)) continue;
      for (int k = 1; k <= 7; ++k)
        for (int l = k + 1; l <= 7; ++l) {
          int e = eps3_[i][k][l];
          if (e == 0) continue;
          out.add({j, k, l}, hij * Rational(2 * e));
        }
    }
  return out;
}

FormExpr G2::map_i(const SymTensorExpr& h) const {
  if (!h.trace().is_zero()) throw std::invalid_argument("map_i: nonzero trace");
  FormExpr out(7, 3);
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      const ParamExpr& hij = h.at(i, j);
      if (hij.is_zero()) continue;
      for (int k = 1; k <= 7; ++k)
        for (int l = k + 1; l <= 7; ++l) {
          int e = eps3_[i][k][l];
          if (e == 0) continue;
          out.add({j, k, l}, hij * Rational(2 * e));
        }
    }
  return out;
}

SymTensor G2::map_j(const Multivector& gamma) const {
  auto parts = project_lambda3(gamma);
  if (!(parts.part27 == gamma))
    throw std::invalid_argument("map_j: input not in Lambda^3_27");
  SymTensor out(7);
  for (int v = 1; v <= 7; ++v)
    for (int w = v; w <= 7; ++w) {
      Multivector iv = interior(basis_e(7, {v}), phi_);
      Multivector iw = interior(basis_e(7, {w}), phi_);
      Multivector top = wedge(wedge(iv, iw), gamma);
      out.set(v, w, top.coeff({1, 2, 3, 4, 5, 6, 7}));
    }
  return out;
}

Multivector G2::cross(const Multivector& u, const Multivector& v) const {
  return sharp(interior(v, interior(u, phi_)));
}

namespace {
int span_rank(const std::vector<Multivector>& vecs) {
  FormSpace s1(vecs.at(0).dim(), 1);
  Matrix m((int)vecs.size(), s1.dim());
  for (size_t i = 0; i < vecs.size(); ++i) {
    auto c = s1.coords(vecs[i]);
    for (int j = 0; j < s1.dim(); ++j) m((int)i, j) = c[j];
  }
  return rank(m);
}
}  // namespace

bool G2::is_associative(const std::vector<Multivector>& span3) const {
  if (span3.size() != 3) throw std::invalid_argument("need 3 spanning vectors");
  if (span_rank(span3) != 3) throw std::invalid_argument("rank-deficient span");
  std::vector<Multivector> with_cross = span3;
  with_cross.push_back(cross(span3[0], span3[1]));
  return span_rank(with_cross) == 3;
}

bool G2::is_coassociative(const std::vector<Multivector>& span4) const {
  if (span4.size() != 4) throw std::invalid_argument("need 4 spanning vectors");
  if (span_rank(span4) != 4) throw std::invalid_argument("rank-deficient span");
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        Multivector val =
            interior(span4[c], interior(span4[b], interior(span4[a], phi_)));
        if (!is_zero(val.coeff(MultiIndex{})))
          return false;
      }
  return true;
}

Matrix G2::gamma_embedding(const std::vector<Rational>& v) const {
  if (v.size() != 7) throw std::invalid_argument("gamma embedding needs 7 entries");
  Matrix m(7, 7);
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k)
        if (eps3_[i][j][k] != 0) m(i - 1, j - 1) += Rational(eps3_[i][j][k]) * v[k - 1];
  return m;
}

}  // namespace calib
