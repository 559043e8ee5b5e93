#include "calib/sph4_refine.hpp"

#include <stdexcept>

namespace calib {

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rational trace_form(const Matrix& a, const Matrix& b) {
  Rational t = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t += a(i, j) * b(i, j);
  return t;  // tr(a^T b)
}

}  // namespace

const CayleyFrame& CayleyFrame::standard() {
  static const CayleyFrame instance = [] {
    CayleyFrame f;
    for (int i = 1; i <= 8; ++i) f.cov_.push_back(basis_e(8, {i}));
    return f;
  }();
  return instance;
}

CayleyFrame CayleyFrame::from_matrix(const Spin7& sp, const Matrix& g) {
  if (g.rows() != 8 || g.cols() != 8)
    throw std::invalid_argument("frame matrix must be 8x8");
  if (!(g.transpose() * g == Matrix::identity(8)))
    throw std::invalid_argument("frame matrix not orthogonal");
  std::vector<std::vector<Rational>> rows(8, std::vector<Rational>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) rows[i][j] = g(i, j);
  if (!(pullback(rows, sp.form()) == sp.form()))
    throw std::invalid_argument("frame matrix does not preserve the 4-form");
  CayleyFrame f;
  for (int i = 1; i <= 8; ++i) {
    Multivector cov(8, 1);
    for (int j = 1; j <= 8; ++j)
      if (!is_zero(g(j - 1, i - 1))) cov.add({j}, g(j - 1, i - 1));
    f.cov_.push_back(std::move(cov));
  }
  if (!sp.is_cayley({f.cov_[0], f.cov_[1], f.cov_[2], f.cov_[3]}))
    throw std::invalid_argument("frame split is not Cayley");
  return f;
}

const Sph4Refine& Sph4Refine::standard() {
  static const Sph4Refine instance(Spin7::standard(), CayleyFrame::standard());
  return instance;
}

Sph4Refine::Sph4Refine(const Spin7& sp, const CayleyFrame& frame)
    : sp_(sp), frame_(frame) {
  const FormSpace& s2 = sp_.space(2);
  const FormSpace& s3 = sp_.space(3);
  auto f = [&](int i) { return frame_.covector(i); };
  auto w2 = [&](int i, int j) { return wedge(f(i), f(j)); };

  theta_ = {w2(1, 2) - w2(3, 4), w2(1, 3) + w2(2, 4), w2(1, 4) - w2(2, 3)};
  gamma_ = {w2(1, 2) + w2(3, 4), w2(1, 3) - w2(2, 4),
            w2(1, 4) * Rational(-1) - w2(2, 3)};
  omega_ = {w2(5, 6) - w2(7, 8), w2(5, 7) + w2(6, 8),
            w2(5, 8) * Rational(-1) + w2(6, 7)};
  upsilon_ = {w2(5, 6) + w2(7, 8), w2(5, 7) - w2(6, 8), w2(5, 8) + w2(6, 7)};

  // bidegree projectors and the +/- splits within K and L
  Matrix p_kk, p_kl, p_ll, p_kp, p_km, p_lp, p_lm;
  {
    auto span_of = [&](const std::vector<Multivector>& v) {
      Matrix m(s2.dim(), (int)v.size());
      for (size_t j = 0; j < v.size(); ++j) {
        auto c = s2.coords(v[j]);
        for (int i = 0; i < s2.dim(); ++i) m(i, (int)j) = c[i];
      }
      return m;
    };
    std::vector<Multivector> kk, kl, ll;
    for (int p = 1; p <= 4; ++p)
      for (int q = p + 1; q <= 4; ++q) kk.push_back(w2(p, q));
    for (int p = 1; p <= 4; ++p)
      for (int r = 5; r <= 8; ++r) kl.push_back(w2(p, r));
    for (int r = 5; r <= 8; ++r)
      for (int s = r + 1; s <= 8; ++s) ll.push_back(w2(r, s));
    p_kk = span_projector(span_of(kk));
    p_kl = span_projector(span_of(kl));
    p_ll = span_projector(span_of(ll));

    Multivector vol_k = wedge(wedge(f(1), f(2)), wedge(f(3), f(4)));
    Multivector vol_l = wedge(wedge(f(5), f(6)), wedge(f(7), f(8)));
    Matrix op_k = operator_matrix(s2, s2, [&](const Multivector& b) {
      return hodge(wedge(vol_l, b));
    });
    Matrix op_l = operator_matrix(s2, s2, [&](const Multivector& b) {
      return hodge(wedge(vol_k, b));
    });
    p_kp = span_projector(
        projector_intersection(span_projector(eigenspace(op_k, 1)), p_kk));
    p_km = span_projector(
        projector_intersection(span_projector(eigenspace(op_k, -1)), p_kk));
    p_lp = span_projector(
        projector_intersection(span_projector(eigenspace(op_l, 1)), p_ll));
    p_lm = span_projector(
        projector_intersection(span_projector(eigenspace(op_l, -1)), p_ll));
  }
  p2_7_020_ =
      span_projector(projector_intersection(sp_.p2_7(), p_kp + p_lp));
  p2_7_101_ = span_projector(projector_intersection(sp_.p2_7(), p_kl));
  p2_21_200_ = span_projector(projector_intersection(sp_.p2_21(), p_km));
  p2_21_020_ =
      span_projector(projector_intersection(sp_.p2_21(), p_kp + p_lp));
  p2_21_002_ = span_projector(projector_intersection(sp_.p2_21(), p_lm));
  p2_21_121_ = span_projector(projector_intersection(sp_.p2_21(), p_kl));

  // 3-form families
  Multivector vol_k = wedge(wedge(f(1), f(2)), wedge(f(3), f(4)));
  Multivector vol_l = wedge(wedge(f(5), f(6)), wedge(f(7), f(8)));
  for (int i = 1; i <= 8; ++i) ups3_[i - 1] = interior(f(i), sp_.form());
  for (int p = 1; p <= 4; ++p)
    rho_[p - 1] = ups3_[p - 1] - hodge(wedge(vol_l, f(p))) * Rational(7);
  for (int r = 5; r <= 8; ++r)
    rho_[r - 1] = ups3_[r - 1] - hodge(wedge(vol_k, f(r))) * Rational(7);

  auto fw = [&](int i, const Multivector& b) { return wedge(f(i), b); };
  const auto& Th = theta_;
  const auto& Om = omega_;
  const auto& Ga = gamma_;
  const auto& Up = upsilon_;
  auto sc = [](Multivector m, long c) { return m * Rational(c); };
  mu_[0] = sc(fw(5, Th[2]) + fw(6, Th[1]), 2);
  mu_[1] = sc(fw(6, Th[2]) - fw(5, Th[1]), 2);
  mu_[2] = sc(fw(5, Th[0]), 2);
  mu_[3] = sc(fw(6, Th[0]), 2);
  mu_[4] = sc(fw(6, Th[1]) - fw(5, Th[2]), 2);
  mu_[5] = sc(fw(5, Th[1]) + fw(6, Th[2]), -2);
  mu_[6] = sc(fw(7, Th[2]) - fw(8, Th[1]), 2);
  mu_[7] = sc(fw(7, Th[1]) + fw(8, Th[2]), -2);
  mu_[8] = sc(fw(7, Th[0]), 2);
  mu_[9] = sc(fw(8, Th[0]), -2);
  mu_[10] = sc(fw(7, Th[2]) + fw(8, Th[1]), -2);
  mu_[11] = sc(fw(8, Th[2]) - fw(7, Th[1]), 2);

  nu_[0] = sc(fw(2, Om[1]) - fw(1, Om[2]), 2);
  nu_[1] = sc(fw(1, Om[1]) + fw(2, Om[2]), 2);
  nu_[2] = sc(fw(3, Om[2]) - fw(4, Om[1]), 2);
  nu_[3] = sc(fw(3, Om[1]) + fw(4, Om[2]), -2);
  nu_[4] = sc(fw(3, Om[2]) + fw(4, Om[1]), 2);
  nu_[5] = sc(fw(4, Om[2]) - fw(3, Om[1]), 2);
  nu_[6] = sc(fw(1, Om[2]) + fw(2, Om[1]), 2);
  nu_[7] = sc(fw(2, Om[2]) - fw(1, Om[1]), 2);
  nu_[8] = sc(fw(1, Om[0]), -2);
  nu_[9] = sc(fw(2, Om[0]), 2);
  nu_[10] = sc(fw(3, Om[0]), 2);
  nu_[11] = sc(fw(4, Om[0]), -2);

  lambda_[0] = sc(fw(5, Ga[2]) + fw(6, Ga[1]), 3);
  lambda_[1] = sc(fw(6, Ga[2]) - fw(5, Ga[1]), 3);
  lambda_[2] = sc(fw(5, Ga[0]), 2) + fw(7, Ga[2]) - fw(8, Ga[1]);
  lambda_[3] = sc(fw(6, Ga[0]), 2) - fw(7, Ga[1]) - fw(8, Ga[2]);
  lambda_[4] = fw(6, Ga[1]) - fw(5, Ga[2]) + sc(fw(7, Ga[0]), 2);
  lambda_[5] = sc(fw(5, Ga[1]) + fw(6, Ga[2]), -1) - sc(fw(8, Ga[0]), 2);
  lambda_[6] = sc(fw(7, Ga[2]) + fw(8, Ga[1]), -3);
  lambda_[7] = sc(fw(8, Ga[2]) - fw(7, Ga[1]), 3);

  kappa_[0] = sc(fw(2, Up[1]) - fw(1, Up[2]), 3);
  kappa_[1] = sc(fw(1, Up[1]) + fw(2, Up[2]), 3);
  kappa_[2] = sc(fw(3, Up[2]) - fw(4, Up[1]), 3);
  kappa_[3] = sc(fw(3, Up[1]) + fw(4, Up[2]), -3);
  kappa_[4] = sc(fw(1, Up[0]), -2) + fw(3, Up[2]) + fw(4, Up[1]);
  // published with f^1 in the first term, which lands outside the module;
  // the orthogonal completion of the other seven within (Lambda^3_48)_{1,3,0}
  // forces f^2 (see the errata registry)
  kappa_[5] = sc(fw(2, Up[0]), 2) - fw(3, Up[1]) + fw(4, Up[2]);
  kappa_[6] = fw(1, Up[2]) + fw(2, Up[1]) + sc(fw(3, Up[0]), 2);
  kappa_[7] = sc(fw(1, Up[1]), -1) + fw(2, Up[2]) - sc(fw(4, Up[0]), 2);

  // stabilizer {X in spin(7) : X.K# <= K#} and its three su(2) factors
  {
    const auto& basis = sp_.lie_basis();
    Matrix constraints(16, (int)basis.size());
    for (size_t b = 0; b < basis.size(); ++b) {
      int row = 0;
      for (int p = 1; p <= 4; ++p) {
        Multivector xfp = lie_act(basis[b], f(p));
        for (int r = 5; r <= 8; ++r)
          constraints(row++, (int)b) = inner(xfp, f(r));
      }
    }
    Matrix coeffs = nullspace(constraints);
    for (int j = 0; j < coeffs.cols(); ++j) {
      Matrix x(8, 8);
      for (size_t b = 0; b < basis.size(); ++b) {
        const Rational& c = coeffs((int)b, j);
        if (is_zero(c)) continue;
        x = x + basis[b] * c;
      }
      stabilizer_.push_back(std::move(x));
    }
    if (stabilizer_.size() != 9)
      throw std::domain_error("Cayley stabilizer dimension " +
                              std::to_string(stabilizer_.size()));

    // factor 1 kills L, factor 3 kills K, factor 2 centralizes both
    auto restrict_kill = [&](bool kill_l) {
      Matrix cons(32, (int)stabilizer_.size());
      for (size_t b = 0; b < stabilizer_.size(); ++b) {
        int row = 0;
        for (int i = kill_l ? 5 : 1; i <= (kill_l ? 8 : 4); ++i) {
          Multivector xi = lie_act(stabilizer_[b], f(i));
          for (int j = 1; j <= 8; ++j) cons(row++, (int)b) = inner(xi, f(j));
        }
      }
      std::vector<Matrix> out;
      Matrix c = nullspace(cons);
      for (int j = 0; j < c.cols(); ++j) {
        Matrix x(8, 8);
        for (size_t b = 0; b < stabilizer_.size(); ++b)
          if (!is_zero(c((int)b, j))) x = x + stabilizer_[b] * c((int)b, j);
        out.push_back(std::move(x));
      }
      return out;
    };
    factors_[0] = restrict_kill(true);
    factors_[2] = restrict_kill(false);
    {
      std::vector<Matrix> outer = factors_[0];
      outer.insert(outer.end(), factors_[2].begin(), factors_[2].end());
      Matrix cons((int)outer.size() * 64, (int)stabilizer_.size());
      for (size_t b = 0; b < stabilizer_.size(); ++b) {
        int row = 0;
        for (const auto& y : outer) {
          Matrix c = commutator(stabilizer_[b], y);
          for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) cons(row++, (int)b) = c(i, j);
        }
      }
      Matrix c = nullspace(cons);
      for (int j = 0; j < c.cols(); ++j) {
        Matrix x(8, 8);
        for (size_t b = 0; b < stabilizer_.size(); ++b)
          if (!is_zero(c((int)b, j))) x = x + stabilizer_[b] * c((int)b, j);
        factors_[1].push_back(std::move(x));
      }
    }
    for (const auto& fac : factors_)
      if (fac.size() != 3)
        throw std::domain_error("stabilizer factor is not su(2)");
  }

  // Casimir normalization from the 8-dimensional representation
  const FormSpace& s1 = sp_.space(1);
  for (int k = 0; k < 3; ++k) {
    Matrix c1 = casimir_on(s1, k);
    // scalar on the block(s) the factor acts on; zero elsewhere
    int probe = (k == 2) ? 4 : 0;  // e5 for the L-only factor, else e1
    casimir_unit_[k] = c1(probe, probe);
    if (is_zero(casimir_unit_[k]))
      throw std::domain_error("degenerate Casimir normalization");
    casimir3_[k] = casimir_on(s3, k);
  }

  // Lambda^3_8 split by the 1-form slot
  {
    auto span3 = [&](const std::vector<Multivector>& v) {
      Matrix m(s3.dim(), (int)v.size());
      for (size_t j = 0; j < v.size(); ++j) {
        auto c = s3.coords(v[j]);
        for (int i = 0; i < s3.dim(); ++i) m(i, (int)j) = c[i];
      }
      return m;
    };
    std::vector<Multivector> k8, l8;
    for (int p = 1; p <= 4; ++p) k8.push_back(hodge(wedge(sp_.form(), f(p))));
    for (int r = 5; r <= 8; ++r) l8.push_back(hodge(wedge(sp_.form(), f(r))));
    p3_8K_ = span_projector(span3(k8));
    p3_8L_ = span_projector(span3(l8));
  }

  // the six Lambda^3_48 summands as joint Casimir eigenspaces
  auto joint48 = [&](int p, int q, int r) {
    Matrix stack(4 * s3.dim(), s3.dim());
    Matrix ops[3] = {
        casimir3_[0] - Matrix::identity(s3.dim()) * casimir_eigenvalue(0, p),
        casimir3_[1] - Matrix::identity(s3.dim()) * casimir_eigenvalue(1, q),
        casimir3_[2] - Matrix::identity(s3.dim()) * casimir_eigenvalue(2, r)};
    Matrix off48 = Matrix::identity(s3.dim()) - sp_.p3_48();
    for (int j = 0; j < s3.dim(); ++j) {
      for (int b = 0; b < 3; ++b)
        for (int i = 0; i < s3.dim(); ++i)
          stack(b * s3.dim() + i, j) = ops[b](i, j);
      for (int i = 0; i < s3.dim(); ++i)
        stack(3 * s3.dim() + i, j) = off48(i, j);
    }
    return span_projector(nullspace(stack));
  };
  p3_48K_ = joint48(1, 1, 0);
  p3_48L_ = joint48(0, 1, 1);
  p3_48_031_ = joint48(0, 3, 1);
  p3_48_211_ = joint48(2, 1, 1);
  p3_48_130_ = joint48(1, 3, 0);
  p3_48_112_ = joint48(1, 1, 2);
}

Matrix Sph4Refine::casimir_on(const FormSpace& space, int factor) const {
  // orthogonalize the factor basis in the trace form, then sum the squares
  // of the actions weighted by the inverse norms
  std::vector<Matrix> ortho;
  for (const auto& x : factors_[factor]) {
    Matrix y = x;
    for (const auto& prev : ortho) {
      Rational c = trace_form(y, prev) / trace_form(prev, prev);
      y = y - prev * c;
    }
    ortho.push_back(std::move(y));
  }
  Matrix out(space.dim(), space.dim());
  for (const auto& y : ortho) {
    Matrix a = lie_action_matrix(y, space);
    out = out + (a * a) * (1 / trace_form(y, y));
  }
  return out;
}

Rational Sph4Refine::casimir_eigenvalue(int factor, int p) const {
  return casimir_unit_[factor] * frac(p * (p + 2), 3);
}

std::vector<ParamExpr> Sph4Refine::rho_l_coords(
    const std::vector<FormExpr>& w) const {
  const FormSpace& s3 = sp_.space(3);
  Matrix m(s3.dim(), 4);
  for (int r = 5; r <= 8; ++r) {
    auto c = s3.coords(rho_[r - 1]);
    for (int i = 0; i < s3.dim(); ++i) m(i, r - 5) = c[i];
  }
  std::vector<ParamExpr> rhs = s3.coords(w.at(0));
  SolveResult sol = solve_exact(m, rhs);
  if (!sol.consistent)
    throw std::invalid_argument("input outside module (Lambda^3_48)_L");
  return sol.particular;
}

RadicalVector<Rational> Sph4Refine::iso_dagger(const Multivector& gamma) const {
  auto c = rho_l_coords({promote<ParamExpr>(gamma)});
  Multivector v(8, 1);
  for (int r = 5; r <= 8; ++r)
    if (!c[r - 5].is_zero()) v += frame_.vector(r) * c[r - 5].constant();
  return {42, v};
}

RadicalVector<ParamExpr> Sph4Refine::iso_dagger(const FormExpr& gamma) const {
  auto c = rho_l_coords({gamma});
  FormExpr v(8, 1);
  for (int r = 5; r <= 8; ++r)
    v += promote<ParamExpr>(frame_.vector(r)) * c[r - 5];
  return {42, v};
}

int Sph4Refine::rep_dim(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("negative label");
  if ((p + q + r) % 2 != 0)
    throw std::invalid_argument("labels of odd total parity");
  return (p + 1) * (q + 1) * (r + 1);
}

std::vector<std::array<int, 4>> Sph4Refine::sym2k_l_decomposition() const {
  // realize Sym^2(K) (x) L on coordinates (a, r): a indexes the 10 symmetric
  // pairs i <= j in K, r the 4 L-slots; the action is the derivation action
  // on each leg
  std::vector<std::pair<int, int>> sym_pairs;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) sym_pairs.emplace_back(i, j);
  const int dim = 40;
  auto act = [&](const Matrix& x) {
    // on covectors: x.e^i = -x_ji e^j
    Matrix out(dim, dim);
    for (int a = 0; a < 10; ++a) {
      auto [i, j] = sym_pairs[a];
      for (int r = 0; r < 4; ++r) {
        int col = a * 4 + r;
        auto add_sym = [&](int ii, int jj, const Rational& c) {
          if (ii > jj) std::swap(ii, jj);
          int row = 0;
          for (int b = 0; b < 10; ++b)
            if (sym_pairs[b] == std::make_pair(ii, jj)) row = b;
          out(row * 4 + r, col) += c;
        };
        for (int k = 1; k <= 4; ++k) {
          if (!is_zero(x(k - 1, i - 1))) add_sym(k, j, -x(k - 1, i - 1));
          if (!is_zero(x(k - 1, j - 1))) add_sym(i, k, -x(k - 1, j - 1));
        }
        for (int s = 0; s < 4; ++s) {
          const Rational& c = x(s + 4, r + 4);
          if (!is_zero(c)) out(a * 4 + s, col) += -c;
        }
      }
    }
    return out;
  };
  // Casimirs on the carrier
  std::array<Matrix, 3> cas;
  for (int k = 0; k < 3; ++k) {
    std::vector<Matrix> ortho;
    for (const auto& x : factors_[k]) {
      Matrix y = x;
      for (const auto& prev : ortho) {
        Rational c = trace_form(y, prev) / trace_form(prev, prev);
        y = y - prev * c;
      }
      ortho.push_back(std::move(y));
    }
    Matrix sum(dim, dim);
    for (const auto& y : ortho) {
      Matrix a = act(y);
      sum = sum + (a * a) * (1 / trace_form(y, y));
    }
    cas[k] = std::move(sum);
  }
  std::vector<std::array<int, 4>> found;
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (int r = 0; r <= 4; ++r) {
        if ((p + q + r) % 2 != 0) continue;
        Matrix stack(3 * dim, dim);
        for (int j = 0; j < dim; ++j)
          for (int b = 0; b < 3; ++b) {
            Matrix op = cas[b] - Matrix::identity(dim) *
                                     casimir_eigenvalue(b, b == 0   ? p
                                                           : b == 1 ? q
                                                                    : r);
            for (int i = 0; i < dim; ++i) stack(b * dim + i, j) = op(i, j);
          }
        int d = nullspace(stack).cols();
        if (d > 0) found.push_back({p, q, r, d});
      }
  return found;
}

}  // namespace calib
