#include "calib/spin7_torsion.hpp"

#include <stdexcept>

namespace calib {

namespace {
std::string t_atom(int a, int i) {
  return "T" + std::to_string(a) + std::to_string(i);
}
const std::map<std::string, int>& t_atom_index() {
  static const std::map<std::string, int> idx = [] {
    std::map<std::string, int> m;
    int k = 0;
    for (int a = 1; a <= 7; ++a)
      for (int i = 1; i <= 8; ++i) m[t_atom(a, i)] = k++;
    return m;
  }();
  return idx;
}
}  // namespace

const std::vector<std::string>& RefinedTorsionSpin7::atom_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (int p = 1; p <= 4; ++p) n.push_back("A" + std::to_string(p));
    for (int r = 5; r <= 8; ++r) n.push_back("B" + std::to_string(r));
    for (int p = 1; p <= 4; ++p) n.push_back("C" + std::to_string(p));
    for (int r = 5; r <= 8; ++r) n.push_back("D" + std::to_string(r));
    for (int k = 1; k <= 12; ++k) n.push_back("E" + std::to_string(k));
    for (int k = 1; k <= 12; ++k) n.push_back("F" + std::to_string(k));
    for (int k = 1; k <= 8; ++k) n.push_back("X" + std::to_string(k));
    for (int k = 1; k <= 8; ++k) n.push_back("Y" + std::to_string(k));
    return n;
  }();
  return names;
}

std::map<std::string, Rational> RefinedTorsionSpin7::values() const {
  std::map<std::string, Rational> v;
  for (int p = 0; p < 4; ++p) v["A" + std::to_string(p + 1)] = a[p];
  for (int r = 0; r < 4; ++r) v["B" + std::to_string(r + 5)] = b[r];
  for (int p = 0; p < 4; ++p) v["C" + std::to_string(p + 1)] = c[p];
  for (int r = 0; r < 4; ++r) v["D" + std::to_string(r + 5)] = d[r];
  for (int k = 0; k < 12; ++k) v["E" + std::to_string(k + 1)] = e[k];
  for (int k = 0; k < 12; ++k) v["F" + std::to_string(k + 1)] = f[k];
  for (int k = 0; k < 8; ++k) v["X" + std::to_string(k + 1)] = x[k];
  for (int k = 0; k < 8; ++k) v["Y" + std::to_string(k + 1)] = y[k];
  return v;
}

RefinedTorsionSpin7 RefinedTorsionSpin7::from_values(
    const std::map<std::string, Rational>& v) {
  RefinedTorsionSpin7 rt;
  auto get = [&](const std::string& k) {
    auto it = v.find(k);
    return it == v.end() ? Rational(0) : it->second;
  };
  for (int p = 0; p < 4; ++p) rt.a[p] = get("A" + std::to_string(p + 1));
  for (int r = 0; r < 4; ++r) rt.b[r] = get("B" + std::to_string(r + 5));
  for (int p = 0; p < 4; ++p) rt.c[p] = get("C" + std::to_string(p + 1));
  for (int r = 0; r < 4; ++r) rt.d[r] = get("D" + std::to_string(r + 5));
  for (int k = 0; k < 12; ++k) rt.e[k] = get("E" + std::to_string(k + 1));
  for (int k = 0; k < 12; ++k) rt.f[k] = get("F" + std::to_string(k + 1));
  for (int k = 0; k < 8; ++k) rt.x[k] = get("X" + std::to_string(k + 1));
  for (int k = 0; k < 8; ++k) rt.y[k] = get("Y" + std::to_string(k + 1));
  return rt;
}

bool RefinedTorsionSpin7::is_zero() const {
  for (const auto& [k, v] : values())
    if (!calib::is_zero(v)) return false;
  return true;
}

const Spin7Torsion& Spin7Torsion::standard() {
  static const Spin7Torsion instance(Sph4Refine::standard());
  return instance;
}

Spin7Torsion::Spin7Torsion(const Sph4Refine& sph4) : sph4_(sph4) {
  const Spin7& sp = sph4_.spin7();
  auto f = [&](int i) { return sph4_.frame().covector(i); };
  auto atom = [](const std::string& n) { return ParamExpr::atom(n); };

  tau_sym_.tau1 = FormExpr(8, 1);
  for (int p = 1; p <= 4; ++p)
    tau_sym_.tau1 +=
        promote<ParamExpr>(f(p)) * (atom("A" + std::to_string(p)) * Rational(32));
  for (int r = 5; r <= 8; ++r)
    tau_sym_.tau1 +=
        promote<ParamExpr>(f(r)) * (atom("B" + std::to_string(r)) * Rational(32));
  tau_sym_.tau3 = FormExpr(8, 3);
  for (int p = 1; p <= 4; ++p)
    tau_sym_.tau3 += promote<ParamExpr>(sph4_.rho()[p - 1]) *
                     (atom("C" + std::to_string(p)) * Rational(16));
  for (int r = 5; r <= 8; ++r)
    tau_sym_.tau3 += promote<ParamExpr>(sph4_.rho()[r - 1]) *
                     (atom("D" + std::to_string(r)) * Rational(16));
  for (int k = 1; k <= 12; ++k)
    tau_sym_.tau3 += promote<ParamExpr>(sph4_.mu()[k - 1]) *
                     (atom("E" + std::to_string(k)) * Rational(8));
  for (int k = 1; k <= 12; ++k)
    tau_sym_.tau3 += promote<ParamExpr>(sph4_.nu()[k - 1]) *
                     (atom("F" + std::to_string(k)) * Rational(8));
  for (int k = 1; k <= 8; ++k)
    tau_sym_.tau3 += promote<ParamExpr>(sph4_.lambda3()[k - 1]) *
                     (atom("X" + std::to_string(k)) * Rational(8));
  for (int k = 1; k <= 8; ++k)
    tau_sym_.tau3 += promote<ParamExpr>(sph4_.kappa()[k - 1]) *
                     (atom("Y" + std::to_string(k)) * Rational(8));

  {
    auto p3 = sp.project_lambda3(tau_sym_.tau3);
    if (!(p3.part48 == tau_sym_.tau3))
      throw std::domain_error("tau3 assembly leaves Lambda^3_48");
  }

  // unit patterns of the complementary embedding
  std::array<Matrix, 7> embed;
  for (int a = 1; a <= 7; ++a) {
    std::vector<Rational> unit(7, Rational(0));
    unit[a - 1] = 1;
    embed[a - 1] = sp.gamma_embedding(unit);
  }

  // d omega^i = -2 gamma-hat_{im} ^ omega^m with gamma_a = T_{aq} omega^q
  std::vector<FormExpr> domega;
  domega.push_back(FormExpr());
  for (int i = 1; i <= 8; ++i) {
    FormExpr d(8, 2);
    for (int m = 1; m <= 8; ++m)
      for (int a = 1; a <= 7; ++a) {
        const Rational& c = embed[a - 1](i - 1, m - 1);
        if (is_zero(c)) continue;
        for (int q = 1; q <= 8; ++q) {
          if (q == m) continue;
          d.add({q, m}, ParamExpr::atom(t_atom(a, q), Rational(-2) * c));
        }
      }
    domega.push_back(std::move(d));
  }
  FormExpr lhs(8, 5);
  for (int i = 1; i <= 8; ++i) {
    Multivector contr = interior(basis_e(8, {i}), sp.form());
    if (!contr.is_zero()) lhs += wedge(domega[i], promote<ParamExpr>(contr));
  }
  FormExpr rhs = wedge(tau_sym_.tau1, sp.form()) + hodge(tau_sym_.tau3);

  const auto& tidx = t_atom_index();
  const FormSpace& s5 = sp.space(5);
  sys_matrix_ = Matrix(s5.dim(), 56);
  std::vector<ParamExpr> sys_rhs(s5.dim());
  for (int i = 0; i < s5.dim(); ++i) {
    ParamExpr l = lhs.coeff(s5.index_at(i));
    for (const auto& [name, coef] : l.terms())
      sys_matrix_(i, tidx.at(name)) = coef;
    sys_rhs[i] = rhs.coeff(s5.index_at(i));
  }
  SolveResult sol = solve_exact(sys_matrix_, sys_rhs);
  sys_rank_ = sol.rank;
  if (!sol.consistent) throw std::domain_error("torsion system inconsistent");
  if (sol.rank != 56)
    throw std::domain_error("torsion system rank " + std::to_string(sol.rank) +
                            ", expected 56");
  for (int a = 1; a <= 7; ++a)
    for (int i = 1; i <= 8; ++i)
      t_sol_[a - 1][i - 1] = sol.particular[tidx.at(t_atom(a, i))];

  const auto& names = RefinedTorsionSpin7::atom_names();
  rt_to_t_ = Matrix(56, 56);
  for (int a = 0; a < 7; ++a)
    for (int i = 0; i < 8; ++i) {
      if (!is_zero(t_sol_[a][i].constant()))
        throw std::domain_error("torsion solution has constant part");
      for (size_t k = 0; k < names.size(); ++k) {
        Rational c = t_sol_[a][i].coeff(names[k]);
        if (!is_zero(c)) rt_to_t_(a * 8 + i, (int)k) = c;
      }
    }
  t_to_rt_ = inverse(rt_to_t_);

  {
    // H = -[(tau1)_L]# - (sqrt42/7) [(tau3)_L]^dagger
    FormExpr t1l(8, 1);
    for (int r = 5; r <= 8; ++r)
      t1l += promote<ParamExpr>(f(r)) * inner(tau_sym_.tau1, promote<ParamExpr>(f(r)));
    FormExpr t3l = project(sph4_.p3_48L(), sp.space(3), tau_sym_.tau3);
    RadicalVector<ParamExpr> dag = sph4_.iso_dagger(t3l);
    RadicalVector<ParamExpr> scaled = scale(dag, Radical(frac(-1, 7), 42));
    if (scaled.root != 1)
      throw std::domain_error("Cayley H: radical failed to cancel");
    FormExpr h = sharp(t1l) * ParamExpr(-1) + scaled.vec;
    for (int r = 5; r <= 8; ++r)
      h_cayley_[r - 5] = inner(h, promote<ParamExpr>(f(r)));
  }
}

namespace {
Multivector eval_form(const FormExpr& e,
                      const std::map<std::string, Rational>& v) {
  Multivector out(e.dim(), e.grade());
  for (const auto& [k, c] : e.terms()) {
    Rational val = c.evaluate(v);
    if (!is_zero(val)) out.add(k, val);
  }
  return out;
}
}  // namespace

TorsionFormsSpin7 Spin7Torsion::assemble(const RefinedTorsionSpin7& rt) const {
  auto v = rt.values();
  return {eval_form(tau_sym_.tau1, v), eval_form(tau_sym_.tau3, v)};
}

std::array<std::array<Rational, 8>, 7> Spin7Torsion::solve_T(
    const RefinedTorsionSpin7& rt) const {
  auto v = rt.values();
  std::array<std::array<Rational, 8>, 7> out;
  for (int a = 0; a < 7; ++a)
    for (int i = 0; i < 8; ++i) out[a][i] = t_sol_[a][i].evaluate(v);
  return out;
}

RefinedTorsionSpin7 Spin7Torsion::invert_T(
    const std::array<std::array<Rational, 8>, 7>& t) const {
  std::vector<Rational> vec(56);
  for (int a = 0; a < 7; ++a)
    for (int i = 0; i < 8; ++i) vec[a * 8 + i] = t[a][i];
  std::vector<Rational> sol = t_to_rt_.apply(vec);
  const auto& names = RefinedTorsionSpin7::atom_names();
  std::map<std::string, Rational> v;
  for (size_t k = 0; k < names.size(); ++k) v[names[k]] = sol[k];
  return RefinedTorsionSpin7::from_values(v);
}

Multivector Spin7Torsion::mean_curvature_cayley(
    const RefinedTorsionSpin7& rt) const {
  auto v = rt.values();
  Multivector h(8, 1);
  for (int r = 5; r <= 8; ++r) {
    Rational c = h_cayley_[r - 5].evaluate(v);
    if (!is_zero(c)) h += sph4_.frame().vector(r) * c;
  }
  return h;
}

MinimalityReportSpin7 Spin7Torsion::cayley_minimality(
    const RefinedTorsionSpin7& rt) const {
  MinimalityReportSpin7 out;
  out.torsion_free = rt.is_zero();
  out.mean_curvature_zero = mean_curvature_cayley(rt).is_zero();
  auto nonzero = [&](const char* label, const auto& arr) {
    for (const auto& x : arr)
      if (!is_zero(x)) {
        out.nonzero_pieces.push_back(label);
        return;
      }
  };
  nonzero("(tau1)_K", rt.a);
  nonzero("(tau1)_L", rt.b);
  nonzero("(tau3)_K", rt.c);
  nonzero("(tau3)_L", rt.d);
  nonzero("(tau3)_{2,1,1}", rt.e);
  nonzero("(tau3)_{1,1,2}", rt.f);
  nonzero("(tau3)_{0,3,1}", rt.x);
  nonzero("(tau3)_{1,3,0}", rt.y);
  return out;
}

}  // namespace calib
