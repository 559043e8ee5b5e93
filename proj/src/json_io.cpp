#include "calib/json_io.hpp"

#include <stdexcept>

namespace calib {

namespace {

Json coef_to_json(const Rational& r) { return to_string(r); }

Rational coef_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("coefficient must be a string");
  return parse_rational(j.get<std::string>());
}

template <size_t N>
Json rational_array(const std::array<Rational, N>& a) {
  Json out = Json::array();
  for (const auto& v : a) out.push_back(to_string(v));
  return out;
}

template <size_t N>
void fill_array(std::array<Rational, N>& a, const Json& j, const char* name) {
  if (!j.is_array() || j.size() != N)
    throw std::invalid_argument(std::string("field ") + name + " must have " +
                                std::to_string(N) + " entries");
  for (size_t i = 0; i < N; ++i) a[i] = coef_from_json(j[i]);
}

}  // namespace

Json multivector_to_json(const Multivector& m) {
  Json terms = Json::array();
  for (const auto& [idx, c] : m.terms()) {
    Json t;
    t["idx"] = idx;
    t["coef"] = coef_to_json(c);
    terms.push_back(t);
  }
  return Json{{"dim", m.dim()}, {"grade", m.grade()}, {"terms", terms}};
}

Multivector multivector_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("grade") || !j.contains("terms"))
    throw std::invalid_argument("multivector needs dim, grade, terms");
  Multivector out(j.at("dim").get<int>(), j.at("grade").get<int>());
  for (const auto& t : j.at("terms")) {
    MultiIndex idx = t.at("idx").get<std::vector<int>>();
    out.add(std::move(idx), coef_from_json(t.at("coef")));
  }
  return out;
}

Json radical_vector_to_json(const RadicalVector<Rational>& v) {
  Json terms = Json::array();
  for (const auto& [idx, c] : v.vec.terms()) {
    Json t;
    t["idx"] = idx;
    if (v.root == 1)
      t["coef"] = coef_to_json(c);
    else
      t["coef"] = Json{{"rat", to_string(c)}, {"root", v.root}};
    terms.push_back(t);
  }
  return Json{
      {"dim", v.vec.dim()}, {"grade", v.vec.grade()}, {"terms", terms}};
}

Json refined_g2_to_json(const RefinedTorsionG2& rt) {
  Json j;
  j["structure"] = "g2";
  j["tau0"] = to_string(rt.tau0);
  j["A"] = rational_array(rt.a);
  j["B"] = rational_array(rt.b);
  j["C"] = rational_array(rt.c);
  j["D"] = rational_array(rt.d);
  j["E"] = rational_array(rt.e);
  j["F"] = to_string(rt.f);
  j["G"] = rational_array(rt.g);
  Json jj = Json::array();
  for (const auto& row : rt.j) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    jj.push_back(r);
  }
  j["J"] = jj;
  j["L"] = rational_array(rt.l);
  j["M"] = rational_array(rt.m);
  return j;
}

RefinedTorsionG2 refined_g2_from_json(const Json& j) {
  if (structure_of(j) != "g2")
    throw std::invalid_argument("expected structure \"g2\"");
  RefinedTorsionG2 rt;
  rt.tau0 = coef_from_json(j.at("tau0"));
  fill_array(rt.a, j.at("A"), "A");
  fill_array(rt.b, j.at("B"), "B");
  fill_array(rt.c, j.at("C"), "C");
  fill_array(rt.d, j.at("D"), "D");
  fill_array(rt.e, j.at("E"), "E");
  rt.f = coef_from_json(j.at("F"));
  fill_array(rt.g, j.at("G"), "G");
  const Json& jj = j.at("J");
  if (!jj.is_array() || jj.size() != 3)
    throw std::invalid_argument("field J must be a 3x3 array");
  for (int p = 0; p < 3; ++p) {
    if (!jj[p].is_array() || jj[p].size() != 3)
      throw std::invalid_argument("field J must be a 3x3 array");
    for (int q = 0; q < 3; ++q) rt.j[p][q] = coef_from_json(jj[p][q]);
  }
  fill_array(rt.l, j.at("L"), "L");
  fill_array(rt.m, j.at("M"), "M");
  return rt;
}

Json refined_spin7_to_json(const RefinedTorsionSpin7& rt) {
  Json j;
  j["structure"] = "spin7";
  j["A"] = rational_array(rt.a);
  j["B"] = rational_array(rt.b);
  j["C"] = rational_array(rt.c);
  j["D"] = rational_array(rt.d);
  j["E"] = rational_array(rt.e);
  j["F"] = rational_array(rt.f);
  j["X"] = rational_array(rt.x);
  j["Y"] = rational_array(rt.y);
  return j;
}

RefinedTorsionSpin7 refined_spin7_from_json(const Json& j) {
  if (structure_of(j) != "spin7")
    throw std::invalid_argument("expected structure \"spin7\"");
  RefinedTorsionSpin7 rt;
  fill_array(rt.a, j.at("A"), "A");
  fill_array(rt.b, j.at("B"), "B");
  fill_array(rt.c, j.at("C"), "C");
  fill_array(rt.d, j.at("D"), "D");
  fill_array(rt.e, j.at("E"), "E");
  fill_array(rt.f, j.at("F"), "F");
  fill_array(rt.x, j.at("X"), "X");
  fill_array(rt.y, j.at("Y"), "Y");
  return rt;
}

std::string structure_of(const Json& j) {
  if (!j.contains("structure") || !j.at("structure").is_string())
    throw std::invalid_argument("missing \"structure\" field");
  return j.at("structure").get<std::string>();
}

Json param_expr_to_json(const ParamExpr& e) {
  Json terms = Json::object();
  for (const auto& [name, c] : e.terms()) terms[name] = to_string(c);
  return Json{{"const", to_string(e.constant())}, {"terms", terms}};
}

ParamExpr param_expr_from_json(const Json& j) {
  ParamExpr out(coef_from_json(j.at("const")));
  for (const auto& [name, c] : j.at("terms").items())
    out += ParamExpr::atom(name, coef_from_json(c));
  return out;
}

namespace {
template <class M>
Json t_matrix_json(const M& t, int rows, int cols) {
  Json entries = Json::array();
  for (int i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < cols; ++j) {
      if constexpr (std::is_same_v<std::decay_t<decltype(t[i][j])>, ParamExpr>)
        row.push_back(param_expr_to_json(t[i][j]));
      else
        row.push_back(Json{{"const", to_string(t[i][j])},
                           {"terms", Json::object()}});
    }
    entries.push_back(row);
  }
  return Json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

Rational numeric_entry(const Json& e) {
  ParamExpr p = param_expr_from_json(e);
  if (!p.is_constant())
    throw std::invalid_argument(
        "matrix entry carries parameters; a numeric matrix is required here");
  return p.constant();
}
}  // namespace

Json t_matrix_g2_to_json(const TorsionMatrixG2& t) {
  return t_matrix_json(t, 7, 7);
}
Json t_matrix_g2_to_json(const std::array<std::array<Rational, 7>, 7>& t) {
  return t_matrix_json(t, 7, 7);
}
std::array<std::array<Rational, 7>, 7> t_matrix_g2_from_json(const Json& j) {
  if (j.at("rows").get<int>() != 7 || j.at("cols").get<int>() != 7)
    throw std::invalid_argument("expected a 7x7 matrix");
  std::array<std::array<Rational, 7>, 7> out;
  const Json& e = j.at("entries");
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) out[i][k] = numeric_entry(e.at(i).at(k));
  return out;
}

Json t_matrix_spin7_to_json(const TorsionMatrixSpin7& t) {
  return t_matrix_json(t, 7, 8);
}
Json t_matrix_spin7_to_json(const std::array<std::array<Rational, 8>, 7>& t) {
  return t_matrix_json(t, 7, 8);
}
std::array<std::array<Rational, 8>, 7> t_matrix_spin7_from_json(const Json& j) {
  if (j.at("rows").get<int>() != 7 || j.at("cols").get<int>() != 8)
    throw std::invalid_argument("expected a 7x8 matrix");
  std::array<std::array<Rational, 8>, 7> out;
  const Json& e = j.at("entries");
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 8; ++k) out[i][k] = numeric_entry(e.at(i).at(k));
  return out;
}

}  // namespace calib
