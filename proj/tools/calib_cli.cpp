// calib: exact calibrated-geometry algebra tool.
//
// Subcommands run the verification suites, decompose forms into refined
// modules, solve and invert the torsion systems, evaluate the mean-curvature
// formulas, and test the coassociative obstruction. All arithmetic is exact;
// outputs are byte-deterministic JSON.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "calib/frame_relations.hpp"
#include "calib/json_io.hpp"
#include "calib/verify.hpp"

using namespace calib;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void emit(const Json& j, const std::string& json_path, bool quiet) {
  std::string text = j.dump(2) + "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("cannot write " + json_path);
    out << text;
  }
  if (!quiet && json_path.empty()) std::cout << text;
}

Json components_json(const std::vector<std::pair<std::string, Multivector>>& parts) {
  Json comps = Json::object(), norms = Json::object();
  for (const auto& [label, form] : parts) {
    comps[label] = multivector_to_json(form);
    norms[label] = to_string(norm_sq(form));
  }
  return Json{{"components", comps}, {"norms_sq", norms}};
}

int cmd_verify(const std::string& suite, const std::string& json_path,
               bool quiet) {
  VerificationReport report;
  if (suite == "g2")
    report = verify_g2();
  else if (suite == "spin7")
    report = verify_spin7();
  else
    report = verify_all();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("cannot write " + json_path);
    out << report_to_json(report).dump(2) << "\n";
  }
  std::cout << report_to_text(report, quiet);
  return report_exit_code(report);
}

int cmd_decompose(const std::string& structure, const std::string& form_file,
                  const std::string& split_file, const std::string& json_path,
                  bool quiet) {
  Json fj = read_json_file(form_file);
  Multivector form = multivector_from_json(fj);
  std::vector<std::pair<std::string, Multivector>> parts;
  if (structure == "g2") {
    if (form.dim() != 7)
      throw std::invalid_argument("g2 decomposition needs a dim-7 form");
    const G2& g2 = G2::standard();
    SplitFrame frame = SplitFrame::standard();
    if (!split_file.empty()) {
      Json sj = read_json_file(split_file);
      Matrix g(7, 7);
      const Json& m = sj.at("matrix");
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
          g(i, j) = parse_rational(m.at(i).at(j).get<std::string>());
      frame = SplitFrame::from_matrix(g2, g);
    }
    SO4Refine refine(g2, frame);
    if (form.grade() == 2) {
      auto p = refine.refine2(form);
      parts = {{"p7A", p.p7A},
               {"p7C", p.p7C},
               {"p14A", p.p14A},
               {"p14_13", p.p14_13},
               {"p14_20", p.p14_20}};
    } else if (form.grade() == 3) {
      auto p = refine.refine3(form);
      parts = {{"p1", p.p1},         {"p7A", p.p7A},
               {"p7C", p.p7C},       {"p27_00", p.p27_00},
               {"p27_04", p.p27_04}, {"p27_22", p.p27_22},
               {"p27_13", p.p27_13}, {"p27_C", p.p27_C}};
    } else {
      throw std::invalid_argument("decomposition needs grade 2 or 3");
    }
  } else if (structure == "spin7") {
    if (form.dim() != 8)
      throw std::invalid_argument("spin7 decomposition needs a dim-8 form");
    const Spin7& sp = Spin7::standard();
    CayleyFrame frame = CayleyFrame::standard();
    if (!split_file.empty()) {
      Json sj = read_json_file(split_file);
      Matrix g(8, 8);
      const Json& m = sj.at("matrix");
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          g(i, j) = parse_rational(m.at(i).at(j).get<std::string>());
      frame = CayleyFrame::from_matrix(sp, g);
    }
    Sph4Refine refine(sp, frame);
    if (form.grade() == 2) {
      const FormSpace& s2 = sp.space(2);
      parts = {{"p7_020", project(refine.p2_7_020(), s2, form)},
               {"p7_101", project(refine.p2_7_101(), s2, form)},
               {"p21_200", project(refine.p2_21_200(), s2, form)},
               {"p21_020", project(refine.p2_21_020(), s2, form)},
               {"p21_002", project(refine.p2_21_002(), s2, form)},
               {"p21_121", project(refine.p2_21_121(), s2, form)}};
    } else if (form.grade() == 3) {
      auto p = refine.refine3(form);
      parts = {{"p8K", p.p8K},         {"p8L", p.p8L},
               {"p48K", p.p48K},       {"p48L", p.p48L},
               {"p48_031", p.p031},    {"p48_211", p.p211},
               {"p48_130", p.p130},    {"p48_112", p.p112}};
    } else {
      throw std::invalid_argument("decomposition needs grade 2 or 3");
    }
  } else {
    throw std::invalid_argument("structure must be g2 or spin7");
  }
  emit(components_json(parts), json_path, quiet);
  return 0;
}

int cmd_torsion(const std::string& structure, const std::string& refined_file,
                bool symbolic, const std::string& json_path, bool quiet) {
  if (symbolic) {
    Json out = structure == "g2"
                   ? t_matrix_g2_to_json(G2Torsion::standard().t_solution())
                   : t_matrix_spin7_to_json(
                         Spin7Torsion::standard().t_solution());
    emit(out, json_path, quiet);
    return 0;
  }
  Json rj = read_json_file(refined_file);
  if (structure_of(rj) != structure)
    throw std::invalid_argument("file structure does not match --structure");
  Json out;
  if (structure == "g2") {
    auto rt = refined_g2_from_json(rj);
    out = t_matrix_g2_to_json(G2Torsion::standard().solve_T(rt));
  } else {
    auto rt = refined_spin7_from_json(rj);
    out = t_matrix_spin7_to_json(Spin7Torsion::standard().solve_T(rt));
  }
  emit(out, json_path, quiet);
  return 0;
}

int cmd_torsion_invert(const std::string& structure,
                       const std::string& t_file, const std::string& json_path,
                       bool quiet) {
  Json tj = read_json_file(t_file);
  Json out;
  if (structure == "g2") {
    auto t = t_matrix_g2_from_json(tj);
    out = refined_g2_to_json(G2Torsion::standard().invert_T(t));
  } else if (structure == "spin7") {
    auto t = t_matrix_spin7_from_json(tj);
    out = refined_spin7_to_json(Spin7Torsion::standard().invert_T(t));
  } else {
    throw std::invalid_argument("structure must be g2 or spin7");
  }
  emit(out, json_path, quiet);
  return 0;
}

int cmd_curvature(const std::string& kind, const std::string& refined_file,
                  const std::string& json_path, bool quiet) {
  Json rj = read_json_file(refined_file);
  Json out;
  if (kind == "assoc" || kind == "coassoc") {
    if (structure_of(rj) != "g2")
      throw std::invalid_argument(kind + " curvature needs a g2 torsion file");
    auto rt = refined_g2_from_json(rj);
    const G2Torsion& t = G2Torsion::standard();
    Multivector h = kind == "assoc" ? t.mean_curvature_associative(rt)
                                    : t.mean_curvature_coassociative(rt);
    auto rep = t.minimality_class(rt);
    out = Json{{"H", multivector_to_json(h)},
               {"minimality",
                Json{{"associative_minimal", rep.associative_minimal},
                     {"coassociative_minimal", rep.coassociative_minimal},
                     {"torsion_class", rep.torsion_class}}}};
  } else if (kind == "cayley") {
    if (structure_of(rj) != "spin7")
      throw std::invalid_argument("cayley curvature needs a spin7 torsion file");
    auto rt = refined_spin7_from_json(rj);
    const Spin7Torsion& t = Spin7Torsion::standard();
    Multivector h = t.mean_curvature_cayley(rt);
    auto rep = t.cayley_minimality(rt);
    Json pieces = Json::array();
    for (const auto& p : rep.nonzero_pieces) pieces.push_back(p);
    out = Json{{"H", multivector_to_json(h)},
               {"minimality",
                Json{{"torsion_free", rep.torsion_free},
                     {"mean_curvature_zero", rep.mean_curvature_zero},
                     {"nonzero_pieces", pieces}}}};
  } else {
    throw std::invalid_argument("kind must be assoc, coassoc or cayley");
  }
  emit(out, json_path, quiet);
  return 0;
}

int cmd_relations(const std::string& family_arg, const std::string& json_path,
                  bool quiet) {
  const FrameRelations& fr = family_arg == "assoc"     ? FrameRelations::assoc()
                             : family_arg == "coassoc" ? FrameRelations::coassoc()
                                                       : FrameRelations::cayley();
  Json rels = Json::array();
  for (const auto& r : fr.relations()) rels.push_back(r.str() + " = 0");
  Json h_raw = Json::array(), h_reduced = Json::array(),
       h_refined = Json::array();
  for (const auto& h : fr.h_raw()) h_raw.push_back(h.str());
  for (const auto& h : fr.h_reduced()) h_reduced.push_back(h.str());
  for (const auto& h : fr.h_refined()) h_refined.push_back(h.str());
  Json out{{"family", family_arg},
           {"relations", rels},
           {"relation_count", fr.relations().size()},
           {"pure_s_dimension", fr.pure_s_dimension()},
           {"reduction_steps", fr.reduction_steps()},
           {"mean_curvature",
            Json{{"raw", h_raw},
                 {"reduced", h_reduced},
                 {"refined", h_refined}}}};
  if (family_arg == "coassoc")
    out["obstruction_constraint"] = fr.obstruction_constraint().str() + " = 0";
  if (!quiet) {
    std::cout << family_arg << ": " << fr.relations().size()
              << " relations, pure-S dimension " << fr.pure_s_dimension()
              << ", " << fr.reduction_steps() << " reduction steps\n";
    for (size_t k = 0; k < fr.h_refined().size(); ++k)
      std::cout << "  H[" << k + 1 << "] = " << fr.h_refined()[k].str() << "\n";
    if (family_arg == "coassoc")
      std::cout << "  obstruction: " << fr.obstruction_constraint().str()
                << " = 0\n";
  }
  emit(out, json_path, true);
  return 0;
}

int cmd_obstruction(const std::string& refined_file,
                    const std::string& json_path, bool quiet) {
  Json rj = read_json_file(refined_file);
  if (structure_of(rj) != "g2")
    throw std::invalid_argument("the obstruction needs a g2 torsion file");
  auto rt = refined_g2_from_json(rj);
  Rational residual = G2Torsion::standard().coassoc_obstruction(rt);
  Json out{{"residual", to_string(residual)},
           {"verdict", is_zero(residual) ? "UNOBSTRUCTED" : "OBSTRUCTED"}};
  emit(out, json_path, quiet);
  if (!quiet && json_path.empty())
    std::cout.flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calibrated-geometry algebra"};
  app.require_subcommand(1);

  std::string suite = "all", structure = "g2", kind, json_path, split_file;
  std::string form_file, refined_file, t_file;
  bool quiet = false, symbolic = false;

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "g2, spin7 or all")
      ->check(CLI::IsMember({"g2", "spin7", "all"}));
  verify->add_option("--json", json_path, "write the machine report here");
  verify->add_flag("--quiet", quiet, "only print failures and typos");

  auto* decompose =
      app.add_subcommand("decompose", "split a form into refined components");
  decompose->add_option("--structure", structure, "g2 or spin7")
      ->check(CLI::IsMember({"g2", "spin7"}));
  decompose->add_option("form", form_file, "multivector JSON file")
      ->required();
  decompose->add_option("--split", split_file,
                        "optional frame matrix JSON ({\"matrix\": [[..]]})");
  decompose->add_option("--json", json_path, "write output here");
  decompose->add_flag("--quiet", quiet);

  auto* torsion =
      app.add_subcommand("torsion", "solve the torsion system for T");
  torsion->add_option("--structure", structure, "g2 or spin7")
      ->check(CLI::IsMember({"g2", "spin7"}));
  torsion->add_option("refined", refined_file, "refined torsion JSON file");
  torsion->add_flag("--symbolic", symbolic,
                    "emit the full symbolic solution instead");
  torsion->add_option("--json", json_path, "write output here");
  torsion->add_flag("--quiet", quiet);

  auto* invert = app.add_subcommand(
      "torsion-invert", "recover refined coefficients from a T matrix");
  invert->add_option("--structure", structure, "g2 or spin7")
      ->check(CLI::IsMember({"g2", "spin7"}));
  invert->add_option("tmatrix", t_file, "T matrix JSON file")->required();
  invert->add_option("--json", json_path, "write output here");
  invert->add_flag("--quiet", quiet);

  auto* curvature =
      app.add_subcommand("curvature", "mean curvature of a calibrated plane");
  curvature->add_option("--kind", kind, "assoc, coassoc or cayley")
      ->required()
      ->check(CLI::IsMember({"assoc", "coassoc", "cayley"}));
  curvature->add_option("refined", refined_file, "refined torsion JSON file")
      ->required();
  curvature->add_option("--json", json_path, "write output here");
  curvature->add_flag("--quiet", quiet);

  std::string family_arg = "assoc";
  auto* relations = app.add_subcommand(
      "relations", "emit the adapted-frame derivation report");
  relations->add_option("--family", family_arg, "assoc, coassoc or cayley")
      ->required()
      ->check(CLI::IsMember({"assoc", "coassoc", "cayley"}));
  relations->add_option("--json", json_path, "write the machine report here");
  relations->add_flag("--quiet", quiet);

  auto* obstruction = app.add_subcommand(
      "obstruction", "coassociative local-existence obstruction");
  obstruction->add_option("refined", refined_file, "g2 refined torsion JSON")
      ->required();
  obstruction->add_option("--json", json_path, "write output here");
  obstruction->add_flag("--quiet", quiet);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(suite, json_path, quiet);
    if (decompose->parsed())
      return cmd_decompose(structure, form_file, split_file, json_path, quiet);
    if (torsion->parsed()) {
      if (!symbolic && refined_file.empty()) {
        std::cerr << "error: a refined torsion file is required\n";
        return 2;
      }
      return cmd_torsion(structure, refined_file, symbolic, json_path, quiet);
    }
    if (invert->parsed())
      return cmd_torsion_invert(structure, t_file, json_path, quiet);
    if (curvature->parsed())
      return cmd_curvature(kind, refined_file, json_path, quiet);
    if (relations->parsed()) return cmd_relations(family_arg, json_path, quiet);
    if (obstruction->parsed())
      return cmd_obstruction(refined_file, json_path, quiet);
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
