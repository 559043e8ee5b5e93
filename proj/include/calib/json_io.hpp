#pragma once

#include <string>

#include <json.hpp>

#include "calib/g2_torsion.hpp"
#include "calib/spin7_torsion.hpp"

namespace calib {

// sorted keys keep every emitted document byte-deterministic
using Json = nlohmann::json;

Json multivector_to_json(const Multivector& m);
Multivector multivector_from_json(const Json& j);

// radical-scaled vectors carry the common squarefree root on each coefficient
Json radical_vector_to_json(const RadicalVector<Rational>& v);

Json refined_g2_to_json(const RefinedTorsionG2& rt);
RefinedTorsionG2 refined_g2_from_json(const Json& j);
Json refined_spin7_to_json(const RefinedTorsionSpin7& rt);
RefinedTorsionSpin7 refined_spin7_from_json(const Json& j);

// {"structure": "...", ...} dispatch helper
std::string structure_of(const Json& j);

Json param_expr_to_json(const ParamExpr& e);
ParamExpr param_expr_from_json(const Json& j);

Json t_matrix_g2_to_json(const TorsionMatrixG2& t);
Json t_matrix_g2_to_json(const std::array<std::array<Rational, 7>, 7>& t);
std::array<std::array<Rational, 7>, 7> t_matrix_g2_from_json(const Json& j);
Json t_matrix_spin7_to_json(const TorsionMatrixSpin7& t);
Json t_matrix_spin7_to_json(const std::array<std::array<Rational, 8>, 7>& t);
std::array<std::array<Rational, 8>, 7> t_matrix_spin7_from_json(const Json& j);

}  // namespace calib
