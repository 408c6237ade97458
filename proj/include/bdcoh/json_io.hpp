#pragma once

#include <json.hpp>

#include "bdcoh/cocycles.hpp"

namespace bdcoh {

using Json = nlohmann::ordered_json;

Json spec_to_json(const TowerSpec& spec);
TowerSpec spec_from_json(const Json& j);

Json elem_to_json(const TowerElem& e);
TowerElem elem_from_json(const Json& j);

Json matrix_to_json(const MatK& m);
MatK matrix_from_json(const Json& j);

Json tensor2_to_json(const Tensor2& t);
Tensor2 tensor2_from_json(const Json& j);

Json tensor3_to_json(const Tensor3& t);

Json triple_to_json(const AdmissibleTriple& t);
AdmissibleTriple triple_from_json(const Json& j);

Json cocycle_to_json(const DiagCocycle& c, const Rational& d);

}  // namespace bdcoh
