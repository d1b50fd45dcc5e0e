#pragma once

#include <json.hpp>

#include "cliffq/document.hpp"
#include "cliffq/linalg.hpp"
#include "cliffq/poly_matrix.hpp"

namespace cliffq::detail {

using nlohmann::json;

json to_json(const InputDocument& doc);
InputDocument document_from_json(const json& j);
json to_json(const PolyMatrix& m);
json to_json(const ScalarMatrix& m);
json field_json(Field f);

}  // namespace cliffq::detail
