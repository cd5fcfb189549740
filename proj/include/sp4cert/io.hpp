#pragma once

#include <string>

#include "json.hpp"
#include "sp4cert/classify.hpp"
#include "sp4cert/lie_struct.hpp"

namespace sp4cert {

// Parses JSON text; syntax errors become ParseError with line and column.
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json read_json_file(const std::string& path);

// 4 rows of 4 Rational strings.
nlohmann::json mat_to_json(const Mat4& m);
Mat4 mat_from_json(const nlohmann::json& j);

// {"ambient": "sp4", "basis": [matrix, ...]}; the basis must lie in sp(4).
nlohmann::json subalgebra_to_json(const Subalgebra& s);
Subalgebra subalgebra_from_json(const nlohmann::json& j);

// An element file is either a bare matrix or {"matrix": matrix}.
Mat4 element_from_json(const nlohmann::json& j);

nlohmann::json signature_to_json(const InvariantSignature& s);

}  // namespace sp4cert
