#pragma once

#include <string>

#include "json.hpp"

#include "slicealg/algebra.hpp"

namespace slicealg {

/// {"dimension", "unit_index", "labels", "structure_constants": [[[...]]]}.
/// Integral constants are written as JSON integers so builtin algebras
/// round-trip bit-exactly.
nlohmann::json algebra_to_json(const Algebra& alg);
Algebra algebra_from_json(const nlohmann::json& j, double tol = kDefaultTolerance);

/// Parses text; syntax errors become ParseError carrying line and column.
Algebra algebra_from_json_text(const std::string& text, double tol = kDefaultTolerance);

/// Resolves "clifford p q", "quaternions", "complex", "reals", or a path to
/// an algebra JSON file.
Algebra resolve_algebra(const std::string& name, double tol = kDefaultTolerance);

nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j, int dimension);

}  // namespace slicealg
