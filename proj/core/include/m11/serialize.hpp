#pragma once

#include "m11/classify.hpp"
#include "m11/generic.hpp"
#include "m11/linalg.hpp"

#include <nlohmann/json.hpp>

namespace m11 {

/// Term records {"coeff": "p/q", "even": [e_1..e_2k], "odd": [bit indices]}.
/// Even slots run x1..xk, x1'..xk'; odd indices are 0-based positions in the
/// order y1..yk, y1'..yk'. Records appear in canonical term order.
nlohmann::json to_json(const SuperPoly& p);

/// Inverse of to_json(SuperPoly) in context k; throws std::invalid_argument
/// on malformed input.
SuperPoly poly_from_json(const nlohmann::json& j, int k);

/// {"entries": [[a11, a12], [a21, a22]], "k": k}
nlohmann::json to_json(const SuperMatrix& m);

nlohmann::json to_json(const KernelBasis& kb);

nlohmann::json to_json(const Verdict& v);

}  // namespace m11
