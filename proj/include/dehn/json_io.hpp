#pragma once

#include "json.hpp"

#include "dehn/matrix.hpp"
#include "dehn/polynomial.hpp"
#include "dehn/ratfunc.hpp"

namespace dehn {

// Coefficients as exact decimal strings, constant term first.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

// {"num": [...], "den": [...], "text": "(...)/(...)"}; only num and den are
// read back.
nlohmann::json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);

// Row-major list of rows of RatFunc objects.
nlohmann::json matrix_to_json(const FieldMatrix& m);

}  // namespace dehn
