#pragma once

#include "balcat/algebra/algebra.hpp"
#include "json.hpp"

namespace balcat {

/// "Q" or {"p": p}.
Field field_from_json(const nlohmann::json& j);
nlohmann::json field_to_json(const Field& f);

/// An integer or a "n/d" string.
Scalar scalar_from_json(const Field& f, const nlohmann::json& j);
nlohmann::json scalar_to_json(const Scalar& s);

Matrix matrix_from_json(const Field& f, const nlohmann::json& j, std::size_t rows,
                        std::size_t cols);
nlohmann::json matrix_to_json(const Matrix& m);

/// {"dim": n, "field": ..., "structure": n x n x n nested array, "unit": [...]}.
/// Throws ValidationError on malformed documents (axioms are not checked here).
FinAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const FinAlgebra& a);

}  // namespace balcat
