#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"
#include "obsalg/algebra.hpp"

namespace obsalg {

using Json = nlohmann::ordered_json;
using AnyAlgebra = std::variant<TwoProductAlgebra, AssocAlgebra>;

/// Scalars are written as "p/q" strings, complex ones as {"re": .., "im": ..}.
Json scalar_to_json(const Scalar& s);
/// Accepts "p/q" or decimal strings, JSON numbers, and {"re", "im"} objects.
Scalar scalar_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Algebra documents: a "product" key selects AssocAlgebra, otherwise the
/// document describes a TwoProductAlgebra ("bracket" and "tau").
/// Throws ParseError, SymmetryViolation, ZeroUnit, DimensionMismatch.
AnyAlgebra load_algebra(const Json& doc);
AnyAlgebra load_algebra_string(const std::string& text);
AnyAlgebra load_algebra_file(const std::filesystem::path& path);

TwoProductAlgebra load_two_product(const Json& doc);
AssocAlgebra load_assoc(const Json& doc);

/// Sparse triples: bracket with i < j, tau with i <= j, product complete.
Json to_json(const TwoProductAlgebra& alg);
Json to_json(const AssocAlgebra& alg);
Json to_json(const AnyAlgebra& alg);

const std::string& label_of(const AnyAlgebra& alg);
std::size_t dim_of(const AnyAlgebra& alg);

}  // namespace obsalg
