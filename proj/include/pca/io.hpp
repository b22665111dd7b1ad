#pragma once

// JSON documents for fields, algebras, quivers and towers. Scalars are
// written in their canonical text form, so serialize(parse(doc)) reproduces
// a serialized document byte for byte.

#include <string>

#include <json.hpp>

#include "pca/algebra.hpp"
#include "pca/tower.hpp"

namespace pca::io {

using Json = nlohmann::json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

// Descriptors: QQ, GF(p), GF(p)(t), and <base>[x]/(<monic polynomial in x>),
// e.g. "GF(2)[x]/(x^2+x+1)" or "GF(2)(t)[x]/(x^2+t)".
Field parse_field(const std::string& descriptor);
Polynomial parse_polynomial(const Field& f, const std::string& text, const std::string& var = "x");

Scalar scalar_from_json(const Field& f, const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Field& f, const Json& j);
// Row-major list of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j, Index rows, Index cols);

Json algebra_to_json(const FinAlg& a);
FinAlg algebra_from_json(const Json& j);

Json quiver_to_json(const QuiverSpec& q);
QuiverSpec quiver_from_json(const Field& f, const Json& j);

Json tower_to_json(const Tower& t);
Tower tower_from_json(const Json& j);

// Parse errors surface as Error(Parse).
Json parse_document(const std::string& text);
std::string read_file(const std::string& path);
std::string dump(const Json& j);

}  // namespace pca::io
