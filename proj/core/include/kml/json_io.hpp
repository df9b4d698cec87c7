#pragma once

#include <string>

#include <json.hpp>

#include "kml/affine.hpp"
#include "kml/cube.hpp"
#include "kml/graded.hpp"
#include "kml/k0.hpp"
#include "kml/lambda.hpp"
#include "kml/linalg.hpp"

namespace kml {

using Json = nlohmann::json;

/// Reads a file and parses it; SchemaError with path "" on malformed JSON.
Json loadJsonFile(const std::string& path);

// Loaders. `path` is the location of `j` inside the enclosing document and
// prefixes every SchemaError. Documents without a ring use `fallback`.
Ring ringFromJson(const Json& j, const std::string& path);
mpq_class scalarFromJson(const Json& j, const Ring& ring, const std::string& path);
/// Full literal {"ring","p","rows","cols","entries"} or a bare nested array.
Matrix matrixFromJson(const Json& j, const Ring& fallback, const std::string& path,
                      long rows = -1, long cols = -1);
/// Integer rank, {"free":r,"torsion":[...]} or {"generators":g,"relations":matrix}.
Module moduleFromJson(const Json& j, const Ring& ring, const std::string& path);
/// Validates the cube; a non-commuting square is a SchemaError at its boundary path.
SCube cubeFromJson(const Json& j, const Ring& fallback);
GradedModule gradedFromJson(const Json& j, const Ring& fallback);
AffineObject affineFromJson(const Json& j, const Ring& fallback);
/// List of generator matrices (columns span x_n), one per step.
FFiltration filtrationFromJson(const Json& j, const AffineObject& parent);

// Writers. Scalars are decimal strings so the output is exact.
Json toJson(const mpq_class& value);
Json toJson(const mpz_class& value);
Json toJson(const Matrix& m);
Json toJson(const ModulePresentation& p, const Ring& ring);
Json toJson(const Submodule& s);
Json toJson(const K0Vector& v);
Json toJson(const LaurentPolynomial& f);

}  // namespace kml
