#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "djk/admissible.hpp"
#include "djk/char_classes.hpp"
#include "djk/cx_structures.hpp"
#include "djk/higher_limits.hpp"
#include "djk/polynomial.hpp"
#include "djk/simplicial_complex.hpp"

// JSON formats shared by the CLI and the fixtures. All parse errors are
// reported as std::invalid_argument naming the offending field.
namespace djk::json_io {

using Json = nlohmann::ordered_json;

/// {"m": <int>, "facets": [[<int>...], ...]}, 1-based vertices.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& complex);

/// [[coefficient, [e_1, ..., e_m]], ...] in graded-lex order. Coefficients
/// outside the 64-bit range are written as decimal strings.
Json polynomial_to_json(const IntPolynomial& p);
Json polynomial_to_json(const SRPolynomial& p);
IntPolynomial int_polynomial_from_json(std::size_t m, const Json& j);
/// Parses and reduces into Z[K].
SRPolynomial polynomial_from_json(const SimplicialComplex& complex, const Json& j);

/// Row-major array of rows; entries are integers or strings such as "3/4".
/// `cols_if_empty` fixes the column count of an empty array.
ExactMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty = 0);
Json matrix_to_json(const ExactMatrix& a);
IntMatrix int_matrix_from_json(const Json& j, std::size_t cols_if_empty = 0);

/// {"complex": {...}, "oriented_facets": [[...]], "lambda": [[...]]}.
DicharacteristicPair pair_from_json(const Json& j);

/// {"complex": {...}, "ring": 0 | p, "values": [{"face": [...], "rank": r}],
///  "maps": [{"from": [...], "to": [...], "matrix": [[...]]}]}.
/// Faces without an entry have value 0; missing maps are zero.
AbFunctor functor_from_json(const Json& j);
Json functor_to_json(const AbFunctor& phi);

/// {"rank": r, "torsion": [...]}.
Json group_to_json(const AbGroup& g);

Json face_to_json(FaceSet f);
FaceSet face_from_json(const Json& j);

/// "+,-,+" (tokens "+", "-", "+1", "-1", "1") -> {1, -1, 1}.
std::vector<int> parse_signs(std::string_view text);
std::string format_signs(const std::vector<int>& signs);

/// "1,2,3" -> {1,2,3}; "" -> ∅.
FaceSet parse_face(std::string_view text);

}  // namespace djk::json_io
