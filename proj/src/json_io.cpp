#include "djk/json_io.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace djk::json_io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("field '" + field + "': " + what);
}

const Json& member(const Json& j, const char* key, const std::string& context) {
  if (!j.is_object()) fail(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(context.empty() ? key : context + "." + key, "missing");
  return *it;
}

int as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(field, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

mpz_class integer_value(const Json& j, const std::string& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    return mpz_class(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) fail(field, "'" + j.get<std::string>() + "' is not an integer");
    return v;
  }
  fail(field, "expected an integer or integer string");
}

mpq_class rational_value(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return mpq_class(integer_value(j, field));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0) fail(field, "'" + s + "' is not an exact rational");
    v.canonicalize();
    return v;
  }
  fail(field, "expected an integer or a rational string like \"3/4\"");
}

Json coefficient_json(const mpz_class& c) {
  if (c.fits_slong_p()) return Json(static_cast<long long>(c.get_si()));
  return Json(c.get_str());
}

template <typename T, typename Parse>
DenseMatrix<T> dense_from_json(const Json& j, std::size_t cols_if_empty, Parse parse) {
  if (!j.is_array()) fail("matrix", "expected an array of rows");
  if (j.empty()) return DenseMatrix<T>(0, cols_if_empty);
  const std::size_t rows = j.size();
  if (!j[0].is_array()) fail("matrix[0]", "expected an array");
  const std::size_t cols = j[0].size();
  DenseMatrix<T> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rf = "matrix[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(rf, "expected an array");
    if (j[i].size() != cols) fail(rf, "row length " + std::to_string(j[i].size()) + " differs from " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = parse(j[i][c], rf + "[" + std::to_string(c) + "]");
  }
  return out;
}

}  // namespace

Json face_to_json(FaceSet f) { return Json(f.vertices()); }

FaceSet face_from_json(const Json& j) {
  const auto vs = int_list(j, "face");
  for (int v : vs) {
    if (v < 1 || v > kMaxVertices) fail("face", "vertex " + std::to_string(v) + " outside [1, 64]");
  }
  return FaceSet::from_vertices(vs);
}

SimplicialComplex complex_from_json(const Json& j) {
  const int m = as_int(member(j, "m", ""), "m");
  if (m <= 0) fail("m", "must be positive");
  if (m > kMaxVertices) fail("m", "must not exceed 64");
  const Json& facets = member(j, "facets", "");
  if (!facets.is_array()) fail("facets", "expected an array of vertex lists");
  std::vector<std::vector<int>> lists;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string field = "facets[" + std::to_string(i) + "]";
    auto vs = int_list(facets[i], field);
    for (int v : vs) {
      if (v < 1 || v > m) fail(field, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(m) + "]");
    }
    lists.push_back(std::move(vs));
  }
  try {
    return SimplicialComplex::from_facets(m, lists);
  } catch (const std::invalid_argument& e) {
    fail("facets", e.what());
  }
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json facets = Json::array();
  for (FaceSet f : complex.facets()) facets.push_back(face_to_json(f));
  return Json{{"m", complex.vertex_count()}, {"facets", facets}};
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) out.push_back(Json::array({coefficient_json(c), Json(mono.exponents())}));
  return out;
}

Json polynomial_to_json(const SRPolynomial& p) { return polynomial_to_json(p.raw()); }

IntPolynomial int_polynomial_from_json(std::size_t m, const Json& j) {
  if (!j.is_array()) fail("polynomial", "expected an array of [coefficient, exponents] pairs");
  IntPolynomial p(m);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string field = "polynomial[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) fail(field, "expected [coefficient, [exponents]]");
    const mpz_class c = integer_value(j[i][0], field + "[0]");
    const Json& ej = j[i][1];
    if (!ej.is_array()) fail(field + "[1]", "expected an exponent array");
    if (ej.size() != m) fail(field + "[1]", "exponent vector has length " + std::to_string(ej.size()) + ", expected " + std::to_string(m));
    std::vector<std::uint32_t> e;
    for (std::size_t k = 0; k < ej.size(); ++k) {
      const int v = as_int(ej[k], field + "[1][" + std::to_string(k) + "]");
      if (v < 0) fail(field + "[1]", "negative exponent");
      e.push_back(static_cast<std::uint32_t>(v));
    }
    p.add_term(Monomial(std::move(e)), c);
  }
  return p;
}

SRPolynomial polynomial_from_json(const SimplicialComplex& complex, const Json& j) {
  return reduce(complex, int_polynomial_from_json(complex.vertex_count(), j));
}

ExactMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty) {
  return dense_from_json<mpq_class>(j, cols_if_empty, rational_value);
}

Json matrix_to_json(const ExactMatrix& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (const auto& v : a.row(i)) row.push_back(v.get_str());
    out.push_back(row);
  }
  return out;
}

IntMatrix int_matrix_from_json(const Json& j, std::size_t cols_if_empty) {
  return dense_from_json<mpz_class>(j, cols_if_empty, integer_value);
}

DicharacteristicPair pair_from_json(const Json& j) {
  SimplicialComplex complex = complex_from_json(member(j, "complex", ""));
  const Json& of = member(j, "oriented_facets", "");
  if (!of.is_array()) fail("oriented_facets", "expected an array of ordered vertex lists");
  std::vector<std::vector<int>> tuples;
  for (std::size_t i = 0; i < of.size(); ++i) {
    const std::string field = "oriented_facets[" + std::to_string(i) + "]";
    auto t = int_list(of[i], field);
    for (int v : t) {
      if (v < 1 || v > complex.vertex_count()) fail(field, "vertex " + std::to_string(v) + " out of range");
    }
    tuples.push_back(std::move(t));
  }
  IntMatrix lambda;
  try {
    lambda = int_matrix_from_json(member(j, "lambda", ""), static_cast<std::size_t>(complex.vertex_count()));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("lambda: ") + e.what());
  }
  return {std::move(complex), std::move(tuples), std::move(lambda)};
}

AbFunctor functor_from_json(const Json& j) {
  SimplicialComplex complex = complex_from_json(member(j, "complex", ""));
  Ring ring = Ring::integers();
  if (j.contains("ring")) {
    const int p = as_int(j["ring"], "ring");
    if (p < 0) fail("ring", "must be 0 or a prime");
    ring = p == 0 ? Ring::integers() : Ring::prime_field(static_cast<std::uint32_t>(p));
  }
  std::map<FaceSet, std::size_t> ranks;
  if (j.contains("values")) {
    const Json& values = j["values"];
    if (!values.is_array()) fail("values", "expected an array");
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string field = "values[" + std::to_string(i) + "]";
      const FaceSet face = face_from_json(member(values[i], "face", field));
      const int r = as_int(member(values[i], "rank", field), field + ".rank");
      if (r < 0) fail(field + ".rank", "must be non-negative");
      if (!complex.is_face(face)) fail(field + ".face", face.to_string() + " is not a face");
      ranks[face] = static_cast<std::size_t>(r);
    }
  }
  std::map<AbFunctor::CoverKey, IntMatrix> covers;
  if (j.contains("maps")) {
    const Json& maps = j["maps"];
    if (!maps.is_array()) fail("maps", "expected an array");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const std::string field = "maps[" + std::to_string(i) + "]";
      const FaceSet from = face_from_json(member(maps[i], "from", field));
      const FaceSet to = face_from_json(member(maps[i], "to", field));
      auto rank_of = [&](FaceSet f) {
        auto it = ranks.find(f);
        return it == ranks.end() ? std::size_t{0} : it->second;
      };
      IntMatrix mat;
      try {
        mat = int_matrix_from_json(member(maps[i], "matrix", field), rank_of(from));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(field + ".matrix: " + e.what());
      }
      covers[{from, to}] = std::move(mat);
    }
  }
  return AbFunctor(std::move(complex), ring, std::move(ranks), std::move(covers));
}

Json functor_to_json(const AbFunctor& phi) {
  Json values = Json::array();
  for (const auto& [face, r] : phi.ranks()) values.push_back(Json{{"face", face_to_json(face)}, {"rank", r}});
  Json maps = Json::array();
  for (const auto& [key, mat] : phi.covers()) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      Json row = Json::array();
      for (const auto& v : mat.row(i)) row.push_back(coefficient_json(v));
      rows.push_back(row);
    }
    maps.push_back(Json{{"from", face_to_json(key.first)}, {"to", face_to_json(key.second)}, {"matrix", rows}});
  }
  return Json{{"complex", complex_to_json(phi.complex())},
              {"ring", phi.ring().characteristic},
              {"values", values},
              {"maps", maps}};
}

Json group_to_json(const AbGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion()) torsion.push_back(coefficient_json(t));
  return Json{{"rank", g.rank()}, {"torsion", torsion}};
}

std::vector<int> parse_signs(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (tok == "+" || tok == "+1" || tok == "1") {
      out.push_back(1);
    } else if (tok == "-" || tok == "-1") {
      out.push_back(-1);
    } else {
      throw std::invalid_argument("sign list: token '" + std::string(tok) + "' is not + or -");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_signs(const std::vector<int>& signs) {
  std::string s;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i > 0) s += ',';
    s += signs[i] > 0 ? '+' : '-';
  }
  return s;
}

FaceSet parse_face(std::string_view text) {
  std::vector<int> vs;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view tok = text.substr(start, comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("face list: '" + std::string(tok) + "' is not a vertex index");
    }
    if (v < 1 || v > kMaxVertices) throw std::invalid_argument("face list: vertex " + std::to_string(v) + " out of range");
    vs.push_back(v);
    start = comma + 1;
  }
  return FaceSet::from_vertices(vs);
}

}  // namespace djk::json_io
