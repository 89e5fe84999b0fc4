#include "djk/cx_structures.hpp"

#include <algorithm>
#include <set>

namespace djk {

SignFunction omega_from_f(const SimplicialComplex& complex, const VertexSign& f) {
  if (f.size() != complex.vertex_count()) throw std::invalid_argument("vertex sign length differs from m");
  std::vector<int> s;
  s.reserve(complex.top_faces().size());
  for (FaceSet mu : complex.top_faces()) s.push_back(f.product_over(mu));
  return SignFunction(complex, std::move(s));
}

Gf2System structure_system(const SignFunction& omega, Equivalence mode) {
  const auto& complex = omega.complex();
  const std::size_t unknowns = static_cast<std::size_t>(complex.vertex_count()) + 1;
  Gf2System system(unknowns);
  const auto& top = complex.top_faces();
  for (std::size_t j = 0; j < top.size(); ++j) {
    Gf2Vector row(unknowns);
    row.set(0);
    for (int v : top[j].vertices()) row.set(static_cast<std::size_t>(v));
    system.add_equation(std::move(row), omega.values()[j] < 0);
  }
  if (mode == Equivalence::oriented && complex.n() % 2 == 0) {
    Gf2Vector pin(unknowns);
    pin.set(0);
    system.add_equation(std::move(pin), false);
  }
  return system;
}

std::optional<Realization> realizable(const SignFunction& omega, Equivalence mode) {
  auto solution = structure_system(omega, mode).least_solution();
  if (!solution) return std::nullopt;
  const int m = omega.complex().vertex_count();
  std::vector<int> f(m, 1);
  for (int i = 1; i <= m; ++i) {
    if (solution->get(static_cast<std::size_t>(i))) f[i - 1] = -1;
  }
  return Realization{solution->get(0) ? -1 : 1, VertexSign(std::move(f))};
}

mpz_class count_structures(const SignFunction& omega, Equivalence mode) {
  const auto system = structure_system(omega, mode);
  const auto reduced = system.reduce();
  if (!reduced.consistent) return 0;
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), 2, system.unknowns() - reduced.rank);
  return count;
}

mpz_class count_structures_brute(const SignFunction& omega, Equivalence mode) {
  const auto& complex = omega.complex();
  const int m = complex.vertex_count();
  if (m > 20) throw std::invalid_argument("count_structures_brute: m = " + std::to_string(m) + " exceeds 20");
  const SignFunction negated = -omega;
  mpz_class count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const VertexSign f = VertexSign::from_bits(m, bits);
    const SignFunction wf = omega_from_f(complex, f);
    bool hit = false;
    if (mode == Equivalence::oriented) {
      hit = wf == omega || omega_from_f(complex, -f) == omega;
    } else {
      hit = wf == omega || wf == negated;
    }
    if (hit) ++count;
  }
  return count;
}

mpz_class stable_count(const SimplicialComplex& complex, int s) {
  if (s <= complex.n()) {
    throw std::invalid_argument("stable_count: s = " + std::to_string(s) + " must exceed n = " + std::to_string(complex.n()));
  }
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), 2, static_cast<unsigned long>(complex.vertex_count()));
  return count;
}

PairValidationError::PairValidationError(FaceSet face, mpz_class det)
    : std::domain_error("facet " + face.to_string() + " has det Lambda_mu = " + det.get_str() + ", expected +1 or -1"),
      face_(face),
      det_(std::move(det)) {}

ValidatedPair validate_pair(const DicharacteristicPair& pair) {
  const auto& complex = pair.complex;
  const int n = complex.n();
  const int m = complex.vertex_count();
  if (!complex.is_pure()) throw std::invalid_argument("dicharacteristic pair: complex is not pure");
  if (pair.lambda.rows() != static_cast<std::size_t>(n) || pair.lambda.cols() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("dicharacteristic pair: lambda is " + std::to_string(pair.lambda.rows()) + "x" +
                                std::to_string(pair.lambda.cols()) + ", expected " + std::to_string(n) + "x" +
                                std::to_string(m));
  }
  const auto& top = complex.top_faces();
  if (pair.oriented_facets.size() != top.size()) {
    throw std::invalid_argument("dicharacteristic pair: oriented_facets lists " +
                                std::to_string(pair.oriented_facets.size()) + " facets, complex has " +
                                std::to_string(top.size()));
  }

  std::vector<int> signs(top.size(), 0);
  for (const auto& tuple : pair.oriented_facets) {
    std::set<int> distinct(tuple.begin(), tuple.end());
    if (distinct.size() != tuple.size()) throw std::invalid_argument("dicharacteristic pair: repeated vertex in an oriented facet");
    const FaceSet face = FaceSet::from_vertices(tuple);
    auto it = std::lower_bound(top.begin(), top.end(), face);
    if (it == top.end() || !(*it == face)) {
      throw std::invalid_argument("dicharacteristic pair: oriented facet " + face.to_string() + " is not a top face");
    }
    const std::size_t j = static_cast<std::size_t>(it - top.begin());
    if (signs[j] != 0) throw std::invalid_argument("dicharacteristic pair: facet " + face.to_string() + " listed twice");

    std::vector<std::size_t> cols;
    for (int v : tuple) cols.push_back(static_cast<std::size_t>(v - 1));
    const mpz_class det = determinant(select_columns(pair.lambda, cols));
    if (det != 1 && det != -1) throw PairValidationError(face, det);
    signs[j] = det > 0 ? 1 : -1;
  }
  SignFunction omega(complex, std::move(signs));
  SRPolynomial euler = euler_omega(omega);
  return {std::move(omega), std::move(euler)};
}

std::optional<Realization> pair_complex_structure(const DicharacteristicPair& pair) {
  return realizable(validate_pair(pair).signs, Equivalence::unoriented);
}

bool pair_admits_complex_structure(const DicharacteristicPair& pair) { return pair_complex_structure(pair).has_value(); }

}  // namespace djk
