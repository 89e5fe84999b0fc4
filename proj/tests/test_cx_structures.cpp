#include <doctest.h>

#include <algorithm>
#include <set>

#include "djk/char_classes.hpp"
#include "djk/cx_structures.hpp"
#include "support.hpp"

using namespace djk;
using djk::testing::square;
using djk::testing::tetra_boundary;
using djk::testing::triangle;

namespace {

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
  }
  return a;
}

DicharacteristicPair cp2_pair() {
  return {triangle(), {{1, 2}, {2, 3}, {3, 1}}, int_matrix({{1, 0, -1}, {0, 1, -1}})};
}

bool consistent_with(const SignFunction& omega, const Realization& r) {
  const auto wf = omega_from_f(omega.complex(), r.f);
  for (std::size_t j = 0; j < omega.size(); ++j) {
    if (omega.values()[j] != r.epsilon * wf.values()[j]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("omega_f") {
  const auto t = triangle();
  const auto w = omega_from_f(t, VertexSign({-1, 1, 1}));
  CHECK(w(FaceSet{1, 2}) == -1);
  CHECK(w(FaceSet{1, 3}) == -1);
  CHECK(w(FaceSet{2, 3}) == 1);
  CHECK(omega_from_f(t, VertexSign::all_plus(3)) == SignFunction::all_plus(t));
  const auto b = tetra_boundary();
  std::set<std::vector<int>> images;
  for (std::uint64_t bits = 0; bits < 16; ++bits) images.insert(omega_from_f(b, VertexSign::from_bits(4, bits)).values());
  CHECK(images.size() == 16);
}

TEST_CASE("omega is a group homomorphism") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 8);
    const auto k = djk::testing::random_complex(rng, m, 4, 6);
    const auto mask = (std::uint64_t{1} << m) - 1;
    const auto f = VertexSign::from_bits(m, rng() & mask);
    const auto g = VertexSign::from_bits(m, rng() & mask);
    CHECK(omega_from_f(k, f * g) == omega_from_f(k, f) * omega_from_f(k, g));
  }
}

TEST_CASE("realizability examples") {
  const auto t = triangle();
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const auto w = SignFunction::from_bits(t, bits);
    const auto r = realizable(w);
    CHECK(r.has_value() == (w.minus_count() % 2 == 0));
    if (r) CHECK(consistent_with(w, *r));
  }
  const auto plus = realizable(SignFunction::all_plus(t));
  REQUIRE(plus);
  CHECK(plus->epsilon == 1);
  CHECK(plus->f == VertexSign::all_plus(3));
  // Signs (-,+,+,-) on {1,2},{2,3},{3,4},{1,4}; lex order is {1,2},{1,4},{2,3},{3,4}.
  const auto s = square();
  const auto r = realizable(SignFunction(s, {-1, -1, 1, 1}));
  REQUIRE(r);
  CHECK(r->epsilon == 1);
  CHECK(r->f == VertexSign({1, -1, -1, -1}));
}

TEST_CASE("structure counts for the small examples") {
  const auto t = triangle();
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const auto w = SignFunction::from_bits(t, bits);
    CHECK(count_structures(w) == (w.minus_count() % 2 == 0 ? 2 : 0));
    CHECK(count_structures(w) == count_structures_brute(w));
  }
  const auto s = square();
  int twos = 0;
  int zeros = 0;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const auto w = SignFunction::from_bits(s, bits);
    const auto c = count_structures(w);
    CHECK(c == count_structures_brute(w));
    if (c == 2) ++twos;
    if (c == 0) ++zeros;
  }
  CHECK(twos == 8);
  CHECK(zeros == 8);
  const auto b = tetra_boundary();
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const auto w = SignFunction::from_bits(b, bits);
    CHECK(count_structures(w) == 2);
    CHECK(count_structures_brute(w) == 2);
  }
  const auto d1 = SimplicialComplex::full_simplex(1);
  CHECK(count_structures(SignFunction::all_plus(d1)) == 2);
  CHECK(count_structures_brute(SignFunction::all_plus(d1)) == 2);
}

TEST_CASE("unoriented counts include -omega") {
  const auto s = square();
  // ω ≡ + is ω_f for f ≡ ±1 and -ω_f for the two alternating f.
  CHECK(count_structures(SignFunction::all_plus(s), Equivalence::unoriented) == 4);
  CHECK(count_structures_brute(SignFunction::all_plus(s), Equivalence::unoriented) == 4);
  // Even n: ω_f and -ω_f differ, so the unoriented count splits in two.
  const auto t = triangle();
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const auto w = SignFunction::from_bits(t, bits);
    CHECK(count_structures(w, Equivalence::unoriented) == count_structures(w) + count_structures(-w));
  }
  // Odd n: ω_{-f} = -ω_f, so both modes agree.
  const auto b = tetra_boundary();
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const auto w = SignFunction::from_bits(b, bits);
    CHECK(count_structures(w, Equivalence::unoriented) == count_structures(w));
  }
}

TEST_CASE("solver agrees with exhaustive search") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 10);
    const auto k = djk::testing::random_complex(rng, m, 4, 7);
    const auto t = k.top_faces().size();
    for (int rep = 0; rep < 4; ++rep) {
      const auto w = SignFunction::from_bits(k, t >= 64 ? rng() : rng() & ((std::uint64_t{1} << t) - 1));
      for (auto mode : {Equivalence::oriented, Equivalence::unoriented}) {
        const auto c = count_structures(w, mode);
        CHECK(c == count_structures_brute(w, mode));
        const auto r = realizable(w, mode);
        CHECK(r.has_value() == (c > 0));
        if (r) {
          CHECK(consistent_with(w, *r));
          if (mode == Equivalence::oriented) CHECK((r->epsilon == 1 || k.n() % 2 == 1));
        }
      }
    }
  }
}

TEST_CASE("sign symmetry") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 8);
    const auto k = djk::testing::random_complex(rng, m, 4, 6);
    const auto t = k.top_faces().size();
    const auto w = SignFunction::from_bits(k, rng() & ((std::uint64_t{1} << t) - 1));
    CHECK(realizable(w, Equivalence::unoriented).has_value() == realizable(-w, Equivalence::unoriented).has_value());
    CHECK(count_structures(w, Equivalence::unoriented) == count_structures(-w, Equivalence::unoriented));
    if (k.n() % 2 == 1) {
      CHECK(realizable(w).has_value() == realizable(-w).has_value());
      CHECK(count_structures(w) == count_structures(-w));
    }
  }
}

TEST_CASE("brute force refuses large vertex counts") {
  const auto k = SimplicialComplex::full_simplex(21);
  CHECK_THROWS_AS(count_structures_brute(SignFunction::all_plus(k)), std::invalid_argument);
  // n is odd, so every f gives ±ω.
  CHECK(count_structures(SignFunction::all_plus(k)) == mpz_class(1) << 21);
}

TEST_CASE("stable range") {
  const auto b = tetra_boundary();
  CHECK(stable_count(b, b.n() + 1) == 16);
  CHECK(stable_count(square(), 3) == 16);
  CHECK(stable_count(SimplicialComplex::full_simplex(1), 2) == 2);
  CHECK_THROWS_AS(stable_count(b, b.n()), std::invalid_argument);
  CHECK(stable_count(SimplicialComplex::full_simplex(40), 41) == mpz_class(1) << 40);
}

TEST_CASE("distinct Chern classes c_f match the non-ghost vertex count") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const auto k = djk::testing::random_complex(rng, m, 3, 4);
    std::set<std::string> classes;
    std::set<std::string> linear_parts;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      const auto c = chern_f(k, VertexSign::from_bits(m, bits));
      classes.insert(c.to_string());
      linear_parts.insert(c.graded_component(2).to_string());
    }
    const auto expected = std::size_t{1} << k.vertex_set().size();
    CHECK(classes.size() == expected);
    CHECK(linear_parts.size() == expected);
    if (k.vertex_set() == k.ambient()) CHECK(mpz_class(static_cast<unsigned long>(classes.size())) == stable_count(k, k.n() + 1));
  }
}

TEST_CASE("dicharacteristic pairs") {
  const auto v = validate_pair(cp2_pair());
  CHECK(v.signs == SignFunction::all_plus(triangle()));
  CHECK(v.euler == euler_omega(SignFunction::all_plus(triangle())));
  CHECK(pair_admits_complex_structure(cp2_pair()));
  const auto w = pair_complex_structure(cp2_pair());
  REQUIRE(w);
  CHECK(w->epsilon == 1);
  CHECK(w->f == VertexSign::all_plus(3));

  const DicharacteristicPair id{SimplicialComplex::full_simplex(2), {{1, 2}}, int_matrix({{1, 0}, {0, 1}})};
  CHECK(validate_pair(id).signs.values() == std::vector<int>{1});
}

TEST_CASE("orientation changes act on determinants by the permutation sign") {
  std::mt19937_64 rng(35);
  const IntMatrix lambda = int_matrix({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  const auto b = tetra_boundary();
  std::vector<std::vector<int>> base{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  const auto ref = validate_pair({b, base, lambda}).signs;
  for (int trial = 0; trial < 30; ++trial) {
    auto tuples = base;
    std::vector<int> parity(4, 1);
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      std::vector<int> perm{0, 1, 2};
      std::shuffle(perm.begin(), perm.end(), rng);
      int inversions = 0;
      for (int a = 0; a < 3; ++a) {
        for (int c = a + 1; c < 3; ++c) inversions += perm[a] > perm[c];
      }
      parity[j] = inversions % 2 == 0 ? 1 : -1;
      std::vector<int> t(3);
      for (int a = 0; a < 3; ++a) t[a] = base[j][perm[a]];
      tuples[j] = t;
    }
    const auto got = validate_pair({b, tuples, lambda}).signs;
    for (std::size_t j = 0; j < 4; ++j) CHECK(got.values()[j] == parity[j] * ref.values()[j]);
  }
}

TEST_CASE("pairs built from omega_f always admit a structure") {
  const auto t = triangle();
  const auto sorted = validate_pair({t, {{1, 2}, {1, 3}, {2, 3}}, cp2_pair().lambda}).signs;
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const auto wf = omega_from_f(t, VertexSign::from_bits(3, bits));
    std::vector<std::vector<int>> tuples;
    const auto& tops = t.top_faces();
    for (std::size_t j = 0; j < tops.size(); ++j) {
      auto vs = tops[j].vertices();
      if (sorted.values()[j] != wf.values()[j]) std::swap(vs[0], vs[1]);
      tuples.push_back(vs);
    }
    const DicharacteristicPair pair{t, tuples, cp2_pair().lambda};
    CHECK(validate_pair(pair).signs == wf);
    CHECK(pair_admits_complex_structure(pair));
  }
}

TEST_CASE("pair validation errors") {
  const auto t = triangle();
  const auto lambda = cp2_pair().lambda;
  try {
    validate_pair({t, {{1, 2}, {2, 3}, {3, 1}}, int_matrix({{1, 0, 1}, {0, 1, 2}})});
    FAIL("expected a unimodularity failure");
  } catch (const PairValidationError& e) {
    CHECK(e.face() == FaceSet{1, 3});
    CHECK(e.determinant() == -2);
  }
  CHECK_THROWS_AS(validate_pair({t, {{1, 2}, {2, 3}, {3, 1}}, int_matrix({{2, 0, -1}, {0, 1, -1}})}), std::domain_error);
  CHECK_THROWS_AS(validate_pair({t, {{1, 2}, {2, 3}}, lambda}), std::invalid_argument);
  CHECK_THROWS_AS(validate_pair({t, {{1, 2}, {2, 3}, {1, 2}}, lambda}), std::invalid_argument);
  CHECK_THROWS_AS(validate_pair({t, {{1, 2}, {2, 3}, {1, 1}}, lambda}), std::invalid_argument);
  CHECK_THROWS_AS(validate_pair({t, {{1, 2}, {2, 3}, {1, 3, 2}}, lambda}), std::invalid_argument);
  CHECK_THROWS_AS(validate_pair({t, {{1, 2}, {2, 3}, {3, 1}}, int_matrix({{1, 0}, {0, 1}})}), std::invalid_argument);
  const auto np = SimplicialComplex::from_facets(4, {{1, 2, 3}, {3, 4}});
  CHECK_THROWS_AS(validate_pair({np, {{1, 2, 3}}, int_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})}),
                  std::invalid_argument);
}
