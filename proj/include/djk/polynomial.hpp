#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "djk/simplicial_complex.hpp"

namespace djk {

/// Exponent vector over the variables v_1..v_m. Each v_i has cohomological
/// degree 2.
class Monomial {
 public:
  /// The unit monomial in m variables.
  explicit Monomial(std::size_t m) : exponents_(m, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}
  /// v_α, or v_α^power.
  static Monomial of_face(std::size_t m, FaceSet alpha, std::uint32_t power = 1);

  std::size_t variable_count() const { return exponents_.size(); }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  /// Exponent of v_vertex, 1-based.
  std::uint32_t power(int vertex) const { return exponents_.at(vertex - 1); }

  /// Polynomial degree Σ e_i.
  std::uint64_t total_degree() const;
  /// 2 Σ e_i.
  std::uint64_t cohomological_degree() const { return 2 * total_degree(); }
  FaceSet support() const;

  Monomial operator*(const Monomial& o) const;
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// larger exponent vectors (lexicographically, v_1 heaviest) first. Terms
/// therefore list as 1, v1, v2, ..., v1^2, v1v2, ...
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Element of the free polynomial ring Z[v_1, ..., v_m] (no relations).
class IntPolynomial {
 public:
  using Terms = std::map<Monomial, mpz_class, GradedLex>;

  explicit IntPolynomial(std::size_t m) : m_(m) {}
  static IntPolynomial constant(std::size_t m, const mpz_class& c);
  /// v_vertex, 1-based.
  static IntPolynomial variable(std::size_t m, int vertex);

  std::size_t variable_count() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of `mono`, zero if absent.
  mpz_class coefficient(const Monomial& mono) const;

  /// Adds c·mono; throws std::invalid_argument on a variable-count mismatch.
  void add_term(const Monomial& mono, const mpz_class& c);

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial scaled(const mpz_class& c) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t m_;
  Terms terms_;
};

/// Element of the Stanley-Reisner ring Z[K] = Z[m] / I_K in reduced form:
/// every stored monomial has a face of K as support, and no coefficient is
/// zero.
class SRPolynomial {
 public:
  using Terms = IntPolynomial::Terms;

  /// The zero element of Z[K].
  explicit SRPolynomial(SimplicialComplex complex);
  static SRPolynomial constant(const SimplicialComplex& complex, const mpz_class& c);
  /// The generator v_vertex (zero if the vertex is a ghost).
  static SRPolynomial variable(const SimplicialComplex& complex, int vertex);

  const SimplicialComplex& complex() const { return complex_; }
  const Terms& terms() const { return poly_.terms(); }
  const IntPolynomial& raw() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  mpz_class coefficient(const Monomial& mono) const { return poly_.coefficient(mono); }

  /// Ring operations; both operands must live in the same Z[K]
  /// (std::invalid_argument otherwise).
  SRPolynomial operator+(const SRPolynomial& o) const;
  SRPolynomial operator-(const SRPolynomial& o) const;
  SRPolynomial operator-() const;
  SRPolynomial operator*(const SRPolynomial& o) const;
  SRPolynomial scaled(const mpz_class& c) const;

  /// Sum of the terms of cohomological degree exactly `degree`; odd degrees
  /// are rejected.
  SRPolynomial graded_component(int degree) const;
  /// Largest cohomological degree present, -1 for zero.
  long top_degree() const;

  friend bool operator==(const SRPolynomial& a, const SRPolynomial& b) {
    return a.complex_ == b.complex_ && a.poly_ == b.poly_;
  }

  std::string to_string() const;

 private:
  friend SRPolynomial reduce(const SimplicialComplex& complex, const IntPolynomial& raw);
  SRPolynomial(SimplicialComplex complex, IntPolynomial poly) : complex_(std::move(complex)), poly_(std::move(poly)) {}
  void require_same_ring(const SRPolynomial& o) const;

  SimplicialComplex complex_;
  IntPolynomial poly_;
};

/// Drops every monomial whose support is not a face of K.
SRPolynomial reduce(const SimplicialComplex& complex, const IntPolynomial& raw);

/// h^α: Z[K] -> Z[α], v_i -> 0 for i outside α. The target Z[α] is modelled as
/// the Stanley-Reisner ring of the simplex on α inside [m].
SRPolynomial restrict_to(const SRPolynomial& p, FaceSet alpha);

/// True iff every restriction h^α(p) vanishes.
bool is_zero_via_restrictions(const SRPolynomial& p);

/// "3*v1^2*v2 - v3 + 1" style rendering, highest degree first.
std::string to_string(const IntPolynomial& p);

}  // namespace djk
