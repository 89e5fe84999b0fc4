#include "djk/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace djk {

Monomial Monomial::of_face(std::size_t m, FaceSet alpha, std::uint32_t power) {
  if (alpha.max_vertex() > static_cast<int>(m)) throw std::invalid_argument("face outside the variable range");
  Monomial out(m);
  for (int v : alpha.vertices()) out.exponents_[v - 1] = power;
  return out;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents_) d += e;
  return d;
}

FaceSet Monomial::support() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0) bits |= std::uint64_t{1} << i;
  }
  return FaceSet::from_bits(bits);
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.exponents_.size() != exponents_.size()) throw std::invalid_argument("monomial variable counts differ");
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += o.exponents_[i];
  return out;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

IntPolynomial IntPolynomial::constant(std::size_t m, const mpz_class& c) {
  IntPolynomial p(m);
  p.add_term(Monomial(m), c);
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t m, int vertex) {
  if (vertex < 1 || vertex > static_cast<int>(m)) throw std::invalid_argument("variable index out of range");
  IntPolynomial p(m);
  p.add_term(Monomial::of_face(m, FaceSet{vertex}), 1);
  return p;
}

mpz_class IntPolynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void IntPolynomial::add_term(const Monomial& mono, const mpz_class& c) {
  if (mono.variable_count() != m_) {
    throw std::invalid_argument("exponent vector has length " + std::to_string(mono.variable_count()) +
                                ", expected " + std::to_string(m_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial out = *this;
  for (const auto& [mono, c] : o.terms_) out.add_term(mono, c);
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (o.m_ != m_) throw std::invalid_argument("polynomial variable counts differ");
  IntPolynomial out(m_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

IntPolynomial IntPolynomial::scaled(const mpz_class& c) const {
  IntPolynomial out(m_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [mono, v] : out.terms_) v *= c;
  return out;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    std::string factors;
    for (std::size_t i = 0; i < mono.variable_count(); ++i) {
      const auto e = mono.exponents()[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += "v" + std::to_string(i + 1);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    const mpz_class mag = abs(c);
    const bool neg = c < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (factors.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += factors;
    }
  }
  return s;
}

SRPolynomial::SRPolynomial(SimplicialComplex complex)
    : complex_(std::move(complex)), poly_(static_cast<std::size_t>(complex_.vertex_count())) {}

SRPolynomial SRPolynomial::constant(const SimplicialComplex& complex, const mpz_class& c) {
  return reduce(complex, IntPolynomial::constant(complex.vertex_count(), c));
}

SRPolynomial SRPolynomial::variable(const SimplicialComplex& complex, int vertex) {
  return reduce(complex, IntPolynomial::variable(complex.vertex_count(), vertex));
}

void SRPolynomial::require_same_ring(const SRPolynomial& o) const {
  if (!(complex_ == o.complex_)) throw std::invalid_argument("operands live in different Stanley-Reisner rings");
}

SRPolynomial SRPolynomial::operator+(const SRPolynomial& o) const {
  require_same_ring(o);
  return {complex_, poly_ + o.poly_};
}

SRPolynomial SRPolynomial::operator-(const SRPolynomial& o) const {
  require_same_ring(o);
  return {complex_, poly_ - o.poly_};
}

SRPolynomial SRPolynomial::operator-() const { return {complex_, -poly_}; }

SRPolynomial SRPolynomial::operator*(const SRPolynomial& o) const {
  require_same_ring(o);
  IntPolynomial out(poly_.variable_count());
  for (const auto& [ma, ca] : terms()) {
    for (const auto& [mb, cb] : o.terms()) {
      if (!complex_.is_face(ma.support() | mb.support())) continue;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return {complex_, std::move(out)};
}

SRPolynomial SRPolynomial::scaled(const mpz_class& c) const { return {complex_, poly_.scaled(c)}; }

SRPolynomial SRPolynomial::graded_component(int degree) const {
  if (degree < 0 || degree % 2 != 0) {
    throw std::invalid_argument("graded_component: degree must be even and non-negative, got " + std::to_string(degree));
  }
  IntPolynomial out(poly_.variable_count());
  for (const auto& [mono, c] : terms()) {
    if (mono.cohomological_degree() == static_cast<std::uint64_t>(degree)) out.add_term(mono, c);
  }
  return {complex_, std::move(out)};
}

long SRPolynomial::top_degree() const {
  if (is_zero()) return -1;
  return static_cast<long>(terms().rbegin()->first.cohomological_degree());
}

std::string SRPolynomial::to_string() const { return djk::to_string(poly_); }

SRPolynomial reduce(const SimplicialComplex& complex, const IntPolynomial& raw) {
  if (raw.variable_count() != static_cast<std::size_t>(complex.vertex_count())) {
    throw std::invalid_argument("polynomial has " + std::to_string(raw.variable_count()) +
                                " variables but the complex has m = " + std::to_string(complex.vertex_count()));
  }
  IntPolynomial out(raw.variable_count());
  for (const auto& [mono, c] : raw.terms()) {
    if (complex.is_face(mono.support())) out.add_term(mono, c);
  }
  return SRPolynomial(complex, std::move(out));
}

SRPolynomial restrict_to(const SRPolynomial& p, FaceSet alpha) {
  const SimplicialComplex& k = p.complex();
  if (!k.is_face(alpha)) throw std::invalid_argument("restrict: " + alpha.to_string() + " is not a face");
  const auto target = SimplicialComplex::from_faces(k.vertex_count(), {alpha});
  return reduce(target, p.raw());
}

bool is_zero_via_restrictions(const SRPolynomial& p) {
  // Restriction to a face factors through restriction to any facet above it.
  const auto& facets = p.complex().facets();
  return std::all_of(facets.begin(), facets.end(), [&](FaceSet f) { return restrict_to(p, f).is_zero(); });
}

}  // namespace djk
