#include "djk/char_classes.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace djk {

VertexSign::VertexSign(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("vertex signs must be +1 or -1");
  }
}

VertexSign VertexSign::all_plus(int m) { return VertexSign(std::vector<int>(m, 1)); }

VertexSign VertexSign::from_bits(int m, std::uint64_t minus_bits) {
  std::vector<int> s(m, 1);
  for (int i = 0; i < m; ++i) {
    if ((minus_bits >> i) & 1u) s[i] = -1;
  }
  return VertexSign(std::move(s));
}

std::uint64_t VertexSign::minus_bits() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] < 0) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

int VertexSign::product_over(FaceSet alpha) const {
  if (alpha.max_vertex() > size()) throw std::invalid_argument("face " + alpha.to_string() + " outside the sign domain");
  return (std::popcount(alpha.bits() & minus_bits()) % 2 == 0) ? 1 : -1;
}

VertexSign VertexSign::operator-() const {
  VertexSign out = *this;
  for (int& s : out.signs_) s = -s;
  return out;
}

VertexSign VertexSign::operator*(const VertexSign& o) const {
  if (o.size() != size()) throw std::invalid_argument("vertex sign lengths differ");
  VertexSign out = *this;
  for (std::size_t i = 0; i < signs_.size(); ++i) out.signs_[i] *= o.signs_[i];
  return out;
}

SignFunction::SignFunction(SimplicialComplex complex, std::vector<int> signs)
    : complex_(std::move(complex)), signs_(std::move(signs)) {
  if (signs_.size() != complex_.top_faces().size()) {
    throw std::invalid_argument("sign function has " + std::to_string(signs_.size()) + " entries but K has " +
                                std::to_string(complex_.top_faces().size()) + " top faces");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("face signs must be +1 or -1");
  }
}

SignFunction SignFunction::all_plus(const SimplicialComplex& complex) {
  return SignFunction(complex, std::vector<int>(complex.top_faces().size(), 1));
}

SignFunction SignFunction::from_bits(const SimplicialComplex& complex, std::uint64_t minus_bits) {
  std::vector<int> s(complex.top_faces().size(), 1);
  for (std::size_t j = 0; j < s.size() && j < 64; ++j) {
    if ((minus_bits >> j) & 1u) s[j] = -1;
  }
  return SignFunction(complex, std::move(s));
}

int SignFunction::operator()(FaceSet mu) const {
  const auto& top = complex_.top_faces();
  auto it = std::lower_bound(top.begin(), top.end(), mu);
  if (it == top.end() || !(*it == mu)) throw std::invalid_argument(mu.to_string() + " is not a top face");
  return signs_[static_cast<std::size_t>(it - top.begin())];
}

std::size_t SignFunction::minus_count() const {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), -1));
}

SignFunction SignFunction::operator-() const {
  std::vector<int> s = signs_;
  for (int& v : s) v = -v;
  return SignFunction(complex_, std::move(s));
}

SignFunction SignFunction::operator*(const SignFunction& o) const {
  if (!(o.complex_ == complex_)) throw std::invalid_argument("sign functions over different complexes");
  std::vector<int> s = signs_;
  for (std::size_t j = 0; j < s.size(); ++j) s[j] *= o.signs_[j];
  return SignFunction(complex_, std::move(s));
}

namespace {

// Σ_{α ∈ K} weight(α) v_α^power.
template <typename Weight>
SRPolynomial sum_over_faces(const SimplicialComplex& complex, std::uint32_t power, Weight weight) {
  const std::size_t m = complex.vertex_count();
  IntPolynomial poly(m);
  for (FaceSet alpha : complex.faces()) poly.add_term(Monomial::of_face(m, alpha, power), weight(alpha));
  return reduce(complex, poly);
}

}  // namespace

SRPolynomial total_chern(const SimplicialComplex& complex) {
  return sum_over_faces(complex, 1, [](FaceSet) { return 1; });
}

SRPolynomial total_pontrjagin(const SimplicialComplex& complex) {
  return sum_over_faces(complex, 2, [](FaceSet a) { return a.size() % 2 == 0 ? 1 : -1; });
}

SRPolynomial chern_f(const SimplicialComplex& complex, const VertexSign& f) {
  if (f.size() != complex.vertex_count()) throw std::invalid_argument("vertex sign length differs from m");
  return sum_over_faces(complex, 1, [&](FaceSet a) { return f.product_over(a); });
}

SRPolynomial euler_omega(const SignFunction& omega) {
  const auto& complex = omega.complex();
  const std::size_t m = complex.vertex_count();
  IntPolynomial poly(m);
  const auto& top = complex.top_faces();
  for (std::size_t j = 0; j < top.size(); ++j) poly.add_term(Monomial::of_face(m, top[j]), omega.values()[j]);
  return reduce(complex, poly);
}

SRPolynomial euler_f(const SimplicialComplex& complex, const VertexSign& f) {
  if (f.size() != complex.vertex_count()) throw std::invalid_argument("vertex sign length differs from m");
  std::vector<int> s;
  for (FaceSet mu : complex.top_faces()) s.push_back(f.product_over(mu));
  return euler_omega(SignFunction(complex, std::move(s)));
}

SRPolynomial euler_square_target(const SimplicialComplex& complex) {
  const std::size_t m = complex.vertex_count();
  IntPolynomial poly(m);
  for (FaceSet mu : complex.top_faces()) poly.add_term(Monomial::of_face(m, mu, 2), 1);
  return reduce(complex, poly);
}

SignFunction sqrt_enumeration_signs(const SimplicialComplex& complex, std::uint64_t index) {
  const std::size_t t = complex.top_faces().size();
  std::vector<int> s(t, 1);
  for (std::size_t j = 0; j < t; ++j) {
    if ((index >> (t - 1 - j)) & 1u) s[j] = -1;
  }
  return SignFunction(complex, std::move(s));
}

std::vector<SRPolynomial> sqrt_enumerate(const SimplicialComplex& complex, unsigned threads) {
  if (complex.n() < 1) throw std::invalid_argument("sqrt_enumerate needs a complex with a nonempty face");
  const std::size_t t = complex.top_faces().size();
  if (t > 30) throw std::length_error("sqrt_enumerate: 2^" + std::to_string(t) + " sign functions is too many");
  const std::uint64_t total = std::uint64_t{1} << t;
  const SRPolynomial target = euler_square_target(complex);

  std::vector<SRPolynomial> roots(total, SRPolynomial(complex));
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      SRPolynomial e = euler_omega(sqrt_enumeration_signs(complex, idx));
      if (!(e * e == target)) {
        throw std::logic_error("e_omega does not square to (-1)^n p_n(K)");
      }
      roots[idx] = std::move(e);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  if (threads == 1) {
    work(0, total);
    return roots;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return roots;
}

SRPolynomial pontrjagin_of_chern(const SRPolynomial& chern) {
  const std::size_t m = chern.complex().vertex_count();
  if (chern.coefficient(Monomial(m)) != 1) {
    throw std::invalid_argument("pontrjagin_of_chern: total Chern class must have constant term 1");
  }
  IntPolynomial conj(m);
  for (const auto& [mono, c] : chern.terms()) conj.add_term(mono, mono.total_degree() % 2 == 0 ? c : mpz_class(-c));
  return chern * reduce(chern.complex(), conj);
}

}  // namespace djk
