#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "djk/polynomial.hpp"
#include "djk/simplicial_complex.hpp"

namespace djk {

/// f: [m] -> {±1}.
class VertexSign {
 public:
  /// Throws std::invalid_argument unless every entry is +1 or -1.
  explicit VertexSign(std::vector<int> signs);
  static VertexSign all_plus(int m);
  /// Bit i-1 of `minus_bits` set means f(i) = -1.
  static VertexSign from_bits(int m, std::uint64_t minus_bits);

  int size() const { return static_cast<int>(signs_.size()); }
  /// f(vertex), 1-based.
  int operator()(int vertex) const { return signs_.at(vertex - 1); }
  const std::vector<int>& values() const { return signs_; }
  std::uint64_t minus_bits() const;
  /// ∏_{i ∈ α} f(i).
  int product_over(FaceSet alpha) const;

  VertexSign operator-() const;
  /// Pointwise product.
  VertexSign operator*(const VertexSign& o) const;
  friend bool operator==(const VertexSign&, const VertexSign&) = default;

 private:
  std::vector<int> signs_;
};

/// ω: top faces of K -> {±1}, stored in the lexicographic order of
/// K.top_faces().
class SignFunction {
 public:
  /// Throws std::invalid_argument if the length differs from the number of
  /// top faces or an entry is not ±1.
  SignFunction(SimplicialComplex complex, std::vector<int> signs);
  static SignFunction all_plus(const SimplicialComplex& complex);
  /// Bit j set means the j-th top face gets -1.
  static SignFunction from_bits(const SimplicialComplex& complex, std::uint64_t minus_bits);

  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<int>& values() const { return signs_; }
  std::size_t size() const { return signs_.size(); }
  /// ω(μ); throws std::invalid_argument if μ is not a top face.
  int operator()(FaceSet mu) const;
  std::size_t minus_count() const;

  SignFunction operator-() const;
  SignFunction operator*(const SignFunction& o) const;
  friend bool operator==(const SignFunction& a, const SignFunction& b) {
    return a.complex_ == b.complex_ && a.signs_ == b.signs_;
  }

 private:
  SimplicialComplex complex_;
  std::vector<int> signs_;
};

/// c(K) = ∏ (1 + v_i), expanded in Z[K] as the sum of v_α over all faces.
SRPolynomial total_chern(const SimplicialComplex& complex);
/// p(K) = ∏ (1 - v_i²) = Σ_{α ∈ K} (-1)^{|α|} v_α².
SRPolynomial total_pontrjagin(const SimplicialComplex& complex);
/// c_f(K) = ∏ (1 + f(i) v_i).
SRPolynomial chern_f(const SimplicialComplex& complex, const VertexSign& f);
/// e_ω(K) = Σ_μ ω(μ) v_μ over the top faces.
SRPolynomial euler_omega(const SignFunction& omega);
/// e_f(K) = e_{ω_f}(K), the top Chern class of c_f(K).
SRPolynomial euler_f(const SimplicialComplex& complex, const VertexSign& f);

/// (-1)^n p_n(K) = Σ_μ v_μ²; the class every Euler class must square to.
SRPolynomial euler_square_target(const SimplicialComplex& complex);

/// Every square root of (-1)^n p_n(K), namely e_ω for all 2^t sign functions
/// (t = number of top faces). Sign vectors are enumerated in lexicographic
/// order with + before -, first top face most significant. Each candidate is
/// squared and checked; `threads` > 1 splits that work across threads.
/// Throws std::length_error when t > 30.
std::vector<SRPolynomial> sqrt_enumerate(const SimplicialComplex& complex, unsigned threads = 1);

/// Sign function of the j-th entry of sqrt_enumerate.
SignFunction sqrt_enumeration_signs(const SimplicialComplex& complex, std::uint64_t index);

/// c · c̄, where c̄ flips the sign of odd Chern classes. For a Chern class
/// c(η) this is the total Pontrjagin class of η_R in the convention where
/// p(K) = ∏ (1 - v_i²). Requires constant term 1.
SRPolynomial pontrjagin_of_chern(const SRPolynomial& chern);

}  // namespace djk
