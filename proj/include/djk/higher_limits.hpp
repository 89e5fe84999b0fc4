#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "djk/linalg.hpp"
#include "djk/simplicial_complex.hpp"

namespace djk {

/// Coefficient ring: Z (characteristic 0) or F_p.
struct Ring {
  std::uint32_t characteristic = 0;

  static Ring integers() { return {0}; }
  /// Throws std::invalid_argument unless p is prime.
  static Ring prime_field(std::uint32_t p);
  bool is_integers() const { return characteristic == 0; }
  std::string name() const;
  friend bool operator==(Ring, Ring) = default;
};

/// Finitely generated abelian group Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k in
/// invariant-factor form (1 < t_1 | t_2 | ... | t_k).
class AbGroup {
 public:
  AbGroup() = default;
  /// Accepts any list of cyclic orders; 1s are dropped, 0s count as free
  /// summands, and the rest is brought to invariant-factor form.
  AbGroup(std::size_t rank, std::vector<mpz_class> torsion);
  static AbGroup free(std::size_t rank) { return AbGroup(rank, {}); }
  /// F_p^dimension viewed as an abelian group.
  static AbGroup vector_space(Ring ring, std::size_t dimension);

  std::size_t rank() const { return rank_; }
  const std::vector<mpz_class>& torsion() const { return torsion_; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty(); }
  /// Direct sum of `copies` copies of this group.
  AbGroup power(std::size_t copies) const;

  friend bool operator==(const AbGroup&, const AbGroup&) = default;
  /// "0", "Z", "Z^2 + Z/2 + Z/6".
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<mpz_class> torsion_;
};

/// A functor Φ: cat(K)^op -> ab with free values Φ(α) = R^{rank(α)}, where
/// cat(K) is the face poset of K (∅ included). Arrows of cat(K)^op go from a
/// face to its subfaces; the functor is presented by its covering maps
/// Φ(β) -> Φ(β \ {v}), each a rank(β \ {v}) × rank(β) matrix. Covering pairs
/// without a stored matrix map by zero.
class AbFunctor {
 public:
  /// (β, α) with α = β minus one vertex.
  using CoverKey = std::pair<FaceSet, FaceSet>;

  /// Validates faces, shapes and commutativity of every covering square;
  /// throws std::invalid_argument on the first violation. Over F_p all
  /// entries are reduced mod p.
  AbFunctor(SimplicialComplex complex, Ring ring, std::map<FaceSet, std::size_t> ranks,
            std::map<CoverKey, IntMatrix> covers);

  const SimplicialComplex& complex() const { return complex_; }
  Ring ring() const { return ring_; }
  /// All faces of K including ∅, SizeThenLex order.
  const std::vector<FaceSet>& objects() const { return objects_; }
  std::size_t value_rank(FaceSet face) const;
  const std::map<FaceSet, std::size_t>& ranks() const { return ranks_; }
  const std::map<CoverKey, IntMatrix>& covers() const { return covers_; }

  /// Φ(β -> α) for a covering pair.
  IntMatrix cover(FaceSet beta, FaceSet alpha) const;
  /// Φ(β -> α) for any α ⊆ β, composed along the covering maps.
  IntMatrix map(FaceSet beta, FaceSet alpha) const;

 private:
  void reduce_entries(IntMatrix& a) const;

  SimplicialComplex complex_;
  Ring ring_;
  std::vector<FaceSet> objects_;
  std::map<FaceSet, std::size_t> ranks_;
  std::map<CoverKey, IntMatrix> covers_;
};

/// Φ_α: value R^rank at α, zero elsewhere.
AbFunctor atomic_functor(const SimplicialComplex& complex, FaceSet alpha, std::size_t rank = 1,
                         Ring ring = Ring::integers());
/// Same, with the value given as a group; it must be free.
AbFunctor atomic_functor(const SimplicialComplex& complex, FaceSet alpha, const AbGroup& value);
/// cst_M with M = R^rank and identity maps.
AbFunctor constant_functor(const SimplicialComplex& complex, std::size_t rank = 1, Ring ring = Ring::integers());
/// Φ_{≤s}: keeps the values on faces with |α| <= s.
AbFunctor truncate_below(const AbFunctor& phi, int s);
/// Φ_s: keeps the values on faces with |α| = s.
AbFunctor slice(const AbFunctor& phi, int s);

/// Cochain complex C^0 -> C^1 -> ... ; coboundaries[k] maps C^k to C^{k+1}
/// and has shape dims[k+1] × dims[k]. `first_degree` is the degree of dims[0].
struct CochainComplex {
  int first_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseIntMatrix> coboundaries;
};

/// Normalized cochains of the nerve of cat(K)^op with coefficients in Φ.
/// C^k is the product of Φ(β_k) over strict chains β_0 ⊋ ... ⊋ β_k; the k-th
/// coboundary is Σ_j (-1)^j δ^j, where δ^j drops β_j and the last face
/// operator drops β_k and applies Φ(β_{k-1} -> β_k).
CochainComplex nerve_cochains(const AbFunctor& phi);

/// H^d for d = first_degree .. first_degree + count - 1.
std::vector<AbGroup> cohomology(const CochainComplex& complex, Ring ring, std::size_t count);

/// lim^i Φ for i = 0..max_degree.
std::vector<AbGroup> lim_groups(const AbFunctor& phi, int max_degree);

/// Reduced cohomology H̃^d(ℓ_K(α); R^coefficient_rank) for
/// d = -1 .. n - |α| - 1 (entry 0 is degree -1). The empty complex {∅} has
/// H̃^{-1} = R.
std::vector<AbGroup> link_cohomology(const SimplicialComplex& complex, FaceSet alpha, Ring ring = Ring::integers(),
                                     std::size_t coefficient_rank = 1);

/// lim^i Φ_α == H̃^{i-1}(ℓ_K(α); Φ(α)) for i = 0..max_degree.
bool verify_atomic_formula(const SimplicialComplex& complex, FaceSet alpha, Ring ring, int max_degree,
                           std::size_t coefficient_rank = 1);

}  // namespace djk
