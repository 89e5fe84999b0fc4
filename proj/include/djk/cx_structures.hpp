#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "djk/char_classes.hpp"
#include "djk/gf2.hpp"
#include "djk/linalg.hpp"
#include "djk/simplicial_complex.hpp"

namespace djk {

/// ω_f(μ) = ∏_{i ∈ μ} f(i) on every top face.
SignFunction omega_from_f(const SimplicialComplex& complex, const VertexSign& f);

/// Which sign changes relate the Euler class of an oriented bundle ρ_ω to
/// that of a complex bundle ξ_f.
///
/// oriented:   ω = ω_f or ω = ω_{-f}. The structure ξ_f realifies to ρ_ω with
///             its orientation, up to complex conjugation. Since
///             ω_{-f} = (-1)^n ω_f, this is ω = ε ω_f with ε ∈ {1, (-1)^n}.
/// unoriented: ω = ±ω_f, the orientation of ρ_ω is ignored.
enum class Equivalence { oriented, unoriented };

/// The system ε + Σ_{i ∈ μ} x_i = [ω(μ) = -1] over GF(2), one row per top
/// face. Unknown 0 is the ε bit, unknown i is the bit of f(i) = -1. In the
/// oriented mode with n even, ε is pinned to 0.
Gf2System structure_system(const SignFunction& omega, Equivalence mode);

struct Realization {
  int epsilon = 1;
  VertexSign f;
};

/// A pair (ε, f) with ω = ε ω_f, or nothing. The witness is the
/// lexicographically least solution of structure_system with ε first.
std::optional<Realization> realizable(const SignFunction& omega, Equivalence mode = Equivalence::oriented);

/// Number of f: [m] -> {±1} whose ξ_f is a complex structure on ρ_ω,
/// i.e. 2^nullity of structure_system when it is consistent.
mpz_class count_structures(const SignFunction& omega, Equivalence mode = Equivalence::oriented);

/// Exhaustive count over all 2^m vertex signs. Throws std::invalid_argument
/// for m > 20.
mpz_class count_structures_brute(const SignFunction& omega, Equivalence mode = Equivalence::oriented);

/// Complex structures of a 2s-dimensional ρ with p(ρ) = p(K), s > n: 2^m.
mpz_class stable_count(const SimplicialComplex& complex, int s);

/// Combinatorial data of a dicharacteristic pair: a pure complex, each top
/// face as an ordered vertex tuple, and an n × m integer matrix Λ.
struct DicharacteristicPair {
  SimplicialComplex complex;
  std::vector<std::vector<int>> oriented_facets;
  IntMatrix lambda;
};

/// Raised when some facet minor has |det Λ_μ| ≠ 1.
class PairValidationError : public std::domain_error {
 public:
  PairValidationError(FaceSet face, mpz_class det);
  FaceSet face() const { return face_; }
  const mpz_class& determinant() const { return det_; }

 private:
  FaceSet face_;
  mpz_class det_;
};

struct ValidatedPair {
  SignFunction signs;  // μ -> det Λ_μ
  SRPolynomial euler;  // Σ_μ det Λ_μ v_μ
};

/// Checks the structure of the pair (std::invalid_argument on shape or
/// orientation mismatch) and that all oriented facet minors are ±1
/// (PairValidationError otherwise).
ValidatedPair validate_pair(const DicharacteristicPair& pair);

/// det Λ_μ = ε f(μ) for some f and ε = ±1, if any.
std::optional<Realization> pair_complex_structure(const DicharacteristicPair& pair);
bool pair_admits_complex_structure(const DicharacteristicPair& pair);

}  // namespace djk
