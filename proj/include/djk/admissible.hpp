#pragma once

#include <optional>

#include "djk/linalg.hpp"
#include "djk/simplicial_complex.hpp"

namespace djk {

/// Exact rational matrix used for the admissibility checks.
using ExactMatrix = RationalMatrix;

/// A_α: the columns of A indexed by [m] \ α, in increasing order.
ExactMatrix column_complement(const ExactMatrix& a, FaceSet alpha);

struct AdmissibilityResult {
  bool admissible = true;
  std::optional<FaceSet> witness;  // first failing face
};

/// K-admissibility of an (m-n) × m matrix: rank A_α = m - n for every face α.
/// Only facets are checked, since α ⊆ β makes the columns of A_β a subset of
/// those of A_α. Throws std::invalid_argument on a shape mismatch.
AdmissibilityResult is_admissible(const SimplicialComplex& complex, const ExactMatrix& a);
/// Same test over every face, in SizeThenLex order.
AdmissibilityResult is_admissible_all_faces(const SimplicialComplex& complex, const ExactMatrix& a);

/// The (m-n) × m matrix with entry s^r in row s, column r.
ExactMatrix vandermonde(int m, int n);

}  // namespace djk
