#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "djk/simplicial_complex.hpp"

namespace djk::testing {

inline SimplicialComplex triangle() { return SimplicialComplex::boundary_simplex(3); }
inline SimplicialComplex square() { return SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
inline SimplicialComplex tetra_boundary() { return SimplicialComplex::boundary_simplex(4); }

inline std::string data_path(const std::string& name) { return std::string(DJK_DATA_DIR) + "/" + name; }

inline FaceSet random_subset(std::mt19937_64& rng, int m, int size) {
  std::vector<int> vs(m);
  for (int i = 0; i < m; ++i) vs[i] = i + 1;
  std::shuffle(vs.begin(), vs.end(), rng);
  vs.resize(size);
  return FaceSet::from_vertices(vs);
}

/// Pure complex on [m] with up to `max_facets` random facets of size n.
inline SimplicialComplex random_pure_complex(std::mt19937_64& rng, int m, int n, int max_facets) {
  std::uniform_int_distribution<int> count(1, max_facets);
  std::vector<FaceSet> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.push_back(random_subset(rng, m, n));
  return SimplicialComplex::from_faces(m, gens);
}

/// Random complex on [m] generated by up to `max_facets` faces of size
/// 1..max_size; may be non-pure and may have ghost vertices.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int m, int max_size, int max_facets) {
  std::uniform_int_distribution<int> count(1, max_facets);
  std::uniform_int_distribution<int> size(1, std::min(max_size, m));
  std::vector<FaceSet> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.push_back(random_subset(rng, m, size(rng)));
  return SimplicialComplex::from_faces(m, gens);
}

/// Every subset of [m], as a mask.
inline std::vector<FaceSet> all_subsets(int m) {
  std::vector<FaceSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) out.push_back(FaceSet::from_bits(b));
  return out;
}

}  // namespace djk::testing
