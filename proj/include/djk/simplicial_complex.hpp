#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace djk {

/// Largest supported vertex count; faces are 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A subset of the vertex set {1, ..., m}. Vertex i lives in bit i-1.
///
/// Ordering (operator<) is lexicographic on the increasing vertex lists,
/// so {1} < {1,2} < {1,3} < {2} < {2,3}. Every output ordering in the
/// library is fixed by it.
class FaceSet {
 public:
  constexpr FaceSet() = default;
  FaceSet(std::initializer_list<int> vertices);

  static constexpr FaceSet from_bits(std::uint64_t bits) {
    FaceSet f;
    f.bits_ = bits;
    return f;
  }
  /// Throws std::invalid_argument for indices outside [1, 64].
  static FaceSet from_vertices(std::span<const int> vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  int size() const;
  int dimension() const { return size() - 1; }
  bool empty() const { return bits_ == 0; }
  bool contains(int vertex) const;
  /// Largest vertex index, 0 for the empty face.
  int max_vertex() const;
  std::vector<int> vertices() const;

  FaceSet with(int vertex) const;
  FaceSet without(int vertex) const;
  FaceSet operator|(FaceSet o) const { return from_bits(bits_ | o.bits_); }
  FaceSet operator&(FaceSet o) const { return from_bits(bits_ & o.bits_); }
  /// Set difference.
  FaceSet operator-(FaceSet o) const { return from_bits(bits_ & ~o.bits_); }
  bool is_subset_of(FaceSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool disjoint_from(FaceSet o) const { return (bits_ & o.bits_) == 0; }

  friend bool operator==(FaceSet a, FaceSet b) { return a.bits_ == b.bits_; }
  friend bool operator<(FaceSet a, FaceSet b);

  /// "{1,2,3}"; the empty face prints as "{}".
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Orders faces by cardinality first, then lexicographically.
struct SizeThenLex {
  bool operator()(FaceSet a, FaceSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// A finite abstract simplicial complex on the vertex set [m], stored by its
/// facets. Faces are never materialized; membership is "contained in some
/// facet". Vertices i with {i} not a face (ghost vertices) are allowed.
///
/// Copies share the immutable facet storage.
class SimplicialComplex {
 public:
  /// Builds the complex generated by the given vertex lists. Duplicates and
  /// non-maximal lists are dropped. An empty list of facets, or a single
  /// empty facet, gives the complex {∅}.
  static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex from_faces(int m, std::vector<FaceSet> generators);

  /// Δ[m]: all subsets of [m].
  static SimplicialComplex full_simplex(int m);
  /// ∂Δ[m]: all proper subsets of [m].
  static SimplicialComplex boundary_simplex(int m);

  int vertex_count() const { return data_->m; }
  /// n = dim K + 1, the largest face cardinality. 0 for {∅}.
  int n() const { return data_->n; }
  int dimension() const { return data_->n - 1; }

  /// Inclusion-maximal faces in lexicographic order.
  const std::vector<FaceSet>& facets() const { return data_->facets; }
  /// Faces of cardinality exactly n, lexicographic. Equals facets() iff pure.
  const std::vector<FaceSet>& top_faces() const { return data_->top_faces; }

  bool is_face(FaceSet sigma) const;
  bool is_pure() const;
  /// Vertices i with {i} a face.
  FaceSet vertex_set() const;
  FaceSet ambient() const;

  /// All faces of cardinality k, lexicographic.
  std::vector<FaceSet> faces_of_card(int k) const;
  /// All faces including ∅, ordered by cardinality and then lexicographically.
  std::vector<FaceSet> faces() const;
  /// f_vector()[k] is the number of faces with k vertices (entry 0 counts ∅).
  std::vector<std::size_t> f_vector() const;

  /// ℓ_K(α) = {β ∈ K : α ∩ β = ∅, α ∪ β ∈ K}, on the same ambient [m].
  /// Throws std::invalid_argument if α is not a face.
  SimplicialComplex link(FaceSet alpha) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  struct Data {
    int m = 0;
    int n = 0;
    std::vector<FaceSet> facets;
    std::vector<FaceSet> top_faces;
  };
  explicit SimplicialComplex(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// Calls visit(face) for every k-subset of `set`, in lexicographic order.
void for_each_subset_of_size(FaceSet set, int k, const std::function<void(FaceSet)>& visit);

}  // namespace djk

template <>
struct std::hash<djk::FaceSet> {
  std::size_t operator()(djk::FaceSet f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};
