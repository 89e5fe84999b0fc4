#include "djk/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace djk {

namespace {

std::uint64_t vertex_bit(int vertex) {
  if (vertex < 1 || vertex > kMaxVertices) {
    throw std::invalid_argument("vertex index " + std::to_string(vertex) + " outside [1, 64]");
  }
  return std::uint64_t{1} << (vertex - 1);
}

std::uint64_t ambient_mask(int m) {
  return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

}  // namespace

FaceSet::FaceSet(std::initializer_list<int> vertices) {
  for (int v : vertices) bits_ |= vertex_bit(v);
}

FaceSet FaceSet::from_vertices(std::span<const int> vertices) {
  FaceSet f;
  for (int v : vertices) f.bits_ |= vertex_bit(v);
  return f;
}

int FaceSet::size() const { return std::popcount(bits_); }

bool FaceSet::contains(int vertex) const {
  if (vertex < 1 || vertex > kMaxVertices) return false;
  return (bits_ >> (vertex - 1)) & 1u;
}

int FaceSet::max_vertex() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

std::vector<int> FaceSet::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

FaceSet FaceSet::with(int vertex) const { return from_bits(bits_ | vertex_bit(vertex)); }
FaceSet FaceSet::without(int vertex) const { return from_bits(bits_ & ~vertex_bit(vertex)); }

bool operator<(FaceSet a, FaceSet b) {
  if (a.bits_ == b.bits_) return false;
  std::uint64_t diff = a.bits_ ^ b.bits_;
  int i = std::countr_zero(diff);
  // Both lists agree below vertex i+1; exactly one of them contains it.
  std::uint64_t above = (i == 63) ? 0 : ~((std::uint64_t{2} << i) - 1);
  if ((a.bits_ >> i) & 1u) return (b.bits_ & above) != 0;
  return (a.bits_ & above) == 0;
}

std::string FaceSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

void for_each_subset_of_size(FaceSet set, int k, const std::function<void(FaceSet)>& visit) {
  const std::vector<int> vs = set.vertices();
  const int total = static_cast<int>(vs.size());
  if (k < 0 || k > total) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= std::uint64_t{1} << (vs[i] - 1);
    visit(FaceSet::from_bits(bits));
    int i = k - 1;
    while (i >= 0 && idx[i] == total - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SimplicialComplex SimplicialComplex::from_faces(int m, std::vector<FaceSet> generators) {
  if (m <= 0) throw std::invalid_argument("vertex count m must be positive, got " + std::to_string(m));
  if (m > kMaxVertices) throw std::invalid_argument("vertex count m exceeds 64");
  const std::uint64_t mask = ambient_mask(m);
  for (FaceSet g : generators) {
    if ((g.bits() & ~mask) != 0) {
      throw std::invalid_argument("facet " + g.to_string() + " has a vertex outside [1, " + std::to_string(m) + "]");
    }
  }
  if (generators.empty()) generators.push_back(FaceSet{});

  // Larger sets first, so a set is maximal iff no kept set contains it.
  std::sort(generators.begin(), generators.end(), [](FaceSet a, FaceSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<FaceSet> maximal;
  for (FaceSet g : generators) {
    bool covered = std::any_of(maximal.begin(), maximal.end(), [&](FaceSet f) { return g.is_subset_of(f); });
    if (!covered) maximal.push_back(g);
  }
  std::sort(maximal.begin(), maximal.end());

  auto data = std::make_shared<Data>();
  data->m = m;
  data->facets = std::move(maximal);
  for (FaceSet f : data->facets) data->n = std::max(data->n, f.size());
  for (FaceSet f : data->facets) {
    if (f.size() == data->n) data->top_faces.push_back(f);
  }
  return SimplicialComplex(std::move(data));
}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<std::vector<int>>& facets) {
  if (m <= 0) throw std::invalid_argument("vertex count m must be positive, got " + std::to_string(m));
  std::vector<FaceSet> gens;
  gens.reserve(facets.size());
  for (const auto& f : facets) {
    for (int v : f) {
      if (v < 1 || v > m) {
        throw std::invalid_argument("vertex index " + std::to_string(v) + " outside [1, " + std::to_string(m) + "]");
      }
    }
    if (f.empty() && facets.size() > 1) {
      throw std::invalid_argument("empty facet listed alongside nonempty facets");
    }
    gens.push_back(FaceSet::from_vertices(f));
  }
  return from_faces(m, std::move(gens));
}

SimplicialComplex SimplicialComplex::full_simplex(int m) {
  if (m <= 0 || m > kMaxVertices) throw std::invalid_argument("full_simplex: m must lie in [1, 64]");
  return from_faces(m, {FaceSet::from_bits(ambient_mask(m))});
}

SimplicialComplex SimplicialComplex::boundary_simplex(int m) {
  if (m <= 0 || m > kMaxVertices) throw std::invalid_argument("boundary_simplex: m must lie in [1, 64]");
  const FaceSet all = FaceSet::from_bits(ambient_mask(m));
  std::vector<FaceSet> gens;
  for (int v = 1; v <= m; ++v) gens.push_back(all.without(v));
  return from_faces(m, std::move(gens));
}

bool SimplicialComplex::is_face(FaceSet sigma) const {
  return std::any_of(data_->facets.begin(), data_->facets.end(), [&](FaceSet f) { return sigma.is_subset_of(f); });
}

bool SimplicialComplex::is_pure() const { return data_->facets.size() == data_->top_faces.size(); }

FaceSet SimplicialComplex::vertex_set() const {
  FaceSet all;
  for (FaceSet f : data_->facets) all = all | f;
  return all;
}

FaceSet SimplicialComplex::ambient() const { return FaceSet::from_bits(ambient_mask(data_->m)); }

std::vector<FaceSet> SimplicialComplex::faces_of_card(int k) const {
  std::set<FaceSet> seen;
  for (FaceSet f : data_->facets) {
    for_each_subset_of_size(f, k, [&](FaceSet s) { seen.insert(s); });
  }
  return {seen.begin(), seen.end()};
}

std::vector<FaceSet> SimplicialComplex::faces() const {
  std::vector<FaceSet> out;
  for (int k = 0; k <= data_->n; ++k) {
    auto layer = faces_of_card(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= data_->n; ++k) out.push_back(faces_of_card(k).size());
  return out;
}

SimplicialComplex SimplicialComplex::link(FaceSet alpha) const {
  if (!is_face(alpha)) throw std::invalid_argument("link: " + alpha.to_string() + " is not a face");
  std::vector<FaceSet> gens;
  for (FaceSet f : data_->facets) {
    if (alpha.is_subset_of(f)) gens.push_back(f - alpha);
  }
  return from_faces(data_->m, std::move(gens));
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->m == b.data_->m && a.data_->facets == b.data_->facets;
}

}  // namespace djk
