#pragma once

#include <optional>
#include <vector>

#include "djk/char_classes.hpp"
#include "djk/polynomial.hpp"
#include "djk/simplicial_complex.hpp"

namespace djk {

/// g: [m] -> [r], colors 1-based.
class Coloring {
 public:
  /// Throws std::invalid_argument if a color falls outside [1, palette].
  Coloring(std::vector<int> colors, int palette);

  int palette() const { return palette_; }
  int vertex_count() const { return static_cast<int>(colors_.size()); }
  int operator()(int vertex) const { return colors_.at(vertex - 1); }
  const std::vector<int>& colors() const { return colors_; }
  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int palette_;
};

/// Distinct colors on every face. Vertices of a face span a complete
/// subgraph, so checking the edges is enough.
bool is_regular_coloring(const SimplicialComplex& complex, const Coloring& g);

/// A regular r-coloring by backtracking over the 1-skeleton, vertices by
/// decreasing degree (ties by index), colors tried in increasing order.
/// Ghost vertices get color 1.
std::optional<Coloring> find_coloring(const SimplicialComplex& complex, int r);

/// Least r admitting a regular r-coloring. Throws std::invalid_argument if K
/// has no vertices.
int chromatic_number(const SimplicialComplex& complex);

/// First Chern classes u_i = Σ_{g(j) = i} v_j, i = 1..r, of the line bundles
/// in the splitting induced by g. Throws for an irregular coloring.
std::vector<SRPolynomial> splitting_factors(const SimplicialComplex& complex, const Coloring& g);

/// f∘g for f: [r] -> {±1}.
VertexSign compose(const std::vector<int>& color_signs, const Coloring& g);

/// ω_{f∘g} for an n-coloring g. Throws std::invalid_argument if r ≠ n.
SignFunction coloring_euler_classes(const SimplicialComplex& complex, const Coloring& g,
                                    const std::vector<int>& color_signs);

}  // namespace djk
