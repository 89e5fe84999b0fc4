#include "djk/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "djk/cx_structures.hpp"

namespace djk {

Coloring::Coloring(std::vector<int> colors, int palette) : colors_(std::move(colors)), palette_(palette) {
  if (palette_ < 1) throw std::invalid_argument("coloring palette must be positive");
  for (int c : colors_) {
    if (c < 1 || c > palette_) throw std::invalid_argument("color " + std::to_string(c) + " outside [1, " + std::to_string(palette_) + "]");
  }
}

bool is_regular_coloring(const SimplicialComplex& complex, const Coloring& g) {
  if (g.vertex_count() != complex.vertex_count()) return false;
  for (FaceSet e : complex.faces_of_card(2)) {
    const auto vs = e.vertices();
    if (g(vs[0]) == g(vs[1])) return false;
  }
  return true;
}

namespace {

class Backtracker {
 public:
  Backtracker(const SimplicialComplex& complex, int r) : m_(complex.vertex_count()), r_(r), adj_(m_ + 1) {
    for (FaceSet e : complex.faces_of_card(2)) {
      const auto vs = e.vertices();
      adj_[vs[0]].push_back(vs[1]);
      adj_[vs[1]].push_back(vs[0]);
    }
    for (int v : complex.vertex_set().vertices()) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return adj_[a].size() > adj_[b].size(); });
    colors_.assign(m_ + 1, 0);
  }

  std::optional<Coloring> solve() {
    if (!assign(0)) return std::nullopt;
    std::vector<int> out(m_, 1);
    for (int v = 1; v <= m_; ++v) {
      if (colors_[v] != 0) out[v - 1] = colors_[v];
    }
    return Coloring(std::move(out), r_);
  }

 private:
  bool assign(std::size_t pos) {
    if (pos == order_.size()) return true;
    const int v = order_[pos];
    for (int c = 1; c <= r_; ++c) {
      const bool clash = std::any_of(adj_[v].begin(), adj_[v].end(), [&](int u) { return colors_[u] == c; });
      if (clash) continue;
      colors_[v] = c;
      if (assign(pos + 1)) return true;
    }
    colors_[v] = 0;
    return false;
  }

  int m_;
  int r_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> order_;
  std::vector<int> colors_;
};

}  // namespace

std::optional<Coloring> find_coloring(const SimplicialComplex& complex, int r) {
  if (r < 1) throw std::invalid_argument("find_coloring: r must be positive");
  if (r < complex.n()) return std::nullopt;
  return Backtracker(complex, r).solve();
}

int chromatic_number(const SimplicialComplex& complex) {
  if (complex.vertex_set().empty()) throw std::invalid_argument("chromatic_number: complex has no vertices");
  for (int r = std::max(1, complex.n());; ++r) {
    if (find_coloring(complex, r)) return r;
  }
}

std::vector<SRPolynomial> splitting_factors(const SimplicialComplex& complex, const Coloring& g) {
  if (!is_regular_coloring(complex, g)) throw std::invalid_argument("splitting_factors: coloring is not regular");
  std::vector<SRPolynomial> u(g.palette(), SRPolynomial(complex));
  for (int j = 1; j <= complex.vertex_count(); ++j) {
    u[g(j) - 1] = u[g(j) - 1] + SRPolynomial::variable(complex, j);
  }
  return u;
}

VertexSign compose(const std::vector<int>& color_signs, const Coloring& g) {
  if (static_cast<int>(color_signs.size()) != g.palette()) {
    throw std::invalid_argument("color sign list has " + std::to_string(color_signs.size()) + " entries, palette is " +
                                std::to_string(g.palette()));
  }
  std::vector<int> s;
  for (int c : g.colors()) s.push_back(color_signs[c - 1]);
  return VertexSign(std::move(s));
}

SignFunction coloring_euler_classes(const SimplicialComplex& complex, const Coloring& g,
                                    const std::vector<int>& color_signs) {
  if (g.palette() != complex.n()) {
    throw std::invalid_argument("coloring_euler_classes: needs an n-coloring, got r = " + std::to_string(g.palette()) +
                                " with n = " + std::to_string(complex.n()));
  }
  if (!is_regular_coloring(complex, g)) throw std::invalid_argument("coloring_euler_classes: coloring is not regular");
  return omega_from_f(complex, compose(color_signs, g));
}

}  // namespace djk
