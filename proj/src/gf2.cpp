#include "djk/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace djk {

void Gf2Vector::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

bool Gf2Vector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& o) {
  if (o.size_ != size_) throw std::invalid_argument("GF(2) vector sizes differ");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

void Gf2System::add_equation(Gf2Vector coefficients, bool rhs) {
  if (coefficients.size() != unknowns_) throw std::invalid_argument("equation width differs from unknown count");
  rows_.push_back(std::move(coefficients));
  rhs_.push_back(rhs);
}

Gf2System::Reduced Gf2System::reduce() const {
  std::vector<Gf2Vector> rows = rows_;
  std::vector<bool> rhs = rhs_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns_ && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].get(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    std::swap(rhs[p], rhs[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].get(col)) {
        rows[i] ^= rows[rank];
        rhs[i] = rhs[i] != rhs[rank];
      }
    }
    ++rank;
  }
  bool consistent = true;
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (rhs[i]) consistent = false;
  }
  return {consistent, rank};
}

std::size_t Gf2System::nullity() const { return unknowns_ - reduce().rank; }

std::optional<Gf2Vector> Gf2System::least_solution() const {
  if (!consistent()) return std::nullopt;
  // Fix unknowns front to back, preferring 0 whenever the system allows it.
  Gf2System fixed = *this;
  Gf2Vector solution(unknowns_);
  for (std::size_t i = 0; i < unknowns_; ++i) {
    Gf2Vector e(unknowns_);
    e.set(i);
    Gf2System trial = fixed;
    trial.add_equation(e, false);
    if (trial.consistent()) {
      fixed = std::move(trial);
    } else {
      solution.set(i);
      fixed.add_equation(e, true);
    }
  }
  return solution;
}

}  // namespace djk
