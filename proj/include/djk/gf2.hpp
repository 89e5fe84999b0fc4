#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace djk {

/// Bit vector over GF(2).
class Gf2Vector {
 public:
  explicit Gf2Vector(std::size_t size = 0) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool any() const;
  Gf2Vector& operator^=(const Gf2Vector& o);
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

/// Linear system A x = b over GF(2) with a fixed number of unknowns.
class Gf2System {
 public:
  explicit Gf2System(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }
  void add_equation(Gf2Vector coefficients, bool rhs);

  struct Reduced {
    bool consistent = false;
    std::size_t rank = 0;
  };
  /// Gaussian elimination; the system itself is left unchanged.
  Reduced reduce() const;
  /// Number of solutions is 2^(unknowns - rank) when consistent.
  std::size_t nullity() const;
  bool consistent() const { return reduce().consistent; }

  /// The lexicographically least solution, unknown 0 most significant.
  std::optional<Gf2Vector> least_solution() const;

 private:
  std::size_t unknowns_;
  std::vector<Gf2Vector> rows_;
  std::vector<bool> rhs_;
};

}  // namespace djk
