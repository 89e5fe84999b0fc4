#include "djk/linalg.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace djk {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

// Fraction-free echelon form in place. Returns the number of pivots and the
// sign of the row permutation applied.
std::pair<std::size_t, int> bareiss_echelon(IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  mpz_class prev = 1;
  std::size_t k = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t p = k;
    while (p < rows && a(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != k) {
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = a(k, col) * a(i, j) - a(i, col) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, col) = 0;
    }
    prev = a(k, col);
    ++k;
  }
  return {k, sign};
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
  IntMatrix work = a;
  return bareiss_echelon(work).first;
}

std::size_t rank(const RationalMatrix& a) {
  IntMatrix scaled(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (const auto& v : a.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpq_class v = a(i, j) * l;
      scaled(i, j) = v.get_num();
    }
  }
  return rank(scaled);
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix work = a;
  auto [r, sign] = bareiss_echelon(work);
  if (r < n) return 0;
  return sign * work(n - 1, n - 1);
}

std::vector<mpz_class> smith_diagonal(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero |entry| of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {i, j};
      }
    }
    if (!best) break;
    a.swap_rows(t, best->first);
    a.swap_cols(t, best->second);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; move it to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        }
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);
        continue;
      }
      // Row and column cleared; enforce divisibility of the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a(t, jj) += a(i, jj);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, const mpz_class& v) {
  if (i >= rows_.size() || j >= cols_) throw std::out_of_range("sparse matrix index out of range");
  if (v == 0) return;
  auto [it, inserted] = rows_[i].try_emplace(j, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) rows_[i].erase(it);
  }
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& b) const {
  if (cols_ != b.rows()) throw std::invalid_argument("sparse product: inner dimensions differ");
  SparseIntMatrix out(rows(), b.cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& [k, v] : rows_[i]) {
      for (const auto& [j, w] : b.rows_[k]) out.add(i, j, v * w);
    }
  }
  return out;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix out(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& [j, v] : rows_[i]) out(i, j) = v;
  }
  return out;
}

namespace {

// Gaussian elimination on a sparse matrix, pivoting only on entries the
// policy accepts. Eliminated rows and columns are removed; what is left is
// the Schur complement of the accepted pivots.
template <typename Policy>
class SparseEliminator {
 public:
  using Value = typename Policy::Value;

  SparseEliminator(const SparseIntMatrix& a, Policy policy)
      : policy_(std::move(policy)), rows_(a.rows()), cols_(a.cols()) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (const auto& [j, v] : a.row(i)) {
        Value r = policy_.convert(v);
        if (policy_.is_zero(r)) continue;
        rows_[i].emplace(j, std::move(r));
        cols_[j].insert(i);
      }
    }
  }

  std::size_t run() {
    std::size_t pivots = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (cols_[c].empty()) continue;
        std::optional<std::size_t> best;
        for (std::size_t r : cols_[c]) {
          if (!policy_.accepts(rows_[r].at(c))) continue;
          if (!best || rows_[r].size() < rows_[*best].size()) best = r;
        }
        if (!best) continue;
        pivot(*best, c);
        ++pivots;
        progress = true;
      }
    }
    return pivots;
  }

  IntMatrix remainder() const {
    std::vector<std::size_t> live_rows, live_cols;
    std::vector<std::size_t> col_index(cols_.size(), 0);
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (!cols_[c].empty()) {
        col_index[c] = live_cols.size();
        live_cols.push_back(c);
      }
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!rows_[r].empty()) live_rows.push_back(r);
    }
    IntMatrix out(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& [c, v] : rows_[live_rows[i]]) out(i, col_index[c]) = policy_.to_integer(v);
    }
    return out;
  }

 private:
  void pivot(std::size_t pr, std::size_t pc) {
    const Value pv = rows_[pr].at(pc);
    const std::vector<std::size_t> targets(cols_[pc].begin(), cols_[pc].end());
    for (std::size_t r : targets) {
      if (r == pr) continue;
      const Value factor = policy_.factor(rows_[r].at(pc), pv);
      auto& target = rows_[r];
      for (const auto& [c, v] : rows_[pr]) {
        auto it = target.find(c);
        if (it == target.end()) {
          Value nv = policy_.negate_product(factor, v);
          if (policy_.is_zero(nv)) continue;
          target.emplace(c, std::move(nv));
          cols_[c].insert(r);
        } else {
          policy_.subtract_product(it->second, factor, v);
          if (policy_.is_zero(it->second)) {
            target.erase(it);
            cols_[c].erase(r);
          }
        }
      }
    }
    for (const auto& [c, v] : rows_[pr]) cols_[c].erase(pr);
    rows_[pr].clear();
  }

  Policy policy_;
  std::vector<std::map<std::size_t, Value>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

struct UnitPivots {
  using Value = mpz_class;
  Value convert(const mpz_class& v) const { return v; }
  bool is_zero(const Value& v) const { return v == 0; }
  bool accepts(const Value& v) const { return v == 1 || v == -1; }
  // v / pivot for a unit pivot.
  Value factor(const Value& v, const Value& pivot) const { return v * pivot; }
  Value negate_product(const Value& f, const Value& v) const { return -(f * v); }
  void subtract_product(Value& acc, const Value& f, const Value& v) const { acc -= f * v; }
  mpz_class to_integer(const Value& v) const { return v; }
};

struct PrimeField {
  using Value = std::uint64_t;
  std::uint64_t p;

  Value convert(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
  }
  bool is_zero(Value v) const { return v == 0; }
  bool accepts(Value v) const { return v != 0; }
  Value inverse(Value a) const {
    // Fermat: a^(p-2).
    Value result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  }
  Value factor(Value v, Value pivot) const { return v * inverse(pivot) % p; }
  Value negate_product(Value f, Value v) const { return (p - f * v % p) % p; }
  void subtract_product(Value& acc, Value f, Value v) const { acc = (acc + p - f * v % p) % p; }
  mpz_class to_integer(Value v) const { return mpz_class(static_cast<unsigned long>(v)); }
};

}  // namespace

IntegerInvariants integer_invariants(const SparseIntMatrix& a) {
  SparseEliminator<UnitPivots> elim(a, UnitPivots{});
  IntegerInvariants out;
  out.rank = elim.run();
  for (auto& d : smith_diagonal(elim.remainder())) {
    ++out.rank;
    if (d != 1) out.torsion.push_back(std::move(d));
  }
  return out;
}

std::size_t rank_mod_p(const SparseIntMatrix& a, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be a prime");
  SparseEliminator<PrimeField> elim(a, PrimeField{p});
  return elim.run();
}

}  // namespace djk
