#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace djk {

/// Dense row-major matrix. Zero rows or zero columns are allowed.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (v != 0) return false;
    }
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<mpz_class>;
using RationalMatrix = DenseMatrix<mpq_class>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Columns of `a` listed in `cols`, in that order.
template <typename T>
DenseMatrix<T> select_columns(const DenseMatrix<T>& a, std::span<const std::size_t> cols) {
  DenseMatrix<T> out(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(i, cols[j]);
  }
  return out;
}

/// Rank by fraction-free (Bareiss) row echelon elimination.
std::size_t rank(const IntMatrix& a);
/// Rank over Q; rows are cleared of denominators before elimination.
std::size_t rank(const RationalMatrix& a);
/// Exact determinant of a square matrix by Bareiss elimination.
mpz_class determinant(const IntMatrix& a);

/// Nonzero diagonal of the Smith normal form, d_1 | d_2 | ... , all positive.
/// The length of the result is the rank.
std::vector<mpz_class> smith_diagonal(IntMatrix a);

/// Sparse integer matrix with ordered rows; used for nerve coboundaries.
class SparseIntMatrix {
 public:
  using Row = std::map<std::size_t, mpz_class>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Adds v to entry (i, j); entries that cancel to zero are removed.
  void add(std::size_t i, std::size_t j, const mpz_class& v);
  const Row& row(std::size_t i) const { return rows_[i]; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  SparseIntMatrix operator*(const SparseIntMatrix& b) const;
  IntMatrix to_dense() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Rank and non-unit invariant factors of an integer matrix.
struct IntegerInvariants {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, divisibility chain
};

/// Unit pivots are eliminated sparsely; the remaining block goes through the
/// dense Smith normal form.
IntegerInvariants integer_invariants(const SparseIntMatrix& a);
/// Rank over F_p; p must be prime and below 2^32.
std::size_t rank_mod_p(const SparseIntMatrix& a, std::uint32_t p);

}  // namespace djk
