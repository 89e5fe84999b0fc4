#include "djk/admissible.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace djk {

ExactMatrix column_complement(const ExactMatrix& a, FaceSet alpha) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!alpha.contains(static_cast<int>(j) + 1)) cols.push_back(j);
  }
  return select_columns(a, cols);
}

namespace {

void check_shape(const SimplicialComplex& complex, const ExactMatrix& a) {
  const std::size_t m = complex.vertex_count();
  const std::size_t rows = m - complex.n();
  if (a.rows() != rows || (rows > 0 && a.cols() != m)) {
    throw std::invalid_argument("admissibility: matrix is " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ", expected " + std::to_string(rows) + "x" +
                                std::to_string(m));
  }
}

AdmissibilityResult check_faces(const std::vector<FaceSet>& faces, const ExactMatrix& a) {
  for (FaceSet alpha : faces) {
    if (rank(column_complement(a, alpha)) != a.rows()) return {false, alpha};
  }
  return {};
}

}  // namespace

AdmissibilityResult is_admissible(const SimplicialComplex& complex, const ExactMatrix& a) {
  check_shape(complex, a);
  if (a.rows() == 0) return {};
  return check_faces(complex.facets(), a);
}

AdmissibilityResult is_admissible_all_faces(const SimplicialComplex& complex, const ExactMatrix& a) {
  check_shape(complex, a);
  if (a.rows() == 0) return {};
  return check_faces(complex.faces(), a);
}

ExactMatrix vandermonde(int m, int n) {
  if (n < 1 || n > m) {
    throw std::invalid_argument("vandermonde: need 1 <= n <= m, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
  }
  ExactMatrix a(static_cast<std::size_t>(m - n), static_cast<std::size_t>(m));
  for (int s = 1; s <= m - n; ++s) {
    for (int r = 1; r <= m; ++r) {
      mpz_class v;
      mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(r));
      a(s - 1, r - 1) = mpq_class(v);
    }
  }
  return a;
}

}  // namespace djk
