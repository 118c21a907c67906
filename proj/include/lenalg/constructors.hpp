#pragma once

#include "lenalg/algebra.hpp"

namespace lenalg {

// F1 + V with (a 1 + x)(b 1 + y) = (ab + phi(x, y)) 1 + a y + b x, phi given
// by a symmetric gram matrix on V.
template <ExactField F>
Algebra<F> make_bilinear_jordan(const F& field, const Matrix<F>& gram) {
  if (field.characteristic() == 2) throw Error(Errc::CharacteristicTwo, "bilinear-form Jordan algebras need characteristic other than 2");
  const std::size_t m = gram.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (gram[i].size() != m) throw Error(Errc::DimensionMismatch, "gram matrix must be square");
    for (std::size_t j = 0; j < m; ++j) {
      if (gram[i][j] != gram[j][i]) throw Error(Errc::DimensionMismatch, "gram matrix must be symmetric");
    }
  }
  const std::size_t n = m + 1;
  StructureTable<F> t(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    t.set_product(0, i, unit_vec(field, n, i));
    t.set_product(i, 0, unit_vec(field, n, i));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t.at(i + 1, j + 1, 0) = gram[i][j];
  }
  return Algebra<F>(std::move(t), unit_vec(field, n, 0));
}

// M_n(F) on matrix units, E_pq at index p * n + q.
template <ExactField F>
Algebra<F> make_matrix_algebra(const F& field, std::size_t n) {
  if (n == 0) throw Error(Errc::DimensionMismatch, "matrix size must be positive");
  const std::size_t d = n * n;
  StructureTable<F> t(field, d);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t s = 0; s < n; ++s) t.at(p * n + q, q * n + s, p * n + s) = field.one();
    }
  }
  Vec<F> one = zero_vec(field, d);
  for (std::size_t p = 0; p < n; ++p) one[p * n + p] = field.one();
  return Algebra<F>(std::move(t), std::move(one));
}

// F + ... + F (k copies) on orthogonal idempotents.
template <ExactField F>
Algebra<F> make_direct_sum_of_fields(const F& field, std::size_t k) {
  if (k == 0) throw Error(Errc::DimensionMismatch, "need at least one summand");
  StructureTable<F> t(field, k);
  for (std::size_t i = 0; i < k; ++i) t.at(i, i, i) = field.one();
  return Algebra<F>(std::move(t), Vec<F>(k, field.one()));
}

}  // namespace lenalg
