#pragma once

// Finite-dimensional algebras given by structure constants. Nothing beyond
// bilinearity is assumed about the product.

#include <cstddef>
#include <optional>
#include <vector>

#include "lenalg/linalg.hpp"

namespace lenalg {

// e_i * e_j = sum_k c(i, j, k) e_k
template <ExactField F>
class StructureTable {
 public:
  StructureTable(F field, std::size_t dim)
      : field_(std::move(field)), n_(dim), c_(dim * dim * dim, field_.zero()) {}

  StructureTable(F field, std::size_t dim, std::vector<Scalar<F>> constants)
      : field_(std::move(field)), n_(dim), c_(std::move(constants)) {
    if (c_.size() != n_ * n_ * n_) throw Error(Errc::DimensionMismatch, "structure constant count is not dim^3");
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return n_; }

  const Scalar<F>& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  Scalar<F>& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }

  Vec<F> product(std::size_t i, std::size_t j) const {
    const auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
    return Vec<F>(first, first + static_cast<std::ptrdiff_t>(n_));
  }

  void set_product(std::size_t i, std::size_t j, const Vec<F>& v) {
    if (v.size() != n_) throw Error(Errc::DimensionMismatch, "product vector has wrong length");
    std::copy(v.begin(), v.end(), c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_));
  }

  // sum_{i,j} u_i v_j (e_i e_j)
  Vec<F> mul(const Vec<F>& u, const Vec<F>& v) const {
    if (u.size() != n_ || v.size() != n_) throw Error(Errc::DimensionMismatch, "mul operands have wrong length");
    Vec<F> out = zero_vec(field_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (field_.is_zero(u[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (field_.is_zero(v[j])) continue;
        const Scalar<F> w = u[i] * v[j];
        const auto* row = &c_[(i * n_ + j) * n_];
        for (std::size_t k = 0; k < n_; ++k) {
          if (!field_.is_zero(row[k])) {
            const Scalar<F> t = w * row[k];
            out[k] += t;
          }
        }
      }
    }
    return out;
  }

  const std::vector<Scalar<F>>& constants() const { return c_; }

  friend bool operator==(const StructureTable& a, const StructureTable& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  F field_;
  std::size_t n_;
  std::vector<Scalar<F>> c_;
};

template <ExactField F>
bool is_identity_of(const StructureTable<F>& t, const Vec<F>& one) {
  const auto& field = t.field();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const Vec<F> e = unit_vec(field, t.dim(), i);
    if (t.mul(one, e) != e || t.mul(e, one) != e) return false;
  }
  return true;
}

template <ExactField F>
class Algebra {
 public:
  Algebra(StructureTable<F> table, Vec<F> one) : table_(std::move(table)), one_(std::move(one)) {
    if (one_.size() != table_.dim()) throw Error(Errc::DimensionMismatch, "identity vector has wrong length");
    if (!is_identity_of(table_, one_)) throw Error(Errc::NotAnIdentity, "given vector is not a two-sided identity");
  }

  const F& field() const { return table_.field(); }
  std::size_t dim() const { return table_.dim(); }
  const StructureTable<F>& table() const { return table_; }
  const Vec<F>& one() const { return one_; }

  Vec<F> product(std::size_t i, std::size_t j) const { return table_.product(i, j); }
  Vec<F> mul(const Vec<F>& u, const Vec<F>& v) const { return table_.mul(u, v); }
  Vec<F> unit(std::size_t i) const { return unit_vec(field(), dim(), i); }

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.table_ == b.table_ && a.one_ == b.one_; }

 private:
  StructureTable<F> table_;
  Vec<F> one_;
};

template <ExactField F>
Vec<F> mul(const Algebra<F>& a, const Vec<F>& u, const Vec<F>& v) {
  return a.mul(u, v);
}

// Structure constants in the basis given by the rows of `change`.
template <ExactField F>
StructureTable<F> change_basis(const StructureTable<F>& t, const BasisChange<F>& change) {
  const std::size_t n = t.dim();
  if (change.dim() != n) throw Error(Errc::DimensionMismatch, "basis change has wrong size");
  StructureTable<F> out(t.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.set_product(i, j, change.to_new(t.mul(change.row(i), change.row(j))));
    }
  }
  return out;
}

template <ExactField F>
Algebra<F> change_basis(const Algebra<F>& a, const BasisChange<F>& change) {
  return Algebra<F>(change_basis(a.table(), change), change.to_new(a.one()));
}

// Solves x e_j = e_j = e_j x for all j. A two-sided identity is unique when
// it exists, so a consistent system pins it down.
template <ExactField F>
std::optional<Vec<F>> find_identity(const StructureTable<F>& t) {
  const auto& field = t.field();
  const std::size_t n = t.dim();
  // Equations in x_0..x_{n-1}, stored as rows [coeffs | rhs].
  Matrix<F> rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Vec<F> left = zero_vec(field, n + 1), right = zero_vec(field, n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        left[i] = t.at(i, j, k);
        right[i] = t.at(j, i, k);
      }
      left[n] = j == k ? field.one() : field.zero();
      right[n] = left[n];
      rows.push_back(std::move(left));
      rows.push_back(std::move(right));
    }
  }
  Subspace<F> echelon(field, n + 1);
  for (const auto& r : rows) echelon.insert(r);
  // Inconsistent iff some row reduces to [0 ... 0 | 1].
  for (std::size_t r = 0; r < echelon.dim(); ++r) {
    if (echelon.pivots()[r] == n) return std::nullopt;
  }
  Vec<F> x = zero_vec(field, n);
  for (std::size_t r = 0; r < echelon.dim(); ++r) x[echelon.pivots()[r]] = echelon.rows()[r][n];
  if (!is_identity_of(t, x)) return std::nullopt;
  return x;
}

// F 1 + A with the identity adjoined as basis vector 0 and A's basis
// following it; e_i e_j keeps A's product.
template <ExactField F>
Algebra<F> unital_hull(const StructureTable<F>& t) {
  const auto& field = t.field();
  const std::size_t n = t.dim();
  StructureTable<F> out(field, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    out.set_product(0, i, unit_vec(field, n + 1, i));
    out.set_product(i, 0, unit_vec(field, n + 1, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.at(i + 1, j + 1, k + 1) = t.at(i, j, k);
    }
  }
  return Algebra<F>(std::move(out), unit_vec(field, n + 1, 0));
}

// A basis whose first vector is 1_A, completed greedily by standard vectors.
template <ExactField F>
BasisChange<F> identity_first_basis(const Algebra<F>& a) {
  const auto& field = a.field();
  Subspace<F> seen(field, a.dim());
  Matrix<F> rows{a.one()};
  seen.insert(a.one());
  for (std::size_t k = 0; k < a.dim() && rows.size() < a.dim(); ++k) {
    Vec<F> e = a.unit(k);
    if (seen.insert(e)) rows.push_back(std::move(e));
  }
  return BasisChange<F>(field, std::move(rows));
}

// The subalgebra spanned by `closed` (which must contain 1_A and be closed
// under the product), written in a basis that starts with 1_A.
template <ExactField F>
Algebra<F> induced_subalgebra(const Algebra<F>& a, const Subspace<F>& closed) {
  const auto& field = a.field();
  std::vector<Vec<F>> basis{a.one()};
  Subspace<F> seen(field, a.dim());
  seen.insert(a.one());
  for (const auto& r : closed.rows()) {
    if (seen.insert(r)) basis.push_back(r);
  }
  const std::size_t m = basis.size();
  if (m != closed.dim()) throw Error(Errc::DimensionMismatch, "subspace does not contain the identity");
  StructureTable<F> t(field, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto c = coords_in_span(field, basis, a.mul(basis[i], basis[j]));
      if (!c) throw Error(Errc::DimensionMismatch, "subspace is not closed under the product");
      t.set_product(i, j, *c);
    }
  }
  return Algebra<F>(std::move(t), unit_vec(field, m, 0));
}

}  // namespace lenalg
