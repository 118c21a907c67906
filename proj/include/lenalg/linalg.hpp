#pragma once

// Dense exact linear algebra over an ExactField.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenalg/field.hpp"

namespace lenalg {

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& x) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(x) } -> std::convertible_to<bool>;
  { f.inv(x) } -> std::convertible_to<typename F::value_type>;
  { f.render(x) } -> std::convertible_to<std::string>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

template <ExactField F>
using Scalar = typename F::value_type;

template <ExactField F>
using Vec = std::vector<Scalar<F>>;

template <ExactField F>
using Matrix = std::vector<Vec<F>>;  // row-major

template <ExactField F>
Vec<F> zero_vec(const F& field, std::size_t n) {
  return Vec<F>(n, field.zero());
}

template <ExactField F>
Vec<F> unit_vec(const F& field, std::size_t n, std::size_t i) {
  Vec<F> v = zero_vec(field, n);
  v[i] = field.one();
  return v;
}

template <ExactField F>
bool is_zero_vec(const F& field, const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar<F>& x) { return field.is_zero(x); });
}

// y += alpha * x
template <ExactField F>
void axpy(const F& field, Vec<F>& y, const Scalar<F>& alpha, const Vec<F>& x) {
  if (field.is_zero(alpha)) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!field.is_zero(x[i])) {
      Scalar<F> t = alpha * x[i];
      y[i] += t;
    }
  }
}

template <ExactField F>
Vec<F> add(const F&, Vec<F> a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <ExactField F>
Vec<F> sub(const F&, Vec<F> a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <ExactField F>
Vec<F> scale(const F&, const Scalar<F>& alpha, Vec<F> v) {
  for (auto& x : v) x *= alpha;
  return v;
}

// Row vector times matrix.
template <ExactField F>
Vec<F> vec_mat(const F& field, const Vec<F>& v, const Matrix<F>& m) {
  Vec<F> out = zero_vec(field, m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < v.size(); ++i) axpy(field, out, v[i], m[i]);
  return out;
}

template <ExactField F>
Matrix<F> mat_mul(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(vec_mat(field, row, b));
  return out;
}

template <ExactField F>
Matrix<F> identity_matrix(const F& field, std::size_t n) {
  Matrix<F> m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(unit_vec(field, n, i));
  return m;
}

// Gauss-Jordan inverse; nullopt when singular.
template <ExactField F>
std::optional<Matrix<F>> try_inverse(const F& field, Matrix<F> a) {
  const std::size_t n = a.size();
  Matrix<F> inv = identity_matrix(field, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && field.is_zero(a[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Scalar<F> s = field.inv(a[col][col]);
    a[col] = scale(field, s, std::move(a[col]));
    inv[col] = scale(field, s, std::move(inv[col]));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || field.is_zero(a[r][col])) continue;
      const Scalar<F> f = -a[r][col];
      axpy(field, a[r], f, a[col]);
      axpy(field, inv[r], f, inv[col]);
    }
  }
  return inv;
}

// A subspace of F^n stored as its reduced row-echelon basis: pivots strictly
// increasing, pivot entries 1, pivot columns zero elsewhere. Equal subspaces
// have identical rows.
template <ExactField F>
class Subspace {
 public:
  Subspace(F field, std::size_t ambient_dim) : field_(std::move(field)), n_(ambient_dim) {}

  static Subspace span(const F& field, std::size_t ambient_dim, const std::vector<Vec<F>>& vectors) {
    Subspace s(field, ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<F>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_full() const { return rows_.size() == n_; }

  Vec<F> residual(Vec<F> v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!field_.is_zero(v[pivots_[r]])) {
        const Scalar<F> f = -v[pivots_[r]];
        axpy(field_, v, f, rows_[r]);
      }
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vec(field_, residual(v)); }

  // Returns true when the dimension grew.
  bool insert(const Vec<F>& v) {
    Vec<F> r = residual(v);
    std::size_t p = 0;
    while (p < n_ && field_.is_zero(r[p])) ++p;
    if (p == n_) return false;
    const Scalar<F> s = field_.inv(r[p]);
    r = scale(field_, s, std::move(r));
    for (auto& row : rows_) {
      if (!field_.is_zero(row[p])) {
        const Scalar<F> f = -row[p];
        axpy(field_, row, f, r);
      }
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  Subspace join(const Subspace& other) const {
    Subspace out = *this;
    for (const auto& r : other.rows_) out.insert(r);
    return out;
  }

  // Coefficients of v against rows(), or nullopt when v is not in the span.
  std::optional<Vec<F>> coords(const Vec<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<F> c;
    c.reserve(rows_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  void check(const Vec<F>& v) const {
    if (v.size() != n_) throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
  }

  F field_;
  std::size_t n_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <ExactField F>
Subspace<F> span(const F& field, std::size_t n, const std::vector<Vec<F>>& vectors) {
  return Subspace<F>::span(field, n, vectors);
}

template <ExactField F>
Subspace<F> subspace_sum(const Subspace<F>& u, const Subspace<F>& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw Error(Errc::DimensionMismatch, "subspaces of different spaces");
  return u.join(v);
}

template <ExactField F>
bool member(const Subspace<F>& u, const Vec<F>& v) {
  return u.contains(v);
}

template <ExactField F>
std::optional<Vec<F>> coords_in_span(const Subspace<F>& u, const Vec<F>& v) {
  return u.coords(v);
}

// Coefficients c with sum c_i * vectors[i] = v, for linearly independent
// `vectors`; nullopt when v is outside their span.
template <ExactField F>
std::optional<Vec<F>> coords_in_span(const F& field, const std::vector<Vec<F>>& vectors, const Vec<F>& v) {
  const std::size_t m = vectors.size();
  const std::size_t n = v.size();
  // Columns are the vectors plus v; eliminate on the n x (m+1) system.
  Matrix<F> sys(n, zero_vec(field, m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) sys[i][j] = vectors[j][i];
    sys[i][m] = v[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && field.is_zero(sys[piv][col])) ++piv;
    if (piv == n) throw Error(Errc::SingularMatrix, "coords_in_span needs independent vectors");
    std::swap(sys[piv], sys[row]);
    const Scalar<F> s = field.inv(sys[row][col]);
    sys[row] = scale(field, s, std::move(sys[row]));
    for (std::size_t r = 0; r < n; ++r) {
      if (r != row && !field.is_zero(sys[r][col])) {
        const Scalar<F> f = -sys[r][col];
        axpy(field, sys[r], f, sys[row]);
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() < m) throw Error(Errc::SingularMatrix, "coords_in_span needs independent vectors");
  for (std::size_t r = row; r < n; ++r) {
    if (!field.is_zero(sys[r][m])) return std::nullopt;
  }
  Vec<F> c = zero_vec(field, m);
  for (std::size_t r = 0; r < m; ++r) c[pivot_col[r]] = sys[r][m];
  return c;
}

// Rows of `matrix` are the new basis vectors written in old coordinates.
template <ExactField F>
class BasisChange {
 public:
  BasisChange(F field, Matrix<F> matrix) : field_(std::move(field)), matrix_(std::move(matrix)) {
    for (const auto& row : matrix_) {
      if (row.size() != matrix_.size()) throw Error(Errc::DimensionMismatch, "basis change must be square");
    }
    auto inv = try_inverse(field_, matrix_);
    if (!inv) throw Error(Errc::SingularMatrix, "basis change is not invertible");
    inverse_ = std::move(*inv);
  }

  static BasisChange identity(const F& field, std::size_t n) { return BasisChange(field, identity_matrix(field, n)); }

  const F& field() const { return field_; }
  std::size_t dim() const { return matrix_.size(); }
  const Matrix<F>& matrix() const { return matrix_; }
  const Matrix<F>& inverse() const { return inverse_; }
  const Vec<F>& row(std::size_t i) const { return matrix_[i]; }

  Vec<F> to_old(const Vec<F>& new_coords) const { return vec_mat(field_, new_coords, matrix_); }
  Vec<F> to_new(const Vec<F>& old_coords) const { return vec_mat(field_, old_coords, inverse_); }

  // `next` is expressed in the coordinates of this basis; the result maps
  // straight from the original coordinates.
  BasisChange then(const BasisChange& next) const { return BasisChange(field_, mat_mul(field_, next.matrix_, matrix_)); }

 private:
  F field_;
  Matrix<F> matrix_;
  Matrix<F> inverse_;
};

}  // namespace lenalg
