#pragma once

// Polynomial identities checked exactly on structure constants.
//
// An identity that is homogeneous of degree d in a variable x splits into
// multihomogeneous components, one per multiset of basis indices; each
// component is multilinear in the basis vectors it involves, so the identity
// holds on A (and on every scalar extension of A) iff every component
// vanishes on basis vectors. This gives:
//   associativity  (e_i e_j) e_k = e_i (e_j e_k) for all i, j, k
//   flexibility    e_i (e_j e_i) = (e_i e_j) e_i and, for i < k,
//                  e_i (e_j e_k) + e_k (e_j e_i) = (e_i e_j) e_k + (e_k e_j) e_i
//   Jordan         for every multiset {i, j, k} and every e_l, the sum of
//                  T(e_a, e_b, e_c, e_l) over the distinct orderings (a, b, c)
//                  of the multiset vanishes, where
//                  T(x1, x2, x3, y) = (x1 x2)(y x3) - ((x1 x2) y) x3
// No division by a factorial is needed, so this is exact in every
// characteristic.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lenalg/budget.hpp"
#include "lenalg/decider.hpp"

namespace lenalg {

template <ExactField F>
struct IdentityVerdict {
  std::string identity;
  bool holds = true;
  // Basis indices (or, for power-associativity, {k, p, p'}) where the
  // defect is nonzero, and the defect itself.
  std::vector<std::size_t> indices;
  Vec<F> defect;
  // Set by power-associativity: the element x that fails.
  std::optional<Vec<F>> element;
  std::string note;
};

namespace detail {

template <ExactField F>
struct BasisProducts {
  const Algebra<F>& a;
  std::vector<Vec<F>> p;

  explicit BasisProducts(const Algebra<F>& alg) : a(alg) {
    const std::size_t n = a.dim();
    p.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p.push_back(a.product(i, j));
    }
  }
  const Vec<F>& operator()(std::size_t i, std::size_t j) const { return p[i * a.dim() + j]; }
  // e_i v and v e_i
  Vec<F> left(std::size_t i, const Vec<F>& v) const { return a.mul(a.unit(i), v); }
  Vec<F> right(const Vec<F>& v, std::size_t i) const { return a.mul(v, a.unit(i)); }
};

template <ExactField F>
IdentityVerdict<F> fail(std::string name, std::vector<std::size_t> idx, Vec<F> defect) {
  return {std::move(name), false, std::move(idx), std::move(defect), std::nullopt, {}};
}

}  // namespace detail

template <ExactField F>
IdentityVerdict<F> is_commutative(const Algebra<F>& a) {
  const auto& field = a.field();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vec<F> d = sub(field, a.product(i, j), a.product(j, i));
      if (!is_zero_vec(field, d)) return detail::fail<F>("commutative", {i, j}, std::move(d));
    }
  }
  return {"commutative"};
}

template <ExactField F>
IdentityVerdict<F> is_associative(const Algebra<F>& a) {
  const auto& field = a.field();
  const detail::BasisProducts<F> p(a);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vec<F> d = sub(field, p.right(p(i, j), k), p.left(i, p(j, k)));
        if (!is_zero_vec(field, d)) return detail::fail<F>("associative", {i, j, k}, std::move(d));
      }
    }
  }
  return {"associative"};
}

template <ExactField F>
IdentityVerdict<F> is_flexible(const Algebra<F>& a) {
  const auto& field = a.field();
  const std::size_t n = a.dim();
  const detail::BasisProducts<F> p(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec<F> d = sub(field, p.left(i, p(j, i)), p.right(p(i, j), i));
      if (!is_zero_vec(field, d)) return detail::fail<F>("flexible", {i, j, i}, std::move(d));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = i + 1; k < n; ++k) {
        Vec<F> lhs = add(field, p.left(i, p(j, k)), p.left(k, p(j, i)));
        Vec<F> rhs = add(field, p.right(p(i, j), k), p.right(p(k, j), i));
        Vec<F> d = sub(field, std::move(lhs), rhs);
        if (!is_zero_vec(field, d)) return detail::fail<F>("flexible", {i, j, k}, std::move(d));
      }
    }
  }
  return {"flexible"};
}

template <ExactField F>
IdentityVerdict<F> is_jordan(const Algebra<F>& a) {
  const auto& field = a.field();
  if (field.characteristic() == 2) throw Error(Errc::CharacteristicTwo, "Jordan algebras are considered outside characteristic 2");
  auto comm = is_commutative(a);
  if (!comm.holds) {
    comm.identity = "jordan";
    comm.note = "not commutative";
    return comm;
  }
  const std::size_t n = a.dim();
  const detail::BasisProducts<F> p(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        std::array<std::size_t, 3> idx{i, j, k};
        for (std::size_t l = 0; l < n; ++l) {
          Vec<F> d = zero_vec(field, n);
          do {
            const Vec<F>& x12 = p(idx[0], idx[1]);
            const Vec<F> first = a.mul(x12, p(l, idx[2]));
            const Vec<F> second = p.right(p.right(x12, l), idx[2]);
            d = add(field, std::move(d), sub(field, first, second));
          } while (std::next_permutation(idx.begin(), idx.end()));
          if (!is_zero_vec(field, d)) return detail::fail<F>("jordan", {i, j, k, l}, std::move(d));
        }
      }
    }
  }
  return {"jordan"};
}

// First k <= d at which two parenthesizations x^p x^(k-p) and x^p' x^(k-p')
// differ, assuming all lower powers are well defined.
template <ExactField F>
std::optional<std::array<std::size_t, 3>> power_defect(const Algebra<F>& a, const Vec<F>& x, std::size_t d,
                                                       Vec<F>* defect = nullptr) {
  std::vector<Vec<F>> pw{Vec<F>{}, x};
  for (std::size_t k = 2; k <= d; ++k) {
    const Vec<F> ref = a.mul(pw[1], pw[k - 1]);
    for (std::size_t q = 2; q < k; ++q) {
      Vec<F> other = a.mul(pw[q], pw[k - q]);
      if (other != ref) {
        if (defect) *defect = sub(a.field(), std::move(other), ref);
        return std::array<std::size_t, 3>{k, 1, q};
      }
    }
    pw.push_back(ref);
  }
  return std::nullopt;
}

struct PowerOptions {
  std::size_t degree = 6;
  std::uint64_t samples = 100;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
};

// Exhaustive over all x when the field is finite and q^n * degree^2 fits the
// budget; otherwise `samples` random x.
template <ExactField F>
IdentityVerdict<F> is_power_associative_upto(const Algebra<F>& a, const PowerOptions& opt = {}) {
  const auto& field = a.field();
  const std::size_t n = a.dim();
  if (opt.degree < 3) throw Error(Errc::DimensionMismatch, "power-associativity degree must be at least 3");
  IdentityVerdict<F> out{"power-associative"};
  auto test = [&](const Vec<F>& x) {
    Vec<F> defect;
    if (auto bad = power_defect(a, x, opt.degree, &defect)) {
      out.holds = false;
      out.indices.assign(bad->begin(), bad->end());
      out.defect = std::move(defect);
      out.element = x;
      return true;
    }
    return false;
  };
  bool exhaustive = false;
  if constexpr (F::is_finite()) {
    const std::uint64_t q = field.order();
    const std::uint64_t work = saturating_pow(q, n);
    const std::uint64_t cap = opt.budget ? *opt.budget : enumeration_budget();
    if (work <= cap / (opt.degree * opt.degree)) {
      exhaustive = true;
      Vec<F> x = zero_vec(field, n);
      for (std::uint64_t idx = 0; idx < work; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t k = n; k-- > 0;) {
          x[k] = field.element(r % q);
          r /= q;
        }
        if (test(x)) break;
      }
    }
  }
  if (!exhaustive) {
    std::mt19937_64 rng(opt.seed);
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      Vec<F> x = zero_vec(field, n);
      for (auto& c : x) c = field.random(rng);
      if (test(x)) break;
    }
  }
  out.note = exhaustive ? "exhaustive" : "sampled";
  return out;
}

// ---------------------------------------------------------------------------
// Criteria on special-basis data.

template <ExactField F>
bool check_F(const F& field, const SpecialBasisWitness<F>& w) {
  const std::size_t n = w.mu.size();
  const Scalar<F> two = field.from_int(2);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (i == j) continue;
      if (w.alpha[i][j] != w.alpha[j][i]) return false;
      const Scalar<F> lhs = w.beta[j] * w.mu[i];
      const Scalar<F> rhs = w.beta[i] * w.alpha[i][j];
      if (lhs != rhs) return false;
      for (std::size_t h = 1; h < n; ++h) {
        if (h == i || h == j) continue;
        const Scalar<F> l2 = w.beta[h] * w.alpha[i][j] + w.beta[i] * w.alpha[h][j];
        const Scalar<F> r2 = two * w.beta[j] * w.alpha[i][h];
        if (l2 != r2) return false;
      }
    }
  }
  return true;
}

template <ExactField F>
bool check_A1A2(const F&, const SpecialBasisWitness<F>& w) {
  const std::size_t n = w.mu.size();
  for (std::size_t i = 1; i < n; ++i) {
    const Scalar<F> sq = w.beta[i] * w.beta[i];
    if (w.mu[i] != sq) return false;
    for (std::size_t j = 1; j < n; ++j) {
      if (i == j) continue;
      const Scalar<F> prod = w.beta[j] * w.beta[i];
      if (w.alpha[i][j] != prod) return false;
    }
  }
  return true;
}

template <ExactField F>
bool check_jordan_condition3(const F& field, const SpecialBasisWitness<F>& w) {
  const std::size_t n = w.mu.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (!field.is_zero(w.beta[i])) return false;
    for (std::size_t j = 1; j < n; ++j) {
      if (w.alpha[i][j] != w.alpha[j][i]) return false;
    }
  }
  return true;
}

}  // namespace lenalg
