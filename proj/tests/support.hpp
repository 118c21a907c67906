#pragma once

// Test-side helpers. The oracles here deliberately avoid the library's
// Subspace, length and decider code: they use their own elimination and
// plain loops so that agreement means something.

#include <cstdint>
#include <random>
#include <vector>

#include "lenalg/constructors.hpp"
#include "lenalg/fixtures.hpp"
#include "lenalg/generate.hpp"
#include "lenalg/identities.hpp"
#include "lenalg/kernels.hpp"
#include "lenalg/length.hpp"
#include "lenalg/report.hpp"

namespace lt {

using namespace lenalg;

inline FiniteField gf(std::uint32_t p) { return FiniteField(FieldSpec::prime(p)); }
inline FiniteField gf4() { return FiniteField(FieldSpec::parse("GF(4)")); }

template <ExactField F>
Vec<F> vec(const F& field, std::initializer_list<long long> xs) {
  Vec<F> v;
  for (long long x : xs) v.push_back(field.from_int(x));
  return v;
}

// Rank by textbook elimination on a copy.
template <ExactField F>
std::size_t rank(const F& field, std::vector<Vec<F>> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && field.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar<F> inv = field.inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (field.is_zero(rows[i][c])) continue;
      const Scalar<F> f = rows[i][c] * inv;
      for (std::size_t k = c; k < n; ++k) {
        const Scalar<F> t = f * rows[r][k];
        rows[i][k] = rows[i][k] - t;
      }
    }
    ++r;
  }
  return r;
}

template <ExactField F>
bool in_span(const F& field, std::vector<Vec<F>> rows, const Vec<F>& v) {
  const std::size_t r = rank(field, rows);
  rows.push_back(v);
  return rank(field, rows) == r;
}

// Bilinear product straight from the constants.
template <ExactField F>
Vec<F> product(const Algebra<F>& a, const Vec<F>& u, const Vec<F>& v) {
  const auto& field = a.field();
  const std::size_t n = a.dim();
  Vec<F> out(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar<F> c = u[i] * v[j];
      if (field.is_zero(c)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar<F> t = c * a.table().at(i, j, k);
        out[k] = out[k] + t;
      }
    }
  }
  return out;
}

template <ExactField F>
Vec<F> element(const F& field, std::size_t n, std::uint64_t idx) {
  const std::uint64_t q = field.order();
  Vec<F> v(n, field.zero());
  for (std::size_t k = n; k-- > 0;) {
    v[k] = field.element(idx % q);
    idx /= q;
  }
  return v;
}

inline std::uint64_t ipow(std::uint64_t q, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= q;
  return r;
}

// Length one iff ab in span{1, a, b} for every pair.
inline bool naive_length_one(const Algebra<FiniteField>& a) {
  const auto& field = a.field();
  const std::size_t n = a.dim();
  const std::uint64_t total = ipow(field.order(), n);
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto x = element(field, n, i);
    for (std::uint64_t j = 0; j < total; ++j) {
      const auto y = element(field, n, j);
      if (!in_span(field, {a.one(), x, y}, product(a, x, y))) return false;
    }
  }
  return true;
}

// Word spans by explicit words: W_k collects u v for u in W_p, v in W_q,
// p + q = k. Returns dim L_0, dim L_1, ... until the closure is reached
// and stays put for `extra` more steps.
template <ExactField F>
std::vector<std::size_t> brute_word_dims(const Algebra<F>& a, const std::vector<Vec<F>>& set, std::size_t max_len) {
  const auto& field = a.field();
  std::vector<std::vector<Vec<F>>> words(max_len + 1);
  words[1] = set;
  std::vector<Vec<F>> all{a.one()};
  std::vector<std::size_t> dims{rank(field, all)};
  for (std::size_t k = 1; k <= max_len; ++k) {
    if (k >= 2) {
      for (std::size_t p = 1; p < k; ++p) {
        for (const auto& u : words[p]) {
          for (const auto& v : words[k - p]) words[k].push_back(product(a, u, v));
        }
      }
      // keep a basis of the new words to bound the growth
      std::vector<Vec<F>> basis;
      for (const auto& w : words[k]) {
        if (!in_span(field, basis, w)) basis.push_back(w);
      }
      words[k] = std::move(basis);
    }
    for (const auto& w : words[k]) all.push_back(w);
    dims.push_back(rank(field, all));
  }
  return dims;
}

}  // namespace lt
