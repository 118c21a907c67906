#pragma once

// Word spans L_i(S) and the length of a generating set.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lenalg/algebra.hpp"

namespace lenalg {

template <ExactField F>
struct WordSpanSequence {
  std::vector<Subspace<F>> spans;  // L_0 .. L_t
  std::size_t stabilized_at = 0;   // smallest n >= 1 with dim L_n = ... = dim L_2n

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    d.reserve(spans.size());
    for (const auto& s : spans) d.push_back(s.dim());
    return d;
  }
  const Subspace<F>& closure() const { return spans.back(); }
};

// Iteration cap. Lengths of generated subalgebras are bounded by
// max(1, 2^(dim-2)) and the stop rule fires by twice that.
inline std::size_t word_span_cap(std::size_t dim) {
  const std::size_t bound = dim <= 2 ? 1 : (dim - 2 >= 20 ? std::size_t{1} << 20 : std::size_t{1} << (dim - 2));
  return 2 * bound + 2;
}

template <ExactField F>
WordSpanSequence<F> word_spans(const Algebra<F>& a, const std::vector<Vec<F>>& set) {
  const auto& field = a.field();
  const std::size_t n = a.dim();
  for (const auto& s : set) {
    if (s.size() != n) throw Error(Errc::DimensionMismatch, "generator has wrong length");
  }
  WordSpanSequence<F> seq;
  seq.spans.push_back(span(field, n, {a.one()}));
  Subspace<F> l1 = seq.spans[0];
  for (const auto& s : set) l1.insert(s);
  seq.spans.push_back(std::move(l1));

  const std::size_t cap = word_span_cap(n);
  for (std::size_t t = 1;; ++t) {
    // Stop rule checked once L_0..L_t exist: n = t / 2.
    if (t % 2 == 0) {
      const std::size_t m = t / 2;
      bool flat = true;
      for (std::size_t i = m; i < t && flat; ++i) flat = seq.spans[i].dim() == seq.spans[i + 1].dim();
      if (flat) {
        seq.stabilized_at = m;
        seq.spans.erase(seq.spans.begin() + static_cast<std::ptrdiff_t>(t + 1), seq.spans.end());
        return seq;
      }
    }
    if (t >= cap) throw Error(Errc::CapExceeded, "word spans did not stabilize within the iteration cap");
    Subspace<F> next = seq.spans[t];
    for (std::size_t p = 1; p <= t && !next.is_full(); ++p) {
      const auto& lp = seq.spans[p].rows();
      const auto& lq = seq.spans[t + 1 - p].rows();
      for (std::size_t u = 0; u < lp.size() && !next.is_full(); ++u) {
        for (const auto& v : lq) {
          next.insert(a.mul(lp[u], v));
          if (next.is_full()) break;
        }
      }
    }
    seq.spans.push_back(std::move(next));
  }
}

template <ExactField F>
struct SetLength {
  std::size_t length = 0;
  bool generates = false;
  std::size_t closure_dim = 0;
  // dim L_0 .. dim L_{max(length, 1)}
  std::vector<std::size_t> dims;
};

template <ExactField F>
SetLength<F> length_of_set(const Algebra<F>& a, const std::vector<Vec<F>>& set) {
  const auto seq = word_spans(a, set);
  const auto all = seq.dims();
  const std::size_t top = all[seq.stabilized_at];
  SetLength<F> out;
  out.closure_dim = top;
  out.generates = top == a.dim();
  while (all[out.length] != top) ++out.length;
  out.dims.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::max<std::size_t>(out.length, 1) + 1));
  return out;
}

// alg(S) as a subspace.
template <ExactField F>
Subspace<F> generated_subalgebra(const Algebra<F>& a, const std::vector<Vec<F>>& set) {
  return word_spans(a, set).closure();
}

}  // namespace lenalg
