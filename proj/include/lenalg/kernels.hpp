#pragma once

// Exhaustive enumeration kernels over finite fields. Each kernel has a serial
// reference implementation and an OpenMP one; both return identical results.
//
//   oracle_length_one   all pairs (a, b) in F^n x F^n, first violating pair
//   length_of_algebra   all subspaces V of A containing 1, max l(V) over the
//                       generating ones

#include <cstdint>
#include <optional>
#include <random>

#include "lenalg/budget.hpp"
#include "lenalg/decider.hpp"
#include "lenalg/length.hpp"

namespace lenalg {

enum class Exec { Serial, Parallel };

template <ExactField F>
struct OracleResult {
  Verdict verdict = Verdict::Yes;
  std::optional<ViolationWitness<F>> witness;
  // Position of the witness in the enumeration: index(a) * q^n + index(b),
  // vectors indexed with coordinate 0 most significant.
  std::uint64_t witness_index = 0;
  // False for sampling runs: "yes" then only means no violation was seen.
  bool complete = true;
  std::uint64_t pairs = 0;
};

OracleResult<FiniteField> oracle_length_one(const Algebra<FiniteField>& a, Exec exec = Exec::Parallel,
                                            std::optional<std::uint64_t> budget = std::nullopt);

// The vector at position `index` of the lexicographic enumeration of F^n.
Vec<FiniteField> vector_at(const FiniteField& field, std::size_t n, std::uint64_t index);

// Random pairs; incomplete by construction, usable over any field.
template <ExactField F>
OracleResult<F> oracle_sampled(const Algebra<F>& a, std::uint64_t samples, std::uint64_t seed) {
  const auto& field = a.field();
  std::mt19937_64 rng(seed);
  OracleResult<F> out;
  out.complete = false;
  auto draw = [&] {
    Vec<F> v = zero_vec(field, a.dim());
    for (auto& x : v) x = field.random(rng);
    return v;
  };
  for (std::uint64_t s = 0; s < samples; ++s) {
    Vec<F> x = draw();
    Vec<F> y = s % 4 == 0 ? x : draw();
    ++out.pairs;
    if (is_violation(a, x, y)) {
      out.verdict = Verdict::No;
      out.witness = ViolationWitness<F>{std::move(x), std::move(y), "sampled-pair", {}};
      out.witness_index = s;
      return out;
    }
  }
  return out;
}

// Number of subspaces of F_q^m (sum of Gaussian binomials), saturating.
std::uint64_t subspace_count(std::uint64_t q, std::size_t m);

// Reduced row-echelon subspaces of F^m in a fixed order: pivot-set bitmask
// ascending, then free entries as base-q digits.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(FiniteField field, std::size_t m);

  std::uint64_t count() const { return total_; }
  Matrix<FiniteField> rows(std::uint64_t index) const;

 private:
  struct Block {
    std::uint64_t start;
    std::uint64_t size;
    std::vector<std::size_t> pivots;
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, column)
  };
  FiniteField field_;
  std::size_t m_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

struct AlgebraLength {
  std::size_t length = 0;
  // Rows of a subspace V containing 1 with alg(V) = A and l(V) = length,
  // the first in enumeration order; original coordinates.
  Matrix<FiniteField> witness;
  std::uint64_t subspaces = 0;
  std::uint64_t generating = 0;
};

AlgebraLength length_of_algebra(const Algebra<FiniteField>& a, Exec exec = Exec::Parallel,
                                std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace lenalg
