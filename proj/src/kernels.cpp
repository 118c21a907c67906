#include "lenalg/kernels.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <mutex>

#include <omp.h>

namespace lenalg {

namespace {

using FF = FiniteField;

void check_budget(std::uint64_t work, std::optional<std::uint64_t> budget, const char* what) {
  const std::uint64_t cap = budget ? *budget : enumeration_budget();
  if (work > cap) {
    throw Error(Errc::BudgetExceeded, std::string(what) + " needs " + std::to_string(work) + " work units, budget is " +
                                          std::to_string(cap));
  }
}

// Per-a state: the echelon form of span{1, a} and the rows a * e_j.
struct PairChecker {
  const Algebra<FF>& alg;
  Subspace<FF> base;
  Matrix<FF> left;

  PairChecker(const Algebra<FF>& a, const Vec<FF>& x) : alg(a), base(a.field(), a.dim()) {
    base.insert(a.one());
    base.insert(x);
    for (std::size_t j = 0; j < a.dim(); ++j) left.push_back(a.mul(x, a.unit(j)));
  }

  bool violates(const Vec<FF>& y) const {
    const auto& field = alg.field();
    const Vec<FF> xy = vec_mat(field, y, left);
    const Vec<FF> ry = base.residual(y);
    const Vec<FF> rxy = base.residual(xy);
    std::size_t p = 0;
    while (p < ry.size() && field.is_zero(ry[p])) ++p;
    if (p == ry.size()) return !is_zero_vec(field, rxy);
    const GFElem c = rxy[p] * field.inv(ry[p]);
    for (std::size_t k = 0; k < ry.size(); ++k) {
      if (rxy[k] != c * ry[k]) return true;
    }
    return false;
  }
};

std::optional<std::uint64_t> first_violation_for(const Algebra<FF>& a, std::uint64_t ia, std::uint64_t qn) {
  const PairChecker check(a, vector_at(a.field(), a.dim(), ia));
  for (std::uint64_t ib = 0; ib < qn; ++ib) {
    if (check.violates(vector_at(a.field(), a.dim(), ib))) return ib;
  }
  return std::nullopt;
}

OracleResult<FF> finish_oracle(const Algebra<FF>& a, std::uint64_t best, std::uint64_t qn) {
  OracleResult<FF> out;
  out.pairs = qn * qn;
  if (best == std::numeric_limits<std::uint64_t>::max()) return out;
  out.verdict = Verdict::No;
  out.witness_index = best;
  out.witness = ViolationWitness<FF>{vector_at(a.field(), a.dim(), best / qn), vector_at(a.field(), a.dim(), best % qn),
                                     "oracle-pair", {}};
  if (!verify(a, *out.witness)) throw Error(Errc::Internal, "oracle witness does not re-check");
  return out;
}

OracleResult<FF> oracle_serial(const Algebra<FF>& a, std::uint64_t qn) {
  for (std::uint64_t ia = 0; ia < qn; ++ia) {
    if (const auto ib = first_violation_for(a, ia, qn)) return finish_oracle(a, ia * qn + *ib, qn);
  }
  return finish_oracle(a, std::numeric_limits<std::uint64_t>::max(), qn);
}

OracleResult<FF> oracle_parallel(const Algebra<FF>& a, std::uint64_t qn) {
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  const auto count = static_cast<std::int64_t>(qn);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t s = 0; s < count; ++s) {
    const auto ia = static_cast<std::uint64_t>(s);
    if (ia * qn >= best.load(std::memory_order_relaxed)) continue;
    if (const auto ib = first_violation_for(a, ia, qn)) {
      const std::uint64_t idx = ia * qn + *ib;
      std::uint64_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  return finish_oracle(a, best.load(), qn);
}

struct Candidate {
  std::size_t length = 0;
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t generating = 0;

  void offer(std::size_t len, std::uint64_t idx) {
    ++generating;
    if (index == std::numeric_limits<std::uint64_t>::max() || len > length || (len == length && idx < index)) {
      length = len;
      index = idx;
    }
  }
  void merge(const Candidate& o) {
    generating += o.generating;
    if (o.index == std::numeric_limits<std::uint64_t>::max()) return;
    if (index == std::numeric_limits<std::uint64_t>::max() || o.length > length ||
        (o.length == length && o.index < index)) {
      length = o.length;
      index = o.index;
    }
  }
};

struct LiftedEnumeration {
  const Algebra<FF>& alg;
  BasisChange<FF> basis;
  SubspaceEnumerator subspaces;

  explicit LiftedEnumeration(const Algebra<FF>& a)
      : alg(a), basis(identity_first_basis(a)), subspaces(a.field(), a.dim() - 1) {}

  // Generators of V in original coordinates (1 is added by word_spans).
  std::vector<Vec<FF>> generators(std::uint64_t index) const {
    std::vector<Vec<FF>> out;
    for (const auto& w : subspaces.rows(index)) {
      Vec<FF> lifted = zero_vec(alg.field(), alg.dim());
      for (std::size_t k = 0; k < w.size(); ++k) axpy(alg.field(), lifted, w[k], basis.row(k + 1));
      out.push_back(std::move(lifted));
    }
    return out;
  }

  void visit(std::uint64_t index, Candidate& c) const {
    const auto r = length_of_set(alg, generators(index));
    if (r.generates) c.offer(r.length, index);
  }
};

AlgebraLength finish_length(const LiftedEnumeration& e, const Candidate& c) {
  if (c.index == std::numeric_limits<std::uint64_t>::max()) throw Error(Errc::Internal, "no generating subspace found");
  AlgebraLength out;
  out.length = c.length;
  out.subspaces = e.subspaces.count();
  out.generating = c.generating;
  out.witness.push_back(e.alg.one());
  for (auto& g : e.generators(c.index)) out.witness.push_back(std::move(g));
  return out;
}

}  // namespace

Vec<FiniteField> vector_at(const FiniteField& field, std::size_t n, std::uint64_t index) {
  Vec<FF> v(n, field.zero());
  const std::uint64_t q = field.order();
  for (std::size_t k = n; k-- > 0;) {
    v[k] = field.element(index % q);
    index /= q;
  }
  return v;
}

OracleResult<FiniteField> oracle_length_one(const Algebra<FiniteField>& a, Exec exec,
                                            std::optional<std::uint64_t> budget) {
  const std::uint64_t q = a.field().order();
  const std::uint64_t qn = saturating_pow(q, a.dim());
  check_budget(saturating_pow(q, 2 * a.dim()), budget, "pair enumeration");
  return exec == Exec::Serial ? oracle_serial(a, qn) : oracle_parallel(a, qn);
}

std::uint64_t subspace_count(std::uint64_t q, std::size_t m) {
  // Gaussian binomials via the recurrence G(m, r) = G(m-1, r-1) + q^r G(m-1, r).
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  auto add = [&](std::uint64_t x, std::uint64_t y) { return x > max - y ? max : x + y; };
  auto mul = [&](std::uint64_t x, std::uint64_t y) { return (y != 0 && x > max / y) ? max : x * y; };
  std::vector<std::uint64_t> g{1};
  for (std::size_t row = 1; row <= m; ++row) {
    std::vector<std::uint64_t> next(row + 1, 0);
    for (std::size_t r = 0; r <= row; ++r) {
      const std::uint64_t keep = r < row ? mul(saturating_pow(q, r), g[r]) : 0;
      const std::uint64_t grow = r > 0 ? g[r - 1] : 0;
      next[r] = add(keep, grow);
    }
    g = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto x : g) total = add(total, x);
  return total;
}

SubspaceEnumerator::SubspaceEnumerator(FiniteField field, std::size_t m) : field_(std::move(field)), m_(m) {
  if (m >= 32) throw Error(Errc::BudgetExceeded, "quotient dimension too large to enumerate");
  const std::uint64_t q = field_.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Block b;
    for (std::size_t c = 0; c < m; ++c) {
      if (mask >> c & 1) b.pivots.push_back(c);
    }
    for (std::size_t r = 0; r < b.pivots.size(); ++r) {
      for (std::size_t c = b.pivots[r] + 1; c < m; ++c) {
        if (!(mask >> c & 1)) b.free.emplace_back(r, c);
      }
    }
    b.size = saturating_pow(q, b.free.size());
    b.start = total_;
    if (total_ > std::numeric_limits<std::uint64_t>::max() - b.size) {
      throw Error(Errc::BudgetExceeded, "subspace count overflows");
    }
    total_ += b.size;
    blocks_.push_back(std::move(b));
  }
}

Matrix<FiniteField> SubspaceEnumerator::rows(std::uint64_t index) const {
  if (index >= total_) throw Error(Errc::DimensionMismatch, "subspace index out of range");
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t i, const Block& b) { return i < b.start; });
  const Block& b = *std::prev(it);
  std::uint64_t digits = index - b.start;
  Matrix<FF> out(b.pivots.size(), Vec<FF>(m_, field_.zero()));
  for (std::size_t r = 0; r < b.pivots.size(); ++r) out[r][b.pivots[r]] = field_.one();
  const std::uint64_t q = field_.order();
  for (std::size_t f = b.free.size(); f-- > 0;) {
    out[b.free[f].first][b.free[f].second] = field_.element(digits % q);
    digits /= q;
  }
  return out;
}

AlgebraLength length_of_algebra(const Algebra<FiniteField>& a, Exec exec, std::optional<std::uint64_t> budget) {
  check_budget(subspace_count(a.field().order(), a.dim() - 1), budget, "subspace enumeration");
  const LiftedEnumeration e(a);
  const std::uint64_t total = e.subspaces.count();
  Candidate best;
  if (exec == Exec::Serial) {
    for (std::uint64_t i = 0; i < total; ++i) e.visit(i, best);
    return finish_length(e, best);
  }
  std::exception_ptr failure;
  std::mutex merge;
#pragma omp parallel
  {
    Candidate local;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(total); ++s) {
      try {
        e.visit(static_cast<std::uint64_t>(s), local);
      } catch (...) {
        const std::lock_guard lock(merge);
        if (!failure) failure = std::current_exception();
      }
    }
    const std::lock_guard lock(merge);
    best.merge(local);
  }
  if (failure) std::rethrow_exception(failure);
  return finish_length(e, best);
}

}  // namespace lenalg
