#pragma once

// Exact scalar fields: the rationals (GMP) and finite fields F_p, F_{p^k}.
//
// Finite-field elements are small codes into an interned per-field context.
// Codes follow the deterministic enumeration order: for F_{p^k} the payload
// [c0, c1, ..., c_{k-1}] (coefficients of 1, x, ..., x^{k-1}) is ordered
// lexicographically, so code = c0 p^{k-1} + c1 p^{k-2} + ... + c_{k-1}.
// Code 0 is always the zero element, which makes a default-constructed
// GFElem a valid zero in every field.

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lenalg/error.hpp"

namespace lenalg {

struct FieldSpec {
  enum class Kind { Rationals, Prime, Extension };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  // Coefficients c0..ck of the monic defining polynomial (extension only).
  std::vector<std::uint32_t> modulus;

  static FieldSpec rationals();
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec extension(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  // Accepts "Q", "GF(p)", "GF(q)" and "GF(p^k)". Extension fields need an
  // explicit modulus except GF(4), GF(8) and GF(9), which have defaults.
  static FieldSpec parse(std::string_view name, const std::vector<std::uint32_t>* modulus = nullptr);

  std::uint32_t characteristic() const { return kind == Kind::Rationals ? 0 : p; }
  // Number of elements; 0 for the rationals.
  std::uint64_t order() const;
  bool is_finite() const { return kind != Kind::Rationals; }
  bool is_two_element_field() const { return kind == Kind::Prime && p == 2; }
  // Canonical rendering: "Q", "GF(5)", "GF(2^2)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Largest supported field sizes.
inline constexpr std::uint64_t kMaxPrime = 65521;
inline constexpr std::uint64_t kMaxExtensionOrder = 1024;

bool is_prime(std::uint64_t n);

namespace detail {

struct GFContext {
  FieldSpec spec;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t q = 0;
  // k > 1: full q*q operation tables. k == 1: arithmetic is done mod p.
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> inv;
  std::uint32_t one = 1;
};

// Contexts live for the whole process so element handles never dangle.
const GFContext& intern_context(const FieldSpec& spec);

}  // namespace detail

class GFElem {
 public:
  GFElem() = default;

  std::uint32_t code() const { return code_; }

  friend GFElem operator+(GFElem a, GFElem b) {
    const detail::GFContext* c = a.ctx_ ? a.ctx_ : b.ctx_;
    if (!c) return {};
    if (c->k == 1) {
      std::uint32_t s = a.code_ + b.code_;
      if (s >= c->p) s -= c->p;
      return {c, s};
    }
    return {c, c->add[a.code_ * c->q + b.code_]};
  }
  friend GFElem operator-(GFElem a) {
    if (!a.ctx_) return a;
    return {a.ctx_, a.ctx_->neg[a.code_]};
  }
  friend GFElem operator-(GFElem a, GFElem b) { return a + (-b); }
  friend GFElem operator*(GFElem a, GFElem b) {
    const detail::GFContext* c = a.ctx_ ? a.ctx_ : b.ctx_;
    if (!c || a.code_ == 0 || b.code_ == 0) return {c, 0};
    if (c->k == 1) {
      return {c, static_cast<std::uint32_t>(std::uint64_t{a.code_} * b.code_ % c->p)};
    }
    return {c, c->mul[a.code_ * c->q + b.code_]};
  }
  GFElem& operator+=(GFElem b) { return *this = *this + b; }
  GFElem& operator-=(GFElem b) { return *this = *this - b; }
  GFElem& operator*=(GFElem b) { return *this = *this * b; }

  friend bool operator==(GFElem a, GFElem b) { return a.code_ == b.code_; }

 private:
  friend class FiniteField;
  GFElem(const detail::GFContext* ctx, std::uint32_t code) : ctx_(ctx), code_(code) {}

  const detail::GFContext* ctx_ = nullptr;
  std::uint32_t code_ = 0;
};

class RationalField {
 public:
  using value_type = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }
  std::uint64_t order() const { return 0; }
  static constexpr bool is_finite() { return false; }
  bool is_two_element_field() const { return false; }

  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }
  mpq_class from_int(long long n) const;
  bool is_zero(const mpq_class& x) const { return sgn(x) == 0; }
  bool is_one(const mpq_class& x) const { return x == 1; }
  mpq_class inv(const mpq_class& x) const;
  mpq_class div(const mpq_class& x, const mpq_class& y) const;
  mpq_class half(const mpq_class& x) const;

  mpq_class parse(std::string_view text) const;
  std::string render(const mpq_class& x) const;

  // Small random rationals: numerator in [-4, 4], denominator in [1, 3].
  template <class Rng>
  mpq_class random(Rng& rng) const {
    long num = static_cast<long>(rng() % 9) - 4;
    long den = static_cast<long>(rng() % 3) + 1;
    mpq_class r(num, den);
    r.canonicalize();
    return r;
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class FiniteField {
 public:
  using value_type = GFElem;

  explicit FiniteField(const FieldSpec& spec);

  const FieldSpec& spec() const { return ctx_->spec; }
  std::uint32_t characteristic() const { return ctx_->p; }
  std::uint64_t order() const { return ctx_->q; }
  static constexpr bool is_finite() { return true; }
  bool is_two_element_field() const { return ctx_->spec.is_two_element_field(); }

  GFElem zero() const { return {ctx_, 0}; }
  GFElem one() const { return {ctx_, ctx_->one}; }
  GFElem from_int(long long n) const;
  // The element at position `index` of the enumeration order.
  GFElem element(std::uint64_t index) const;
  std::uint64_t index_of(GFElem x) const { return x.code(); }
  std::vector<GFElem> elements() const;
  // Coefficients [c0..c_{k-1}] of an extension element ([c0] for prime fields).
  std::vector<std::uint32_t> coefficients(GFElem x) const;

  bool is_zero(GFElem x) const { return x.code() == 0; }
  bool is_one(GFElem x) const { return x.code() == ctx_->one; }
  GFElem inv(GFElem x) const;
  GFElem div(GFElem x, GFElem y) const { return x * inv(y); }
  GFElem half(GFElem x) const;

  GFElem parse(std::string_view text) const;
  std::string render(GFElem x) const;

  template <class Rng>
  GFElem random(Rng& rng) const {
    return element(rng() % ctx_->q);
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.ctx_ == b.ctx_; }

 private:
  const detail::GFContext* ctx_;
};

using AnyField = std::variant<RationalField, FiniteField>;

AnyField make_field(const FieldSpec& spec);

}  // namespace lenalg
