#pragma once

// Length-one algebras built from normal-form data, plus random tables and
// random basis changes for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "lenalg/decider.hpp"

namespace lenalg {

// Basis {1, a_1, ..., a_m}: a_i^2 = mu_i 1, a_i a_j = alpha_ij 1 + beta_j a_i - beta_i a_j.
template <ExactField F>
Algebra<F> build_special(const F& field, const Vec<F>& mu, const Vec<F>& beta, const Matrix<F>& alpha) {
  const std::size_t n = mu.size();
  StructureTable<F> t(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    t.set_product(0, i, unit_vec(field, n, i));
    t.set_product(i, 0, unit_vec(field, n, i));
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (i == j) {
        t.at(i, i, 0) = mu[i];
      } else {
        t.at(i, j, 0) = alpha[i][j];
        t.at(i, j, i) = beta[j];
        t.at(i, j, j) = -beta[i];
      }
    }
  }
  return Algebra<F>(std::move(t), unit_vec(field, n, 0));
}

// Characteristic 2, basis {1, a_1, ..., a_m}:
// a_i a_j = c_ij 1 + beta_j a_i + (beta_i + t) a_j, a_i^2 = c_ii 1 + t a_i,
// t = 0 (TypeI) or 1 (TypeII).
template <ExactField F>
Algebra<F> build_char2_type(const F& field, const Vec<F>& beta, const Matrix<F>& constants, bool type_two) {
  if (field.characteristic() != 2) throw Error(Errc::ModeCharacteristicMismatch, "TypeI/TypeII need characteristic 2");
  const std::size_t n = beta.size();
  const Scalar<F> shift = type_two ? field.one() : field.zero();
  StructureTable<F> t(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    t.set_product(0, i, unit_vec(field, n, i));
    t.set_product(i, 0, unit_vec(field, n, i));
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      t.at(i, j, 0) = constants[i][j];
      if (i == j) {
        t.at(i, i, i) = shift;
      } else {
        t.at(i, j, i) = beta[j];
        t.at(i, j, j) = beta[i] + shift;
      }
    }
  }
  return Algebra<F>(std::move(t), unit_vec(field, n, 0));
}

template <ExactField F>
Algebra<F> build_dim3_form(const F& field, CharTwoForm form, const Matrix<F>& constants) {
  if (field.characteristic() != 2) throw Error(Errc::ModeCharacteristicMismatch, "dimension-three forms need characteristic 2");
  const Dim3Pattern* pat = nullptr;
  for (const auto& p : kDim3Patterns) {
    if (p.form == form) pat = &p;
  }
  if (!pat) throw Error(Errc::ModeCharacteristicMismatch, std::string(to_string(form)) + " is not a dimension-three form");
  if (pat->two_element_field != field.is_two_element_field()) {
    throw Error(Errc::ModeCharacteristicMismatch, std::string(to_string(form)) + " does not belong to " + field.spec().name());
  }
  auto s = [&](int v) { return v ? field.one() : field.zero(); };
  StructureTable<F> t(field, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    t.set_product(0, i, unit_vec(field, 3, i));
    t.set_product(i, 0, unit_vec(field, 3, i));
  }
  t.set_product(1, 1, {constants[1][1], s(pat->squares[0]), field.zero()});
  t.set_product(2, 2, {constants[2][2], field.zero(), s(pat->squares[1])});
  t.set_product(1, 2, {constants[1][2], s(pat->a1a2[0]), s(pat->a1a2[1])});
  t.set_product(2, 1, {constants[2][1], s(pat->a2a1[0]), s(pat->a2a1[1])});
  return Algebra<F>(std::move(t), unit_vec(field, 3, 0));
}

// ---------------------------------------------------------------------------

template <ExactField F, class Rng>
Vec<F> random_vec(const F& field, std::size_t n, Rng& rng) {
  Vec<F> v = zero_vec(field, n);
  for (auto& x : v) x = field.random(rng);
  return v;
}

template <ExactField F, class Rng>
BasisChange<F> random_basis_change(const F& field, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix<F> m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(random_vec(field, n, rng));
    if (try_inverse(field, m)) return BasisChange<F>(field, std::move(m));
  }
}

template <ExactField F, class Rng>
Algebra<F> hide_basis(const Algebra<F>& a, Rng& rng) {
  return change_basis(a, random_basis_change(a.field(), a.dim(), rng));
}

// Unital hull of a random (n-1)-dimensional table; `density` is the chance
// in percent that a structure constant is drawn rather than left zero.
template <ExactField F, class Rng>
Algebra<F> random_unital(const F& field, std::size_t n, Rng& rng, unsigned density = 100) {
  if (n == 0) throw Error(Errc::DimensionMismatch, "dimension must be positive");
  StructureTable<F> t(field, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      for (std::size_t k = 0; k + 1 < n; ++k) {
        if (rng() % 100 < density) t.at(i, j, k) = field.random(rng);
      }
    }
  }
  return unital_hull(t);
}

enum class SpecialFamily {
  Random,       // unconstrained mu, beta, alpha
  Jordan,       // beta = 0, alpha symmetric
  Associative,  // mu_i = beta_i^2, alpha_ij = beta_i beta_j
  Flexible,     // s * (associative data): flexible, associative only for s = 1
};

template <ExactField F>
struct SpecialData {
  Vec<F> mu;
  Vec<F> beta;
  Matrix<F> alpha;
};

template <ExactField F, class Rng>
SpecialData<F> random_special_data(const F& field, std::size_t n, SpecialFamily family, Rng& rng) {
  SpecialData<F> d{zero_vec(field, n), zero_vec(field, n), Matrix<F>(n, zero_vec(field, n))};
  switch (family) {
    case SpecialFamily::Random:
      for (std::size_t i = 1; i < n; ++i) {
        d.mu[i] = field.random(rng);
        d.beta[i] = field.random(rng);
        for (std::size_t j = 1; j < n; ++j) {
          if (i != j) d.alpha[i][j] = field.random(rng);
        }
      }
      break;
    case SpecialFamily::Jordan:
      for (std::size_t i = 1; i < n; ++i) {
        d.mu[i] = field.random(rng);
        for (std::size_t j = i + 1; j < n; ++j) d.alpha[i][j] = d.alpha[j][i] = field.random(rng);
      }
      break;
    case SpecialFamily::Associative:
    case SpecialFamily::Flexible: {
      Scalar<F> s = field.one();
      if (family == SpecialFamily::Flexible) {
        do {
          s = field.random(rng);
        } while (field.is_zero(s));
      }
      for (std::size_t i = 1; i < n; ++i) d.beta[i] = field.random(rng);
      for (std::size_t i = 1; i < n; ++i) {
        const Scalar<F> sq = d.beta[i] * d.beta[i];
        d.mu[i] = s * sq;
        for (std::size_t j = 1; j < n; ++j) {
          if (i == j) continue;
          const Scalar<F> pr = d.beta[i] * d.beta[j];
          d.alpha[i][j] = s * pr;
        }
      }
      break;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------

struct GenMode {
  enum class Kind { Special, TypeI, TypeII, Dim3Char2 };
  Kind kind = Kind::Special;
  CharTwoForm form = CharTwoForm::Dim3F2Type1;  // Dim3Char2 only

  // "special", "typeI", "typeII", or a form name such as "Dim3-F2-Type4".
  static GenMode parse(std::string_view name);
  std::string name() const;
};

inline GenMode GenMode::parse(std::string_view name) {
  if (name == "special" || name == "Special") return {Kind::Special};
  if (name == "typeI" || name == "TypeI") return {Kind::TypeI};
  if (name == "typeII" || name == "TypeII") return {Kind::TypeII};
  if (auto f = parse_char_two_form(name); f && *f != CharTwoForm::TypeI && *f != CharTwoForm::TypeII) {
    return {Kind::Dim3Char2, *f};
  }
  throw Error(Errc::ModeCharacteristicMismatch, "unknown generator mode '" + std::string(name) + "'");
}

inline std::string GenMode::name() const {
  switch (kind) {
    case Kind::Special: return "special";
    case Kind::TypeI: return "typeI";
    case Kind::TypeII: return "typeII";
    case Kind::Dim3Char2: return to_string(form);
  }
  return "?";
}

// Deterministic in (field, dim, seed, mode, hide).
template <ExactField F>
Algebra<F> generate_length_one(const F& field, std::size_t dim, std::uint64_t seed, GenMode mode, bool hide = false) {
  if (dim == 0) throw Error(Errc::DimensionMismatch, "dimension must be positive");
  const bool char_two = field.characteristic() == 2;
  std::mt19937_64 rng(seed);
  auto random_constants = [&] {
    Matrix<F> c(dim, zero_vec(field, dim));
    for (std::size_t i = 1; i < dim; ++i) {
      for (std::size_t j = 1; j < dim; ++j) c[i][j] = field.random(rng);
    }
    return c;
  };
  std::optional<Algebra<F>> a;
  switch (mode.kind) {
    case GenMode::Kind::Special: {
      if (char_two) throw Error(Errc::ModeCharacteristicMismatch, "special mode needs characteristic other than 2");
      const auto d = random_special_data(field, dim, SpecialFamily::Random, rng);
      a = build_special(field, d.mu, d.beta, d.alpha);
      break;
    }
    case GenMode::Kind::TypeI:
    case GenMode::Kind::TypeII: {
      if (!char_two) throw Error(Errc::ModeCharacteristicMismatch, "TypeI/TypeII need characteristic 2");
      Vec<F> beta = zero_vec(field, dim);
      for (std::size_t i = 1; i < dim; ++i) beta[i] = field.random(rng);
      a = build_char2_type(field, beta, random_constants(), mode.kind == GenMode::Kind::TypeII);
      break;
    }
    case GenMode::Kind::Dim3Char2:
      if (dim != 3) throw Error(Errc::ModeCharacteristicMismatch, "dimension-three forms need dim 3");
      a = build_dim3_form(field, mode.form, random_constants());
      break;
  }
  if (hide) return hide_basis(*a, rng);
  return *a;
}

}  // namespace lenalg
