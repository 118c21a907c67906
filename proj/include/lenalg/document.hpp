#pragma once

// JSON algebra documents.
//
//   {
//     "name": "...",            optional
//     "notes": "...",           optional
//     "field": "Q" | "GF(5)" | "GF(2^2)",
//     "modulus": [c0, ..., ck], extension fields without a default
//     "dim": n,
//     "one": [s, ...],          optional; found by solving when omitted
//     "table": [[[s, ...] x n] x n]   table[i][j] = e_i e_j
//   }
//
// Scalars are strings: "a/b" or "a" over Q, residues over F_p, "[c0,c1,...]"
// over F_{p^k}. render_document emits a fixed layout so that rendering a
// parsed canonical document reproduces it byte for byte.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lenalg/algebra.hpp"

namespace lenalg {

using AnyAlgebra = std::variant<Algebra<RationalField>, Algebra<FiniteField>>;

struct Document {
  std::string name;
  std::string notes;
  AnyAlgebra algebra;
};

enum class HullMode {
  Never,     // missing identity is an error
  IfNeeded,  // adjoin an identity when none exists
  Always,    // adjoin an identity even if one exists
};

struct ParseOptions {
  HullMode hull = HullMode::Never;
  // Re-read the scalars in another field (fixtures written over the prime
  // subfield, for instance).
  std::optional<FieldSpec> field;
};

Document parse_document(std::string_view text, const ParseOptions& options = {});
std::string render_document(const Document& doc);

FieldSpec field_of(const AnyAlgebra& a);
std::size_t dim_of(const AnyAlgebra& a);

template <ExactField F>
Document make_document(std::string name, Algebra<F> a, std::string notes = {}) {
  return Document{std::move(name), std::move(notes), AnyAlgebra(std::move(a))};
}

// Scalar/vector rendering shared with reports.
template <ExactField F>
std::vector<std::string> render_vec(const F& field, const Vec<F>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(field.render(x));
  return out;
}

}  // namespace lenalg
