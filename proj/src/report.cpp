#include "lenalg/report.hpp"

namespace lenalg {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(Errc::CertificateInvalid, msg); }

template <ExactField F>
Vec<F> read_vec(const F& field, const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) invalid(std::string(what) + " must be an array of " + std::to_string(n) + " scalars");
  Vec<F> v;
  for (const auto& x : j) {
    if (!x.is_string()) invalid(std::string(what) + " entries must be strings");
    v.push_back(field.parse(x.get<std::string>()));
  }
  return v;
}

template <ExactField F>
Matrix<F> read_matrix(const F& field, const Json& j, std::size_t rows, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != rows) invalid(std::string(what) + " must have " + std::to_string(rows) + " rows");
  Matrix<F> m;
  for (const auto& r : j) m.push_back(read_vec(field, r, n, what));
  return m;
}

const Json& at(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) invalid(std::string("certificate lacks '") + key + "'");
  return *it;
}

template <ExactField F>
std::optional<BasisChange<F>> read_basis(const F& field, const Json& j, std::size_t n) {
  auto m = read_matrix(field, j, n, n, "basis");
  if (!try_inverse(field, m)) return std::nullopt;
  return BasisChange<F>(field, std::move(m));
}

template <ExactField F>
bool verify_typed(const Algebra<F>& a, const Json& c) {
  const auto& field = a.field();
  const std::size_t n = a.dim();
  if (!c.is_object()) invalid("certificate must be an object");
  const std::string type = at(c, "type").get<std::string>();
  if (type == "violation") {
    return is_violation(a, read_vec(field, at(c, "a"), n, "a"), read_vec(field, at(c, "b"), n, "b"));
  }
  if (type == "trivial-dimension") return n <= 2;
  if (type == "special-basis") {
    if (field.characteristic() == 2) return false;
    auto basis = read_basis(field, at(c, "basis"), n);
    if (!basis) return false;
    SpecialBasisWitness<F> w{std::move(*basis), read_vec(field, at(c, "mu"), n, "mu"),
                             read_vec(field, at(c, "beta"), n, "beta"), read_matrix(field, at(c, "alpha"), n, n, "alpha")};
    return verify(a, w);
  }
  if (type == "char-two-form") {
    const auto form = parse_char_two_form(at(c, "form").get<std::string>());
    if (!form) invalid("unknown normal form");
    auto basis = read_basis(field, at(c, "basis"), n);
    if (!basis) return false;
    CharTwoWitness<F> w{std::move(*basis), *form, read_vec(field, at(c, "beta"), n, "beta"),
                        read_matrix(field, at(c, "constants"), n, n, "constants")};
    return verify(a, w);
  }
  if (type == "generating-subspace") {
    const Json& rows = at(c, "rows");
    if (!rows.is_array()) invalid("rows must be an array");
    const auto m = read_matrix(field, rows, rows.size(), n, "rows");
    const auto s = length_of_set(a, m);
    return s.generates && s.length == at(c, "length").get<std::size_t>();
  }
  invalid("unknown certificate type '" + type + "'");
}

}  // namespace

Json report_header(const std::string& kind, const Document& doc) {
  Json r;
  r["kind"] = kind;
  r["document"] = doc.name;
  r["field"] = field_of(doc.algebra).name();
  r["dim"] = dim_of(doc.algebra);
  return r;
}

Json algebra_length_json(const Document& doc, const Algebra<FiniteField>& a, const AlgebraLength& l) {
  Json r = report_header("AlgebraLength", doc);
  r["value"] = l.length;
  r["subspaces"] = l.subspaces;
  r["generating_subspaces"] = l.generating;
  r["path"] = Json::array({"all subspaces containing 1, max l(V) over those generating A"});
  Json c;
  c["type"] = "generating-subspace";
  c["length"] = l.length;
  c["rows"] = matrix_json(a.field(), l.witness);
  r["certificate"] = std::move(c);
  return r;
}

bool verify_certificate(const AnyAlgebra& a, const Json& certificate) {
  try {
    return std::visit([&](const auto& alg) { return verify_typed(alg, certificate); }, a);
  } catch (const Json::exception& e) {
    invalid(e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::CertificateInvalid) throw;
    invalid(e.what());
  }
}

}  // namespace lenalg
