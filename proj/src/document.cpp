#include "lenalg/document.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace lenalg {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(Errc::SchemaError, (path.empty() ? "/" : path) + ": " + msg);
}

const json& require(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema("", std::string("missing key '") + key + "'");
  return *it;
}

template <ExactField F>
Scalar<F> read_scalar(const F& field, const json& v, const std::string& path) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = v.dump();
  } else {
    schema(path, "scalar must be a string or an integer");
  }
  try {
    return field.parse(text);
  } catch (const Error& e) {
    throw Error(e.code() == Errc::DivisionByZero ? Errc::DivisionByZero : Errc::ScalarSyntaxError,
                path + ": " + e.what());
  }
}

template <ExactField F>
Vec<F> read_vec(const F& field, const json& v, std::size_t n, const std::string& path) {
  if (!v.is_array() || v.size() != n) schema(path, "expected an array of " + std::to_string(n) + " scalars");
  Vec<F> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(read_scalar(field, v[k], path + "/" + std::to_string(k)));
  return out;
}

template <ExactField F>
AnyAlgebra build(const F& field, const json& doc, std::size_t n, HullMode hull) {
  const json& table = require(doc, "table");
  if (!table.is_array() || table.size() != n) schema("/table", "expected " + std::to_string(n) + " rows");
  StructureTable<F> t(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = "/table/" + std::to_string(i);
    if (!table[i].is_array() || table[i].size() != n) schema(row, "expected " + std::to_string(n) + " products");
    for (std::size_t j = 0; j < n; ++j) {
      t.set_product(i, j, read_vec(field, table[i][j], n, row + "/" + std::to_string(j)));
    }
  }
  if (hull == HullMode::Always) return unital_hull(t);
  if (const auto it = doc.find("one"); it != doc.end()) {
    return Algebra<F>(std::move(t), read_vec(field, *it, n, "/one"));
  }
  if (auto one = find_identity(t)) return Algebra<F>(std::move(t), std::move(*one));
  if (hull == HullMode::IfNeeded) return unital_hull(t);
  throw Error(Errc::NoIdentity, "the table has no two-sided identity (pass --hull to adjoin one)");
}

std::string quote(const std::string& s) { return json(s).dump(); }

template <ExactField F>
void render_vec_to(std::ostringstream& os, const F& field, const Vec<F>& v) {
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ", ";
    os << quote(field.render(v[k]));
  }
  os << ']';
}

}  // namespace

FieldSpec field_of(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return alg.field().spec(); }, a);
}

std::size_t dim_of(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return alg.dim(); }, a);
}

Document parse_document(std::string_view text, const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::SchemaError, "byte " + std::to_string(e.byte) + ": invalid JSON");
  }
  if (!doc.is_object()) schema("", "document must be a JSON object");
  static const char* const known[] = {"name", "notes", "field", "modulus", "dim", "one", "table"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) schema("/" + key, "unknown key");
  }
  std::string name, notes;
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) schema("/name", "must be a string");
    name = it->get<std::string>();
  }
  if (const auto it = doc.find("notes"); it != doc.end()) {
    if (!it->is_string()) schema("/notes", "must be a string");
    notes = it->get<std::string>();
  }

  FieldSpec spec;
  if (options.field) {
    spec = *options.field;
  } else {
    const json& f = require(doc, "field");
    if (!f.is_string()) schema("/field", "must be a string");
    std::vector<std::uint32_t> modulus;
    const std::vector<std::uint32_t>* mod_ptr = nullptr;
    if (const auto it = doc.find("modulus"); it != doc.end()) {
      if (!it->is_array()) schema("/modulus", "must be an array of integers");
      for (std::size_t k = 0; k < it->size(); ++k) {
        if (!(*it)[k].is_number_unsigned()) schema("/modulus/" + std::to_string(k), "must be a non-negative integer");
        modulus.push_back((*it)[k].get<std::uint32_t>());
      }
      mod_ptr = &modulus;
    }
    spec = FieldSpec::parse(f.get<std::string>(), mod_ptr);
  }

  const json& d = require(doc, "dim");
  if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) schema("/dim", "must be a positive integer");
  const auto n = d.get<std::size_t>();

  AnyAlgebra alg = spec.is_finite() ? build(FiniteField(spec), doc, n, options.hull)
                                    : build(RationalField{}, doc, n, options.hull);
  return Document{std::move(name), std::move(notes), std::move(alg)};
}

std::string render_document(const Document& doc) {
  std::ostringstream os;
  std::visit(
      [&](const auto& a) {
        const auto& field = a.field();
        const FieldSpec spec = field.spec();
        const std::size_t n = a.dim();
        os << "{\n";
        os << "  \"name\": " << quote(doc.name) << ",\n";
        if (!doc.notes.empty()) os << "  \"notes\": " << quote(doc.notes) << ",\n";
        os << "  \"field\": " << quote(spec.name()) << ",\n";
        if (spec.kind == FieldSpec::Kind::Extension) {
          os << "  \"modulus\": [";
          for (std::size_t k = 0; k < spec.modulus.size(); ++k) os << (k ? ", " : "") << spec.modulus[k];
          os << "],\n";
        }
        os << "  \"dim\": " << n << ",\n";
        os << "  \"one\": ";
        render_vec_to(os, field, a.one());
        os << ",\n  \"table\": [\n";
        for (std::size_t i = 0; i < n; ++i) {
          os << "    [\n";
          for (std::size_t j = 0; j < n; ++j) {
            os << "      ";
            render_vec_to(os, field, a.product(i, j));
            os << (j + 1 < n ? ",\n" : "\n");
          }
          os << (i + 1 < n ? "    ],\n" : "    ]\n");
        }
        os << "  ]\n}\n";
      },
      doc.algebra);
  return os.str();
}

}  // namespace lenalg
