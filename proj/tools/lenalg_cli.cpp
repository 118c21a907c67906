// lenalg: length computations for finite-dimensional unital algebras.
//
// Exit codes: 0 success (for check/oracle: length one), 1 not length one,
// 2 error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lenalg/constructors.hpp"
#include "lenalg/fixtures.hpp"
#include "lenalg/generate.hpp"
#include "lenalg/report.hpp"

using namespace lenalg;

namespace {

struct Globals {
  bool json = false;
  bool hull = false;
  std::string field;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error(Errc::SchemaError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<FieldSpec> field_option(const std::string& name) {
  if (name.empty()) return std::nullopt;
  return FieldSpec::parse(name);
}

// A path, "-" for stdin, or "fixture:NAME".
Document load(const std::string& source, const Globals& g) {
  if (source.rfind("fixture:", 0) == 0) return make_fixture(source.substr(8), field_option(g.field));
  ParseOptions opt;
  opt.hull = g.hull ? HullMode::IfNeeded : HullMode::Never;
  opt.field = field_option(g.field);
  return parse_document(read_input(source), opt);
}

void print_text(const Json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      print_text(value, indent + 2, os);
    } else if (value.is_array() && !value.empty() && (value[0].is_object() || value[0].is_string()) &&
               key == "path") {
      os << pad << key << ":\n";
      for (const auto& v : value) os << pad << "  - " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      os << pad << key << ":\n";
      for (const auto& v : value) {
        os << pad << "  -\n";
        print_text(v, indent + 4, os);
      }
    } else if (value.is_string()) {
      os << pad << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << pad << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const Json& report, const Globals& g) {
  if (g.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    print_text(report, 0, std::cout);
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::SchemaError, "cannot write '" + path + "'");
  out << text;
}

// "0,2" (basis indices) or a JSON list of scalar-string vectors.
template <ExactField F>
std::vector<Vec<F>> parse_set(const Algebra<F>& a, const std::string& spec) {
  const auto& field = a.field();
  std::vector<Vec<F>> out;
  const auto first = spec.find_first_not_of(" \t");
  if (first != std::string::npos && spec[first] == '[') {
    const Json j = Json::parse(spec);
    for (const auto& v : j) {
      if (!v.is_array() || v.size() != a.dim()) throw Error(Errc::DimensionMismatch, "set vector has wrong length");
      Vec<F> x;
      for (const auto& s : v) x.push_back(field.parse(s.is_string() ? s.get<std::string>() : s.dump()));
      out.push_back(std::move(x));
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto i = std::stoul(item);
    if (i >= a.dim()) throw Error(Errc::DimensionMismatch, "basis index " + item + " out of range");
    out.push_back(a.unit(i));
  }
  return out;
}

template <ExactField F>
Matrix<F> parse_matrix(const F& field, const std::string& text) {
  const Json j = Json::parse(text);
  Matrix<F> m;
  for (const auto& row : j) {
    Vec<F> r;
    for (const auto& s : row) r.push_back(field.parse(s.is_string() ? s.get<std::string>() : s.dump()));
    m.push_back(std::move(r));
  }
  return m;
}

int run_check(const std::string& file, const Globals& g) {
  const Document doc = load(file, g);
  return std::visit(
      [&](const auto& a) {
        const auto d = decide_length_one(a);
        emit(decision_json(doc, a, d), g);
        return d.verdict == Verdict::Yes ? 0 : 1;
      },
      doc.algebra);
}

int run_oracle(const std::string& file, const Globals& g, std::uint64_t samples, std::uint64_t seed, bool serial) {
  const Document doc = load(file, g);
  return std::visit(
      [&](const auto& a) {
        using F = std::decay_t<decltype(a.field())>;
        OracleResult<F> o;
        if constexpr (F::is_finite()) {
          o = oracle_length_one(a, serial ? Exec::Serial : Exec::Parallel);
        } else {
          if (samples == 0) {
            throw Error(Errc::InfiniteFieldUnsupported,
                        "exhaustive pair enumeration needs a finite field; pass --samples for a sampled run");
          }
          o = oracle_sampled(a, samples, seed);
        }
        emit(oracle_json(doc, a, o), g);
        return o.verdict == Verdict::Yes ? 0 : 1;
      },
      doc.algebra);
}

int run_length_set(const std::string& file, const Globals& g, const std::string& set) {
  const Document doc = load(file, g);
  std::visit(
      [&](const auto& a) {
        const auto s = parse_set(a, set);
        emit(set_length_json(doc, a, s, length_of_set(a, s)), g);
      },
      doc.algebra);
  return 0;
}

int run_length(const std::string& file, const Globals& g, bool serial) {
  const Document doc = load(file, g);
  const auto* a = std::get_if<Algebra<FiniteField>>(&doc.algebra);
  if (!a) throw Error(Errc::InfiniteFieldUnsupported, "the length of an algebra is computed over finite fields only");
  emit(algebra_length_json(doc, *a, length_of_algebra(*a, serial ? Exec::Serial : Exec::Parallel)), g);
  return 0;
}

int run_identities(const std::string& file, const Globals& g, std::size_t degree, std::uint64_t seed) {
  const Document doc = load(file, g);
  std::visit(
      [&](const auto& a) {
        const auto& field = a.field();
        Json r = report_header("Identities", doc);
        Json list = Json::array();
        list.push_back(identity_json(field, is_commutative(a)));
        list.push_back(identity_json(field, is_associative(a)));
        list.push_back(identity_json(field, is_flexible(a)));
        if (field.characteristic() != 2) list.push_back(identity_json(field, is_jordan(a)));
        PowerOptions opt;
        opt.degree = degree;
        opt.seed = seed;
        list.push_back(identity_json(field, is_power_associative_upto(a, opt)));
        r["identities"] = std::move(list);
        const auto d = decide_length_one(a);
        r["length_one"] = to_string(d.verdict);
        if (d.special) {
          Json c;
          c["flexible_criterion"] = check_F(field, *d.special);
          c["associative_criterion"] = check_A1A2(field, *d.special);
          c["jordan_criterion"] = check_jordan_condition3(field, *d.special);
          r["special_basis_criteria"] = std::move(c);
        }
        emit(r, g);
      },
      doc.algebra);
  return 0;
}

int run_verify(const std::string& file, const std::string& report_path, const Globals& g) {
  const Document doc = load(file, g);
  const Json report = Json::parse(read_input(report_path));
  const auto it = report.find("certificate");
  if (it == report.end() || it->is_null()) throw Error(Errc::CertificateInvalid, "report carries no certificate");
  const bool ok = verify_certificate(doc.algebra, *it);
  if (g.json) {
    Json r;
    r["kind"] = "CertificateCheck";
    r["document"] = doc.name;
    r["value"] = ok;
    emit(r, g);
  } else {
    std::cout << (ok ? "certificate valid" : "certificate INVALID") << "\n";
  }
  return ok ? 0 : 1;
}

AnyField any_field(const std::string& name) { return make_field(FieldSpec::parse(name)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Length of generating sets in finite-dimensional unital algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable report");
  app.add_flag("--hull", g.hull, "Adjoin an identity when the table has none");
  app.add_option("--field", g.field, "Re-read the document's scalars over this field (e.g. GF(5))");

  std::string file, set, report_path, out_path;
  std::uint64_t samples = 0, seed = 0;
  std::size_t degree = 6;
  bool serial = false;

  auto* check = app.add_subcommand("check", "Decide whether the algebra has length one");
  check->add_option("file", file, "Document path, '-' or fixture:NAME")->required();

  auto* oracle = app.add_subcommand("oracle", "Check ab in span{1, a, b} over all pairs (finite fields)");
  oracle->add_option("file", file)->required();
  oracle->add_option("--samples", samples, "Random pairs over Q (incomplete)");
  oracle->add_option("--seed", seed);
  oracle->add_flag("--serial", serial, "Use the serial reference kernel");

  auto* lset = app.add_subcommand("length-set", "Length of a set S");
  lset->add_option("file", file)->required();
  lset->add_option("--set", set, "Basis indices '0,2' or a JSON list of vectors")->required();

  auto* len = app.add_subcommand("length", "Length of the algebra by subspace enumeration (finite fields)");
  len->add_option("file", file)->required();
  len->add_flag("--serial", serial);

  auto* ids = app.add_subcommand("identities", "Identity checks and special-basis criteria");
  ids->add_option("file", file)->required();
  ids->add_option("--degree", degree, "Power-associativity degree")->check(CLI::Range(3, 64));
  ids->add_option("--seed", seed);

  auto* fixtures = app.add_subcommand("fixtures", "List the built-in fixtures");

  auto* verify = app.add_subcommand("verify-cert", "");
  verify->group("");
  verify->add_option("file", file)->required();
  verify->add_option("report", report_path)->required();

  auto* make = app.add_subcommand("make", "Write a document");
  make->require_subcommand(1);
  make->add_option("-o,--output", out_path, "Output file (stdout by default)");
  std::string mfield = "Q", gram, fixture_name, mode = "special";
  std::size_t msize = 2, mdim = 3;
  std::uint64_t mseed = 0;
  bool hide = false;
  auto* mk_jordan = make->add_subcommand("bilinear-jordan", "F1 + V with a symmetric bilinear form");
  mk_jordan->add_option("--field", mfield);
  mk_jordan->add_option("--gram", gram, "JSON matrix of scalar strings")->required();
  auto* mk_matrix = make->add_subcommand("matrix", "M_n(F)");
  mk_matrix->add_option("--field", mfield);
  mk_matrix->add_option("--n", msize)->check(CLI::Range(1, 6));
  auto* mk_sum = make->add_subcommand("direct-sum", "F + ... + F");
  mk_sum->add_option("--field", mfield);
  mk_sum->add_option("--k", msize)->check(CLI::Range(1, 16));
  auto* mk_fixture = make->add_subcommand("fixture", "A built-in fixture");
  mk_fixture->add_option("--name", fixture_name)->required();
  mk_fixture->add_option("--field", mfield, "Re-read over this field")->default_str("");
  auto* mk_random = make->add_subcommand("random-l1", "A random length-one algebra");
  mk_random->add_option("--field", mfield);
  mk_random->add_option("--dim", mdim)->check(CLI::Range(1, 16));
  mk_random->add_option("--seed", mseed);
  mk_random->add_option("--mode", mode, "special, typeI, typeII or a dimension-three form name");
  mk_random->add_flag("--hide", hide, "Compose with a random basis change");

  // lets the global flags follow the subcommand as well
  for (auto* sub : {check, oracle, lset, len, ids, fixtures, verify, make, mk_jordan, mk_matrix, mk_sum, mk_fixture, mk_random}) {
    sub->fallthrough();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(file, g);
    if (*oracle) return run_oracle(file, g, samples, seed, serial);
    if (*lset) return run_length_set(file, g, set);
    if (*len) return run_length(file, g, serial);
    if (*ids) return run_identities(file, g, degree, seed);
    if (*verify) return run_verify(file, report_path, g);
    if (*fixtures) {
      if (g.json) {
        Json r;
        r["kind"] = "FixtureList";
        r["fixtures"] = Json::array();
        for (const auto& f : fixture_list()) r["fixtures"].push_back({{"name", f.name}, {"summary", f.summary}});
        emit(r, g);
      } else {
        for (const auto& f : fixture_list()) std::cout << f.name << "  " << f.summary << "\n";
      }
      return 0;
    }
    if (*make) {
      std::optional<Document> doc;
      if (*mk_fixture) {
        const bool keep = mk_fixture->count("--field") == 0;
        doc = make_fixture(fixture_name, keep ? std::nullopt : field_option(mfield));
      } else {
        const AnyField field = any_field(mfield);
        std::visit(
            [&](const auto& f) {
              if (*mk_jordan) {
                doc = make_document("bilinear-jordan", make_bilinear_jordan(f, parse_matrix(f, gram)));
              } else if (*mk_matrix) {
                doc = make_document("matrix-" + std::to_string(msize), make_matrix_algebra(f, msize));
              } else if (*mk_sum) {
                doc = make_document("direct-sum-" + std::to_string(msize), make_direct_sum_of_fields(f, msize));
              } else {
                const GenMode m = GenMode::parse(mode);
                doc = make_document("random-l1-" + m.name() + "-" + std::to_string(mseed),
                                    generate_length_one(f, mdim, mseed, m, hide));
              }
            },
            field);
      }
      write_output(render_document(*doc), out_path);
      return 0;
    }
  } catch (const Error& e) {
    if (g.json) {
      Json err;
      err["kind"] = "Error";
      err["error"] = std::string(to_string(e.code()));
      err["message"] = e.what();
      std::cout << err.dump(2) << "\n";
    }
    std::cerr << "lenalg: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "lenalg: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
