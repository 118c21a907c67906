#include "lenalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace lenalg {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::UnsupportedExtension: return "UnsupportedExtension";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::CharacteristicTwo: return "CharacteristicTwo";
    case Errc::CharacteristicNotTwo: return "CharacteristicNotTwo";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotAnIdentity: return "NotAnIdentity";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InfiniteFieldUnsupported: return "InfiniteFieldUnsupported";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ModeCharacteristicMismatch: return "ModeCharacteristicMismatch";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::SchemaError: return "SchemaError";
    case Errc::ScalarSyntaxError: return "ScalarSyntaxError";
    case Errc::CertificateInvalid: return "CertificateInvalid";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients mod p

// Remainder of a modulo the monic polynomial m (both mod p).
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        std::uint64_t sub = std::uint64_t{lead} * m[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      Poly r = poly_rem(m, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

// Splits "a/b" or "a"; throws on malformed text.
std::pair<mpz_class, mpz_class> parse_fraction(std::string_view raw) {
  const std::string text = trim(raw);
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(Errc::ScalarSyntaxError, "not a rational literal: '" + std::string(raw) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(Errc::ScalarSyntaxError, "zero denominator in '" + std::string(raw) + "'");
  return {parse_integer(num), d};
}

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::unique_ptr<detail::GFContext> build_context(const FieldSpec& spec) {
  auto ctx = std::make_unique<detail::GFContext>();
  ctx->spec = spec;
  ctx->p = spec.p;
  ctx->k = spec.k;
  ctx->q = static_cast<std::uint32_t>(spec.order());
  const std::uint32_t p = ctx->p, k = ctx->k, q = ctx->q;
  ctx->neg.resize(q);
  ctx->inv.assign(q, 0);
  if (k == 1) {
    ctx->one = 1;
    for (std::uint32_t a = 0; a < q; ++a) ctx->neg[a] = a == 0 ? 0 : p - a;
    for (std::uint32_t a = 1; a < q; ++a) ctx->inv[a] = inverse_mod(a, p);
    return ctx;
  }
  auto digits = [&](std::uint32_t code) {
    Poly c(k, 0);
    for (std::uint32_t i = k; i-- > 0;) {
      c[i] = code % p;
      code /= p;
    }
    return c;
  };
  auto encode = [&](const Poly& c) {
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < k; ++i) code = code * p + (i < c.size() ? c[i] : 0);
    return code;
  };
  ctx->one = encode(Poly{1});
  ctx->add.resize(std::size_t{q} * q);
  ctx->mul.resize(std::size_t{q} * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly da = digits(a);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly db = digits(b);
      Poly s(k);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      ctx->add[std::size_t{a} * q + b] = static_cast<std::uint16_t>(encode(s));
      Poly prod(2 * k - 1, 0);
      for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) {
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
        }
      }
      ctx->mul[std::size_t{a} * q + b] = static_cast<std::uint16_t>(encode(poly_rem(prod, spec.modulus, p)));
    }
  }
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if (ctx->add[std::size_t{a} * q + b] == 0) ctx->neg[a] = b;
      if (ctx->mul[std::size_t{a} * q + b] == ctx->one) ctx->inv[a] = b;
    }
  }
  return ctx;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw Error(Errc::UnsupportedExtension, "prime " + std::to_string(p) + " exceeds supported bound");
  FieldSpec s;
  s.kind = Kind::Prime;
  s.p = p;
  s.k = 1;
  return s;
}

FieldSpec FieldSpec::extension(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (k < 2) throw Error(Errc::UnsupportedExtension, "extension degree must be at least 2; use GF(p)");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxExtensionOrder) {
      throw Error(Errc::UnsupportedExtension, "GF(" + std::to_string(p) + "^" + std::to_string(k) +
                                                  ") exceeds the supported order " +
                                                  std::to_string(kMaxExtensionOrder));
    }
  }
  if (modulus.size() != k + 1 || modulus.back() != 1) {
    throw Error(Errc::ReducibleModulus, "modulus must be monic of degree " + std::to_string(k));
  }
  for (auto c : modulus) {
    if (c >= p) throw Error(Errc::ReducibleModulus, "modulus coefficient out of range");
  }
  if (!is_irreducible(modulus, p)) throw Error(Errc::ReducibleModulus, "modulus is reducible over F_p");
  FieldSpec s;
  s.kind = Kind::Extension;
  s.p = p;
  s.k = k;
  s.modulus = std::move(modulus);
  return s;
}

FieldSpec FieldSpec::parse(std::string_view raw, const std::vector<std::uint32_t>* modulus) {
  const std::string name = trim(raw);
  if (name == "Q" || name == "QQ") return rationals();
  std::string inner;
  if (name.size() > 4 && name.rfind("GF(", 0) == 0 && name.back() == ')') {
    inner = name.substr(3, name.size() - 4);
  } else if (name.size() > 1 && name[0] == 'F' && std::isdigit(static_cast<unsigned char>(name[1]))) {
    inner = name.substr(1);
  } else {
    throw Error(Errc::SchemaError, "unknown field '" + name + "'");
  }
  std::uint64_t p = 0, k = 1;
  const auto caret = inner.find('^');
  try {
    if (caret == std::string::npos) {
      const std::uint64_t q = std::stoull(inner);
      // q = p^k with p the smallest prime factor
      for (p = 2; p <= q && q % p != 0; ++p) {}
      std::uint64_t t = q;
      k = 0;
      while (t > 1 && t % p == 0) {
        t /= p;
        ++k;
      }
      if (q < 2 || t != 1) throw Error(Errc::NonPrimeModulus, std::to_string(q) + " is not a prime power");
    } else {
      p = std::stoull(inner.substr(0, caret));
      k = std::stoull(inner.substr(caret + 1));
    }
  } catch (const std::logic_error&) {
    throw Error(Errc::SchemaError, "unknown field '" + name + "'");
  }
  if (k == 1) {
    if (modulus && !modulus->empty()) throw Error(Errc::SchemaError, "prime fields take no modulus");
    return prime(static_cast<std::uint32_t>(p));
  }
  if (modulus && !modulus->empty()) return extension(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), *modulus);
  if (p == 2 && k == 2) return extension(2, 2, {1, 1, 1});
  if (p == 2 && k == 3) return extension(2, 3, {1, 1, 0, 1});
  if (p == 3 && k == 2) return extension(3, 2, {1, 0, 1});
  throw Error(Errc::UnsupportedExtension, "GF(" + std::to_string(p) + "^" + std::to_string(k) +
                                              ") requires an explicit modulus");
}

std::uint64_t FieldSpec::order() const {
  if (kind == Kind::Rationals) return 0;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  return q;
}

std::string FieldSpec::name() const {
  switch (kind) {
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "GF(" + std::to_string(p) + ")";
    case Kind::Extension: return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
  }
  return "?";
}

namespace detail {

const GFContext& intern_context(const FieldSpec& spec) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<GFContext>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(spec.p, spec.kind == FieldSpec::Kind::Extension ? spec.modulus : std::vector<std::uint32_t>{});
  auto it = registry.find(key);
  if (it == registry.end()) it = registry.emplace(key, build_context(spec)).first;
  return *it->second;
}

}  // namespace detail

AnyField make_field(const FieldSpec& spec) {
  if (spec.kind == FieldSpec::Kind::Rationals) return RationalField{};
  return FiniteField(spec);
}

// ------------------------------------------------------------ RationalField

mpq_class RationalField::from_int(long long n) const { return mpq_class(mpz_class(std::to_string(n), 10)); }

mpq_class RationalField::inv(const mpq_class& x) const {
  if (sgn(x) == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return mpq_class(1) / x;
}

mpq_class RationalField::div(const mpq_class& x, const mpq_class& y) const {
  if (sgn(y) == 0) throw Error(Errc::DivisionByZero, "division by zero");
  return mpq_class(x / y);
}

mpq_class RationalField::half(const mpq_class& x) const { return mpq_class(x / 2); }

mpq_class RationalField::parse(std::string_view text) const {
  auto [num, den] = parse_fraction(text);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

std::string RationalField::render(const mpq_class& x) const { return x.get_str(); }

// -------------------------------------------------------------- FiniteField

FiniteField::FiniteField(const FieldSpec& spec) {
  if (!spec.is_finite()) throw Error(Errc::InfiniteFieldUnsupported, "FiniteField needs a finite spec");
  ctx_ = &detail::intern_context(spec);
}

GFElem FiniteField::from_int(long long n) const {
  const auto r = reduce_mod(mpz_class(std::to_string(n), 10), ctx_->p);
  if (ctx_->k == 1) return {ctx_, r};
  // r * 1 in the prime subfield
  GFElem acc = zero();
  for (std::uint32_t i = 0; i < r; ++i) acc += one();
  return acc;
}

GFElem FiniteField::element(std::uint64_t index) const {
  if (index >= ctx_->q) throw Error(Errc::DimensionMismatch, "element index out of range");
  return {ctx_, static_cast<std::uint32_t>(index)};
}

std::vector<GFElem> FiniteField::elements() const {
  std::vector<GFElem> out;
  out.reserve(ctx_->q);
  for (std::uint32_t c = 0; c < ctx_->q; ++c) out.push_back({ctx_, c});
  return out;
}

std::vector<std::uint32_t> FiniteField::coefficients(GFElem x) const {
  std::vector<std::uint32_t> c(ctx_->k, 0);
  std::uint32_t code = x.code();
  for (std::uint32_t i = ctx_->k; i-- > 0;) {
    c[i] = code % ctx_->p;
    code /= ctx_->p;
  }
  return c;
}

GFElem FiniteField::inv(GFElem x) const {
  if (x.code() == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return {ctx_, ctx_->inv[x.code()]};
}

GFElem FiniteField::half(GFElem x) const {
  if (ctx_->p == 2) throw Error(Errc::CharacteristicTwo, "cannot halve in characteristic 2");
  return x * inv(from_int(2));
}

GFElem FiniteField::parse(std::string_view raw) const {
  const std::string text = trim(raw);
  if (!text.empty() && text.front() == '[') {
    if (ctx_->k == 1 || text.back() != ']') {
      throw Error(Errc::ScalarSyntaxError, "unexpected coefficient list '" + text + "' for " + spec().name());
    }
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      if (!is_integer_literal(t)) throw Error(Errc::ScalarSyntaxError, "bad coefficient in '" + text + "'");
      coeffs.push_back(reduce_mod(parse_integer(t), ctx_->p));
    }
    if (coeffs.size() != ctx_->k) {
      throw Error(Errc::ScalarSyntaxError, "expected " + std::to_string(ctx_->k) + " coefficients in '" + text + "'");
    }
    std::uint32_t code = 0;
    for (auto c : coeffs) code = code * ctx_->p + c;
    return {ctx_, code};
  }
  // Integers and fractions map through the prime subfield.
  auto [num, den] = parse_fraction(text);
  const std::uint32_t d = reduce_mod(den, ctx_->p);
  if (d == 0) throw Error(Errc::ScalarSyntaxError, "denominator vanishes in " + spec().name() + ": '" + text + "'");
  const GFElem n = from_int(reduce_mod(num, ctx_->p));
  const GFElem dd = from_int(d);
  return n * inv(dd);
}

std::string FiniteField::render(GFElem x) const {
  if (ctx_->k == 1) return std::to_string(x.code());
  std::string out = "[";
  const auto c = coefficients(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

}  // namespace lenalg
