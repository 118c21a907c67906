#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace lenalg;

namespace {

// GF(4) = F2[x]/(x^2+x+1) on 2-bit payloads (bit 0 = c0, bit 1 = c1).
unsigned poly_mul4(unsigned a, unsigned b) {
  unsigned r = 0;
  for (int i = 0; i < 2; ++i) {
    if (b >> i & 1) r ^= a << i;
  }
  if (r & 4) r ^= 0b111;  // x^2 = x + 1
  return r;
}

std::string render4(unsigned a) { return "[" + std::to_string(a & 1) + "," + std::to_string(a >> 1 & 1) + "]"; }

}  // namespace

TEST_SUITE("exact-field") {
  TEST_CASE("GF(2) iterates [0, 1] with characteristic 2") {
    const auto f = lt::gf(2);
    const auto e = f.elements();
    REQUIRE(e.size() == 2);
    CHECK(f.render(e[0]) == "0");
    CHECK(f.render(e[1]) == "1");
    CHECK(f.characteristic() == 2);
    CHECK(f.is_two_element_field());
    CHECK_FALSE(lt::gf(3).is_two_element_field());
    CHECK_FALSE(lt::gf4().is_two_element_field());
  }

  TEST_CASE("GF(4) agrees with independent polynomial arithmetic") {
    const auto f = lt::gf4();
    CHECK(f.order() == 4);
    const auto x = f.parse("[0,1]");
    CHECK(f.render(x * x) == "[1,1]");
    for (unsigned a = 0; a < 4; ++a) {
      for (unsigned b = 0; b < 4; ++b) {
        const auto fa = f.parse(render4(a)), fb = f.parse(render4(b));
        CHECK(f.render(fa + fb) == render4(a ^ b));
        CHECK(f.render(fa * fb) == render4(poly_mul4(a, b)));
      }
    }
  }

  TEST_CASE("element order is lexicographic on payload") {
    const auto f = lt::gf4();
    std::vector<std::string> seen;
    for (const auto& e : f.elements()) seen.push_back(f.render(e));
    CHECK(seen == std::vector<std::string>{"[0,0]", "[0,1]", "[1,0]", "[1,1]"});
  }

  TEST_CASE("finite fields: distinct elements, inverses, p * 1 = 0") {
    for (const char* name : {"GF(2)", "GF(3)", "GF(5)", "GF(7)", "GF(4)", "GF(8)", "GF(9)", "GF(2^4)"}) {
      CAPTURE(name);
      const std::vector<std::uint32_t> m{1, 1, 0, 0, 1};
      const auto spec = std::string(name) == "GF(2^4)" ? FieldSpec::parse(name, &m) : FieldSpec::parse(name);
      const FiniteField f(spec);
      const auto e = f.elements();
      std::set<std::string> rendered;
      for (const auto& x : e) rendered.insert(f.render(x));
      CHECK(rendered.size() == f.order());
      for (const auto& x : e) {
        if (!f.is_zero(x)) CHECK(f.is_one(x * f.inv(x)));
        CHECK(f.parse(f.render(x)) == x);
      }
      Scalar<FiniteField> s = f.zero();
      for (std::uint32_t i = 0; i < f.characteristic(); ++i) s += f.one();
      CHECK(f.is_zero(s));
    }
  }

  TEST_CASE("field axioms over GF(9) exhaustively") {
    const FiniteField f(FieldSpec::parse("GF(9)"));
    const auto e = f.elements();
    for (const auto& a : e) {
      for (const auto& b : e) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : e) {
          CHECK(a * (b + c) == a * b + a * c);
          CHECK((a * b) * c == a * (b * c));
        }
      }
    }
  }

  TEST_CASE("rationals: 1/2 + 1/3 = 5/6, canonical form") {
    const RationalField q;
    CHECK(q.render(q.parse("1/2") + q.parse("1/3")) == "5/6");
    CHECK(q.render(q.parse("-4/6")) == "-2/3");
    CHECK(q.render(q.parse("10/5")) == "2");
    CHECK(q.characteristic() == 0);
    CHECK(q.parse("123456789012345678901234567890") * q.parse("1/3") == q.parse("41152263004115226300411522630"));
    CHECK_THROWS_AS(q.parse("1/0"), Error);
    CHECK_THROWS_AS(q.parse("x"), Error);
    CHECK_THROWS_AS(q.inv(q.zero()), Error);
  }

  TEST_CASE("halve") {
    const RationalField q;
    CHECK(q.render(q.half(q.one())) == "1/2");
    const auto f3 = lt::gf(3);
    CHECK(f3.render(f3.half(f3.one())) == "2");
    const auto f2 = lt::gf(2);
    try {
      f2.half(f2.one());
      FAIL("expected CharacteristicTwo");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::CharacteristicTwo);
    }
  }

  TEST_CASE("field spec errors and names") {
    auto code = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::Internal;
    };
    CHECK(code([] { FiniteField(FieldSpec::prime(4)); }) == Errc::NonPrimeModulus);
    CHECK(code([] { FieldSpec::extension(2, 2, {1, 0, 1}); }) == Errc::ReducibleModulus);
    CHECK(code([] { FieldSpec::parse("GF(16)"); }) != Errc::Internal);
    CHECK(FieldSpec::parse("GF(4)").name() == "GF(2^2)");
    CHECK(FieldSpec::parse("GF(5)").name() == "GF(5)");
    CHECK(FieldSpec::parse("Q").name() == "Q");
    CHECK(FieldSpec::parse("Q").characteristic() == 0);
  }
}
