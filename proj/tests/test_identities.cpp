#include <doctest.h>

#include "support.hpp"

using namespace lenalg;

namespace {

using Q = RationalField;

Vec<Q> rnd(const Q& q, std::size_t n, std::mt19937_64& rng) {
  Vec<Q> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(q.from_int(static_cast<long long>(rng() % 7) - 3));
  return v;
}

Algebra<Q> random_commutative(const Q& q, std::size_t n, std::mt19937_64& rng) {
  StructureTable<Q> t(q, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i; j + 1 < n; ++j) {
      const auto v = rnd(q, n - 1, rng);
      t.set_product(i, j, v);
      t.set_product(j, i, v);
    }
  }
  return unital_hull(t);
}

Matrix<Q> random_gram(const Q& q, std::size_t m, std::mt19937_64& rng) {
  Matrix<Q> g(m, zero_vec(q, m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) g[i][j] = g[j][i] = q.from_int(static_cast<long long>(rng() % 5) - 2);
  }
  return g;
}

// A+ of M_2(Q): x.y = (xy + yx) / 2
Algebra<Q> symmetrized_m2() {
  const Q q;
  const auto m = make_matrix_algebra(q, 2);
  StructureTable<Q> t(q, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      t.set_product(i, j, scale(q, q.parse("1/2"), add(q, m.product(i, j), m.product(j, i))));
    }
  }
  return Algebra<Q>(std::move(t), m.one());
}

SpecialBasisWitness<Q> witness_of(const Algebra<Q>& a) {
  const auto d = decide_length_one(a);
  REQUIRE(d.special);
  return *d.special;
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("associativity") {
    const Q q;
    CHECK(is_associative(make_matrix_algebra(q, 2)).holds);
    CHECK(is_associative(make_matrix_algebra(lt::gf(2), 3)).holds);
    std::mt19937_64 rng(30);
    for (int s = 0; s < 10; ++s) {
      const auto d = random_special_data(q, 5, SpecialFamily::Associative, rng);
      CHECK(is_associative(build_special(q, d.mu, d.beta, d.alpha)).holds);
    }
    const auto rep = std::get<Algebra<Q>>(make_fixture("remark-repaired").algebra);
    const auto v = is_associative(rep);
    CHECK_FALSE(v.holds);
    REQUIRE(v.indices.size() == 3);
    const auto [i, j, k] = std::tuple{v.indices[0], v.indices[1], v.indices[2]};
    const auto lhs = lt::product(rep, lt::product(rep, rep.unit(i), rep.unit(j)), rep.unit(k));
    const auto rhs = lt::product(rep, rep.unit(i), lt::product(rep, rep.unit(j), rep.unit(k)));
    CHECK(sub(q, lhs, rhs) == v.defect);
    CHECK_FALSE(is_zero_vec(q, v.defect));
    // (ab)b vs a(b^2) by hand: ab = 2 + a + b, (ab)b = 2b + ab + b = 2 + a + 4b; a b^2 = ab = 2 + a + b
    const auto ab_b = lt::product(rep, lt::product(rep, rep.unit(1), rep.unit(2)), rep.unit(2));
    CHECK(ab_b == lt::vec(q, {2, 1, 4}));
    CHECK(lt::product(rep, rep.unit(1), lt::product(rep, rep.unit(2), rep.unit(2))) == lt::vec(q, {2, 1, 1}));
  }

  TEST_CASE("flexibility") {
    const Q q;
    std::mt19937_64 rng(31);
    CHECK(is_flexible(random_commutative(q, 4, rng)).holds);
    CHECK(is_flexible(make_matrix_algebra(q, 2)).holds);
    // a special algebra with beta_j mu_i != beta_i alpha_ij
    Vec<Q> mu = lt::vec(q, {0, 1, 0, 0}), beta = lt::vec(q, {0, 0, 1, 0});
    Matrix<Q> alpha(4, zero_vec(q, 4));
    const auto a = build_special(q, mu, beta, alpha);
    CHECK_FALSE(is_flexible(a).holds);
    CHECK_FALSE(check_F(q, witness_of(a)));
  }

  TEST_CASE("criteria on special-basis data") {
    const Q q;
    const std::size_t n = 4;
    Matrix<Q> alpha(n, zero_vec(q, n));
    alpha[1][2] = alpha[2][1] = q.from_int(3);
    const auto jordan = witness_of(build_special(q, lt::vec(q, {0, 1, 2, 0}), zero_vec(q, n), alpha));
    CHECK(check_F(q, jordan));
    CHECK(check_jordan_condition3(q, jordan));
    CHECK_FALSE(check_A1A2(q, jordan));  // mu_2 = 1 but beta_2 = 0

    std::mt19937_64 rng(32);
    const auto d = random_special_data(q, n, SpecialFamily::Associative, rng);
    const auto assoc = witness_of(build_special(q, d.mu, d.beta, d.alpha));
    CHECK(check_F(q, assoc));
    CHECK(check_A1A2(q, assoc));

    const auto zero = witness_of(build_special(q, zero_vec(q, n), zero_vec(q, n), Matrix<Q>(n, zero_vec(q, n))));
    CHECK(check_A1A2(q, zero));
    CHECK(check_jordan_condition3(q, zero));

    Matrix<Q> skew(n, zero_vec(q, n));
    skew[1][2] = q.one();
    const auto asym = witness_of(build_special(q, zero_vec(q, n), zero_vec(q, n), skew));
    CHECK_FALSE(check_F(q, asym));
    CHECK_FALSE(check_jordan_condition3(q, asym));
    const auto nonzero_beta = witness_of(build_special(q, zero_vec(q, n), lt::vec(q, {0, 0, 0, 1}), Matrix<Q>(n, zero_vec(q, n))));
    CHECK_FALSE(check_jordan_condition3(q, nonzero_beta));
  }

  TEST_CASE("Jordan identity") {
    const Q q;
    Matrix<Q> gram(3, zero_vec(q, 3));
    gram[0][0] = q.one();
    gram[1][2] = gram[2][1] = q.from_int(-2);
    CHECK(is_jordan(make_bilinear_jordan(q, gram)).holds);
    CHECK(is_jordan(symmetrized_m2()).holds);
    const auto v = is_jordan(make_matrix_algebra(q, 2));
    CHECK_FALSE(v.holds);
    CHECK(v.note == "not commutative");
    CHECK_THROWS_AS(is_jordan(make_direct_sum_of_fields(lt::gf(2), 2)), Error);
  }

  TEST_CASE("checkers agree with evaluation on random elements") {
    const Q q;
    std::mt19937_64 rng(33);
    int jordan_fail = 0, assoc_fail = 0, flex_fail = 0;
    for (int t = 0; t < 40; ++t) {
      // mix of commutative tables, Jordan algebras and special algebras
      Algebra<Q> a = symmetrized_m2();
      if (t % 4 == 0) a = random_commutative(q, 4, rng);
      if (t % 4 == 1) a = make_bilinear_jordan(q, random_gram(q, 3, rng));
      if (t % 4 == 3) {
        const auto d = random_special_data(q, 4, t % 8 == 3 ? SpecialFamily::Flexible : SpecialFamily::Random, rng);
        a = build_special(q, d.mu, d.beta, d.alpha);
      }
      const std::size_t n = a.dim();
      const bool assoc = is_associative(a).holds;
      const bool flex = is_flexible(a).holds;
      const bool comm = is_commutative(a).holds;
      const bool jordan = is_jordan(a).holds;
      bool saw_assoc = false, saw_flex = false, saw_jordan = false, saw_comm = false;
      for (int s = 0; s < 25; ++s) {
        const auto x = rnd(q, n, rng), y = rnd(q, n, rng), z = rnd(q, n, rng);
        auto m = [&](const Vec<Q>& u, const Vec<Q>& v) { return lt::product(a, u, v); };
        if (m(m(x, y), z) != m(x, m(y, z))) saw_assoc = true;
        if (m(x, m(y, x)) != m(m(x, y), x)) saw_flex = true;
        if (m(x, y) != m(y, x)) saw_comm = true;
        const auto x2 = m(x, x);
        if (m(x2, m(y, x)) != m(m(x2, y), x)) saw_jordan = true;
      }
      CHECK(assoc == !saw_assoc);
      CHECK(flex == !saw_flex);
      CHECK(comm == !saw_comm);
      CHECK(jordan == !(saw_jordan || saw_comm));
      assoc_fail += !assoc;
      flex_fail += !flex;
      jordan_fail += !jordan;
    }
    // the mix exercises both outcomes
    CHECK(assoc_fail > 0);
    CHECK(flex_fail > 0);
    CHECK(jordan_fail > 0);
  }

  TEST_CASE("power-associativity") {
    const auto f3 = lt::gf(3);
    CHECK(is_power_associative_upto(make_matrix_algebra(f3, 2)).holds);
    const auto l1 = generate_length_one(f3, 4, 5, GenMode::parse("special"), true);
    const auto v = is_power_associative_upto(l1);
    CHECK(v.holds);
    CHECK(v.note == "exhaustive");
    const auto vq = is_power_associative_upto(generate_length_one(Q{}, 5, 5, GenMode::parse("special")));
    CHECK(vq.holds);
    CHECK(vq.note == "sampled");

    // e2^2 = e3, e3^2 = e4, e3 e2 = e5, and e2 e3 = e5 so that x^3 is well
    // defined; x^2 x^2 = e4 differs from x^3 x = e5 e2 = 0.
    const Q q;
    StructureTable<Q> t(q, 4);  // e2..e5 as indices 0..3
    t.set_product(0, 0, lt::vec(q, {0, 1, 0, 0}));
    t.set_product(1, 1, lt::vec(q, {0, 0, 1, 0}));
    t.set_product(1, 0, lt::vec(q, {0, 0, 0, 1}));
    t.set_product(0, 1, lt::vec(q, {0, 0, 0, 1}));
    const auto a = unital_hull(t);
    PowerOptions opt;
    opt.degree = 6;
    const auto pv = is_power_associative_upto(a, opt);
    CHECK_FALSE(pv.holds);
    REQUIRE(pv.indices.size() == 3);
    CHECK(pv.indices[0] == 4);

    // without e2 e3 = e5 the table already fails at k = 3
    t.set_product(0, 1, lt::vec(q, {0, 0, 0, 0}));
    const auto pv3 = is_power_associative_upto(unital_hull(t), opt);
    CHECK_FALSE(pv3.holds);
    CHECK(pv3.indices[0] == 3);
    CHECK_THROWS_AS(is_power_associative_upto(a, PowerOptions{2}), Error);
  }

  TEST_CASE("criteria equivalences on seeded witnesses") {
    const Q q;
    std::mt19937_64 rng(34);
    for (int s = 0; s < 60; ++s) {
      const auto fam = static_cast<SpecialFamily>(s % 4);
      const auto d = random_special_data(q, 3 + s % 4, fam, rng);
      const auto a = hide_basis(build_special(q, d.mu, d.beta, d.alpha), rng);
      const auto w = witness_of(a);
      CHECK(check_F(q, w) == is_flexible(a).holds);
      CHECK(check_A1A2(q, w) == is_associative(a).holds);
      CHECK(check_jordan_condition3(q, w) == is_jordan(a).holds);
      CHECK(is_jordan(a).holds == is_commutative(a).holds);
    }
  }
}
