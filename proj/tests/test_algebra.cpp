#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace lenalg;

namespace {

const Algebra<RationalField>& remark() {
  static const auto a = std::get<Algebra<RationalField>>(make_fixture("remark-literal").algebra);
  return a;
}

}  // namespace

TEST_SUITE("algebra-core") {
  TEST_CASE("mul on the printed example: ab = 2 + a + b") {
    const RationalField q;
    const auto& a = remark();
    CHECK(a.mul(a.unit(1), a.unit(2)) == lt::vec(q, {2, 1, 1}));
    CHECK(a.mul(a.unit(2), a.unit(1)) == lt::vec(q, {0, -1, -1}));
    const auto v = lt::vec(q, {3, -2, 5});
    CHECK(a.mul(a.one(), v) == v);
    CHECK(a.mul(v, a.one()) == v);
  }

  TEST_CASE("mul on a bilinear-form algebra gives phi(x, y) 1") {
    const RationalField q;
    const Matrix<RationalField> gram{lt::vec(q, {1, 2}), lt::vec(q, {2, -3})};
    const auto a = make_bilinear_jordan(q, gram);
    const auto x = lt::vec(q, {0, 1, 1}), y = lt::vec(q, {0, 2, -1});
    // phi(x, y) = [1 1] G [2 -1]^T = (1+2)*2 + (2-3)*(-1) = 7
    CHECK(a.mul(x, y) == lt::vec(q, {7, 0, 0}));
  }

  TEST_CASE("mul is bilinear on random samples") {
    const auto f = lt::gf(7);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_unital(f, 4, rng);
      const auto u = random_vec(f, 4, rng), u2 = random_vec(f, 4, rng), v = random_vec(f, 4, rng);
      const auto s = f.random(rng);
      const auto lhs = a.mul(add(f, scale(f, s, u), u2), v);
      CHECK(lhs == add(f, scale(f, s, a.mul(u, v)), a.mul(u2, v)));
      CHECK(lhs == lt::product(a, add(f, scale(f, s, u), u2), v));
      CHECK(a.mul(v, add(f, u, u2)) == add(f, a.mul(v, u), a.mul(v, u2)));
    }
  }

  TEST_CASE("span, sum and membership") {
    const RationalField q;
    CHECK(span(q, 2, {lt::vec(q, {1, 0}), lt::vec(q, {0, 1})}).dim() == 2);
    CHECK(span(q, 2, {lt::vec(q, {1, 1}), lt::vec(q, {2, 2})}).dim() == 1);
    // 2*1 + b is not in span{1, a+b}
    const auto u = span(q, 3, {lt::vec(q, {1, 0, 0}), lt::vec(q, {0, 1, 1})});
    CHECK_FALSE(member(u, lt::vec(q, {2, 0, 1})));
    CHECK(member(u, lt::vec(q, {2, 3, 3})));
    const auto w = subspace_sum(u, span(q, 3, {lt::vec(q, {0, 0, 1})}));
    CHECK(w.is_full());
    CHECK_THROWS_AS(member(u, lt::vec(q, {1, 0})), Error);
  }

  TEST_CASE("canonical form does not depend on order or scaling") {
    const auto f = lt::gf(5);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
      std::vector<Vec<FiniteField>> vs;
      for (int i = 0; i < 4; ++i) vs.push_back(random_vec(f, 6, rng));
      const auto s = span(f, 6, vs);
      auto shuffled = vs;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& v : shuffled) v = scale(f, f.from_int(3), v);
      shuffled.push_back(add(f, vs[0], vs[1]));
      const auto s2 = span(f, 6, shuffled);
      CHECK(s.rows() == s2.rows());
      CHECK(s.dim() == lt::rank(f, vs));
    }
  }

  TEST_CASE("coords_in_span") {
    const RationalField q;
    const auto u = lt::vec(q, {1, -1, 2});
    const auto c = coords_in_span(q, {u}, scale(q, q.from_int(2), u));
    REQUIRE(c);
    CHECK(*c == lt::vec(q, {2}));
    const auto& a = remark();
    const auto ab = coords_in_span(q, {a.one(), a.unit(1), a.unit(2)}, a.mul(a.unit(1), a.unit(2)));
    REQUIRE(ab);
    CHECK(*ab == lt::vec(q, {2, 1, 1}));
    CHECK_FALSE(coords_in_span(q, {u}, lt::vec(q, {1, 0, 0})));
  }

  TEST_CASE("change_basis") {
    const RationalField q;
    const auto& a = remark();
    CHECK(change_basis(a, BasisChange<RationalField>(q, identity_matrix(q, 3))) == a);

    // b^2 = b, then b - 1/2 squares to 1/4
    StructureTable<RationalField> t(q, 2);
    t.set_product(0, 0, lt::vec(q, {1, 0}));
    t.set_product(0, 1, lt::vec(q, {0, 1}));
    t.set_product(1, 0, lt::vec(q, {0, 1}));
    t.set_product(1, 1, lt::vec(q, {0, 1}));
    const Algebra<RationalField> b(t, lt::vec(q, {1, 0}));
    const Matrix<RationalField> m{lt::vec(q, {1, 0}), {q.parse("-1/2"), q.one()}};
    const auto c = change_basis(b, BasisChange<RationalField>(q, m));
    CHECK(c.product(1, 1) == Vec<RationalField>{q.parse("1/4"), q.zero()});

    std::mt19937_64 rng(3);
    for (int s = 0; s < 10; ++s) {
      const auto p = random_basis_change(q, 3, rng);
      const auto back = BasisChange<RationalField>(q, p.inverse());
      CHECK(change_basis(change_basis(a, p), back) == a);
    }
    CHECK_THROWS_AS(BasisChange<RationalField>(q, Matrix<RationalField>{lt::vec(q, {1, 1}), lt::vec(q, {2, 2})}), Error);
  }

  TEST_CASE("find_identity") {
    const RationalField q;
    const auto m2 = make_matrix_algebra(q, 2);
    const auto e = find_identity(m2.table());
    REQUIRE(e);
    CHECK(*e == lt::vec(q, {1, 0, 0, 1}));
    CHECK_FALSE(find_identity(StructureTable<RationalField>(q, 3)));
    const auto ff = make_direct_sum_of_fields(q, 2);
    CHECK(*find_identity(ff.table()) == lt::vec(q, {1, 1}));

    std::mt19937_64 rng(4);
    const auto f = lt::gf(3);
    for (int s = 0; s < 10; ++s) {
      const auto a = random_unital(f, 4, rng);
      const auto p = random_basis_change(f, 4, rng);
      const auto b = change_basis(a, p);
      CHECK(*find_identity(b.table()) == p.to_new(a.one()));
    }
  }

  TEST_CASE("unital_hull") {
    const RationalField q;
    StructureTable<RationalField> nil1(q, 1);
    const auto h = unital_hull(nil1);
    CHECK(h.dim() == 2);
    CHECK(h.product(1, 1) == lt::vec(q, {0, 0}));
    CHECK(h.one() == lt::vec(q, {1, 0}));

    const auto m2 = make_matrix_algebra(q, 2);
    const auto forced = unital_hull(m2.table());
    CHECK(forced.dim() == 5);
    CHECK(*find_identity(forced.table()) == lt::vec(q, {1, 0, 0, 0, 0}));

    // hull of the 2-dim zero algebra over F2: the first dimension-three form
    const auto f2 = lt::gf(2);
    const auto z = unital_hull(StructureTable<FiniteField>(f2, 2));
    const auto d = decide_length_one(z);
    CHECK(d.verdict == Verdict::Yes);
    REQUIRE(d.char_two);
    CHECK(d.char_two->form == CharTwoForm::Dim3F2Type1);
  }

  TEST_CASE("Algebra rejects a wrong identity") {
    const RationalField q;
    const auto m2 = make_matrix_algebra(q, 2);
    CHECK_THROWS_AS(Algebra<RationalField>(m2.table(), lt::vec(q, {1, 0, 0, 0})), Error);
  }
}
