#include "lenalg/fixtures.hpp"

#include <algorithm>

namespace lenalg {

namespace {

struct Entry {
  const char* name;
  const char* summary;
  const char* json;
};

// Basis order is the order of "one" and of the table rows.
const Entry kFixtures[] = {
    {"remark-literal", "a^2 = 0, b^2 = b, ab = 2 + a + b, ba = -a - b (the table as printed)", R"json({
  "name": "remark-literal",
  "notes": "basis 1, a, b",
  "field": "Q",
  "dim": 3,
  "one": ["1", "0", "0"],
  "table": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["0", "1", "0"], ["0", "0", "0"], ["2", "1", "1"]],
    [["0", "0", "1"], ["0", "-1", "-1"], ["0", "0", "1"]]
  ]
})json"},
    {"remark-repaired", "as remark-literal but ba = -b: length one, not associative", R"json({
  "name": "remark-repaired",
  "notes": "basis 1, a, b",
  "field": "Q",
  "dim": 3,
  "one": ["1", "0", "0"],
  "table": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["0", "1", "0"], ["0", "0", "0"], ["2", "1", "1"]],
    [["0", "0", "1"], ["0", "0", "-1"], ["0", "0", "1"]]
  ]
})json"},
    {"type5-assoc", "e, f orthogonal idempotents, ex = x = xf; upper triangular 2x2 matrices", R"json({
  "name": "type5-assoc",
  "notes": "basis e, f, x; 1 = e + f",
  "field": "Q",
  "dim": 3,
  "one": ["1", "1", "0"],
  "table": [
    [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "1"]],
    [["0", "0", "0"], ["0", "1", "0"], ["0", "0", "0"]],
    [["0", "0", "0"], ["0", "0", "1"], ["0", "0", "0"]]
  ]
})json"},
    {"dim3-f2-type1", "F2, a2^2 = 0, a3^2 = 0, a2a3 = 0, a3a2 = 0 (mod F1)", R"json({
  "name": "dim3-f2-type1",
  "notes": "basis 1, a2, a3",
  "field": "GF(2)",
  "dim": 3,
  "one": ["1", "0", "0"],
  "table": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["0", "1", "0"], ["0", "0", "0"], ["1", "0", "0"]],
    [["0", "0", "1"], ["0", "0", "0"], ["1", "0", "0"]]
  ]
})json"},
    {"dim3-f2-type2", "F2, a2^2 = a2, a3^2 = a3, a2a3 = 0, a3a2 = 0 (mod F1)", R"json({
  "name": "dim3-f2-type2",
  "notes": "basis 1, a2, a3",
  "field": "GF(2)",
  "dim": 3,
  "one": ["1", "0", "0"],
  "table": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["0", "1", "0"], ["0", "1", "0"], ["0", "0", "0"]],
    [["0", "0", "1"], ["1", "0", "0"], ["1", "0", "1"]]
  ]
})json"},
    {"dim3-f2-type3", "F2, a2^2 = 0, a3^2 = a3, a2a3 = 0, a3a2 = a3 (mod F1)", R"json({
  "name": "dim3-f2-type3",
  "notes": "basis 1, a2, a3",
  "field": "GF(2)",
  "dim": 3,
  "one": ["1", "0", "0"],
  "table": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]],
    [["0", "0", "1"], ["0", "0", "1"], ["0", "0", "1"]]
  ]
})json"},
    {"dim3-f2-type4", "F2, a2^2 = 0, a3^2 = a3, a2a3 = 0, a3a2 = a2 (mod F1); missing from the printed dim-3 list", R"json({
  "name": "dim3-f2-type4",
  "notes": "basis 1, a2, a3; a2 = E12, a3 = E11 in upper triangular 2x2 matrices",
  "field": "GF(2)",
  "dim": 3,
  "one": ["1", "0", "0"],
  "table": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]],
    [["0", "0", "1"], ["0", "1", "0"], ["0", "0", "1"]]
  ]
})json"},
    {"dim3-gf4-type3", "GF(4), a2^2 = 0, a3^2 = a3, a2a3 = 0, a3a2 = a2 (mod F1)", R"json({
  "name": "dim3-gf4-type3",
  "notes": "basis 1, a2, a3",
  "field": "GF(2^2)",
  "modulus": [1, 1, 1],
  "dim": 3,
  "one": ["1", "0", "0"],
  "table": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]],
    [["0", "0", "1"], ["0", "1", "0"], ["0", "0", "1"]]
  ]
})json"},
    {"dim3-gf4-type3-printed", "GF(4), third extension form as printed (a3a2 = a3): not length one", R"json({
  "name": "dim3-gf4-type3-printed",
  "notes": "basis 1, a2, a3",
  "field": "GF(2^2)",
  "modulus": [1, 1, 1],
  "dim": 3,
  "one": ["1", "0", "0"],
  "table": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]],
    [["0", "0", "1"], ["0", "0", "1"], ["0", "0", "1"]]
  ]
})json"},
    {"char2-typeI-seeded", "GF(2), dim 4, first char-2 family in a hidden basis (seed 11)", R"json({
  "name": "char2-typeI-seeded",
  "notes": "generated by: lenalg make random-l1 --field GF(2) --dim 4 --seed 11 --mode typeI --hide",
  "field": "GF(2)",
  "dim": 4,
  "one": ["0", "1", "0", "1"],
  "table": [
    [
      ["0", "0", "0", "0"],
      ["0", "0", "0", "0"],
      ["1", "0", "0", "0"],
      ["1", "0", "0", "0"]
    ],
    [
      ["0", "1", "0", "1"],
      ["0", "1", "0", "1"],
      ["0", "0", "0", "1"],
      ["0", "0", "0", "1"]
    ],
    [
      ["1", "0", "0", "0"],
      ["0", "0", "0", "1"],
      ["0", "1", "0", "1"],
      ["0", "0", "1", "1"]
    ],
    [
      ["1", "1", "0", "1"],
      ["0", "0", "0", "1"],
      ["0", "0", "1", "1"],
      ["0", "0", "0", "0"]
    ]
  ]
})json"},
    {"char2-typeII-seeded", "GF(2), dim 4, second char-2 family in a hidden basis (seed 11)", R"json({
  "name": "char2-typeII-seeded",
  "notes": "generated by: lenalg make random-l1 --field GF(2) --dim 4 --seed 11 --mode typeII --hide",
  "field": "GF(2)",
  "dim": 4,
  "one": ["0", "1", "0", "1"],
  "table": [
    [
      ["0", "0", "0", "0"],
      ["0", "0", "0", "0"],
      ["1", "0", "0", "0"],
      ["1", "0", "0", "0"]
    ],
    [
      ["1", "1", "0", "1"],
      ["0", "1", "0", "0"],
      ["0", "1", "1", "0"],
      ["0", "0", "0", "0"]
    ],
    [
      ["1", "0", "0", "0"],
      ["0", "0", "0", "1"],
      ["0", "1", "0", "1"],
      ["0", "0", "1", "1"]
    ],
    [
      ["0", "1", "0", "1"],
      ["0", "0", "0", "0"],
      ["0", "1", "0", "0"],
      ["0", "0", "0", "1"]
    ]
  ]
})json"},
};

const Entry& find(std::string_view name) {
  for (const auto& e : kFixtures) {
    if (name == e.name) return e;
  }
  throw Error(Errc::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

}  // namespace

const std::vector<FixtureInfo>& fixture_list() {
  static const std::vector<FixtureInfo> list = [] {
    std::vector<FixtureInfo> out;
    for (const auto& e : kFixtures) out.push_back({e.name, e.summary});
    return out;
  }();
  return list;
}

std::string_view fixture_source(std::string_view name) { return find(name).json; }

Document make_fixture(std::string_view name, const std::optional<FieldSpec>& field) {
  ParseOptions opt;
  opt.field = field;
  return parse_document(find(name).json, opt);
}

}  // namespace lenalg
