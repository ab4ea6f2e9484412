#include <doctest.h>

#include "gen.hpp"
#include "gradedgrowth/ball.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/rewriting.hpp"

using namespace gradedgrowth;

namespace {

RewritingSystem complete(const std::vector<std::string>& gens, const std::vector<std::string>& rels) {
  Presentation p{gens, rels};
  return knuth_bendix(p);
}

}  // namespace

TEST_CASE("shortlex order") {
  CHECK(shortlex_less({0}, {0, 0}));
  CHECK(shortlex_less({0, 1}, {1, 0}));
  CHECK(!shortlex_less({1}, {1}));
}

TEST_CASE("finite presentations complete to the right order") {
  struct Case {
    std::vector<std::string> gens;
    std::vector<std::string> rels;
    std::size_t order;
  };
  const std::vector<Case> cases{
      {{"x"}, {"x^3"}, 3},
      {{"x", "y"}, {"x^2", "y^2", "(xy)^3"}, 6},
      {{"x", "y"}, {"x^4", "y^2", "(xy)^2"}, 8},
      {{"x", "y"}, {"x^4", "x^2Y^2", "yxYx"}, 8},
      {{"x", "y"}, {"x^2", "y^2", "[x,y]"}, 4},
  };
  for (const auto& c : cases) {
    const RewritingSystem rs = complete(c.gens, c.rels);
    REQUIRE(rs.is_complete());
    const NormalFormCount n = count_normal_forms(rs, 12);
    CHECK(n.finite);
    CHECK(n.total == c.order);
    CHECK(confluence_check(rs, 12).confluent);
  }
}

TEST_CASE("Z^2: irreducible words of length n number 4n") {
  const RewritingSystem rs = complete({"x", "y"}, {"[x,y]"});
  REQUIRE(rs.is_complete());
  const NormalFormCount n = count_normal_forms(rs, 6);
  CHECK(n.by_length[0] == 1);
  for (std::size_t len = 1; len <= 6; ++len) CHECK(n.by_length[len] == 4 * len);
  const Alphabet a = rs.alphabet();
  CHECK(rs.reduce(a.parse("yx")) == rs.reduce(a.parse("xy")));
}

TEST_CASE("property: reduction is a normal form for the group") {
  const RewritingSystem rs = triangle_system(4);
  REQUIRE(rs.is_complete());
  std::mt19937_64 rng(3);
  const Alphabet& a = rs.alphabet();
  for (int i = 0; i < 200; ++i) {
    const Word u = gen::word(a, 14, rng);
    const Word v = gen::word(a, 14, rng);
    const Word ru = rs.reduce(u);
    CHECK(rs.is_irreducible(ru));
    CHECK(rs.reduce(ru) == ru);
    // reduce(uv) = reduce(reduce(u) reduce(v))
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    Word rr = ru;
    const Word rv = rs.reduce(v);
    rr.insert(rr.end(), rv.begin(), rv.end());
    CHECK(rs.reduce(uv) == rs.reduce(rr));
    // u u^-1 -> e
    Word uu = u;
    const Word inv = a.inverse(u);
    uu.insert(uu.end(), inv.begin(), inv.end());
    CHECK(rs.reduce(uu).empty());
  }
}

TEST_CASE("triangle systems satisfy their relators") {
  for (int k : {4, 5, 6}) {
    const RewritingSystem rs = triangle_system(k);
    REQUIRE(rs.is_complete());
    const Alphabet& a = rs.alphabet();
    CHECK(rs.reduce(a.parse("x^3")).empty());
    CHECK(rs.reduce(a.parse("y^3")).empty());
    CHECK(rs.reduce(a.parse("(xy)^" + std::to_string(k))).empty());
    CHECK(!rs.reduce(a.parse("(xy)^" + std::to_string(k - 1))).empty());
    const NormalFormCount n = count_normal_forms(rs, 10);
    CHECK(!n.finite);
    CHECK(confluence_check(rs, 10).confluent);
  }
}

TEST_CASE("T(3,3,4) uses x, y as generators") {
  const auto g = make_triangle_group(4);
  const auto b = ball(*g, 1);
  CHECK(b.size() == 5);  // 1, x, X, y, Y
  // the helper generator stays internal to the rewriting system
  CHECK_THROWS(g->normalize("z"));
  CHECK(g->normalize("xyxyxyxy") == g->identity());
}

TEST_CASE("budget exhaustion gives an incomplete system") {
  KnuthBendixOptions tight;
  tight.max_rules = 3;
  const RewritingSystem rs = knuth_bendix(Presentation{{"x", "y"}, {"x^3", "y^3", "(xy)^4"}}, tight);
  CHECK(!rs.is_complete());
}

TEST_CASE("presentation JSON") {
  const Presentation p = Presentation::from_json(R"({"generators": ["x", "y"], "relators": ["x^2", "[x,y]"]})");
  CHECK(p.generators.size() == 2);
  CHECK(Presentation::from_json(p.to_json()).relators == p.relators);
  CHECK_THROWS_AS(Presentation::from_json("{"), ParseError);
  CHECK_THROWS_AS((Presentation{{"x"}, {"q^2"}}.relator_words()), ParseError);
}
