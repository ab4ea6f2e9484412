#include <doctest.h>

#include <cstdlib>
#include <map>
#include <queue>

#include "gen.hpp"
#include "gradedgrowth/ball.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/finite_group.hpp"
#include "gradedgrowth/registry.hpp"
#include "gradedgrowth/rewriting.hpp"

using namespace gradedgrowth;

namespace {

// Plain BFS distances, kept apart from the library's ball code.
std::map<Element, std::size_t> bfs(const GroupOracle& g, std::size_t radius) {
  std::map<Element, std::size_t> dist{{g.identity(), 0}};
  std::queue<Element> q;
  q.push(g.identity());
  while (!q.empty()) {
    const Element x = q.front();
    q.pop();
    const std::size_t d = dist[x];
    if (d == radius) continue;
    for (std::size_t s = 0; s < g.alphabet().size(); ++s) {
      Element y = g.multiply(x, s);
      if (dist.emplace(y, d + 1).second) q.push(std::move(y));
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("ball sizes of Z^2 and F_2") {
  for (std::size_t r = 0; r <= 6; ++r) {
    CHECK(ball(*make_free_abelian(2), r).size() == 2 * r * r + 2 * r + 1);
    std::size_t pow3 = 1;
    for (std::size_t i = 0; i < r; ++i) pow3 *= 3;
    CHECK(ball(*make_free_group(2), r).size() == 2 * pow3 - 1);
  }
}

TEST_CASE("word length on Z^2 is the l1 norm") {
  const auto g = make_free_abelian(2);
  const auto b = ball(*g, 8);
  for (const auto& e : b.elements())
    CHECK(word_length(b, e) == static_cast<std::size_t>(std::llabs(e[0]) + std::llabs(e[1])));
}

TEST_CASE("ball lengths agree with an independent BFS") {
  GroupRegistry reg;
  for (const char* name : {"heisenberg", "lamplighter", "t334", "d4", "f2"}) {
    const auto g = reg.group(name);
    const auto b = ball(*g, 5);
    const auto dist = bfs(*g, 5);
    REQUIRE(b.size() == dist.size());
    for (const auto& [e, d] : dist) CHECK(b.length(e) == d);
  }
}

TEST_CASE("outside the ball is an error, not a guess") {
  const auto g = make_free_abelian(1);
  const auto b = ball(*g, 2);
  CHECK_THROWS_AS(b.length(g->parse_element("(3)")), OutOfRangeError);
  CHECK_THROWS_AS(is_dead_end(*g, b, g->parse_element("(2)")), OutOfRangeError);
}

TEST_CASE("property: w w^-1 normalizes to the identity") {
  GroupRegistry reg;
  std::mt19937_64 rng(7);
  for (const char* name : {"z3", "f2", "heisenberg", "lamplighter", "t335", "q8", "heis5"}) {
    const auto g = reg.group(name);
    for (int i = 0; i < 50; ++i) {
      const Word w = gen::word(g->alphabet(), 12, rng);
      Word ww = w;
      const Word inv = g->alphabet().inverse(w);
      ww.insert(ww.end(), inv.begin(), inv.end());
      CHECK(g->normalize(ww) == g->identity());
      CHECK(g->product(g->normalize(w), g->inverse(g->normalize(w))) == g->identity());
    }
  }
}

TEST_CASE("property: product is associative and matches concatenation") {
  GroupRegistry reg;
  std::mt19937_64 rng(11);
  for (const char* name : {"heisenberg", "lamplighter", "t334", "s3", "c3xc3"}) {
    const auto g = reg.group(name);
    for (int i = 0; i < 40; ++i) {
      const Word u = gen::word(g->alphabet(), 8, rng);
      const Word v = gen::word(g->alphabet(), 8, rng);
      const Word w = gen::word(g->alphabet(), 8, rng);
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const Element a = g->normalize(u), b = g->normalize(v), c = g->normalize(w);
      CHECK(g->product(a, b) == g->normalize(uv));
      CHECK(g->product(g->product(a, b), c) == g->product(a, g->product(b, c)));
    }
  }
}

TEST_CASE("format and parse round trip") {
  GroupRegistry reg;
  for (const char* name : {"z2", "heisenberg", "lamplighter", "f2", "t334", "d4"}) {
    const auto g = reg.group(name);
    const auto b = ball(*g, 4);
    for (const auto& e : b.elements()) CHECK(g->parse_element(g->format(e)) == e);
  }
}

TEST_CASE("finite groups") {
  GroupRegistry reg;
  CHECK(reg.finite_group("c2xc2")->size() == 4);
  CHECK(reg.finite_group("d4")->size() == 8);
  CHECK(reg.finite_group("q8")->size() == 8);
  CHECK(reg.finite_group("s3")->size() == 6);
  CHECK(reg.finite_group("heis3")->size() == 27);
  const auto q8 = reg.finite_group("q8");
  std::size_t involutions = 0;
  for (std::uint32_t a = 1; a < q8->size(); ++a) involutions += q8->mul(a, a) == 0 ? 1 : 0;
  CHECK(involutions == 1);
  CHECK_THROWS_AS(reg.finite_group("z2"), ContractError);
  CHECK_THROWS_AS(reg.group("nonsense"), UsageError);
}

TEST_CASE("dead ends") {
  GroupRegistry reg;
  CHECK(find_dead_ends(*reg.group("z"), 6).empty());
  CHECK(find_dead_ends(*reg.group("z2"), 6).empty());
  CHECK(find_dead_ends(*reg.group("f2"), 6).empty());

  // Independent check on the lamplighter: every reported element is a
  // dead end by BFS distances, and every BFS dead end is reported.
  const auto ll = reg.group("lamplighter");
  const auto found = find_dead_ends(*ll, 8);
  CHECK(!found.empty());
  const auto dist = bfs(*ll, 8);
  std::set<Element> expected;
  for (const auto& [e, d] : dist) {
    if (d >= 8) continue;
    bool dead = true;
    for (std::size_t s = 0; s < ll->alphabet().size(); ++s) dead = dead && dist.at(ll->multiply(e, s)) <= d;
    if (dead) expected.insert(e);
  }
  CHECK(std::set<Element>(found.begin(), found.end()) == expected);
}

TEST_CASE("triangle dead-end family") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 1}}) {
    const auto g = make_triangle_group(k);
    const Element d = g->normalize(triangle_dead_end_family(k, n));
    const auto b = ball(*g, 12);
    CHECK(is_dead_end(*g, b, d));
  }
  const auto t5 = make_triangle_group(5);
  CHECK(t5->normalize(triangle_dead_end_family(5, 1)) == t5->normalize("xyxyx"));
  const auto t4 = make_triangle_group(4);
  CHECK(t4->normalize(triangle_dead_end_family(4, 2)) == t4->normalize("xyxyyxyx"));
}

TEST_CASE("budget from the environment") {
  setenv("GRADEDGROWTH_BUDGET_MB", "1", 1);
  CHECK_THROWS_AS(find_dead_ends(*make_free_group(3), 12, ball_cap_from_environment()), ResourceError);
  unsetenv("GRADEDGROWTH_BUDGET_MB");
}
