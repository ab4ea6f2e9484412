#include <doctest.h>

#include "gen.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/hecke.hpp"
#include "gradedgrowth/registry.hpp"

using namespace gradedgrowth;

namespace {

HeckePtr algebra(const GroupPtr& g, std::size_t radius, const CoefficientRing& ring, const Rational& lambda) {
  auto b = std::make_shared<const WordMetricBall>(ball(*g, radius));
  return std::make_shared<const HeckeAlgebra>(g, b, ring, lambda);
}

// lambda^(l(g)+l(h)-l(gh)) from BFS lengths, with 0^0 = 1.
Rational expected_coeff(const WordMetricBall& b, const GroupOracle& g, const Element& x, const Element& y,
                        const Rational& lambda) {
  const std::size_t e = b.length(x) + b.length(y) - b.length(g.product(x, y));
  Rational out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= lambda;
  return out;
}

}  // namespace

TEST_CASE("coefficient rings") {
  CHECK(CoefficientRing::parse("gf5") == CoefficientRing::prime_field(5));
  CHECK(CoefficientRing::parse("q") == CoefficientRing::rationals());
  CHECK(CoefficientRing::parse("z") == CoefficientRing::integers());
  const auto f5 = CoefficientRing::prime_field(5);
  CHECK(f5.element(7) == 2);
  CHECK(f5.element(make_rational(1, 2)) == 3);
  CHECK(f5.pow(0, 0) == 1);
  CHECK(!f5.is_invertible(0));
  CHECK(!CoefficientRing::integers().is_invertible(2));
  CHECK_THROWS_AS(CoefficientRing::integers().element(make_rational(1, 2)), ContractError);
}

TEST_CASE("lambda = 1 is the group ring") {
  const auto g = make_free_abelian(2);
  const auto a = algebra(g, 6, CoefficientRing::integers(), 1);
  const auto b = ball(*g, 3);
  for (const auto& x : b.elements())
    for (const auto& y : b.elements()) {
      const HeckeElement p = delta_mul(a, x, y);
      REQUIRE(p.terms.size() == 1);
      CHECK(p.terms.begin()->first == g->product(x, y));
      CHECK(p.terms.begin()->second == 1);
    }
}

TEST_CASE("crystal product on Z") {
  const auto g = make_free_abelian(1);
  const auto a = algebra(g, 4, CoefficientRing::integers(), 0);
  CHECK(delta_mul(a, g->normalize("x"), g->normalize("X")).terms.empty());
  CHECK(delta_mul(a, g->normalize("x"), g->normalize("x")).terms.size() == 1);
  CHECK(delta_mul(a, g->identity(), g->normalize("X")).terms.begin()->second == 1);
}

TEST_CASE("property: delta_mul matches the length formula") {
  GroupRegistry reg;
  std::mt19937_64 rng(5);
  for (const char* name : {"z2", "lamplighter", "t334", "heisenberg"}) {
    const auto g = reg.group(name);
    for (int lam : {0, 2, 3}) {
      const auto a = algebra(g, 6, CoefficientRing::rationals(), lam);
      for (int i = 0; i < 60; ++i) {
        const Element x = gen::pick(a->ball(), 3, rng);
        const Element y = gen::pick(a->ball(), 3, rng);
        const Rational c = expected_coeff(a->ball(), *g, x, y, lam);
        const HeckeElement p = delta_mul(a, x, y);
        if (c == 0) {
          CHECK(p.terms.empty());
        } else {
          REQUIRE(p.terms.size() == 1);
          CHECK(p.terms.begin()->first == g->product(x, y));
          CHECK(p.terms.begin()->second == c);
        }
      }
    }
  }
}

TEST_CASE("property: associativity and untwisting over GF(5)") {
  GroupRegistry reg;
  std::mt19937_64 rng(9);
  const auto f5 = CoefficientRing::prime_field(5);
  for (const char* name : {"z", "z2", "lamplighter", "t334"}) {
    const auto g = reg.group(name);
    for (int lam : {0, 1, 2}) {
      const auto a = algebra(g, 9, f5, lam);
      for (int i = 0; i < 60; ++i) {
        const auto x = hecke_add(delta(a, gen::pick(a->ball(), 3, rng), 2), delta(a, gen::pick(a->ball(), 3, rng)));
        const auto y = delta(a, gen::pick(a->ball(), 3, rng), 3);
        const auto z = delta(a, gen::pick(a->ball(), 3, rng));
        CHECK(hecke_mul(hecke_mul(x, y), z) == hecke_mul(x, hecke_mul(y, z)));
        if (lam != 0) CHECK(untwist(hecke_mul(x, y)) == group_ring_mul(*g, untwist(x), untwist(y)));
      }
    }
  }
}

TEST_CASE("untwist needs an invertible lambda") {
  const auto g = make_free_abelian(1);
  const auto a = algebra(g, 4, CoefficientRing::integers(), 0);
  CHECK_THROWS_AS(untwist(delta(a, g->identity())), ContractError);
}

TEST_CASE("parse and format") {
  const auto g = make_free_abelian(2);
  const auto a = algebra(g, 4, CoefficientRing::rationals(), 2);
  const HeckeElement x = parse_hecke(a, "2*x + y - x");
  CHECK(x.terms.size() == 2);
  CHECK(x.terms.at(g->normalize("x")) == 1);
  CHECK(parse_hecke(a, format(x)) == x);
  CHECK_THROWS(parse_hecke(a, "x^9"));
}

TEST_CASE("crystal monomial check") {
  GroupRegistry reg;
  for (const char* name : {"z", "z2", "f2", "lamplighter", "t334"}) {
    const CrystalCheck c = crystal_monomial_check(reg.group(name), 3);
    CHECK(c.monomial);
    CHECK(c.graded);
    CHECK(c.pairs > 0);
  }
  const CrystalCheck sampled = crystal_monomial_check(reg.group("heisenberg"), 4, 100, 1);
  CHECK(sampled.pairs == 100);
  CHECK(sampled.monomial);
}
