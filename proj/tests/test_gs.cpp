#include <doctest.h>

#include "gradedgrowth/error.hpp"
#include "gradedgrowth/gs.hpp"
#include "gradedgrowth/report.hpp"

using namespace gradedgrowth;

namespace {

GSPresentation pres(std::size_t d, std::vector<std::size_t> degs) {
  GSPresentation p;
  p.d = d;
  for (std::size_t x : degs) p.degrees.emplace_back(x);
  return p;
}

// 1 - d t + sum t^deg, written out term by term.
Rational oracle(std::size_t d, const std::vector<std::size_t>& degs, const Rational& t) {
  Rational v = 1 - Rational(static_cast<std::int64_t>(d)) * t;
  for (std::size_t e : degs) {
    Rational term = 1;
    for (std::size_t i = 0; i < e; ++i) term *= t;
    v += term;
  }
  return v;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("gs value against the oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> deg(1, 9), count(0, 6), dd(1, 4), num(1, 19);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::size_t> degs(count(rng));
    for (auto& x : degs) x = deg(rng);
    const std::size_t d = dd(rng);
    const Rational t = make_rational(static_cast<std::int64_t>(num(rng)), 20);
    CHECK(gs_value(pres(d, degs), t) == oracle(d, degs, t));
  }
}

TEST_CASE("gs certificates") {
  const GsCertificate free2 = gs_certificate(pres(2, {}));
  CHECK(free2.is_gs);
  CHECK(free2.value < 0);
  CHECK(free2.value == oracle(2, {}, free2.t));

  CHECK(!gs_certificate(pres(1, {})).is_gs);

  const GsCertificate three = gs_certificate(pres(3, {2, 2, 2}));
  CHECK(!three.is_gs);
  CHECK(three.t == make_rational(1, 2));
  CHECK(three.value == make_rational(1, 4));

  const GSPresentation tail = pres(2, range(5, 100));
  CHECK(gs_value(tail, make_rational(3, 5)) < 0);
  const GsCertificate c = gs_certificate(tail);
  CHECK(c.is_gs);
  CHECK(c.value == oracle(2, range(5, 100), c.t));
  CHECK(verify_gs_certificate(c));
}

TEST_CASE("property: adding relators never lowers the value") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> deg(1, 12), num(1, 99);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::size_t> degs{deg(rng), deg(rng)};
    const Rational t = make_rational(static_cast<std::int64_t>(num(rng)), 100);
    const Rational before = gs_value(pres(3, degs), t);
    degs.push_back(deg(rng));
    CHECK(gs_value(pres(3, degs), t) > before);
  }
}

TEST_CASE("tail bound") {
  GSPresentation p = pres(2, {});
  p.tail = GsTailBound{1, 3};
  const Rational t = make_rational(1, 2);
  // 1 - 1 + (1/8) / (1/2)
  CHECK(gs_value(p, t) == make_rational(1, 4));
}

TEST_CASE("contracts") {
  CHECK_THROWS_AS(gs_value(pres(2, {}), 0), ContractError);
  CHECK_THROWS_AS(gs_value(pres(2, {}), 1), ContractError);
  CHECK_THROWS_AS(gs_certificate(pres(2, {}), 10), ContractError);
  GSPresentation unknown = pres(2, {});
  unknown.degrees.emplace_back(std::nullopt);
  CHECK_THROWS_AS(gs_value(unknown, make_rational(1, 2)), ContractError);
  const GSPresentation assumed = assume_min_degree(unknown);
  CHECK(assumed.assumed_min_degree);
  CHECK(assumed.degrees.back() == assumed.max_deg + 1);
}

TEST_CASE("relator degrees") {
  CHECK(relator_degrees(std::vector<std::string>{"x^3"}, 1, 3) == std::vector<std::optional<std::size_t>>{3});
  CHECK(relator_degrees(std::vector<std::string>{"[x,y]"}, 2, 2) == std::vector<std::optional<std::size_t>>{2});
  CHECK(relator_degrees(std::vector<std::string>{"x^2", "x^4"}, 2, 2) ==
        std::vector<std::optional<std::size_t>>{2, 4});
  CHECK(relator_degrees(std::vector<std::string>{"x^64"}, 2, 2, 8) ==
        std::vector<std::optional<std::size_t>>{std::nullopt});
  CHECK_THROWS_AS(relator_degrees(std::vector<std::string>{"q"}, 2, 2), ParseError);
}

TEST_CASE("certificate JSON round trip") {
  const GsCertificate c = gs_certificate(pres(2, range(5, 100)));
  const GsCertificate back = parse_gs_certificate(gs_certificate_json({{"command", "gs"}}, c));
  CHECK(back.t == c.t);
  CHECK(back.value == c.value);
  CHECK(back.degrees == c.degrees);
  CHECK(verify_gs_certificate(back));
  GsCertificate forged = back;
  forged.value = -1;
  CHECK(!verify_gs_certificate(forged));
}
