#include <doctest.h>

#include "gen.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/registry.hpp"
#include "gradedgrowth/subspace.hpp"
#include "gradedgrowth/tiling.hpp"

using namespace gradedgrowth;

namespace {

ElementSet z2_star() { return {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}; }

std::size_t floor_of(const Rational& q) {
  return static_cast<std::size_t>(BigInt(boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q)));
}

}  // namespace

TEST_CASE("inverse envelope matches brute force") {
  const auto g = make_free_abelian(2);
  std::mt19937_64 rng(6);
  const auto b = ball(*g, 4);
  for (int i = 0; i < 20; ++i) {
    const ElementSet a = gen::subset(b, 3, 0.3, rng);
    const ElementSet k = gen::subset(b, 1, 0.6, rng);
    ElementSet expected;
    for (const auto& x : a)
      for (const auto& y : k) expected.insert(g->product(x, g->inverse(y)));
    CHECK(inverse_envelope(*g, a, k) == expected);
  }
}

TEST_CASE("theta") {
  const ThetaParams tp{make_rational(1, 10), make_rational(6, 5)};
  const auto [nu, alpha] = theta(tp, make_rational(1, 10), 0, 0);
  CHECK(nu == make_rational(1, 10));
  CHECK(alpha == make_rational(2, 15));
  CHECK_THROWS_AS(theta(tp, make_rational(1, 20), 0, 0), ContractError);
  CHECK_THROWS_AS(validate(ThetaParams{make_rational(3, 2), make_rational(6, 5)}), ContractError);
}

TEST_CASE("greedy fill on Z/8") {
  const auto omega = make_zd_quotient(1, 8);
  const ElementList k{{0}, {1}, {2}, {3}};
  const GreedyResult r = greedy_fill(*omega, std::vector<char>(8, 0), k, {{0}}, make_rational(3, 10), 1, 0);
  // floor(3/10 * 4) = 1 overlap cell allowed, so the second tile sits at 3
  CHECK(r.centers == std::vector<std::size_t>{0, 3});
  CHECK(r.bs_size == 7);
  CHECK(r.mu == make_rational(7, 8));
  CHECK(r.overlaps_ok);
  CHECK(r.maximal);
}

TEST_CASE("property: greedy fill overlap and maximality") {
  std::mt19937_64 rng(10);
  std::bernoulli_distribution coin(0.25);
  const auto g = make_free_abelian(2);
  const auto b = ball(*g, 3);
  for (int iter = 0; iter < 30; ++iter) {
    const auto omega = make_zd_quotient(2, 8);
    std::vector<char> mask(omega->size(), 0);
    for (auto& m : mask) m = coin(rng) ? 1 : 0;
    ElementSet ks = gen::subset(b, 2, 0.5, rng);
    ks.insert(g->identity());
    const ElementList k(ks.begin(), ks.end());
    const Rational delta = make_rational(1 + iter % 4, 10);
    const GreedyResult r = greedy_fill(*omega, mask, k, {g->identity()}, delta, make_rational(5, 4), 0);

    std::vector<char> covered = mask;
    const std::size_t allowed = floor_of(delta * static_cast<std::int64_t>(k.size()));
    for (std::size_t c : r.centers) {
      std::size_t overlap = 0;
      for (const auto& e : k) overlap += covered[omega->act(c, e)] ? 1 : 0;
      CHECK(overlap <= allowed);
      for (const auto& e : k) covered[omega->act(c, e)] = 1;
    }
    CHECK(covered == r.covered);
    for (std::size_t x = 0; x < omega->size(); ++x) {
      std::size_t hit = 0;
      for (const auto& e : k) hit += covered[omega->act(x, e)] ? 1 : 0;
      CHECK(hit > allowed);
    }
    CHECK(r.overlaps_ok);
    CHECK(r.maximal);
  }
}

TEST_CASE("folner search") {
  const auto z = make_free_abelian(1);
  const ElementSet kz{{1}, {-1}};
  const ElementList f = folner_search(*z, kz, make_rational(1, 10));
  CHECK(f.size() == 21);
  CHECK(set_defect(*z, ElementSet(f.begin(), f.end()), kz) <= make_rational(1, 10));

  const auto z2 = make_free_abelian(2);
  const ElementList f2 = folner_search(*z2, z2_star(), make_rational(1, 2));
  CHECK(set_defect(*z2, ElementSet(f2.begin(), f2.end()), z2_star()) <= make_rational(1, 2));

  const auto free = make_free_group(2);
  CHECK_THROWS_AS(folner_search(*free, {free->normalize("x"), free->normalize("y")}, make_rational(1, 2), 8),
                  SearchFailure);
}

TEST_CASE("quotients") {
  const auto h = make_heisenberg();
  const auto q = make_heisenberg_quotient(4);
  CHECK(q->size() == 64);
  std::mt19937_64 rng(2);
  const auto b = ball(*h, 6);
  for (int i = 0; i < 50; ++i) {
    const Element x = gen::pick(b, 6, rng), y = gen::pick(b, 6, rng);
    CHECK(q->project(h->product(x, y)) == q->mul(q->project(x), q->project(y)));
    CHECK(q->project(h->inverse(x)) == q->inv(q->project(x)));
  }
  for (std::size_t c = 0; c < q->size(); ++c) CHECK(q->project(q->section(c)) == c);

  GroupRegistry reg;
  const auto table = make_coset_table_quotient(reg.group("heisenberg"), reg.finite_group("heis4"), "heis4");
  CHECK(table->spec() == "table:heis4");
  CHECK(table->size() == 64);
  for (int i = 0; i < 50; ++i) {
    const Element x = gen::pick(b, 6, rng), y = gen::pick(b, 6, rng);
    CHECK(table->project(h->product(x, y)) == table->mul(table->project(x), table->project(y)));
  }
  CHECK_THROWS(make_quotient(reg.group("z2"), "zd:2:0"));
  CHECK(make_quotient(reg.group("z2"), "zd:2:8")->size() == 64);
}

TEST_CASE("transversal on Z") {
  const auto z = make_free_abelian(1);
  TilingParams params;
  params.delta = make_rational(1, 16);
  params.zeta = make_rational(5, 4);
  params.t = 3;
  const TilingCertificate cert = build_transversal(z, {{-1}, {0}, {1}}, make_rational(1, 2), zd_chain(1), params);
  CHECK(cert.params_override);
  CHECK(cert.omega_size == 256);
  CHECK(cert.defect_below_epsilon);
  const auto omega = make_quotient(z, cert.quotient);
  CHECK(verify_certificate(cert, *z, *omega).ok());

  // independent recount: the transversal projects bijectively, and the
  // defect is #(T K \ T) / #T
  std::set<std::size_t> cells;
  for (const auto& t : cert.transversal) cells.insert(omega->project(t));
  CHECK(cells.size() == omega->size());
  CHECK(cert.transversal.size() == omega->size());
  const ElementSet t(cert.transversal.begin(), cert.transversal.end());
  CHECK(set_defect(*z, t, {{-1}, {0}, {1}}) == cert.defect);

  for (const auto& step : cert.trace) {
    CHECK(step.mu_ge_delta);
    CHECK(step.eq_nu);
    CHECK(step.eq_alpha);
  }

  // round trip through JSON, then tamper
  const TilingCertificate back = parse_certificate(certificate_json(cert, *z), *z);
  CHECK(verify_certificate(back, *z, *omega).ok());
  TilingCertificate bad = back;
  bad.transversal[0] = {1000};
  CHECK(!verify_certificate(bad, *z, *omega).ok());
  bad = back;
  bad.defect = 0;
  CHECK(!verify_certificate(bad, *z, *omega).defect_matches);
}

TEST_CASE("transversal needs the identity in K") {
  const auto z = make_free_abelian(1);
  CHECK_THROWS_AS(build_transversal(z, {{1}}, make_rational(1, 2), zd_chain(1)), ContractError);
  const TilingCertificate trivial = build_transversal(z, {{0}}, make_rational(1, 2), zd_chain(1));
  CHECK(trivial.defect == 0);
}

TEST_CASE("default recipe reports a search failure instead of guessing") {
  const auto z2 = make_free_abelian(2);
  CHECK_THROWS_AS(build_transversal(z2, z2_star(), make_rational(1, 2), zd_chain(2)), SearchFailure);
}
