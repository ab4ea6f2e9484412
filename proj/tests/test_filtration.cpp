#include <doctest.h>

#include <cmath>

#include "gradedgrowth/error.hpp"
#include "gradedgrowth/filtration.hpp"
#include "gradedgrowth/magnus.hpp"
#include "gradedgrowth/registry.hpp"

using namespace gradedgrowth;

namespace {

std::vector<std::uint64_t> poly_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// F_p[C_(p^a)] = F_p[t]/(t^(p^a)) has r_n = 1 for n < p^a; products of
// cyclic groups multiply the Hilbert series.
std::vector<std::uint64_t> abelian_oracle(const std::vector<std::uint64_t>& orders) {
  std::vector<std::uint64_t> out{1};
  for (std::uint64_t q : orders) out = poly_mul(out, std::vector<std::uint64_t>(q, 1));
  return out;
}

std::vector<std::uint64_t> as_u64(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

// Lyndon words over k letters of length n, by brute force.
std::uint64_t lyndon_count(std::uint64_t k, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> w(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = c % k;
      c /= k;
    }
    bool lyndon = true;
    for (std::size_t r = 1; r < n && lyndon; ++r) {
      std::vector<std::uint64_t> rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
      if (!(w < rot)) lyndon = false;
    }
    count += lyndon ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("augmentation ladder of abelian p-groups") {
  GroupRegistry reg;
  const std::vector<std::pair<const char*, std::vector<std::uint64_t>>> cases{
      {"c2", {2}}, {"c4", {4}}, {"c8", {8}}, {"c2xc2", {2, 2}}, {"c2xc4", {2, 4}}};
  for (const auto& [name, orders] : cases) {
    const AugmentationLadder l = aug_ladder(build_group_algebra(reg.finite_group(name), 2));
    CHECK(l.reaches_zero);
    CHECK(as_u64(l.graded_dims) == abelian_oracle(orders));
  }
  for (const auto& [name, orders] : std::vector<std::pair<const char*, std::vector<std::uint64_t>>>{
           {"c3", {3}}, {"c9", {9}}, {"c3xc3", {3, 3}}}) {
    const AugmentationLadder l = aug_ladder(build_group_algebra(reg.finite_group(name), 3));
    CHECK(as_u64(l.graded_dims) == abelian_oracle(orders));
  }
}

TEST_CASE("c2xc2 ladder dims") {
  GroupRegistry reg;
  const AugmentationLadder l = aug_ladder(build_group_algebra(reg.finite_group("c2xc2"), 2));
  CHECK(l.dims == std::vector<std::size_t>{4, 3, 1, 0});
  CHECK(l.graded_dims == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("non-p-group ladder stabilizes at a nonzero ideal") {
  GroupRegistry reg;
  const AugmentationLadder l = aug_ladder(build_group_algebra(reg.finite_group("c3"), 2));
  CHECK(!l.reaches_zero);
  CHECK(l.dims.back() > 0);
}

TEST_CASE("Jennings series") {
  GroupRegistry reg;
  CHECK(jennings_series(*reg.finite_group("c2xc2"), 2).dims == std::vector<std::size_t>{2});
  CHECK(jennings_series(*reg.finite_group("q8"), 2).dims == std::vector<std::size_t>{2, 1});
  CHECK(jennings_series(*reg.finite_group("c4"), 2).dims == std::vector<std::size_t>{1, 1});
  CHECK_THROWS_AS(jennings_series(*reg.finite_group("s3"), 2), ContractError);
  // (1 + t)^2 (1 + t^2)
  CHECK(jennings_hilbert_coeffs({2, 1}, 2) == std::vector<std::uint64_t>{1, 2, 2, 2, 1});
  CHECK(jennings_hilbert_coeffs({1}, 3) == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("property: ladder agrees with Jennings and sums to |G|") {
  GroupRegistry reg;
  for (const auto& [name, p] : builtin_p_groups()) {
    const auto g = reg.finite_group(name);
    const AugmentationLadder l = aug_ladder(build_group_algebra(g, p));
    CHECK(as_u64(l.graded_dims) == jennings_hilbert_coeffs(jennings_series(*g, p).dims, p));
    std::size_t total = 0;
    for (std::size_t r : l.graded_dims) total += r;
    CHECK(total == g->size());
  }
}

TEST_CASE("dual computation agrees with the explicit ladder") {
  GroupRegistry reg;
  for (const char* name : {"c8", "d4", "q8", "c2xc4", "heis4"}) {
    const auto g = reg.finite_group(name);
    const auto explicit_dims = aug_ladder(build_group_algebra(g, 2)).graded_dims;
    auto dual = dual_graded_dims(*g, 40);
    while (!dual.empty() && dual.back() == 0) dual.pop_back();
    CHECK(dual == explicit_dims);
  }
}

TEST_CASE("quotient growth horizon") {
  GroupRegistry reg;
  const QuotientGrowth q = quotient_growth(*reg.finite_group("heis4"), *reg.finite_group("heis8"), 2, 30);
  CHECK(q.horizon > 2);
  CHECK(!q.agree_through_max);
  REQUIRE(q.graded_dims.size() == q.horizon);
  for (std::size_t n = 0; n < q.horizon; ++n) CHECK(q.coarse[n] == q.fine[n]);
  CHECK(q.coarse[q.horizon] != q.fine[q.horizon]);
  CHECK(std::vector<std::size_t>(q.graded_dims.begin(), q.graded_dims.begin() + 4) ==
        std::vector<std::size_t>{1, 2, 4, 6});
}

TEST_CASE("Witt ranks count Lyndon words") {
  for (std::uint64_t k : {2U, 3U}) {
    const auto w = witt_ranks(k, 8);
    REQUIRE(w.size() == 8);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(w[n - 1] == lyndon_count(k, n));
  }
  CHECK(witt_ranks(2, 6) == std::vector<std::uint64_t>{2, 1, 2, 3, 6, 9});
}

TEST_CASE("Magnus degrees") {
  const Alphabet a = Alphabet::letters({"x", "y"});
  CHECK(magnus_deg(a.parse("x"), 2, 2) == 1);
  CHECK(magnus_deg(a.parse("x^2"), 2, 2) == 2);
  CHECK(magnus_deg(a.parse("x^4"), 2, 2) == 4);
  CHECK(magnus_deg(a.parse("x^3"), 2, 3) == 3);
  CHECK(magnus_deg(a.parse("x^2"), 2, 3) == 1);
  CHECK(magnus_deg(a.parse("[x,y]"), 2, 2) == 2);
  CHECK(magnus_deg(a.parse("[[x,y],x]"), 2, 5) == 3);
  CHECK(magnus_deg(a.parse("xX"), 2, 2) == std::nullopt);
  CHECK(magnus_deg(a.parse("x^8"), 2, 2, 6) == std::nullopt);
}

TEST_CASE("property: Magnus image is multiplicative") {
  const Alphabet a = Alphabet::letters({"x", "y", "z"});
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> sym(0, 5), len(0, 6);
  for (int i = 0; i < 60; ++i) {
    Word u(len(rng)), v(len(rng));
    for (auto& s : u) s = sym(rng);
    for (auto& s : v) s = sym(rng);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    for (std::uint32_t p : {2U, 3U}) {
      const auto lhs = magnus_image(uv, 3, p, 5);
      const auto rhs = magnus_image(u, 3, p, 5) * magnus_image(v, 3, p, 5);
      for (std::size_t d = 0; d <= 5; ++d) CHECK(lhs.degree(d) == rhs.degree(d));
    }
  }
}

TEST_CASE("free graded dims") {
  CHECK(free_graded_dims(2, 6, 2) == std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64});
  CHECK(free_graded_dims(3, 4, 3) == std::vector<std::size_t>{1, 3, 9, 27, 81});
  CHECK_THROWS_AS(free_graded_dims(3, 20, 2), ResourceError);
}

TEST_CASE("Reidemeister-Schreier generators") {
  GroupRegistry reg;
  const auto c3 = build_group_algebra(reg.finite_group("c3"), 2);
  const Subspace aug = aug_ladder(c3).powers.at(1);
  const auto s = c3->finite_group().generator_elements();
  const auto gens = rs_generators(c3, aug, s);
  REQUIRE(gens.size() == 1);
  Vec expected(3, 0);
  expected[0] = 1;
  expected[s[0]] = 1;
  CHECK(gens[0] == expected);
  CHECK(right_ideal(c3, gens) == aug);

  CHECK_THROWS_AS(rs_generators(c3, Subspace::whole(c3), s), ContractError);
  Vec single(3, 0);
  single[1] = 1;
  single[0] = 1;
  const Subspace not_ideal = Subspace::span(c3, std::vector<Vec>{single});
  CHECK(!is_right_ideal(c3, not_ideal));
  CHECK_THROWS_AS(rs_generators(c3, not_ideal, s), ContractError);
}

TEST_CASE("property: RS generators regenerate random right ideals") {
  GroupRegistry reg;
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2U, 3U}) {
    for (const char* name : {"c4", "c2xc2", "s3", "q8", "c9"}) {
      const auto alg = build_group_algebra(reg.finite_group(name), p);
      const auto s = alg->finite_group().generator_elements();
      for (int i = 0; i < 8; ++i) {
        const Subspace ideal = random_right_ideal(alg, rng);
        CHECK(is_right_ideal(alg, ideal));
        CHECK(right_ideal(alg, rs_generators(alg, ideal, s)) == ideal);
        const RsStepBound b = rs_step_bound(alg, ideal, s);
        CHECK(b.holds);
        CHECK(b.quotient_dim <= b.bound);
      }
    }
  }
  const auto c2 = build_group_algebra(reg.finite_group("c2"), 2);
  const RsStepBound b = rs_step_bound(c2, aug_ladder(c2).powers.at(1), c2->finite_group().generator_elements());
  CHECK(b.quotient_dim == 1);
  CHECK(b.bound == 1);
}

TEST_CASE("growth report") {
  const GrowthReport r = growth_report({1, 2, 4, 6, 9, 0, 3});
  CHECK(r.dims == std::vector<std::size_t>{1, 2, 4, 6, 9});
  CHECK(r.fekete_n == 4);
  CHECK(r.fekete_estimate == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(r.min_at_last);
  CHECK(r.violations.empty());
  const GrowthReport bad = growth_report({1, 1, 5});
  CHECK(bad.violations == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}});
}
