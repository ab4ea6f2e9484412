#include <doctest.h>

#include "gen.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/registry.hpp"
#include "gradedgrowth/subspace.hpp"

using namespace gradedgrowth;

namespace {

std::shared_ptr<const BallAlgebra> ball_algebra(const GroupPtr& g, std::size_t r, std::uint32_t p, std::uint32_t lam) {
  return std::make_shared<const BallAlgebra>(g, std::make_shared<const WordMetricBall>(ball(*g, r)), p, lam);
}

Vec random_vec(std::size_t dim, std::uint32_t p, std::size_t support, std::mt19937_64& rng) {
  Vec v(dim, 0);
  std::uniform_int_distribution<std::size_t> at(0, support - 1);
  std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
  for (int i = 0; i < 3; ++i) v[at(rng)] = c(rng);
  return v;
}

// Gaussian elimination written out separately for rank checks.
std::size_t oracle_rank(std::vector<Vec> rows, std::uint32_t p) {
  const PrimeField f(p);
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint32_t inv = f.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint32_t m = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(m, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("property: span rank matches plain elimination") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const auto a = ball_algebra(make_free_abelian(2), 3, p, 1);
    for (int i = 0; i < 30; ++i) {
      std::vector<Vec> rows;
      for (int j = 0; j < 6; ++j) rows.push_back(random_vec(a->dim(), p, 10, rng));
      CHECK(Subspace::span(a, rows).rank() == oracle_rank(rows, p));
    }
  }
}

TEST_CASE("property: dim(A + B) + dim(A cap B) = dim A + dim B") {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2U, 3U}) {
    const auto a = ball_algebra(make_free_abelian(2), 2, p, 1);
    for (int i = 0; i < 40; ++i) {
      std::vector<Vec> ra, rb;
      for (int j = 0; j < 5; ++j) ra.push_back(random_vec(a->dim(), p, a->dim(), rng));
      for (int j = 0; j < 5; ++j) rb.push_back(random_vec(a->dim(), p, a->dim(), rng));
      const Subspace A = Subspace::span(a, ra), B = Subspace::span(a, rb);
      const Subspace S = sum(A, B), I = intersect(A, B);
      CHECK(S.rank() + I.rank() == A.rank() + B.rank());
      CHECK(S.contains(A));
      CHECK(A.contains(I));
      CHECK(B.contains(I));
    }
  }
}

TEST_CASE("right multiplication in the crystal of Z") {
  const auto g = make_free_abelian(1);
  const auto a = ball_algebra(g, 3, 2, 0);
  const Subspace f = Subspace::of_elements(a, {g->identity()});
  const Subspace fs = right_multiply(f, {a->basis_vector(g->normalize("x"))});
  CHECK(fs == Subspace::of_elements(a, {g->normalize("x")}));
  const Subspace one = Subspace::of_elements(a, {g->normalize("x")});
  CHECK(right_multiply(one, {a->basis_vector(g->normalize("X"))}).rank() == 0);
}

TEST_CASE("set defect of intervals in Z") {
  const auto g = make_free_abelian(1);
  const ElementSet s{g->normalize("x"), g->normalize("X")};
  for (std::int64_t r = 0; r <= 6; ++r) {
    ElementSet f;
    for (std::int64_t i = -r; i <= r; ++i) f.insert({i});
    CHECK(set_defect(*g, f, s) == make_rational(2, 2 * r + 1));
  }
  CHECK_THROWS_AS(set_defect(*g, {}, s), ContractError);
}

TEST_CASE("property: subspace defect vs set defect") {
  GroupRegistry reg;
  std::mt19937_64 rng(4);
  for (const char* name : {"z2", "lamplighter", "heisenberg"}) {
    const auto g = reg.group(name);
    const auto crystal = ball_algebra(g, 5, 2, 0);
    const auto group_alg = ball_algebra(g, 5, 2, 1);
    ElementSet s;
    std::vector<SparseVec> sv_c, sv_g;
    for (std::size_t sym : g->alphabet().generators()) {
      const Element e = g->normalize(Word{sym});
      s.insert(e);
      sv_c.push_back(crystal->basis_vector(e));
      sv_g.push_back(group_alg->basis_vector(e));
    }
    for (int i = 0; i < 25; ++i) {
      const ElementSet f = gen::subset(crystal->ball(), 4, 0.3, rng);
      const std::vector<Element> fl(f.begin(), f.end());
      const Rational sd = set_defect(*g, f, s);
      CHECK(invariance_defect(Subspace::of_elements(crystal, fl), sv_c) <= sd);
      // in the group algebra span(delta_F) span(delta_S) = span(delta_FS)
      CHECK(invariance_defect(Subspace::of_elements(group_alg, fl), sv_g) == sd);
    }
  }
}

TEST_CASE("leaving the ball is an error") {
  const auto g = make_free_abelian(1);
  const auto a = ball_algebra(g, 2, 2, 1);
  const Subspace f = Subspace::of_elements(a, {g->normalize("xx")});
  CHECK_THROWS_AS(right_multiply(f, {a->basis_vector(g->normalize("x"))}), OutOfRangeError);
}

TEST_CASE("finite group algebra") {
  GroupRegistry reg;
  const auto alg = build_group_algebra(reg.finite_group("s3"), 3);
  CHECK(alg->dim() == 6);
  CHECK(alg->identity_index() == 0);
  CHECK(Subspace::whole(alg).rank() == 6);
  CHECK(Subspace::zero(alg).rank() == 0);
  CHECK_THROWS_AS(build_group_algebra(reg.finite_group("heis16"), 2), ResourceError);
}
