// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances: every comparison is exact except the runtime limits
// and the Fekete threshold, which compares a double against 1.35.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gradedgrowth/algebra_probe.hpp"
#include "gradedgrowth/ball.hpp"
#include "gradedgrowth/cli.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/filtration.hpp"
#include "gradedgrowth/gs.hpp"
#include "gradedgrowth/hecke.hpp"
#include "gradedgrowth/magnus.hpp"
#include "gradedgrowth/registry.hpp"
#include "gradedgrowth/rewriting.hpp"
#include "gradedgrowth/subspace.hpp"
#include "gradedgrowth/tiling.hpp"

using namespace gradedgrowth;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

Outcome jennings() {
  Outcome o;
  const auto t0 = Clock::now();
  GroupRegistry reg;
  for (const auto& [name, p] : builtin_p_groups()) {
    const auto g = reg.finite_group(name);
    const auto ladder = aug_ladder(build_group_algebra(g, p)).graded_dims;
    const auto coeffs = jennings_hilbert_coeffs(jennings_series(*g, p).dims, p);
    o.require(std::vector<std::uint64_t>(ladder.begin(), ladder.end()) == coeffs, name);
  }
  const double s = seconds_since(t0);
  o.require(s < 10, "runtime " + fmt(s) + " s >= 10 s");
  o.note(std::to_string(builtin_p_groups().size()) + " groups in " + fmt(s) + " s");
  return o;
}

Outcome free_gradedness() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto dims = free_graded_dims(2, 6, 2, 7);
  o.require(dims == std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64}, "dims");
  const double s = seconds_since(t0);
  o.require(s < 30, "runtime");
  o.note("D=7, " + fmt(s) + " s");
  return o;
}

Outcome crystal() {
  Outcome o;
  const auto t0 = Clock::now();
  GroupRegistry reg;
  const auto f5 = CoefficientRing::prime_field(5);
  std::mt19937_64 rng(0);
  for (const char* name : {"z", "z2", "lamplighter", "t334"}) {
    const auto g = reg.group(name);
    const auto b = std::make_shared<const WordMetricBall>(ball(*g, 9));
    std::size_t n = 0;
    while (n < b->size() && b->length_at(n) <= 3) ++n;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(1, 4);
    for (int lam : {0, 1, 2}) {
      const auto alg = std::make_shared<const HeckeAlgebra>(g, b, f5, lam);
      auto random_element = [&] {
        return hecke_add(delta(alg, b->element(pick(rng)), coeff(rng)), delta(alg, b->element(pick(rng)), coeff(rng)));
      };
      bool assoc = true;
      for (int i = 0; i < 1000; ++i) {
        const auto x = random_element(), y = random_element(), z = random_element();
        assoc = assoc && hecke_mul(hecke_mul(x, y), z) == hecke_mul(x, hecke_mul(y, z));
      }
      o.require(assoc, std::string("associativity ") + name + " lambda=" + std::to_string(lam));
      if (lam != 0) {
        bool hom = true;
        for (int i = 0; i < 500; ++i) {
          const auto x = random_element(), y = random_element();
          hom = hom && untwist(hecke_mul(x, y)) == group_ring_mul(*g, untwist(x), untwist(y));
        }
        o.require(hom, std::string("untwist ") + name + " lambda=" + std::to_string(lam));
      }
    }
    const CrystalCheck c = crystal_monomial_check(g, 5);
    o.require(c.monomial && c.graded, std::string("crystal check ") + name);
    o.note(std::string(name) + ": " + std::to_string(c.pairs) + " pairs");
  }
  o.note(fmt(seconds_since(t0)) + " s");
  return o;
}

Outcome dead_ends() {
  Outcome o;
  const auto t0 = Clock::now();
  GroupRegistry reg;
  for (const char* name : {"z", "z2", "f2"}) o.require(find_dead_ends(*reg.group(name), 6).empty(), name);
  const auto ll = find_dead_ends(*reg.group("lamplighter"), 8);
  o.require(!ll.empty(), "lamplighter has dead ends");
  for (auto [k, n] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 1}}) {
    const auto g = make_triangle_group(k);
    const Element d = g->normalize(triangle_dead_end_family(k, n));
    const auto b = ball(*g, 16);
    o.require(is_dead_end(*g, b, d), "T(3,3," + std::to_string(k) + ") d_" + std::to_string(n));
  }
  const double s = seconds_since(t0);
  o.require(s < 60, "runtime");
  o.note("lamplighter: " + std::to_string(ll.size()) + " dead ends; " + fmt(s) + " s");
  return o;
}

Outcome tiling() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto z2 = make_free_abelian(2);
  const ElementSet k{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const Rational eps = make_rational(1, 2);

  // The default parameter recipe asks for a tower far beyond the search
  // budget; record what it does, then run with explicit parameters.
  try {
    build_transversal(z2, k, eps, zd_chain(2));
    o.note("default recipe succeeded");
  } catch (const SearchFailure& e) {
    o.note(std::string("default recipe: search failure (") + e.what() + ")");
  }

  TilingParams params;
  params.delta = make_rational(1, 32);
  params.zeta = make_rational(5, 4);
  params.t = 2;
  const TilingCertificate cert = build_transversal(z2, k, eps, zd_chain(2), params);
  const auto omega = make_quotient(z2, cert.quotient);

  std::vector<char> hit(omega->size(), 0);
  bool bijective = cert.transversal.size() == omega->size();
  for (const auto& t : cert.transversal) {
    const std::size_t c = omega->project(t);
    bijective = bijective && !hit[c];
    hit[c] = 1;
  }
  o.require(bijective, "transversal is a bijective lift");
  const Rational defect = set_defect(*z2, ElementSet(cert.transversal.begin(), cert.transversal.end()), k);
  o.require(defect == cert.defect, "recorded defect equals recount");
  o.require(defect < eps, "defect < 1/2");
  o.require(verify_certificate(cert, *z2, *omega).ok(), "library verifier");
  for (const auto& step : cert.trace) {
    o.require(step.mu_ge_delta, "mu >= delta");
    o.require(step.eq_nu, "#B_s = nu' #Omega");
    o.require(step.eq_alpha, "#(B_s L*) <= alpha' #Omega");
  }
  const double s = seconds_since(t0);
  o.require(s < 300, "runtime");
  o.note("override delta=1/32 zeta=5/4 t=2; |Omega|=" + std::to_string(cert.omega_size) +
         ", defect=" + to_string(defect) + ", " + std::to_string(cert.trace.size()) + " greedy steps, " + fmt(s) +
         " s");
  return o;
}

Outcome reidemeister_schreier() {
  Outcome o;
  const auto t0 = Clock::now();
  GroupRegistry reg;
  std::mt19937_64 rng(0);
  std::size_t cases = 0;
  for (std::uint32_t p : {2U, 3U}) {
    for (const auto& name : builtin_finite_groups()) {
      const auto alg = build_group_algebra(reg.finite_group(name), p);
      const auto s = alg->finite_group().generator_elements();
      for (int i = 0; i < 20; ++i) {
        const Subspace ideal = random_right_ideal(alg, rng);
        o.require(right_ideal(alg, rs_generators(alg, ideal, s)) == ideal, name + " p=" + std::to_string(p));
        o.require(rs_step_bound(alg, ideal, s).holds, "step bound " + name);
        ++cases;
      }
    }
  }
  o.note(std::to_string(cases) + " ideals, " + fmt(seconds_since(t0)) + " s");
  return o;
}

Outcome subexponential() {
  Outcome o;
  const auto t0 = Clock::now();
  GroupRegistry reg;
  const QuotientGrowth q = quotient_growth(*reg.finite_group("heis16"), *reg.finite_group("heis32"), 2, 20);
  const auto& r = q.graded_dims;
  for (std::size_t m = 1; m < r.size(); ++m)
    for (std::size_t n = 1; m + n < r.size(); ++n)
      o.require(static_cast<std::uint64_t>(r[m]) * r[n] >= r[m + n],
                "r_" + std::to_string(m) + " r_" + std::to_string(n));
  const GrowthReport rep = growth_report(r);
  o.require(rep.violations.empty(), "report violations");
  o.require(rep.fekete_estimate <= 1.35, "Fekete estimate <= 1.35");
  o.require(rep.min_at_last, "minimum at the largest n");
  const GrowthReport free = growth_report(free_graded_dims(2, 8, 2));
  o.require(free.fekete_estimate >= 1.9, "free estimate >= 1.9");
  char buf[160];
  std::snprintf(buf, sizeof buf, "heis32 horizon %zu, estimate %.4f at n=%zu; free estimate %.4f; %.2f s", q.horizon,
                rep.fekete_estimate, rep.fekete_n, free.fekete_estimate, seconds_since(t0));
  o.note(buf);
  return o;
}

Outcome golod_shafarevich() {
  Outcome o;
  const auto t0 = Clock::now();
  auto pres = [](std::size_t d, std::size_t lo, std::size_t hi) {
    GSPresentation p;
    p.d = d;
    for (std::size_t i = lo; i <= hi && lo != 0; ++i) p.degrees.emplace_back(i);
    return p;
  };
  const GsCertificate a = gs_certificate(pres(2, 0, 0));
  o.require(a.is_gs && a.value < 0 && verify_gs_certificate(a), "(2, {}) is GS");
  o.require(!gs_certificate(pres(1, 0, 0)).is_gs, "(1, {}) not found");
  GSPresentation three = pres(3, 0, 0);
  three.degrees = {2, 2, 2};
  const GsCertificate c = gs_certificate(three);
  o.require(!c.is_gs && c.value == make_rational(1, 4) && c.t == make_rational(1, 2), "(3, {2,2,2}) min 1/4 at 1/2");
  const GSPresentation tail = pres(2, 5, 100);
  o.require(gs_value(tail, make_rational(3, 5)) < 0, "value at 3/5 < 0");
  const GsCertificate d = gs_certificate(tail);
  o.require(d.is_gs && verify_gs_certificate(d), "(2, 5..100) is GS");
  o.require(relator_degrees(std::vector<std::string>{"x^3"}, 1, 3) == std::vector<std::optional<std::size_t>>{3},
            "deg x^3 at p=3");
  o.require(relator_degrees(std::vector<std::string>{"[x,y]"}, 2, 2) == std::vector<std::optional<std::size_t>>{2},
            "deg [x,y] at p=2");
  const double s = seconds_since(t0);
  o.require(s < 5, "runtime");
  o.note("witness t=" + to_string(d.t) + ", " + fmt(s) + " s");
  return o;
}

Outcome defect_comparison() {
  Outcome o;
  GroupRegistry reg;
  std::mt19937_64 rng(0);
  std::bernoulli_distribution coin(0.2);
  for (const char* name : {"z2", "lamplighter"}) {
    const auto g = reg.group(name);
    const auto b = std::make_shared<const WordMetricBall>(ball(*g, 6));
    ElementSet s;
    for (std::size_t sym : g->alphabet().generators()) s.insert(g->normalize(Word{sym}));
    for (std::uint32_t lam : {0U, 1U}) {
      const auto alg = std::make_shared<const BallAlgebra>(g, b, 2, lam);
      std::vector<SparseVec> sv;
      for (const auto& e : s) sv.push_back(alg->basis_vector(e));
      rng.seed(lam);
      for (int i = 0; i < 50; ++i) {
        std::vector<Element> f;
        for (std::size_t j = 0; j < b->size() && b->length_at(j) <= 5; ++j)
          if (coin(rng)) f.push_back(b->element(j));
        if (f.empty()) f.push_back(g->identity());
        const Rational lhs = invariance_defect(Subspace::of_elements(alg, f), sv);
        const Rational rhs = set_defect(*g, ElementSet(f.begin(), f.end()), s);
        o.require(lhs <= rhs, std::string(name) + " lambda=" + std::to_string(lam));
      }
    }
  }
  o.note("50 subsets per group, crystal and group algebra over GF(2)");
  return o;
}

Outcome probe_honesty() {
  Outcome o;
  std::ostringstream out, err;
  const int code = run({"tile-algebra-probe", "--group", "z", "--p", "2", "--basis", "0;1", "--epsilon", "1/4",
                        "--delta", "1/16", "--zeta", "5/4", "--t", "2"},
                       out, err);
  o.require(code == 0, "exit status");
  const auto j = nlohmann::json::parse(out.str());
  o.require(j.at("experimental") == true, "marked experimental");
  o.require(!j.at("steps").empty(), "steps present");
  for (const auto& step : j.at("steps"))
    for (const auto& [key, value] : step.at("assertions").items())
      if (key != "dim_bsl") o.require(value.is_boolean(), "assertion " + key + " is an outcome");
  // No key or string anywhere asserts the general statement.
  std::function<void(const nlohmann::json&)> scan = [&](const nlohmann::json& x) {
    if (x.is_object()) {
      for (const auto& [key, value] : x.items()) {
        for (const char* bad : {"theorem", "holds", "proved", "guarantee"})
          o.require(key.find(bad) == std::string::npos, "key " + key);
        scan(value);
      }
    } else if (x.is_array()) {
      for (const auto& v : x) scan(v);
    } else if (x.is_string()) {
      const std::string s = x.get<std::string>();
      for (const char* bad : {"theorem", "Theorem", "proved", "guarantee"})
        o.require(s.find(bad) == std::string::npos, "text '" + s + "'");
    }
  };
  scan(j);
  std::ifstream golden(GOLDEN_DIR "/probe_z.json", std::ios::binary);
  std::ostringstream g;
  g << golden.rdbuf();
  o.require(g.str() == out.str(), "golden report");
  o.note(std::to_string(j.at("steps").size()) + " steps");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Jennings cross-check", jennings},
      {"free-group gradedness", free_gradedness},
      {"crystal/Hecke algebra", crystal},
      {"dead ends", dead_ends},
      {"tiling certificate", tiling},
      {"Reidemeister-Schreier", reidemeister_schreier},
      {"subexponentiality probe", subexponential},
      {"GS certificates", golod_shafarevich},
      {"defect comparison", defect_comparison},
      {"probe honesty", probe_honesty},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
