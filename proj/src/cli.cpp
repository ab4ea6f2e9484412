#include "gradedgrowth/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradedgrowth/algebra_probe.hpp"
#include "gradedgrowth/ball.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/filtration.hpp"
#include "gradedgrowth/gs.hpp"
#include "gradedgrowth/hecke.hpp"
#include "gradedgrowth/magnus.hpp"
#include "gradedgrowth/registry.hpp"
#include "gradedgrowth/report.hpp"
#include "gradedgrowth/subspace.hpp"
#include "gradedgrowth/tiling.hpp"

namespace gradedgrowth {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

// Tuples "(a,b)" contain commas, so lists use ';'.
std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::size_t parse_size(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw ParseError("not an integer: '" + text + "'");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw ParseError("not an integer: '" + text + "'");
  }
}

/// "", "5..100", "2,2,2", "2;3;5..7".
std::vector<std::optional<std::size_t>> parse_degrees(const std::string& text) {
  std::vector<std::optional<std::size_t>> out;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ';', ',');
  for (const auto& item : split(normalized, ',')) {
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const std::size_t lo = parse_size(trim(item.substr(0, dots)));
      const std::size_t hi = parse_size(trim(item.substr(dots + 2)));
      if (lo > hi) throw ParseError("empty degree range '" + item + "'");
      for (std::size_t d = lo; d <= hi; ++d) out.emplace_back(d);
    } else {
      out.emplace_back(parse_size(item));
    }
  }
  return out;
}

std::string rational_text(const Rational& q) { return to_string(q); }

/// K: the given elements, or {1} plus the generators.
ElementSet parse_k(const GroupOracle& group, const std::string& text) {
  ElementSet k;
  if (text.empty()) {
    k.insert(group.identity());
    for (std::size_t s : group.alphabet().generators()) k.insert(group.normalize(Word{s}));
    return k;
  }
  for (const auto& item : split(text, ';')) k.insert(group.parse_element(item));
  return k;
}

std::string format_set(const GroupOracle& group, const ElementSet& k) {
  std::string out;
  for (const auto& g : k) {
    if (!out.empty()) out += ";";
    out += group.format(g);
  }
  return out;
}

QuotientChain parse_chain(const GroupPtr& group, const GroupRegistry& registry, const std::string& text) {
  const std::size_t dim = group->alphabet().generators().size();
  auto power_chain = [&](std::uint64_t base) {
    if (group->kind() == GroupKind::free_abelian) return zd_chain(dim, base);
    if (group->kind() == GroupKind::heisenberg) return heisenberg_chain(base);
    throw UsageError("chain '" + text + "' needs Z^d or the Heisenberg group; use table:<g1>,<g2>,...");
  };
  if (text == "pow2") return power_chain(2);
  if (text.rfind("mod", 0) == 0) {
    const std::size_t p = parse_size(text.substr(3));
    if (!is_prime(p)) throw UsageError("chain modulus must be prime: " + text);
    return power_chain(p);
  }
  if (text.rfind("table:", 0) == 0) {
    std::vector<QuotientPtr> levels;
    for (const auto& name : split(text.substr(6), ','))
      levels.push_back(make_coset_table_quotient(group, registry.finite_group(name), name));
    if (levels.empty()) throw UsageError("empty table chain");
    return explicit_chain(text, std::move(levels));
  }
  throw UsageError("unknown chain '" + text + "' (pow2, mod<p>, table:<g1>,<g2>,...)");
}

struct Options {
  std::string registry;
  std::uint64_t seed = 0;
  std::string format;
  std::string output;
};

class Emitter {
 public:
  Emitter(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void write(const std::string& text) {
    if (opts_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opts_.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + opts_.output);
    f << text;
  }

  bool tsv(bool default_tsv, bool tsv_supported) const {
    if (opts_.format.empty()) return default_tsv;
    if (opts_.format == "tsv" && !tsv_supported) throw UsageError("this command has no TSV output");
    return opts_.format == "tsv";
  }

 private:
  const Options& opts_;
  std::ostream& out_;
};

json config_object(const Config& config) {
  json c = json::object();
  for (const auto& [k, v] : config) c[k] = v;
  return c;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// growth ------------------------------------------------------------------

struct GrowthArgs {
  std::string group;
  std::uint32_t p = 2;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> free_rank;
  std::size_t max_deg = 0;
  std::string coarse;
  std::string fine;
};

int cmd_growth(const GrowthArgs& a, const GroupRegistry& registry, const Options& opts, Emitter& emit) {
  if (!is_prime(a.p)) throw UsageError("--p must be prime");
  Config config{{"command", "growth"}, {"p", std::to_string(a.p)}};
  std::vector<std::size_t> dims;
  std::optional<std::uint64_t> total;
  std::vector<std::pair<std::string, std::string>> extra;
  const int modes = static_cast<int>(!a.group.empty()) + static_cast<int>(a.free_rank.has_value()) +
                    static_cast<int>(!a.coarse.empty() || !a.fine.empty());
  if (modes != 1) throw UsageError("growth needs exactly one of --group, --free, --coarse/--fine");
  if (a.free_rank) {
    const std::size_t n_max = a.max_n.value_or(6);
    config.emplace_back("free", std::to_string(*a.free_rank));
    config.emplace_back("max_n", std::to_string(n_max));
    config.emplace_back("max_deg", std::to_string(a.max_deg == 0 ? n_max : a.max_deg));
    dims = free_graded_dims(*a.free_rank, n_max, a.p, a.max_deg);
  } else if (!a.group.empty()) {
    const std::size_t n_max = a.max_n.value_or(64);
    config.emplace_back("group", a.group);
    config.emplace_back("max_n", std::to_string(n_max));
    const FiniteGroupPtr g = registry.finite_group(a.group);
    dims = graded_dims(g, a.p, n_max);
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    total = g->size();
  } else {
    if (a.coarse.empty() || a.fine.empty()) throw UsageError("--coarse and --fine go together");
    const std::size_t n_max = a.max_n.value_or(64);
    config.emplace_back("coarse", a.coarse);
    config.emplace_back("fine", a.fine);
    config.emplace_back("max_n", std::to_string(n_max));
    const QuotientGrowth q = quotient_growth(*registry.finite_group(a.coarse), *registry.finite_group(a.fine), a.p, n_max);
    dims = q.graded_dims;
    extra.emplace_back("horizon", std::to_string(q.horizon));
    extra.emplace_back("agree_through_max", q.agree_through_max ? "true" : "false");
  }
  config.emplace_back("seed", std::to_string(opts.seed));
  if (emit.tsv(true, true)) {
    for (const auto& e : extra) config.push_back(e);
    emit.write(growth_tsv(config, dims, total));
  } else {
    emit.write(growth_report_json(config, growth_report(dims), extra));
  }
  return 0;
}

// deadends ----------------------------------------------------------------

int cmd_deadends(const std::string& name, std::size_t radius, const GroupRegistry& registry, const Options& opts,
                 Emitter& emit) {
  const GroupPtr g = registry.group(name);
  const auto found = find_dead_ends(*g, radius, ball_cap_from_environment());
  Config config{{"command", "deadends"}, {"group", name}, {"radius", std::to_string(radius)},
                {"seed", std::to_string(opts.seed)}};
  if (emit.tsv(false, true)) {
    std::ostringstream s;
    for (const auto& [k, v] : config) s << "# " << k << "=" << v << "\n";
    s << "element\tlength\n";
    const WordMetricBall b = ball(*g, radius, ball_cap_from_environment());
    for (const auto& e : found) s << g->format(e) << "\t" << b.length(e) << "\n";
    emit.write(s.str());
    return 0;
  }
  json j;
  j["config"] = config_object(config);
  j["count"] = found.size();
  json list = json::array();
  for (const auto& e : found) list.push_back(g->format(e));
  j["dead_ends"] = list;
  emit.write(dump(j));
  return 0;
}

// folner ------------------------------------------------------------------

struct FolnerArgs {
  std::string group;
  std::string k;
  std::string bound = "1/10";
  std::size_t max_radius = kDefaultFolnerRadius;
  std::size_t ball_radius = 6;
};

int cmd_folner(const FolnerArgs& a, const GroupRegistry& registry, const Options& opts, Emitter& emit) {
  const GroupPtr g = registry.group(a.group);
  const ElementSet k = parse_k(*g, a.k);
  const Rational bound = parse_rational(a.bound);
  Config config{{"command", "folner"},      {"group", a.group},
                {"k", format_set(*g, k)},   {"bound", rational_text(bound)},
                {"max_radius", std::to_string(a.max_radius)}, {"ball_radius", std::to_string(a.ball_radius)},
                {"seed", std::to_string(opts.seed)}};
  emit.tsv(false, false);
  json j;
  j["config"] = config_object(config);
  const WordMetricBall b = ball(*g, a.ball_radius, ball_cap_from_environment());
  json balls = json::array();
  for (std::size_t r = 0; r <= a.ball_radius; ++r) {
    ElementSet f;
    for (std::size_t i = 0; i < b.size() && b.length_at(i) <= r; ++i) f.insert(b.element(i));
    const Rational d = set_defect(*g, f, k);
    balls.push_back({{"radius", r}, {"size", f.size()}, {"defect", rational_text(d)}, {"defect_decimal", to_double(d)}});
  }
  j["ball_defects"] = balls;
  const ElementList found = folner_search(*g, k, bound, a.max_radius);
  const ElementSet f(found.begin(), found.end());
  const Rational d = set_defect(*g, f, k);
  j["found"] = true;
  j["size"] = f.size();
  j["defect"] = rational_text(d);
  j["defect_decimal"] = to_double(d);
  json elems = json::array();
  for (const auto& e : found) elems.push_back(g->format(e));
  j["elements"] = elems;
  emit.write(dump(j));
  return 0;
}

// tile --------------------------------------------------------------------

struct Overrides {
  std::string delta;
  std::string zeta;
  std::optional<std::size_t> t;
};

void add_override_config(Config& config, const Overrides& o) {
  config.emplace_back("delta", o.delta.empty() ? "recipe" : rational_text(parse_rational(o.delta)));
  config.emplace_back("zeta", o.zeta.empty() ? "recipe" : rational_text(parse_rational(o.zeta)));
  config.emplace_back("t", o.t ? std::to_string(*o.t) : "recipe");
}

struct TileArgs {
  std::string group;
  std::string k;
  std::string epsilon = "1/4";
  std::string chain = "pow2";
  Overrides overrides;
  std::size_t max_radius = kDefaultFolnerRadius;
  std::size_t max_cells = std::size_t{1} << 22U;
};

int cmd_tile(const TileArgs& a, const GroupRegistry& registry, const Options& opts, Emitter& emit) {
  const GroupPtr g = registry.group(a.group);
  const ElementSet k = parse_k(*g, a.k);
  const Rational eps = parse_rational(a.epsilon);
  const QuotientChain chain = parse_chain(g, registry, a.chain);
  TilingParams params;
  if (!a.overrides.delta.empty()) params.delta = parse_rational(a.overrides.delta);
  if (!a.overrides.zeta.empty()) params.zeta = parse_rational(a.overrides.zeta);
  params.t = a.overrides.t;
  params.max_radius = a.max_radius;
  params.max_cells = a.max_cells;
  Config config{{"command", "tile"}, {"group", a.group}, {"k", format_set(*g, k)},
                {"epsilon", rational_text(eps)}, {"chain", chain.name}};
  add_override_config(config, a.overrides);
  config.emplace_back("max_radius", std::to_string(a.max_radius));
  config.emplace_back("max_cells", std::to_string(a.max_cells));
  config.emplace_back("seed", std::to_string(opts.seed));
  emit.tsv(false, false);
  const TilingCertificate cert = build_transversal(g, k, eps, chain, params);
  emit.write(with_config(config, certificate_json(cert, *g)));
  return 0;
}

// tile-algebra-probe ------------------------------------------------------

struct ProbeArgs {
  std::string group = "z";
  std::uint32_t p = 2;
  std::string basis = "0;1";
  std::string epsilon = "1/4";
  std::string chain;
  Overrides overrides;
  std::size_t max_radius = 64;
  std::size_t max_cells = 4096;
};

int cmd_probe(const ProbeArgs& a, const GroupRegistry& registry, const Options& opts, Emitter& emit) {
  if (!is_prime(a.p)) throw UsageError("--p must be prime");
  const GroupPtr g = registry.group(a.group);
  std::vector<RingElement> basis;
  for (const auto& item : split(a.basis, ';')) basis.push_back(parse_ring_element(*g, item, a.p));
  if (basis.empty()) throw UsageError("--basis needs at least one element");
  const Rational eps = parse_rational(a.epsilon);
  const std::string chain_text = a.chain.empty() ? "mod" + std::to_string(a.p) : a.chain;
  const QuotientChain chain = parse_chain(g, registry, chain_text);
  ProbeParams params;
  if (!a.overrides.delta.empty()) params.delta = parse_rational(a.overrides.delta);
  if (!a.overrides.zeta.empty()) params.zeta = parse_rational(a.overrides.zeta);
  params.t = a.overrides.t;
  params.max_radius = a.max_radius;
  params.max_cells = a.max_cells;
  std::string basis_text;
  for (const auto& r : basis) basis_text += (basis_text.empty() ? "" : ";") + format_ring_element(*g, r);
  Config config{{"command", "tile-algebra-probe"}, {"group", a.group}, {"p", std::to_string(a.p)},
                {"basis", basis_text}, {"epsilon", rational_text(eps)}, {"chain", chain.name}};
  add_override_config(config, a.overrides);
  config.emplace_back("max_radius", std::to_string(a.max_radius));
  config.emplace_back("max_cells", std::to_string(a.max_cells));
  config.emplace_back("seed", std::to_string(opts.seed));
  emit.tsv(false, false);
  const AlgebraProbeReport report = algebra_tiling_probe(g, a.p, basis, eps, chain, params);
  emit.write(with_config(config, probe_report_json(report, *g)));
  return 0;
}

// crystal -----------------------------------------------------------------

struct CrystalArgs {
  std::string group;
  std::size_t radius = 3;
  std::string lambda = "0";
  std::string ring = "q";
  std::size_t sample = 0;
  std::size_t triples = 200;
  std::string multiply;
  std::string by;
};

int cmd_crystal(const CrystalArgs& a, const GroupRegistry& registry, const Options& opts, Emitter& emit) {
  const GroupPtr g = registry.group(a.group);
  const CoefficientRing ring = CoefficientRing::parse(a.ring);
  const Rational lambda = ring.element(parse_rational(a.lambda));
  Config config{{"command", "crystal"}, {"group", a.group},   {"radius", std::to_string(a.radius)},
                {"lambda", rational_text(lambda)},           {"ring", ring.name()},
                {"sample", std::to_string(a.sample)},        {"triples", std::to_string(a.triples)},
                {"seed", std::to_string(opts.seed)}};
  emit.tsv(false, false);

  const CrystalCheck crystal = crystal_monomial_check(g, a.radius, a.sample, opts.seed);

  auto b = std::make_shared<const WordMetricBall>(ball(*g, 3 * a.radius, ball_cap_from_environment()));
  auto algebra = std::make_shared<const HeckeAlgebra>(g, b, ring, lambda);
  std::size_t n = 0;
  while (n < b->size() && b->length_at(n) <= a.radius) ++n;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  bool associative = true;
  for (std::size_t i = 0; i < a.triples; ++i) {
    const auto x = delta(algebra, b->element(pick(rng)));
    const auto y = delta(algebra, b->element(pick(rng)));
    const auto z = delta(algebra, b->element(pick(rng)));
    if (!(hecke_mul(hecke_mul(x, y), z) == hecke_mul(x, hecke_mul(y, z)))) associative = false;
  }

  json j;
  j["config"] = config_object(config);
  j["crystal"] = {{"pairs", crystal.pairs}, {"monomial", crystal.monomial}, {"graded", crystal.graded}};
  j["associative"] = associative;
  if (ring.is_invertible(lambda)) {
    bool hom = true;
    for (std::size_t i = 0; i < a.triples; ++i) {
      const auto x = delta(algebra, b->element(pick(rng)));
      const auto y = delta(algebra, b->element(pick(rng)));
      if (!(untwist(hecke_mul(x, y)) == group_ring_mul(*g, untwist(x), untwist(y)))) hom = false;
    }
    j["untwist_homomorphism"] = hom;
  } else {
    j["untwist_homomorphism"] = nullptr;
  }
  if (!a.multiply.empty() || !a.by.empty()) {
    const HeckeElement x = parse_hecke(algebra, a.multiply);
    const HeckeElement y = parse_hecke(algebra, a.by);
    j["product"] = {{"a", format(x)}, {"b", format(y)}, {"ab", format(hecke_mul(x, y))}};
  }
  emit.write(dump(j));
  return (crystal.monomial && crystal.graded && associative) ? 0 : 4;
}

// rs-check ----------------------------------------------------------------

int cmd_rs_check(const std::string& group_name, std::uint32_t p, std::size_t ideals, const GroupRegistry& registry,
                 const Options& opts, Emitter& emit) {
  if (!is_prime(p)) throw UsageError("--p must be prime");
  const std::vector<std::string> names = group_name.empty() ? builtin_finite_groups() : split(group_name, ',');
  Config config{{"command", "rs-check"},
                {"groups", group_name.empty() ? "builtin" : group_name},
                {"p", std::to_string(p)},
                {"ideals", std::to_string(ideals)},
                {"seed", std::to_string(opts.seed)}};
  emit.tsv(false, false);
  std::mt19937_64 rng(opts.seed);
  json rows = json::array();
  bool all_ok = true;
  for (const auto& name : names) {
    const auto algebra = build_group_algebra(registry.finite_group(name), p);
    const auto s = algebra->finite_group().generator_elements();
    std::size_t generated = 0;
    std::size_t bounded = 0;
    for (std::size_t i = 0; i < ideals; ++i) {
      const Subspace ideal = random_right_ideal(algebra, rng);
      if (right_ideal(algebra, rs_generators(algebra, ideal, s)) == ideal) ++generated;
      if (rs_step_bound(algebra, ideal, s).holds) ++bounded;
    }
    const bool ok = generated == ideals && bounded == ideals;
    all_ok = all_ok && ok;
    rows.push_back({{"group", name}, {"order", algebra->dim()}, {"generates", generated}, {"step_bound", bounded}, {"ok", ok}});
  }
  json j;
  j["config"] = config_object(config);
  j["groups"] = rows;
  j["all_ok"] = all_ok;
  emit.write(dump(j));
  return all_ok ? 0 : 4;
}

// gs ----------------------------------------------------------------------

struct GsArgs {
  std::size_t d = 2;
  std::string degrees;
  std::string relators;
  std::size_t rank = 0;
  std::uint32_t p = 2;
  std::size_t max_deg = kDefaultMagnusDegree;
  bool assume_min_degree = false;
  std::size_t grid = kDefaultGsGrid;
  std::optional<std::uint64_t> tail_per_degree;
  std::size_t tail_from = 1;
};

int cmd_gs(const GsArgs& a, const Options& opts, Emitter& emit) {
  if (!is_prime(a.p)) throw UsageError("--p must be prime");
  GSPresentation pres;
  pres.d = a.d;
  pres.p = a.p;
  pres.max_deg = a.max_deg;
  pres.degrees = parse_degrees(a.degrees);
  const std::vector<std::string> relators = split(a.relators, ';');
  if (!relators.empty()) {
    const std::size_t rank = a.rank == 0 ? a.d : a.rank;
    const auto degs = relator_degrees(relators, rank, a.p, a.max_deg);
    pres.degrees.insert(pres.degrees.end(), degs.begin(), degs.end());
  }
  if (a.tail_per_degree) pres.tail = GsTailBound{*a.tail_per_degree, a.tail_from};
  if (a.assume_min_degree) pres = assume_min_degree(std::move(pres));
  Config config{{"command", "gs"},
                {"d", std::to_string(a.d)},
                {"degrees", a.degrees},
                {"relators", a.relators},
                {"p", std::to_string(a.p)},
                {"max_deg", std::to_string(a.max_deg)},
                {"assume_min_degree", a.assume_min_degree ? "true" : "false"},
                {"grid", std::to_string(a.grid)},
                {"tail", a.tail_per_degree ? std::to_string(*a.tail_per_degree) + "@" + std::to_string(a.tail_from) : "none"},
                {"seed", std::to_string(opts.seed)}};
  emit.tsv(false, false);
  emit.write(gs_certificate_json(config, gs_certificate(pres, a.grid)));
  return 0;
}

// groups ------------------------------------------------------------------

int cmd_groups(const GroupRegistry& registry, const Options& opts, Emitter& emit) {
  Config config{{"command", "groups"}, {"registry", opts.registry.empty() ? "builtin" : opts.registry},
                {"seed", std::to_string(opts.seed)}};
  const auto entries = registry.list();
  if (emit.tsv(false, true)) {
    std::ostringstream s;
    for (const auto& [k, v] : config) s << "# " << k << "=" << v << "\n";
    s << "name\tkind\tdescription\n";
    for (const auto& e : entries) s << e.name << "\t" << e.kind << "\t" << e.description << "\n";
    emit.write(s.str());
    return 0;
  }
  json j;
  j["config"] = config_object(config);
  json list = json::array();
  for (const auto& e : entries) list.push_back({{"name", e.name}, {"kind", e.kind}, {"description", e.description}});
  j["groups"] = list;
  emit.write(dump(j));
  return 0;
}

// verify ------------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& group_name, const GroupRegistry& registry,
               const Options& opts, Emitter& emit) {
  const std::string text = read_file(path);
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  Config config{{"command", "verify"}, {"certificate", path}, {"seed", std::to_string(opts.seed)}};
  emit.tsv(false, false);
  json j;
  bool ok = false;
  if (parsed.contains("is_GS")) {
    const GsCertificate cert = parse_gs_certificate(text);
    ok = verify_gs_certificate(cert);
    j["config"] = config_object(config);
    j["kind"] = "gs_certificate";
    j["is_GS"] = cert.is_gs;
    j["ok"] = ok;
    j["message"] = ok ? "witness value recomputed exactly" : "recomputed value does not match the certificate";
  } else if (parsed.value("kind", "") == "tiling_certificate") {
    std::string name = group_name;
    if (name.empty() && parsed.contains("config")) name = parsed["config"].value("group", "");
    if (name.empty()) name = parsed.value("group", "");
    const GroupPtr g = registry.group(name);
    const TilingCertificate cert = parse_certificate(text, *g);
    const QuotientPtr omega =
        make_quotient(g, cert.quotient, [&](const std::string& n) { return registry.finite_group(n); });
    const CertificateCheck check = verify_certificate(cert, *g, *omega);
    ok = check.ok();
    config.emplace_back("group", name);
    j["config"] = config_object(config);
    j["kind"] = "tiling_certificate";
    j["bijective"] = check.bijective;
    j["disjoint"] = check.disjoint;
    j["defect_matches"] = check.defect_matches;
    j["recomputed_defect"] = rational_text(check.recomputed_defect);
    j["ok"] = ok;
    j["message"] = check.message;
  } else {
    throw ParseError("unrecognised certificate");
  }
  emit.write(dump(j));
  return ok ? 0 : 4;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded growth, Folner tilings and Golod-Shafarevich certificates", "gradedgrowth"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--registry", opts.registry, "JSON file with extra named groups");
  app.add_option("--seed", opts.seed, "Seed for randomized selections")->capture_default_str();
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--output", opts.output, "Write the report to this file");

  GrowthArgs growth;
  auto* g_cmd = app.add_subcommand("growth", "Graded dims of the augmentation filtration");
  g_cmd->add_option("--group", growth.group, "Finite group name");
  g_cmd->add_option("--p", growth.p, "Prime")->capture_default_str();
  g_cmd->add_option("--max-n", growth.max_n, "Largest degree");
  g_cmd->add_option("--free", growth.free_rank, "Free group rank (Magnus computation)");
  g_cmd->add_option("--max-deg", growth.max_deg, "Magnus truncation degree (default max-n)");
  g_cmd->add_option("--coarse", growth.coarse, "Coarser finite quotient");
  g_cmd->add_option("--fine", growth.fine, "Finer finite quotient");

  std::string de_group;
  std::size_t de_radius = 6;
  auto* d_cmd = app.add_subcommand("deadends", "Dead ends in a word-metric ball");
  d_cmd->add_option("--group", de_group, "Group name")->required();
  d_cmd->add_option("--radius", de_radius, "Ball radius")->capture_default_str();

  FolnerArgs folner;
  auto* f_cmd = app.add_subcommand("folner", "Folner set search and ball defects");
  f_cmd->add_option("--group", folner.group, "Group name")->required();
  f_cmd->add_option("--k", folner.k, "Elements of K separated by ';' (default 1 and the generators)");
  f_cmd->add_option("--bound", folner.bound, "Defect bound")->capture_default_str();
  f_cmd->add_option("--max-radius", folner.max_radius, "Search radius")->capture_default_str();
  f_cmd->add_option("--ball-radius", folner.ball_radius, "Report defects of balls up to this radius")
      ->capture_default_str();

  auto add_overrides = [](CLI::App* cmd, Overrides& o) {
    cmd->add_option("--delta", o.delta, "Override delta");
    cmd->add_option("--zeta", o.zeta, "Override zeta");
    cmd->add_option("--t", o.t, "Override the tower height");
  };

  TileArgs tile;
  auto* t_cmd = app.add_subcommand("tile", "Build a (K, epsilon)-invariant transversal");
  t_cmd->add_option("--group", tile.group, "Group name")->required();
  t_cmd->add_option("--k", tile.k, "Elements of K separated by ';' (default 1 and the generators)");
  t_cmd->add_option("--epsilon", tile.epsilon, "Target defect")->capture_default_str();
  t_cmd->add_option("--chain", tile.chain, "pow2, mod<p> or table:<g1>,<g2>,...")->capture_default_str();
  add_overrides(t_cmd, tile.overrides);
  t_cmd->add_option("--max-radius", tile.max_radius, "Folner search radius")->capture_default_str();
  t_cmd->add_option("--max-cells", tile.max_cells, "Largest quotient allowed")->capture_default_str();

  ProbeArgs probe;
  auto* p_cmd = app.add_subcommand("tile-algebra-probe", "Experimental subspace tiling probe over F_p Z^d");
  p_cmd->add_option("--group", probe.group, "z or z2")->capture_default_str();
  p_cmd->add_option("--p", probe.p, "Prime")->capture_default_str();
  p_cmd->add_option("--basis", probe.basis, "Basis of K separated by ';'")->capture_default_str();
  p_cmd->add_option("--epsilon", probe.epsilon, "Target defect")->capture_default_str();
  p_cmd->add_option("--chain", probe.chain, "Quotient chain (default mod<p>)");
  add_overrides(p_cmd, probe.overrides);
  p_cmd->add_option("--max-radius", probe.max_radius, "Folner search radius")->capture_default_str();
  p_cmd->add_option("--max-cells", probe.max_cells, "Largest quotient allowed")->capture_default_str();

  CrystalArgs crystal;
  auto* c_cmd = app.add_subcommand("crystal", "Hecke deformation and crystal checks");
  c_cmd->add_option("--group", crystal.group, "Group name")->required();
  c_cmd->add_option("--radius", crystal.radius, "Length of sampled elements")->capture_default_str();
  c_cmd->add_option("--lambda", crystal.lambda, "Deformation parameter")->capture_default_str();
  c_cmd->add_option("--ring", crystal.ring, "q, z or gf<p>")->capture_default_str();
  c_cmd->add_option("--sample", crystal.sample, "Sampled pairs for the crystal check (0 = all)")
      ->capture_default_str();
  c_cmd->add_option("--triples", crystal.triples, "Sampled triples for associativity")->capture_default_str();
  c_cmd->add_option("--multiply", crystal.multiply, "Left factor, e.g. '2*x + y'");
  c_cmd->add_option("--by", crystal.by, "Right factor");

  std::string rs_group;
  std::uint32_t rs_p = 2;
  std::size_t rs_ideals = 20;
  auto* r_cmd = app.add_subcommand("rs-check", "Reidemeister-Schreier generators of random right ideals");
  r_cmd->add_option("--group", rs_group, "Finite groups separated by ',' (default all built-in)");
  r_cmd->add_option("--p", rs_p, "Prime")->capture_default_str();
  r_cmd->add_option("--ideals", rs_ideals, "Random ideals per group")->capture_default_str();

  GsArgs gs;
  std::uint64_t tail_c = 0;
  auto* s_cmd = app.add_subcommand("gs", "Golod-Shafarevich certificate");
  s_cmd->add_option("--d", gs.d, "Number of generators")->capture_default_str();
  s_cmd->add_option("--degrees", gs.degrees, "Relator degrees: '', '5..100', '2,2,2'");
  s_cmd->add_option("--relators", gs.relators, "Relators over x,y,z separated by ';'");
  s_cmd->add_option("--rank", gs.rank, "Free rank for --relators (default d)");
  s_cmd->add_option("--p", gs.p, "Prime")->capture_default_str();
  s_cmd->add_option("--max-deg", gs.max_deg, "Magnus truncation degree")->capture_default_str();
  s_cmd->add_flag("--assume-min-degree", gs.assume_min_degree, "Treat degrees beyond the truncation as max-deg + 1");
  s_cmd->add_option("--grid", gs.grid, "Grid size (>= 100)")->capture_default_str();
  auto* tail_opt = s_cmd->add_option("--tail-per-degree", tail_c, "Asserted bound on omitted relators per degree");
  s_cmd->add_option("--tail-from", gs.tail_from, "First degree of the omitted relators")->capture_default_str();

  app.add_subcommand("groups", "List named groups");

  std::string v_path;
  std::string v_group;
  auto* v_cmd = app.add_subcommand("verify", "Re-check a certificate");
  v_cmd->add_option("--certificate", v_path, "Certificate file")->required();
  v_cmd->add_option("--group", v_group, "Group of a tiling certificate (default: the recorded one)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  try {
    GroupRegistry registry;
    if (!opts.registry.empty()) registry.load_file(opts.registry);
    Emitter emit(opts, out);
    if (*g_cmd) return cmd_growth(growth, registry, opts, emit);
    if (*d_cmd) return cmd_deadends(de_group, de_radius, registry, opts, emit);
    if (*f_cmd) return cmd_folner(folner, registry, opts, emit);
    if (*t_cmd) return cmd_tile(tile, registry, opts, emit);
    if (*p_cmd) return cmd_probe(probe, registry, opts, emit);
    if (*c_cmd) return cmd_crystal(crystal, registry, opts, emit);
    if (*r_cmd) return cmd_rs_check(rs_group, rs_p, rs_ideals, registry, opts, emit);
    if (*s_cmd) {
      if (*tail_opt) gs.tail_per_degree = tail_c;
      return cmd_gs(gs, opts, emit);
    }
    if (*v_cmd) return cmd_verify(v_path, v_group, registry, opts, emit);
    return cmd_groups(registry, opts, emit);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 3;
  }
}

}  // namespace gradedgrowth
