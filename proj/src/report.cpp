#include "gradedgrowth/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gradedgrowth/algebra_probe.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/tiling.hpp"

namespace gradedgrowth {

using json = nlohmann::ordered_json;

namespace {

json integer_json(const BigInt& v) {
  if (v >= BigInt(std::numeric_limits<std::int64_t>::min()) && v <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return json(static_cast<std::int64_t>(v));
  return json(to_string(v));
}

BigInt integer_from(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer");
}

json fraction_json(const Rational& q) {
  return json{{"num", integer_json(boost::multiprecision::numerator(q))},
              {"den", integer_json(boost::multiprecision::denominator(q))}};
}

Rational fraction_from(const json& j) {
  const BigInt den = integer_from(j.at("den"));
  if (den == 0) throw ParseError("zero denominator");
  return Rational(integer_from(j.at("num")), den);
}

json config_json(const Config& config) {
  json c = json::object();
  for (const auto& [k, v] : config) c[k] = v;
  return c;
}

json element_list(const GroupOracle& group, const ElementList& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(group.format(x));
  return out;
}

ElementList parse_element_list(const GroupOracle& group, const json& j) {
  ElementList out;
  for (const auto& s : j) out.push_back(group.parse_element(s.get<std::string>()));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string growth_tsv(const Config& config, const std::vector<std::size_t>& dims,
                       std::optional<std::uint64_t> total) {
  std::ostringstream out;
  for (const auto& [k, v] : config) out << "# " << k << "=" << v << "\n";
  out << "n\tdim_varpi_n\tr_n\troot\n";
  std::uint64_t below = 0;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    out << n << "\t";
    if (total) out << (*total - below);
    else out << "-";
    out << "\t" << dims[n] << "\t";
    if (n == 0) {
      out << "-";
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", std::pow(static_cast<double>(dims[n]), 1.0 / static_cast<double>(n)));
      out << buf;
    }
    out << "\n";
    below += dims[n];
  }
  return out.str();
}

std::string with_config(const Config& config, const std::string& json_text) {
  const json body = parse_json(json_text);
  if (!body.is_object()) throw ParseError("expected a JSON object");
  json j;
  j["config"] = config_json(config);
  for (auto it = body.begin(); it != body.end(); ++it)
    if (it.key() != "config") j[it.key()] = it.value();
  return dump(j);
}

std::string growth_report_json(const Config& config, const GrowthReport& report,
                               const std::vector<std::pair<std::string, std::string>>& extra) {
  json j;
  j["config"] = config_json(config);
  j["dims"] = report.dims;
  json roots = json::array();
  for (double r : report.roots) roots.push_back(std::round(r * 1e12) / 1e12);
  j["roots"] = roots;
  j["fekete_n"] = report.fekete_n;
  j["fekete_estimate"] = std::round(report.fekete_estimate * 1e12) / 1e12;
  j["min_at_last"] = report.min_at_last;
  j["nonincreasing"] = report.nonincreasing;
  j["loglog_slope"] = std::round(report.loglog_slope * 1e12) / 1e12;
  json v = json::array();
  for (const auto& [m, n] : report.violations) v.push_back({m, n});
  j["submultiplicativity_violations"] = v;
  for (const auto& [k, val] : extra) j[k] = val;
  return dump(j);
}

std::string gs_certificate_json(const Config& config, const GsCertificate& cert) {
  json j;
  j["config"] = config_json(config);
  j["is_GS"] = cert.is_gs;
  j["t_num"] = integer_json(boost::multiprecision::numerator(cert.t));
  j["t_den"] = integer_json(boost::multiprecision::denominator(cert.t));
  j["value_num"] = integer_json(boost::multiprecision::numerator(cert.value));
  j["value_den"] = integer_json(boost::multiprecision::denominator(cert.value));
  j["t_decimal"] = to_double(cert.t);
  j["value_decimal"] = to_double(cert.value);
  j["d"] = cert.d;
  j["p"] = cert.p;
  j["degrees"] = cert.degrees;
  j["grid"] = cert.grid;
  j["max_deg"] = cert.max_deg;
  j["assumed_min_degree"] = cert.assumed_min_degree;
  if (cert.assumed_min_degree)
    j["annotation"] = "degrees beyond the truncation were taken as max_deg + 1; true degrees can only be larger";
  if (cert.tail) {
    j["tail_bound"] = {{"per_degree", cert.tail->per_degree},
                       {"from_degree", cert.tail->from_degree},
                       {"asserted_by", "user"}};
  } else {
    j["tail_bound"] = nullptr;
  }
  return dump(j);
}

GsCertificate parse_gs_certificate(const std::string& text) {
  const json j = parse_json(text);
  try {
    GsCertificate c;
    c.is_gs = j.at("is_GS").get<bool>();
    c.t = Rational(integer_from(j.at("t_num")), integer_from(j.at("t_den")));
    c.value = Rational(integer_from(j.at("value_num")), integer_from(j.at("value_den")));
    c.d = j.at("d").get<std::size_t>();
    c.p = j.at("p").get<std::uint32_t>();
    c.degrees = j.at("degrees").get<std::vector<std::size_t>>();
    c.grid = j.value("grid", std::size_t{0});
    c.max_deg = j.value("max_deg", std::size_t{0});
    c.assumed_min_degree = j.value("assumed_min_degree", false);
    if (j.contains("tail_bound") && !j.at("tail_bound").is_null())
      c.tail = GsTailBound{j.at("tail_bound").at("per_degree").get<std::uint64_t>(),
                           j.at("tail_bound").at("from_degree").get<std::size_t>()};
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad GS certificate: ") + e.what());
  }
}

std::string certificate_json(const TilingCertificate& cert, const GroupOracle& group) {
  json j;
  j["kind"] = "tiling_certificate";
  j["group"] = cert.group;
  j["chain"] = cert.chain;
  j["quotient"] = cert.quotient;
  j["quotient_level"] = cert.quotient_level;
  j["omega_size"] = cert.omega_size;
  j["k"] = element_list(group, cert.k);
  j["epsilon"] = fraction_json(cert.epsilon);
  j["delta"] = fraction_json(cert.delta);
  j["zeta"] = fraction_json(cert.zeta);
  j["t"] = cert.t;
  j["params_override"] = cert.params_override;
  json tower = json::array();
  for (std::size_t i = 0; i < cert.tower.size(); ++i)
    tower.push_back({{"level", i + 1},
                     {"shape", cert.tower[i].shape},
                     {"radius", cert.tower[i].radius},
                     {"size", cert.tower[i].elements.size()},
                     {"elements", element_list(group, cert.tower[i].elements)}});
  j["tower"] = tower;
  json placements = json::array();
  for (const auto& p : cert.placements)
    placements.push_back({{"level", p.level}, {"center", group.format(p.center)}, {"tile", element_list(group, p.tile)}});
  j["placements"] = placements;
  j["remainder"] = element_list(group, cert.remainder);
  j["transversal"] = element_list(group, cert.transversal);
  j["defect"] = fraction_json(cert.defect);
  j["defect_below_epsilon"] = cert.defect_below_epsilon;
  json trace = json::array();
  for (std::size_t i = 0; i < cert.trace.size(); ++i) {
    const auto& s = cert.trace[i];
    trace.push_back({{"level", cert.trace_levels[i]},
                     {"s", s.s},
                     {"nu", fraction_json(s.nu)},
                     {"alpha", fraction_json(s.alpha)},
                     {"mu", fraction_json(s.mu)},
                     {"nu_prime", fraction_json(s.nu_prime)},
                     {"alpha_prime", fraction_json(s.alpha_prime)},
                     {"hypotheses",
                      {{"kl_envelope", s.kl_envelope},
                       {"bk_envelope", s.bk_envelope},
                       {"bl_envelope", s.bl_envelope},
                       {"kl_bound", s.hyp_kl},
                       {"bk_bound", s.hyp_bk},
                       {"bl_bound", s.hyp_bl}}},
                     {"conclusions",
                      {{"overlaps", s.overlaps_ok},
                       {"maximal", s.maximal},
                       {"mu_ge_delta", s.mu_ge_delta},
                       {"s_ge_one", s.s_ge_one},
                       {"size_equation", s.eq_nu},
                       {"envelope_bound", s.eq_alpha},
                       {"bsl_envelope", s.bsl_envelope}}},
                     {"counterexample", s.counterexample ? json(*s.counterexample) : json(nullptr)}});
  }
  j["trace"] = trace;
  j["stopped_after"] = cert.stopped_after ? json(*cert.stopped_after) : json(nullptr);
  return dump(j);
}

TilingCertificate parse_certificate(const std::string& text, const GroupOracle& group) {
  const json j = parse_json(text);
  try {
    if (j.value("kind", std::string{}) != "tiling_certificate") throw ParseError("not a tiling certificate");
    TilingCertificate c;
    c.group = j.at("group").get<std::string>();
    c.chain = j.at("chain").get<std::string>();
    c.quotient = j.at("quotient").get<std::string>();
    c.quotient_level = j.at("quotient_level").get<std::size_t>();
    c.omega_size = j.at("omega_size").get<std::size_t>();
    c.k = parse_element_list(group, j.at("k"));
    c.epsilon = fraction_from(j.at("epsilon"));
    c.delta = fraction_from(j.at("delta"));
    c.zeta = fraction_from(j.at("zeta"));
    c.t = j.at("t").get<std::size_t>();
    c.params_override = j.at("params_override").get<bool>();
    for (const auto& lvl : j.at("tower"))
      c.tower.push_back({lvl.at("shape").get<std::string>(), lvl.at("radius").get<std::size_t>(),
                         parse_element_list(group, lvl.at("elements"))});
    for (const auto& p : j.at("placements"))
      c.placements.push_back({p.at("level").get<std::size_t>(), group.parse_element(p.at("center").get<std::string>()),
                              parse_element_list(group, p.at("tile"))});
    c.remainder = parse_element_list(group, j.at("remainder"));
    c.transversal = parse_element_list(group, j.at("transversal"));
    c.defect = fraction_from(j.at("defect"));
    c.defect_below_epsilon = j.at("defect_below_epsilon").get<bool>();
    if (!j.at("stopped_after").is_null()) c.stopped_after = j.at("stopped_after").get<std::size_t>();
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad tiling certificate: ") + e.what());
  }
}

std::string probe_report_json(const AlgebraProbeReport& r, const GroupOracle& group) {
  json j;
  j["kind"] = "algebra_tiling_probe";
  j["experimental"] = true;
  j["note"] = "per-step outcomes are empirical data; no general statement is asserted";
  j["group"] = r.group;
  j["p"] = r.p;
  json basis = json::array();
  for (const auto& b : r.k_basis) basis.push_back(format_ring_element(group, b));
  j["k_basis"] = basis;
  j["adjoined_unit"] = r.adjoined_unit;
  j["epsilon"] = fraction_json(r.epsilon);
  j["delta"] = fraction_json(r.delta);
  j["zeta"] = fraction_json(r.zeta);
  j["t"] = r.t;
  j["params_override"] = r.params_override;
  json tower = json::array();
  for (const auto& [shape, dim] : r.tower) tower.push_back({{"shape", shape}, {"dim", dim}});
  j["tower"] = tower;
  j["chain"] = r.chain;
  j["quotient"] = r.quotient;
  j["quotient_level"] = r.quotient_level;
  j["omega_dim"] = r.omega_dim;
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"level", s.level},
                     {"dim_k", s.dim_k},
                     {"s", s.s},
                     {"dim_b", s.dim_b},
                     {"dim_bs", s.dim_bs},
                     {"nu", fraction_json(s.nu)},
                     {"alpha", fraction_json(s.alpha)},
                     {"mu", fraction_json(s.mu)},
                     {"nu_prime", fraction_json(s.nu_prime)},
                     {"alpha_prime", fraction_json(s.alpha_prime)},
                     {"hypotheses",
                      {{"injective", s.hyp_injective},
                       {"dim_kl", s.dim_kl},
                       {"kl_bound", s.hyp_kl},
                       {"dim_bk", s.dim_bk},
                       {"bk_bound", s.hyp_bk},
                       {"dim_bl", s.dim_bl},
                       {"bl_bound", s.hyp_bl}}},
                     {"assertions",
                      {{"mu_ge_delta", s.mu_ge_delta},
                       {"s_ge_one", s.s_ge_one},
                       {"overlap_bound", s.overlap_bound},
                       {"dim_equation", s.dim_equation},
                       {"envelope_bound", s.envelope_bound},
                       {"dim_bsl", s.dim_bsl},
                       {"maximality", s.maximality}}},
                     {"counterexample", s.counterexample ? json(*s.counterexample) : json(nullptr)}});
  }
  j["steps"] = steps;
  j["stopped_after"] = r.stopped_after ? json(*r.stopped_after) : json(nullptr);
  j["complement"] = {{"dim", r.complement_dim},
                     {"projects_bijectively", r.complement_is_transversal},
                     {"defect", fraction_json(r.defect)},
                     {"defect_below_epsilon", r.defect_below_epsilon}};
  return dump(j);
}

}  // namespace gradedgrowth
