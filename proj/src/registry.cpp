#include "gradedgrowth/registry.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "gradedgrowth/error.hpp"
#include "gradedgrowth/rewriting.hpp"

namespace gradedgrowth {

using nlohmann::json;

namespace {

std::optional<FiniteGroupPtr> builtin_finite(const std::string& name) {
  static const std::regex cyclic_product(R"(c\d+(xc\d+)*)");
  static const std::regex dihedral(R"(d(\d+))");
  static const std::regex heis(R"(heis(\d+))");
  std::smatch m;
  if (std::regex_match(name, cyclic_product)) {
    std::vector<std::uint64_t> orders;
    std::stringstream ss(name);
    std::string part;
    while (std::getline(ss, part, 'x')) orders.push_back(std::stoull(part.substr(1)));
    return make_abelian(orders);
  }
  if (std::regex_match(name, m, dihedral)) return make_dihedral(std::stoull(m[1]));
  if (std::regex_match(name, m, heis)) return make_heisenberg_mod(std::stoull(m[1]));
  if (name == "q8") return make_quaternion();
  if (name == "s3") return make_dihedral(3);
  return std::nullopt;
}

GroupPtr builtin_infinite(const std::string& name) {
  static const std::regex zd(R"(z(\d*))");
  static const std::regex fk(R"(f(\d+))");
  static const std::regex tri(R"(t33(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, zd)) return make_free_abelian(m[1].length() ? std::stoull(m[1]) : 1);
  if (std::regex_match(name, m, fk)) return make_free_group(std::stoull(m[1]));
  if (std::regex_match(name, m, tri)) return make_triangle_group(std::stoi(m[1]));
  if (name == "heisenberg") return make_heisenberg();
  if (name == "lamplighter") return make_lamplighter();
  return nullptr;
}

GroupPtr from_spec(const std::string& name, const json& spec) {
  try {
    const std::string kind = spec.at("kind").get<std::string>();
    const json params = spec.value("params", json::object());
    if (kind == "free") return make_free_group(params.at("rank").get<std::size_t>());
    if (kind == "free_abelian") return make_free_abelian(params.at("dim").get<std::size_t>());
    if (kind == "heisenberg") return make_heisenberg();
    if (kind == "lamplighter") return make_lamplighter();
    if (kind == "rewriting_backed") {
      Presentation p;
      p.generators = spec.at("generators").get<std::vector<std::string>>();
      p.relators = params.at("relators").get<std::vector<std::string>>();
      KnuthBendixOptions opts;
      opts.max_rules = params.value("max_rules", opts.max_rules);
      opts.max_lhs_length = params.value("max_len", opts.max_lhs_length);
      auto system = std::make_shared<const RewritingSystem>(knuth_bendix(p, opts));
      if (!system->is_complete())
        throw ResourceError("Knuth-Bendix budget exhausted for registry group '" + name + "'");
      return make_rewriting_group(name, system);
    }
    if (kind == "finite_cayley_table") {
      const auto table = params.at("table").get<std::vector<std::vector<std::uint32_t>>>();
      const auto symbols = spec.at("generators").get<std::vector<std::string>>();
      const auto indices = params.at("generator_indices").get<std::vector<std::uint32_t>>();
      if (symbols.size() != indices.size())
        throw ParseError("generators and generator_indices differ in length");
      std::vector<std::pair<std::string, std::uint32_t>> gens;
      for (std::size_t i = 0; i < symbols.size(); ++i) gens.emplace_back(symbols[i], indices[i]);
      return FiniteGroup::from_table(name, table, gens);
    }
    if (kind == "builtin") return GroupRegistry().group(params.at("name").get<std::string>());
    throw ParseError("unknown group kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError("bad registry entry '" + name + "': " + e.what());
  }
}

}  // namespace

void GroupRegistry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open registry file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_json(ss.str());
}

void GroupRegistry::load_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad registry JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("registry must be a JSON object of named group specs");
  for (auto it = j.begin(); it != j.end(); ++it) {
    (void)from_spec(it.key(), it.value());  // validate eagerly
    user_specs_[it.key()] = it.value().dump();
  }
}

GroupPtr GroupRegistry::group(const std::string& name) const {
  if (auto it = user_specs_.find(name); it != user_specs_.end())
    return from_spec(name, json::parse(it->second));
  if (auto f = builtin_finite(name)) return *f;
  if (auto g = builtin_infinite(name)) return g;
  throw UsageError("unknown group '" + name + "' (see the 'groups' command)");
}

FiniteGroupPtr GroupRegistry::finite_group(const std::string& name) const {
  auto g = std::dynamic_pointer_cast<const FiniteGroup>(group(name));
  if (!g) throw ContractError("group '" + name + "' is not a finite group");
  return g;
}

std::vector<RegistryEntry> GroupRegistry::list() const {
  std::vector<RegistryEntry> out = {
      {"z", "free_abelian", "Z with generators +-1"},
      {"z2", "free_abelian", "Z^2 with generators +-e1, +-e2"},
      {"z3", "free_abelian", "Z^3"},
      {"f2", "free", "free group on x, y"},
      {"f3", "free", "free group on x, y, z"},
      {"heisenberg", "heisenberg", "integer Heisenberg group, generators x, y"},
      {"lamplighter", "lamplighter", "Z/2 wr Z, generators t, a"},
      {"t334", "rewriting_backed", "T(3,3,4) = <x,y | x^3, y^3, (xy)^4>"},
      {"t335", "rewriting_backed", "T(3,3,5)"},
      {"t336", "rewriting_backed", "T(3,3,6)"},
      {"c<n>", "finite_cayley_table", "cyclic group of order n (also c<a>xc<b>...)"},
      {"d<n>", "finite_cayley_table", "dihedral group of order 2n"},
      {"q8", "finite_cayley_table", "quaternion group"},
      {"s3", "finite_cayley_table", "symmetric group on 3 letters"},
      {"heis<m>", "finite_cayley_table", "Heisenberg group over Z/m, order m^3"},
  };
  for (const auto& [name, spec] : user_specs_)
    out.push_back({name, json::parse(spec).at("kind").get<std::string>(), "user registry entry"});
  return out;
}

std::vector<std::pair<std::string, unsigned>> builtin_p_groups() {
  return {{"c2", 2}, {"c4", 2}, {"c2xc2", 2}, {"c8", 2}, {"d4", 2}, {"q8", 2},
          {"c3", 3}, {"c9", 3}, {"c3xc3", 3}, {"heis3", 3}};
}

std::vector<std::string> builtin_finite_groups() {
  return {"c2", "c3", "c4", "c8", "c9", "c2xc2", "c3xc3", "d4", "q8", "s3", "heis3"};
}

}  // namespace gradedgrowth
