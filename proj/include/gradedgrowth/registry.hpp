#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradedgrowth/finite_group.hpp"
#include "gradedgrowth/group.hpp"

namespace gradedgrowth {

struct RegistryEntry {
  std::string name;
  std::string kind;
  std::string description;
};

/// Named groups: built-ins plus user entries loaded from JSON files of the
/// form {"name": {"kind": "...", "params": {...}, "generators": [...]}, ...}.
///
/// Built-in names: z, z2, z3, f2, f3, heisenberg, lamplighter, t334, t335,
/// t336 and the finite groups c<n>, c<a>xc<b>[x...], d<n> (order 2n), q8,
/// s3, heis<m> (Heisenberg group over Z/m).
class GroupRegistry {
 public:
  GroupRegistry() = default;

  void load_file(const std::string& path);
  void load_json(const std::string& text);

  GroupPtr group(const std::string& name) const;
  /// Throws ContractError when `name` is not a finite group.
  FiniteGroupPtr finite_group(const std::string& name) const;
  std::vector<RegistryEntry> list() const;

 private:
  std::map<std::string, std::string> user_specs_;  // name -> JSON spec
};

/// Finite p-groups (and their primes) used by the Jennings cross-checks.
std::vector<std::pair<std::string, unsigned>> builtin_p_groups();
/// All built-in finite groups of small order.
std::vector<std::string> builtin_finite_groups();

}  // namespace gradedgrowth
