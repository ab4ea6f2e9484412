#include "gradedgrowth/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

std::shared_ptr<FiniteGroup> FiniteGroup::generate(std::string name, Element identity,
                                                   std::vector<Generator> generators, Op op,
                                                   Label label, std::uint64_t order_cap,
                                                   std::uint64_t full_table_cap) {
  if (generators.empty()) throw ContractError("finite group needs at least one generator");

  // Symbol values: each generator followed by its inverse unless involutive.
  Alphabet alphabet;
  std::vector<Element> symbol_values;
  for (const auto& gen : generators) {
    Element power = gen.value;
    Element previous = identity;
    std::uint64_t order = 1;
    while (power != identity) {
      previous = power;
      power = op(power, gen.value);
      if (++order > order_cap) throw ResourceError("generator order exceeds cap in " + name);
    }
    const bool involution = order <= 2;
    std::string upper = gen.symbol;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    alphabet.add_generator(gen.symbol, upper, involution);
    symbol_values.push_back(gen.value);
    if (!involution) symbol_values.push_back(previous);  // g^(order-1) = g^-1
  }

  std::shared_ptr<FiniteGroup> group(new FiniteGroup(std::move(name), alphabet));
  group->label_ = std::move(label);
  const std::size_t k = symbol_values.size();
  group->symbols_ = k;

  std::unordered_map<Element, std::uint32_t, ElementHash> index;
  index.emplace(identity, 0);
  group->concrete_.push_back(identity);
  group->parent_.push_back(0);
  group->parent_symbol_.push_back(0);
  for (std::size_t head = 0; head < group->concrete_.size(); ++head) {
    for (std::size_t s = 0; s < k; ++s) {
      Element next = op(group->concrete_[head], symbol_values[s]);
      auto [it, inserted] = index.emplace(next, static_cast<std::uint32_t>(group->concrete_.size()));
      if (inserted) {
        if (group->concrete_.size() >= order_cap)
          throw ResourceError("group " + group->name_ + " exceeds the order cap " +
                              std::to_string(order_cap));
        group->concrete_.push_back(std::move(next));
        group->parent_.push_back(static_cast<std::uint32_t>(head));
        group->parent_symbol_.push_back(static_cast<std::uint32_t>(s));
      }
      group->right_.push_back(it->second);
    }
  }
  const std::size_t n = group->concrete_.size();
  group->left_.resize(n * k);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t s = 0; s < k; ++s)
      group->left_[g * k + s] = index.at(op(symbol_values[s], group->concrete_[g]));

  if (n <= full_table_cap) {
    group->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        group->table_[a * n + b] = index.at(op(group->concrete_[a], group->concrete_[b]));
  }
  group->inverse_.resize(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    Word w = group->word_of({g});
    std::uint32_t x = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = group->right_gen(x, alphabet.inverse(*it));
    group->inverse_[g] = x;
  }
  return group;
}

std::shared_ptr<FiniteGroup> FiniteGroup::from_table(
    std::string name, const std::vector<std::vector<std::uint32_t>>& table,
    const std::vector<std::pair<std::string, std::uint32_t>>& generators) {
  const std::size_t n = table.size();
  if (n == 0) throw ParseError("empty Cayley table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw ParseError("Cayley table is not square");
    if (table[0][a] != a || table[a][0] != a) throw ParseError("index 0 is not the identity");
    for (auto v : table[a])
      if (v >= n) throw ParseError("Cayley table entry out of range");
  }
  std::vector<Generator> gens;
  for (const auto& [symbol, idx] : generators) {
    if (idx >= n) throw ParseError("generator index out of range");
    gens.push_back({symbol, {static_cast<std::int64_t>(idx)}});
  }
  auto op = [table](const Element& a, const Element& b) -> Element {
    return {static_cast<std::int64_t>(table[a[0]][b[0]])};
  };
  auto label = [](const Element& e) { return "#" + std::to_string(e[0]); };
  auto group = generate(std::move(name), {0}, std::move(gens), op, label, n + 1);
  if (group->size() != n) throw ParseError("generators do not generate the whole table");
  return group;
}

Element FiniteGroup::multiply(const Element& g, std::size_t s) const {
  return {static_cast<std::int64_t>(right_gen(static_cast<std::uint32_t>(g.at(0)), s))};
}

Word FiniteGroup::word_of(const Element& g) const {
  Word w;
  auto x = static_cast<std::uint32_t>(g.at(0));
  while (x != 0) {
    w.push_back(parent_symbol_[x]);
    x = parent_[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size() + b];
  std::uint32_t x = a;
  for (std::size_t s : word_of({b})) x = right_gen(x, s);
  return x;
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t x = 0;
  for (std::uint64_t i = 0; i < e; ++i) x = mul(x, a);
  return x;
}

std::uint32_t FiniteGroup::commutator(std::uint32_t a, std::uint32_t b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Element FiniteGroup::product(const Element& g, const Element& h) const {
  return {static_cast<std::int64_t>(
      mul(static_cast<std::uint32_t>(g.at(0)), static_cast<std::uint32_t>(h.at(0))))};
}

Element FiniteGroup::inverse(const Element& g) const {
  return {static_cast<std::int64_t>(inv(static_cast<std::uint32_t>(g.at(0))))};
}

std::string FiniteGroup::label(std::uint32_t i) const {
  return label_ ? label_(concrete_.at(i)) : "#" + std::to_string(i);
}

std::string FiniteGroup::format(const Element& g) const {
  return alphabet().format(word_of(g));
}

Element FiniteGroup::parse_element(const std::string& text) const {
  if (!text.empty() && text[0] == '#') {
    const auto i = std::stoull(text.substr(1));
    if (i >= size()) throw ParseError("element index out of range: " + text);
    return {static_cast<std::int64_t>(i)};
  }
  return normalize(text);
}

std::vector<std::uint32_t> FiniteGroup::generator_elements() const {
  std::vector<std::uint32_t> out;
  for (std::size_t s : alphabet().generators()) out.push_back(symbol_element(s));
  return out;
}

std::vector<std::uint32_t> FiniteGroup::subgroup(const std::vector<std::uint32_t>& gens) const {
  std::vector<char> seen(size(), 0);
  std::vector<std::uint32_t> members{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::uint32_t g : gens) {
      const std::uint32_t x = mul(members[head], g);
      if (!seen[x]) {
        seen[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::string tuple_label(const Element& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

}  // namespace

FiniteGroupPtr make_cyclic(std::uint64_t n) { return make_abelian({n}); }

FiniteGroupPtr make_abelian(const std::vector<std::uint64_t>& orders) {
  static const std::vector<std::string> names = {"g", "h", "k", "m", "n"};
  if (orders.empty() || orders.size() > names.size())
    throw ContractError("abelian group needs 1..5 cyclic factors");
  std::string name;
  std::vector<FiniteGroup::Generator> gens;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 2) throw ContractError("cyclic factor order must be at least 2");
    name += (i ? "x" : "") + ("C" + std::to_string(orders[i]));
    Element e(orders.size(), 0);
    e[i] = 1;
    gens.push_back({names[i], e});
  }
  auto op = [orders](const Element& a, const Element& b) {
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      c[i] = mod(a[i] + b[i], static_cast<std::int64_t>(orders[i]));
    return c;
  };
  std::uint64_t order = 1;
  for (auto o : orders) order *= o;
  return FiniteGroup::generate(name, Element(orders.size(), 0), gens, op, tuple_label, order + 1);
}

FiniteGroupPtr make_dihedral(std::uint64_t n) {
  if (n < 2) throw ContractError("dihedral group needs n >= 2");
  const auto nn = static_cast<std::int64_t>(n);
  // (r, f) stands for rot^r ref^f.
  auto op = [nn](const Element& a, const Element& b) -> Element {
    const std::int64_t r = a[1] ? a[0] - b[0] : a[0] + b[0];
    return {mod(r, nn), a[1] ^ b[1]};
  };
  auto label = [](const Element& e) {
    return "r^" + std::to_string(e[0]) + (e[1] ? "s" : "");
  };
  return FiniteGroup::generate("D" + std::to_string(n), {0, 0}, {{"r", {1, 0}}, {"s", {0, 1}}}, op,
                               label, 2 * n + 1);
}

FiniteGroupPtr make_quaternion() {
  // Integer quaternions (a, b, c, d) = a + bi + cj + dk.
  auto op = [](const Element& p, const Element& q) -> Element {
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
  };
  auto label = [](const Element& e) {
    static const char* units[] = {"1", "i", "j", "k"};
    for (int u = 0; u < 4; ++u)
      if (e[u] != 0) return std::string(e[u] < 0 ? "-" : "") + units[u];
    return std::string("0");
  };
  return FiniteGroup::generate("Q8", {1, 0, 0, 0}, {{"i", {0, 1, 0, 0}}, {"j", {0, 0, 1, 0}}}, op,
                               label, 9);
}

FiniteGroupPtr make_heisenberg_mod(std::uint64_t modulus, std::uint64_t order_cap) {
  if (modulus < 2) throw ContractError("Heisenberg modulus must be at least 2");
  const auto m = static_cast<std::int64_t>(modulus);
  auto op = [m](const Element& a, const Element& b) -> Element {
    Element c = heisenberg_product(a, b);
    for (auto& v : c) v = mod(v, m);
    return c;
  };
  const std::uint64_t order = modulus * modulus * modulus;
  if (order > order_cap) throw ResourceError("Heisenberg quotient order exceeds the cap");
  return FiniteGroup::generate("Heis(Z/" + std::to_string(modulus) + ")", {0, 0, 0},
                               {{"x", {1, 0, 0}}, {"y", {0, 1, 0}}}, op, tuple_label, order + 1);
}

}  // namespace gradedgrowth
