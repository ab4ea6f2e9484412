#include "gradedgrowth/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::free: return "free";
    case GroupKind::free_abelian: return "free_abelian";
    case GroupKind::heisenberg: return "heisenberg";
    case GroupKind::lamplighter: return "lamplighter";
    case GroupKind::finite_cayley_table: return "finite_cayley_table";
    case GroupKind::rewriting_backed: return "rewriting_backed";
  }
  return "unknown";
}

Element GroupOracle::normalize(const Word& w) const {
  Element g = identity();
  for (std::size_t s : w) {
    if (s >= alphabet_.size()) throw ParseError("generator index out of range");
    g = multiply(g, s);
  }
  return g;
}

Element GroupOracle::product(const Element& g, const Element& h) const {
  Element out = g;
  for (std::size_t s : word_of(h)) out = multiply(out, s);
  return out;
}

Element GroupOracle::inverse(const Element& g) const {
  return normalize(alphabet_.inverse(word_of(g)));
}

std::string GroupOracle::format(const Element& g) const { return alphabet_.format(word_of(g)); }

Element GroupOracle::parse_element(const std::string& text) const { return normalize(text); }

ElementSet right_translate(const GroupOracle& group, const ElementSet& set, const ElementSet& by) {
  ElementSet out;
  for (const auto& f : set)
    for (const auto& s : by) out.insert(group.product(f, s));
  return out;
}

namespace {

std::vector<std::string> generator_names(std::size_t n) {
  static const std::vector<std::string> small = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= small.size() ? small[i] : "x" + std::to_string(i + 1));
  return names;
}

std::string format_tuple(const Element& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g[i]);
  }
  return out + ")";
}

Element parse_tuple(const std::string& text, std::size_t expected) {
  std::string inner = text;
  inner.erase(std::remove_if(inner.begin(), inner.end(), [](char c) { return c == ' '; }),
              inner.end());
  if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
    throw ParseError("bad tuple '" + text + "'");
  inner = inner.substr(1, inner.size() - 2);
  Element out;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ParseError("bad tuple entry '" + item + "'");
    }
  }
  if (out.size() != expected)
    throw ParseError("tuple '" + text + "' has wrong arity, expected " + std::to_string(expected));
  return out;
}

class FreeGroup final : public GroupOracle {
 public:
  explicit FreeGroup(std::size_t rank)
      : GroupOracle(Alphabet::letters(generator_names(rank))), rank_(rank) {}

  GroupKind kind() const override { return GroupKind::free; }
  std::string name() const override { return "F" + std::to_string(rank_); }
  Element identity() const override { return {}; }

  Element multiply(const Element& g, std::size_t s) const override {
    Element out = g;
    const auto si = static_cast<std::int64_t>(s);
    if (!out.empty() && static_cast<std::size_t>(out.back()) == alphabet().inverse(s))
      out.pop_back();
    else
      out.push_back(si);
    return out;
  }

  Word word_of(const Element& g) const override { return Word(g.begin(), g.end()); }

 private:
  std::size_t rank_;
};

class FreeAbelianGroup final : public GroupOracle {
 public:
  explicit FreeAbelianGroup(std::size_t dim)
      : GroupOracle(Alphabet::letters(generator_names(dim))), dim_(dim) {}

  GroupKind kind() const override { return GroupKind::free_abelian; }
  std::string name() const override { return dim_ == 1 ? "Z" : "Z" + std::to_string(dim_); }
  Element identity() const override { return Element(dim_, 0); }

  Element multiply(const Element& g, std::size_t s) const override {
    Element out = g;
    out[s / 2] += (s % 2 == 0) ? 1 : -1;
    return out;
  }

  Element product(const Element& g, const Element& h) const override {
    Element out = g;
    for (std::size_t i = 0; i < dim_; ++i) out[i] += h[i];
    return out;
  }

  Element inverse(const Element& g) const override {
    Element out = g;
    for (auto& v : out) v = -v;
    return out;
  }

  Word word_of(const Element& g) const override {
    Word w;
    for (std::size_t i = 0; i < dim_; ++i) {
      const std::size_t s = g[i] >= 0 ? 2 * i : 2 * i + 1;
      for (std::int64_t k = 0; k < (g[i] >= 0 ? g[i] : -g[i]); ++k) w.push_back(s);
    }
    return w;
  }

  std::string format(const Element& g) const override { return format_tuple(g); }
  Element parse_element(const std::string& text) const override {
    if (!text.empty() && text.front() == '(') return parse_tuple(text, dim_);
    if (dim_ == 1) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size()) return {v};
      } catch (const std::exception&) {
      }
    }
    return normalize(text);
  }

 private:
  std::size_t dim_;
};

class HeisenbergGroup final : public GroupOracle {
 public:
  HeisenbergGroup() : GroupOracle(Alphabet::letters({"x", "y"})) {}

  GroupKind kind() const override { return GroupKind::heisenberg; }
  std::string name() const override { return "Heisenberg"; }
  Element identity() const override { return {0, 0, 0}; }

  Element multiply(const Element& g, std::size_t s) const override {
    static const Element gens[4] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
    return heisenberg_product(g, gens[s]);
  }
  Element product(const Element& g, const Element& h) const override {
    return heisenberg_product(g, h);
  }
  Element inverse(const Element& g) const override {
    return {-g[0], -g[1], g[0] * g[1] - g[2]};
  }

  // x^a y^b [x^-1,y^-1]^m with the central commutator z = xyXY = (0,0,1).
  Word word_of(const Element& g) const override {
    Word w;
    auto repeat = [&w](std::size_t s, std::int64_t n) {
      for (std::int64_t i = 0; i < n; ++i) w.push_back(s);
    };
    repeat(g[0] >= 0 ? 0 : 1, g[0] >= 0 ? g[0] : -g[0]);
    repeat(g[1] >= 0 ? 2 : 3, g[1] >= 0 ? g[1] : -g[1]);
    const std::int64_t m = g[2] - g[0] * g[1];
    const Word z = m >= 0 ? Word{0, 2, 1, 3} : Word{2, 0, 3, 1};
    for (std::int64_t i = 0; i < (m >= 0 ? m : -m); ++i) w.insert(w.end(), z.begin(), z.end());
    return w;
  }

  std::string format(const Element& g) const override { return format_tuple(g); }
  Element parse_element(const std::string& text) const override {
    if (!text.empty() && text.front() == '(') return parse_tuple(text, 3);
    return normalize(text);
  }
};

class LamplighterGroup final : public GroupOracle {
 public:
  LamplighterGroup() : GroupOracle(make_alphabet()) {}

  GroupKind kind() const override { return GroupKind::lamplighter; }
  std::string name() const override { return "Lamplighter"; }
  Element identity() const override { return {0}; }

  Element multiply(const Element& g, std::size_t s) const override {
    Element out = g;
    if (s == 0) {
      ++out[0];
    } else if (s == 1) {
      --out[0];
    } else {
      const std::int64_t pos = out[0];
      auto it = std::lower_bound(out.begin() + 1, out.end(), pos);
      if (it != out.end() && *it == pos)
        out.erase(it);
      else
        out.insert(it, pos);
    }
    return out;
  }

  Word word_of(const Element& g) const override {
    Word w;
    std::int64_t pos = 0;
    auto walk = [&](std::int64_t target) {
      while (pos < target) { w.push_back(0); ++pos; }
      while (pos > target) { w.push_back(1); --pos; }
    };
    for (std::size_t i = 1; i < g.size(); ++i) {
      walk(g[i]);
      w.push_back(2);
    }
    walk(g[0]);
    return w;
  }

  std::string format(const Element& g) const override {
    std::string out = "{";
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (i > 1) out += ",";
      out += std::to_string(g[i]);
    }
    return out + "}@" + std::to_string(g[0]);
  }

  Element parse_element(const std::string& text) const override {
    if (text.empty() || text.front() != '{') return normalize(text);
    const auto close = text.find("}@");
    if (close == std::string::npos) throw ParseError("expected '{lamps}@position', got '" + text + "'");
    auto integer = [&](const std::string& s) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size()) throw ParseError("bad integer '" + s + "' in '" + text + "'");
      return static_cast<std::int64_t>(v);
    };
    Element g{integer(text.substr(close + 2))};
    std::set<std::int64_t> lamps;
    std::stringstream inner(text.substr(1, close - 1));
    for (std::string item; std::getline(inner, item, ',');)
      if (!lamps.insert(integer(item)).second) throw ParseError("repeated lamp in '" + text + "'");
    g.insert(g.end(), lamps.begin(), lamps.end());
    return g;
  }

 private:
  static Alphabet make_alphabet() {
    Alphabet a;
    a.add_generator("t", "T");
    a.add_generator("a", "", true);
    return a;
  }
};

}  // namespace

Element heisenberg_product(const Element& g, const Element& h) {
  return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]};
}

GroupPtr make_free_group(std::size_t rank) {
  if (rank == 0) throw ContractError("free group rank must be positive");
  return std::make_shared<FreeGroup>(rank);
}

GroupPtr make_free_abelian(std::size_t dim) {
  if (dim == 0) throw ContractError("free abelian rank must be positive");
  return std::make_shared<FreeAbelianGroup>(dim);
}

GroupPtr make_heisenberg() { return std::make_shared<HeisenbergGroup>(); }
GroupPtr make_lamplighter() { return std::make_shared<LamplighterGroup>(); }

}  // namespace gradedgrowth
