#include "gradedgrowth/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

using nlohmann::json;

std::vector<Word> Presentation::relator_words() const {
  const Alphabet a = alphabet();
  std::vector<Word> out;
  for (const auto& r : relators) out.push_back(a.parse(r));
  return out;
}

Presentation Presentation::from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Presentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    p.relators = j.value("relators", std::vector<std::string>{});
    (void)p.relator_words();
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad presentation: ") + e.what());
  }
}

Presentation Presentation::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open presentation file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string Presentation::to_json() const {
  return json{{"generators", generators}, {"relators", relators}}.dump();
}

std::string to_string(CompletionStatus status) {
  return status == CompletionStatus::complete ? "complete" : "incomplete";
}

bool shortlex_less(const Word& a, const Word& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                                 CompletionStatus status)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), status_(status) {
  by_last_symbol_.resize(alphabet_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (r.lhs.empty() || !shortlex_less(r.rhs, r.lhs))
      throw ContractError("rewrite rule does not decrease shortlex order");
    by_last_symbol_.at(r.lhs.back()).push_back(i);
  }
}

namespace {

// Stack-based rewriting: the output is kept irreducible; after each push we
// look for a rule whose lhs is a suffix and, if found, replace it.
template <typename Usable>
Word rewrite(const Word& w, const std::vector<RewriteRule>& rules,
             const std::vector<std::vector<std::size_t>>& rules_ending_in, Usable&& usable) {
  Word out;
  std::vector<std::size_t> input(w.rbegin(), w.rend());
  while (!input.empty()) {
    const std::size_t s = input.back();
    input.pop_back();
    out.push_back(s);
    for (std::size_t ri : rules_ending_in[s]) {
      if (!usable(ri)) continue;
      const RewriteRule& r = rules[ri];
      if (r.lhs.size() > out.size()) continue;
      if (!std::equal(r.lhs.begin(), r.lhs.end(), out.end() - static_cast<std::ptrdiff_t>(r.lhs.size())))
        continue;
      out.resize(out.size() - r.lhs.size());
      for (auto it = r.rhs.rbegin(); it != r.rhs.rend(); ++it) input.push_back(*it);
      break;
    }
  }
  return out;
}

}  // namespace

Word RewritingSystem::reduce(const Word& w) const {
  return rewrite(w, rules_, by_last_symbol_, [](std::size_t) { return true; });
}

bool RewritingSystem::is_irreducible(const Word& w) const {
  for (std::size_t end = 1; end <= w.size(); ++end) {
    for (std::size_t ri : by_last_symbol_[w[end - 1]]) {
      const auto& lhs = rules_[ri].lhs;
      if (lhs.size() <= end &&
          std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(end - lhs.size())))
        return false;
    }
  }
  return true;
}

namespace {

bool contains_factor(const Word& haystack, const Word& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

struct Overlap {
  Word word;
  Word left;
  Word right;
};

// All ways of rewriting a word with rule a and rule b at overlapping positions.
std::vector<Overlap> overlaps(const RewriteRule& a, const RewriteRule& b) {
  std::vector<Overlap> out;
  const std::size_t la = a.lhs.size();
  const std::size_t lb = b.lhs.size();
  // suffix of a.lhs == prefix of b.lhs
  for (std::size_t o = 1; o < std::min(la, lb); ++o) {
    if (std::equal(a.lhs.end() - static_cast<std::ptrdiff_t>(o), a.lhs.end(), b.lhs.begin())) {
      Overlap ov;
      ov.word = concat(a.lhs, slice(b.lhs, o, lb));
      ov.left = concat(a.rhs, slice(b.lhs, o, lb));
      ov.right = concat(slice(a.lhs, 0, la - o), b.rhs);
      out.push_back(std::move(ov));
    }
  }
  // b.lhs a factor of a.lhs
  if (lb <= la) {
    for (std::size_t start = 0; start + lb <= la; ++start) {
      if (&a == &b && start == 0) continue;
      if (std::equal(b.lhs.begin(), b.lhs.end(), a.lhs.begin() + static_cast<std::ptrdiff_t>(start))) {
        Overlap ov;
        ov.word = a.lhs;
        ov.left = a.rhs;
        ov.right = concat(concat(slice(a.lhs, 0, start), b.rhs), slice(a.lhs, start + lb, la));
        out.push_back(std::move(ov));
      }
    }
  }
  return out;
}

class Completion {
 public:
  Completion(const Alphabet& alphabet, const KnuthBendixOptions& options)
      : alphabet_(alphabet), options_(options), by_last_(alphabet.size()) {}

  Word reduce(const Word& w) const {
    return rewrite(w, rules_, by_last_, [this](std::size_t i) { return active_[i] != 0; });
  }

  void push(Word u, Word v) { pending_.emplace_back(std::move(u), std::move(v)); }

  RewritingSystem run() {
    while (!pending_.empty()) {
      auto [u, v] = std::move(pending_.front());
      pending_.pop_front();
      u = reduce(u);
      v = reduce(v);
      if (u == v) continue;
      if (shortlex_less(u, v)) std::swap(u, v);
      if (u.size() > options_.max_lhs_length) {
        incomplete_ = true;
        continue;
      }
      add_rule({std::move(u), std::move(v)});
      if (active_count_ > options_.max_rules) {
        incomplete_ = true;
        break;
      }
    }
    std::vector<RewriteRule> final_rules;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (active_[i]) final_rules.push_back({rules_[i].lhs, reduce(rules_[i].rhs)});
    std::sort(final_rules.begin(), final_rules.end(),
              [](const RewriteRule& a, const RewriteRule& b) { return shortlex_less(a.lhs, b.lhs); });
    return RewritingSystem(alphabet_, std::move(final_rules),
                           incomplete_ ? CompletionStatus::incomplete : CompletionStatus::complete);
  }

 private:
  void add_rule(RewriteRule rule) {
    const std::size_t id = rules_.size();
    // Interreduce: older rules whose lhs contains the new lhs are retired and
    // re-queued as equations; right-hand sides are re-normalised lazily.
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (!active_[i]) continue;
      if (contains_factor(rules_[i].lhs, rule.lhs)) {
        active_[i] = 0;
        --active_count_;
        push(rules_[i].lhs, rules_[i].rhs);
      }
    }
    by_last_[rule.lhs.back()].push_back(id);
    rules_.push_back(std::move(rule));
    active_.push_back(1);
    ++active_count_;
    for (std::size_t i = 0; i <= id; ++i) {
      if (!active_[i]) continue;
      for (auto& ov : overlaps(rules_[id], rules_[i])) push(std::move(ov.left), std::move(ov.right));
      if (i != id)
        for (auto& ov : overlaps(rules_[i], rules_[id])) push(std::move(ov.left), std::move(ov.right));
    }
  }

  const Alphabet& alphabet_;
  KnuthBendixOptions options_;
  std::vector<RewriteRule> rules_;
  std::vector<char> active_;
  std::size_t active_count_ = 0;
  std::vector<std::vector<std::size_t>> by_last_;
  std::deque<std::pair<Word, Word>> pending_;
  bool incomplete_ = false;
};

}  // namespace

RewritingSystem knuth_bendix(const Alphabet& alphabet, const std::vector<Word>& relators,
                             const KnuthBendixOptions& options) {
  if (options.max_rules == 0 || options.max_lhs_length == 0)
    throw ContractError("Knuth-Bendix budgets must be positive");
  Completion completion(alphabet, options);
  for (std::size_t s = 0; s < alphabet.size(); ++s) completion.push({s, alphabet.inverse(s)}, {});
  for (const auto& r : relators) {
    for (std::size_t s : r)
      if (s >= alphabet.size()) throw ParseError("relator uses a symbol outside the alphabet");
    completion.push(r, {});
  }
  return completion.run();
}

RewritingSystem knuth_bendix(const Presentation& presentation, const KnuthBendixOptions& options) {
  return knuth_bendix(presentation.alphabet(), presentation.relator_words(), options);
}

ConfluenceReport confluence_check(const RewritingSystem& system, std::size_t max_len) {
  ConfluenceReport report;
  const auto& rules = system.rules();
  auto check = [&](Word overlap, const Word& left, const Word& right) {
    Word l = system.reduce(left);
    Word r = system.reduce(right);
    if (l != r) {
      report.confluent = false;
      report.unresolved.push_back({std::move(overlap), std::move(l), std::move(r)});
    }
  };
  for (const auto& a : rules)
    for (const auto& b : rules)
      for (auto& ov : overlaps(a, b))
        if (ov.word.size() <= max_len) check(ov.word, ov.left, ov.right);
  const Alphabet& alphabet = system.alphabet();
  for (std::size_t s = 0; s < alphabet.size(); ++s) check({s, alphabet.inverse(s)}, {s, alphabet.inverse(s)}, {});
  return report;
}

NormalFormCount count_normal_forms(const RewritingSystem& system, std::size_t max_len) {
  NormalFormCount count;
  std::vector<Word> layer{Word{}};
  count.by_length.push_back(1);
  count.total = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (std::size_t s = 0; s < system.alphabet().size(); ++s) {
        Word candidate = w;
        candidate.push_back(s);
        // w is irreducible, so only suffixes can match.
        if (system.is_irreducible(candidate)) next.push_back(std::move(candidate));
      }
    }
    count.by_length.push_back(next.size());
    count.total += next.size();
    if (next.empty()) {
      count.finite = true;
      break;
    }
    layer = std::move(next);
  }
  return count;
}

namespace {

class RewritingGroup final : public GroupOracle {
 public:
  RewritingGroup(std::string name, std::shared_ptr<const RewritingSystem> system, Alphabet alphabet,
                 std::vector<std::size_t> to_system, std::vector<Word> expansion)
      : GroupOracle(std::move(alphabet)),
        name_(std::move(name)),
        system_(std::move(system)),
        to_system_(std::move(to_system)),
        expansion_(std::move(expansion)) {}

  GroupKind kind() const override { return GroupKind::rewriting_backed; }
  std::string name() const override { return name_; }
  Element identity() const override { return {}; }
  Element multiply(const Element& g, std::size_t s) const override {
    Word w(g.begin(), g.end());
    w.push_back(to_system_.at(s));
    return to_element(system_->reduce(w));
  }
  Element product(const Element& g, const Element& h) const override {
    Word w(g.begin(), g.end());
    w.insert(w.end(), h.begin(), h.end());
    return to_element(system_->reduce(w));
  }
  Element inverse(const Element& g) const override {
    Word w(g.begin(), g.end());
    return to_element(system_->reduce(system_->alphabet().inverse(w)));
  }
  Word word_of(const Element& g) const override {
    Word out;
    for (std::int64_t s : g) {
      const Word& e = expansion_.at(static_cast<std::size_t>(s));
      out.insert(out.end(), e.begin(), e.end());
    }
    return out;
  }
  std::string format(const Element& g) const override {
    return system_->alphabet().format(Word(g.begin(), g.end()));
  }
  Element parse_element(const std::string& text) const override {
    return to_element(system_->reduce(system_->alphabet().parse(text)));
  }

 private:
  static Element to_element(const Word& w) { return Element(w.begin(), w.end()); }

  std::string name_;
  std::shared_ptr<const RewritingSystem> system_;
  std::vector<std::size_t> to_system_;  // oracle symbol -> system symbol
  std::vector<Word> expansion_;         // system symbol -> oracle word
};

}  // namespace

GroupPtr make_rewriting_group(std::string name, std::shared_ptr<const RewritingSystem> system,
                              const std::vector<std::string>& generators,
                              const std::vector<std::pair<std::string, std::string>>& definitions) {
  if (!system->is_complete())
    throw ContractError("rewriting-backed groups need a complete rewriting system");
  const Alphabet& full = system->alphabet();
  if (generators.empty()) {
    std::vector<std::size_t> identity_map(full.size());
    std::vector<Word> expansion(full.size());
    for (std::size_t i = 0; i < full.size(); ++i) {
      identity_map[i] = i;
      expansion[i] = {i};
    }
    return std::make_shared<RewritingGroup>(std::move(name), std::move(system), full,
                                            std::move(identity_map), std::move(expansion));
  }
  Alphabet alphabet;
  std::vector<std::size_t> to_system;
  for (const auto& g : generators) {
    const std::size_t s = full.find(g);
    const std::size_t inv = full.inverse(s);
    alphabet.add_generator(full.symbol(s), full.symbol(inv), inv == s);
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i) to_system.push_back(full.find(alphabet.symbol(i)));
  std::vector<std::optional<Word>> expansion(full.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) expansion[to_system[i]] = Word{i};
  for (const auto& [symbol, word] : definitions) {
    const std::size_t s = full.find(symbol);
    const Word w = alphabet.parse(word);
    if (system->reduce(full.parse(word)) != system->reduce({s}))
      throw ContractError("definition " + symbol + " = " + word + " does not hold in the group");
    expansion[s] = w;
    expansion[full.inverse(s)] = alphabet.inverse(w);
  }
  std::vector<Word> resolved;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (!expansion[i]) throw ContractError("symbol '" + full.symbol(i) + "' has no definition over the generators");
    resolved.push_back(*expansion[i]);
  }
  return std::make_shared<RewritingGroup>(std::move(name), std::move(system), std::move(alphabet),
                                          std::move(to_system), std::move(resolved));
}

RewritingSystem triangle_system(int k) {
  if (k < 2) throw ContractError("triangle group needs k >= 2");
  // Shortlex completion over {x,y} alone is infinite for these groups; the
  // helper generator z = xy gives a finite complete system.
  Presentation p;
  p.generators = {"x", "y", "z"};
  p.relators = {"x^3", "y^3", "z^" + std::to_string(k), "xyZ"};
  return knuth_bendix(p);
}

GroupPtr make_triangle_group(int k) {
  auto system = std::make_shared<const RewritingSystem>(triangle_system(k));
  if (!system->is_complete())
    throw ResourceError("Knuth-Bendix did not complete T(3,3," + std::to_string(k) + ")");
  return make_rewriting_group("T(3,3," + std::to_string(k) + ")", system, {"x", "y"}, {{"z", "xy"}});
}

}  // namespace gradedgrowth
