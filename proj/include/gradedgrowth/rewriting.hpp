#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedgrowth/group.hpp"
#include "gradedgrowth/words.hpp"

namespace gradedgrowth {

/// Finite presentation <generators | relators>; inverse symbols are the
/// upper-cased generator names.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> relators;

  Alphabet alphabet() const { return Alphabet::letters(generators); }
  std::vector<Word> relator_words() const;  // throws ParseError

  /// {"generators": [...], "relators": [...]}
  static Presentation from_json(const std::string& text);
  static Presentation load(const std::string& path);
  std::string to_json() const;
};

/// Shortlex order with precedence = alphabet index order.
bool shortlex_less(const Word& a, const Word& b) noexcept;

struct RewriteRule {
  Word lhs;
  Word rhs;
};

enum class CompletionStatus { complete, incomplete };

struct KnuthBendixOptions {
  std::size_t max_rules = 5000;
  std::size_t max_lhs_length = 20;
};

/// A string rewriting system whose rules strictly decrease shortlex order.
class RewritingSystem {
 public:
  RewritingSystem(Alphabet alphabet, std::vector<RewriteRule> rules, CompletionStatus status);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  CompletionStatus status() const noexcept { return status_; }
  bool is_complete() const noexcept { return status_ == CompletionStatus::complete; }

  /// Irreducible descendant of w; unique when the system is complete.
  Word reduce(const Word& w) const;
  bool is_irreducible(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  CompletionStatus status_;
  std::vector<std::vector<std::size_t>> by_last_symbol_;
};

/// Knuth-Bendix completion (FIFO critical pairs, shortlex). Free-reduction
/// rules s s^-1 -> e are added automatically. Exhausting a budget yields
/// an incomplete system instead of an error.
RewritingSystem knuth_bendix(const Alphabet& alphabet, const std::vector<Word>& relators,
                             const KnuthBendixOptions& options = {});
RewritingSystem knuth_bendix(const Presentation& presentation, const KnuthBendixOptions& options = {});

struct CriticalPair {
  Word overlap;
  Word left;   // normal forms of the two one-step rewrites
  Word right;
};

struct ConfluenceReport {
  bool confluent = true;
  std::vector<CriticalPair> unresolved;
};

/// Checks every rule overlap (overlap word length <= max_len) and the group
/// axioms s s^-1 = e for each symbol.
ConfluenceReport confluence_check(const RewritingSystem& system, std::size_t max_len);

struct NormalFormCount {
  std::vector<std::size_t> by_length;  // irreducible words of each length
  bool finite = false;                 // some length had no irreducible word
  std::size_t total = 0;
};

NormalFormCount count_normal_forms(const RewritingSystem& system, std::size_t max_len);

/// Group whose elements are the irreducible words of a complete rewriting
/// system. With `generators` non-empty, only those symbols (and their
/// inverses) generate the word metric; every other symbol needs a
/// definition as a word over them, e.g. {"z", "xy"}.
GroupPtr make_rewriting_group(std::string name, std::shared_ptr<const RewritingSystem> system,
                              const std::vector<std::string>& generators = {},
                              const std::vector<std::pair<std::string, std::string>>& definitions = {});

/// Completion of <x,y,z | x^3, y^3, z^k, xy = z>, a presentation of T(3,3,k).
RewritingSystem triangle_system(int k);
/// T(3,3,k) = <x,y | x^3, y^3, (xy)^k> with generating set {x,y}; normal
/// forms come from triangle_system(k).
GroupPtr make_triangle_group(int k);

std::string to_string(CompletionStatus status);

}  // namespace gradedgrowth
