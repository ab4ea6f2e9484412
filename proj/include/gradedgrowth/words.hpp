#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gradedgrowth {

/// A word is a sequence of indices into an Alphabet.
using Word = std::vector<std::size_t>;

/// Generator symbols closed under formal inversion. Every symbol has a
/// partner (possibly itself, for involutions). Declaration order is
/// significant: it fixes BFS order and the shortlex precedence.
class Alphabet {
 public:
  Alphabet() = default;

  /// Adds a generator and, unless `involution`, its inverse symbol.
  /// Returns the index of the generator.
  std::size_t add_generator(const std::string& symbol, const std::string& inverse_symbol,
                            bool involution = false);

  /// Lower-case names with upper-case inverses: x,X,y,Y,...
  static Alphabet letters(const std::vector<std::string>& names);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  std::size_t inverse(std::size_t i) const { return inverse_.at(i); }
  bool is_involution(std::size_t i) const { return inverse_.at(i) == i; }
  /// Indices of the declared generators (not the added inverse symbols).
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  std::size_t find(const std::string& symbol) const;  // throws ParseError
  bool contains(const std::string& symbol) const noexcept;

  Word inverse(const Word& w) const;
  std::string format(const Word& w) const;
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  /// Parses words such as "xyXY", "x^3", "(xy)^4", "[x,y]" (= x^-1 y^-1 x y),
  /// "x^-1". "1", "e" (when not a symbol) and "" denote the empty word.
  /// Symbols are matched by maximal munch; whitespace and '*' are ignored.
  Word parse(const std::string& text) const;

  bool operator==(const Alphabet& other) const = default;

 private:
  std::vector<std::string> symbols_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
};

/// Freely reduces a word (cancels adjacent s s^-1).
Word free_reduce(const Alphabet& alphabet, const Word& w);

}  // namespace gradedgrowth
