#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gradedgrowth/words.hpp"

namespace gradedgrowth {

/// Canonical normal form of a group element. Its meaning depends on the
/// oracle: a reduced word (free and rewriting-backed groups), an integer
/// vector (Z^d), a triple (Heisenberg), [position, lit lamps...]
/// (lamplighter) or a single index (finite groups). Two elements are equal
/// iff their normal forms are identical.
using Element = std::vector<std::int64_t>;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int64_t v : e) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using ElementSet = std::set<Element>;

enum class GroupKind { free, free_abelian, heisenberg, lamplighter, finite_cayley_table, rewriting_backed };

std::string to_string(GroupKind kind);

/// Uniform interface to a group with a fixed symmetric generating set.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual GroupKind kind() const = 0;
  virtual std::string name() const = 0;
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  virtual Element identity() const = 0;
  /// Right multiplication by a generator symbol.
  virtual Element multiply(const Element& g, std::size_t generator) const = 0;
  /// Some word (over the alphabet) representing g.
  virtual Word word_of(const Element& g) const = 0;

  Element normalize(const Word& w) const;
  Element normalize(const std::string& text) const { return normalize(alphabet_.parse(text)); }
  virtual Element product(const Element& g, const Element& h) const;
  virtual Element inverse(const Element& g) const;
  virtual std::string format(const Element& g) const;
  /// Parses either a word or the oracle's tuple syntax "(a,b,...)".
  virtual Element parse_element(const std::string& text) const;
  /// Group order when finite and known.
  virtual std::optional<std::uint64_t> order() const { return std::nullopt; }

 protected:
  explicit GroupOracle(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

 private:
  Alphabet alphabet_;
};

using GroupPtr = std::shared_ptr<const GroupOracle>;

/// Free group of rank k on x,y,z,w (k <= 4) or x1..xk; inverses upper-case.
GroupPtr make_free_group(std::size_t rank);
/// Z^d with generators +-e_i, symbols x,y,z,w (d <= 4) or x1..xd.
GroupPtr make_free_abelian(std::size_t dim);
/// Integer Heisenberg group, elements (a,b,c) ~ [[1,a,c],[0,1,b],[0,0,1]],
/// generators x=(1,0,0), y=(0,1,0).
GroupPtr make_heisenberg();
/// Z/2 wr Z with generators t, T (move the lamplighter) and a (flip the lamp
/// at the current position; an involution).
GroupPtr make_lamplighter();

/// Heisenberg multiplication on triples, shared with the finite quotients.
Element heisenberg_product(const Element& g, const Element& h);

/// F*S = {f s : f in F, s in S}.
ElementSet right_translate(const GroupOracle& group, const ElementSet& set, const ElementSet& by);

}  // namespace gradedgrowth
