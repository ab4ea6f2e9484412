#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gradedgrowth/group.hpp"

namespace gradedgrowth {

/// A finite group realised by explicit tables on indices 0..n-1, with 0 the
/// identity. Elements are numbered in BFS order of the right Cayley graph.
/// As a GroupOracle its normal forms are one-entry vectors {index}.
class FiniteGroup final : public GroupOracle {
 public:
  using Op = std::function<Element(const Element&, const Element&)>;
  using Label = std::function<std::string(const Element&)>;

  struct Generator {
    std::string symbol;
    Element value;
  };

  /// Closes `generators` under the operation. Non-involutive generators get
  /// an upper-cased inverse symbol. The full multiplication table is kept
  /// when the order is at most `full_table_cap`.
  static std::shared_ptr<FiniteGroup> generate(std::string name, Element identity,
                                               std::vector<Generator> generators, Op op,
                                               Label label, std::uint64_t order_cap,
                                               std::uint64_t full_table_cap = 2048);

  /// From an explicit Cayley table (row-major, entry table[a][b] = a*b,
  /// index 0 must be the identity).
  static std::shared_ptr<FiniteGroup> from_table(std::string name,
                                                 const std::vector<std::vector<std::uint32_t>>& table,
                                                 const std::vector<std::pair<std::string, std::uint32_t>>& generators);

  GroupKind kind() const override { return GroupKind::finite_cayley_table; }
  std::string name() const override { return name_; }
  Element identity() const override { return {0}; }
  Element multiply(const Element& g, std::size_t s) const override;
  Word word_of(const Element& g) const override;
  Element product(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  std::string format(const Element& g) const override;
  Element parse_element(const std::string& text) const override;
  std::optional<std::uint64_t> order() const override { return size(); }

  std::size_t size() const noexcept { return concrete_.size(); }
  std::uint32_t right_gen(std::uint32_t g, std::size_t s) const { return right_[g * symbols_ + s]; }
  std::uint32_t left_gen(std::size_t s, std::uint32_t g) const { return left_[g * symbols_ + s]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const;  // a^-1 b^-1 a b
  /// Indices of the declared generators (inverse symbols excluded).
  std::vector<std::uint32_t> generator_elements() const;
  std::uint32_t symbol_element(std::size_t s) const { return right_gen(0, s); }
  bool has_full_table() const noexcept { return !table_.empty(); }
  const Element& concrete(std::uint32_t i) const { return concrete_.at(i); }
  std::string label(std::uint32_t i) const;

  /// Subgroup generated by `gens`, as a sorted index list.
  std::vector<std::uint32_t> subgroup(const std::vector<std::uint32_t>& gens) const;

 private:
  FiniteGroup(std::string name, Alphabet alphabet) : GroupOracle(std::move(alphabet)), name_(std::move(name)) {}

  std::string name_;
  std::size_t symbols_ = 0;
  std::vector<Element> concrete_;
  Label label_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> parent_symbol_;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroupPtr make_cyclic(std::uint64_t n);
/// Direct product of cyclic groups C_{n1} x C_{n2} x ...
FiniteGroupPtr make_abelian(const std::vector<std::uint64_t>& orders);
/// Dihedral group of order 2n, generators r (rotation) and s (reflection).
FiniteGroupPtr make_dihedral(std::uint64_t n);
/// Quaternion group of order 8, generators i and j.
FiniteGroupPtr make_quaternion();
/// Heisenberg group over Z/modulus (order modulus^3), generators x, y.
FiniteGroupPtr make_heisenberg_mod(std::uint64_t modulus, std::uint64_t order_cap = 1U << 20U);

}  // namespace gradedgrowth
