#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gradedgrowth/arith.hpp"
#include "gradedgrowth/ball.hpp"
#include "gradedgrowth/finite_group.hpp"
#include "gradedgrowth/group.hpp"
#include "gradedgrowth/linalg.hpp"

namespace gradedgrowth {

/// A finite piece of an algebra over GF(p) with basis indexed by group
/// elements. The product of two basis vectors is a scalar multiple of a
/// basis vector (possibly zero).
class BasisAlgebra {
 public:
  virtual ~BasisAlgebra() = default;

  virtual std::uint32_t prime() const = 0;
  virtual std::size_t dim() const = 0;
  virtual const GroupOracle& group() const = 0;
  virtual const Element& element(std::size_t i) const = 0;
  /// Throws OutOfRangeError for elements outside the enumeration.
  virtual std::size_t index_of(const Element& g) const = 0;
  virtual std::size_t identity_index() const { return index_of(group().identity()); }

  struct Term {
    std::size_t index;
    std::uint32_t coeff;  // 0 means the product vanishes
  };
  /// basis(i) * basis(j); throws OutOfRangeError when the product leaves
  /// the enumeration.
  virtual Term mul(std::size_t i, std::size_t j) const = 0;

  /// Sparse vector of the basis element for g.
  SparseVec basis_vector(const Element& g) const { return {{index_of(g), 1}}; }
  Vec multiply(const Vec& a, const SparseVec& b) const;
  Vec multiply(const Vec& a, const Vec& b) const;
};

using AlgebraPtr = std::shared_ptr<const BasisAlgebra>;

/// (kG)_lambda restricted to a word-metric ball: delta_g delta_h =
/// lambda^(l(g)+l(h)-l(gh)) delta_gh with 0^0 = 1. lambda = 1 is the group
/// algebra, lambda = 0 the crystal algebra.
class BallAlgebra final : public BasisAlgebra {
 public:
  BallAlgebra(GroupPtr group, std::shared_ptr<const WordMetricBall> ball, std::uint32_t p,
              std::uint32_t lambda);

  std::uint32_t prime() const override { return field_.p(); }
  std::size_t dim() const override { return ball_->size(); }
  const GroupOracle& group() const override { return *group_; }
  const Element& element(std::size_t i) const override { return ball_->element(i); }
  std::size_t index_of(const Element& g) const override { return ball_->index_of(g); }
  Term mul(std::size_t i, std::size_t j) const override;

  const WordMetricBall& ball() const noexcept { return *ball_; }
  std::uint32_t lambda() const noexcept { return lambda_; }

 private:
  GroupPtr group_;
  std::shared_ptr<const WordMetricBall> ball_;
  PrimeField field_;
  std::uint32_t lambda_;
};

/// Default cap on the order of a group whose algebra is built explicitly.
inline constexpr std::uint64_t kDefaultAlgebraCap = 2048;

/// The group algebra F_p G of a finite group, basis in the group's own
/// enumeration (identity first).
class FiniteGroupAlgebra final : public BasisAlgebra {
 public:
  FiniteGroupAlgebra(FiniteGroupPtr group, std::uint32_t p, std::uint64_t cap = kDefaultAlgebraCap);

  std::uint32_t prime() const override { return field_.p(); }
  std::size_t dim() const override { return group_->size(); }
  const GroupOracle& group() const override { return *group_; }
  const FiniteGroup& finite_group() const noexcept { return *group_; }
  const FiniteGroupPtr& group_ptr() const noexcept { return group_; }
  const Element& element(std::size_t i) const override { return elements_.at(i); }
  std::size_t index_of(const Element& g) const override;
  std::size_t identity_index() const override { return 0; }
  Term mul(std::size_t i, std::size_t j) const override {
    return {group_->mul(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)), 1};
  }

 private:
  FiniteGroupPtr group_;
  PrimeField field_;
  std::vector<Element> elements_;
};

std::shared_ptr<const FiniteGroupAlgebra> build_group_algebra(FiniteGroupPtr group, std::uint32_t p,
                                                              std::uint64_t cap = kDefaultAlgebraCap);

/// Finite-dimensional subspace of a BasisAlgebra in canonical reduced row
/// echelon form.
class Subspace {
 public:
  Subspace(AlgebraPtr ambient, Echelon basis);

  static Subspace zero(AlgebraPtr ambient);
  static Subspace whole(AlgebraPtr ambient);
  static Subspace span(AlgebraPtr ambient, const std::vector<Vec>& vectors);
  static Subspace span(AlgebraPtr ambient, const std::vector<SparseVec>& vectors);
  /// span{delta_g : g in elements}
  static Subspace of_elements(AlgebraPtr ambient, const std::vector<Element>& elements);

  const AlgebraPtr& ambient() const noexcept { return ambient_; }
  std::uint32_t prime() const noexcept { return basis_.field().p(); }
  std::size_t rank() const noexcept { return basis_.rank(); }
  const std::vector<Vec>& rows() const noexcept { return basis_.rows(); }
  const Echelon& echelon() const noexcept { return basis_; }
  bool contains(const Vec& v) const { return basis_.contains(v); }
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

 private:
  AlgebraPtr ambient_;
  Echelon basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& a, const Subspace& b);
/// span{f s : f a basis row of F, s in S}.
Subspace right_multiply(const Subspace& f, const std::vector<SparseVec>& s);
/// (rank(F + FS) - rank F) / rank F.
Rational invariance_defect(const Subspace& f, const std::vector<SparseVec>& s);

/// (#(F u FS) - #F) / #F for finite subsets of a group.
Rational set_defect(const GroupOracle& group, const ElementSet& f, const ElementSet& s);

}  // namespace gradedgrowth
