#include "gradedgrowth/subspace.hpp"

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

Vec BasisAlgebra::multiply(const Vec& a, const SparseVec& b) const {
  const PrimeField field(prime());
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (const auto& [j, c] : b) {
      const Term t = mul(i, j);
      if (t.coeff == 0) continue;
      out[t.index] = field.add(out[t.index], field.mul(field.mul(a[i], c), t.coeff));
    }
  }
  return out;
}

Vec BasisAlgebra::multiply(const Vec& a, const Vec& b) const { return multiply(a, to_sparse(b)); }

BallAlgebra::BallAlgebra(GroupPtr group, std::shared_ptr<const WordMetricBall> ball, std::uint32_t p,
                         std::uint32_t lambda)
    : group_(std::move(group)), ball_(std::move(ball)), field_(p), lambda_(lambda % p) {}

BasisAlgebra::Term BallAlgebra::mul(std::size_t i, std::size_t j) const {
  const Element gh = group_->product(ball_->element(i), ball_->element(j));
  const std::size_t k = ball_->index_of(gh);
  const std::size_t exponent = ball_->length_at(i) + ball_->length_at(j) - ball_->length_at(k);
  return {k, field_.pow(lambda_, exponent)};
}

FiniteGroupAlgebra::FiniteGroupAlgebra(FiniteGroupPtr group, std::uint32_t p, std::uint64_t cap)
    : group_(std::move(group)), field_(p) {
  if (group_->size() > cap)
    throw ResourceError("group algebra of " + group_->name() + " (order " + std::to_string(group_->size()) +
                        ") exceeds the cap of " + std::to_string(cap));
  if (!group_->has_full_table())
    throw ResourceError("group " + group_->name() + " has no full multiplication table");
  elements_.reserve(group_->size());
  for (std::size_t i = 0; i < group_->size(); ++i) elements_.push_back({static_cast<std::int64_t>(i)});
}

std::size_t FiniteGroupAlgebra::index_of(const Element& g) const {
  if (g.size() != 1 || g[0] < 0 || static_cast<std::size_t>(g[0]) >= group_->size())
    throw OutOfRangeError("not an element of " + group_->name());
  return static_cast<std::size_t>(g[0]);
}

std::shared_ptr<const FiniteGroupAlgebra> build_group_algebra(FiniteGroupPtr group, std::uint32_t p,
                                                              std::uint64_t cap) {
  return std::make_shared<const FiniteGroupAlgebra>(std::move(group), p, cap);
}

Subspace::Subspace(AlgebraPtr ambient, Echelon basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.dim() != ambient_->dim() || basis_.field().p() != ambient_->prime())
    throw ContractError("echelon basis does not match the ambient algebra");
}

Subspace Subspace::zero(AlgebraPtr ambient) {
  Echelon e(ambient->prime(), ambient->dim());
  return {std::move(ambient), std::move(e)};
}

Subspace Subspace::whole(AlgebraPtr ambient) {
  Echelon e(ambient->prime(), ambient->dim());
  for (std::size_t i = 0; i < ambient->dim(); ++i) e.insert(to_dense({{i, 1}}, ambient->dim()));
  return {std::move(ambient), std::move(e)};
}

Subspace Subspace::span(AlgebraPtr ambient, const std::vector<Vec>& vectors) {
  Echelon e(ambient->prime(), ambient->dim());
  for (const auto& v : vectors) e.insert(v);
  return {std::move(ambient), std::move(e)};
}

Subspace Subspace::span(AlgebraPtr ambient, const std::vector<SparseVec>& vectors) {
  Echelon e(ambient->prime(), ambient->dim());
  for (const auto& v : vectors) e.insert(to_dense(v, ambient->dim()));
  return {std::move(ambient), std::move(e)};
}

Subspace Subspace::of_elements(AlgebraPtr ambient, const std::vector<Element>& elements) {
  std::vector<SparseVec> vs;
  for (const auto& g : elements) vs.push_back(ambient->basis_vector(g));
  return span(std::move(ambient), vs);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.rows())
    if (!contains(row)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && rows() == other.rows();
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw ContractError("subspaces live in different ambient algebras");
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  Echelon e = a.echelon();
  for (const auto& row : b.rows()) e.insert(row);
  return {a.ambient(), std::move(e)};
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient()->dim();
  Echelon z(a.prime(), 2 * n);
  for (const auto& row : a.rows()) {
    Vec v(2 * n);
    std::copy(row.begin(), row.end(), v.begin());
    std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
    z.insert(std::move(v));
  }
  for (const auto& row : b.rows()) {
    Vec v(2 * n, 0);
    std::copy(row.begin(), row.end(), v.begin());
    z.insert(std::move(v));
  }
  Echelon out(a.prime(), n);
  for (std::size_t r = 0; r < z.rank(); ++r) {
    if (z.pivots()[r] < n) continue;
    const Vec& row = z.rows()[r];
    out.insert(Vec(row.begin() + static_cast<std::ptrdiff_t>(n), row.end()));
  }
  return {a.ambient(), std::move(out)};
}

Subspace right_multiply(const Subspace& f, const std::vector<SparseVec>& s) {
  Echelon e(f.prime(), f.ambient()->dim());
  for (const auto& row : f.rows())
    for (const auto& x : s) e.insert(f.ambient()->multiply(row, x));
  return {f.ambient(), std::move(e)};
}

Rational invariance_defect(const Subspace& f, const std::vector<SparseVec>& s) {
  if (f.rank() == 0) throw ContractError("invariance defect needs rank F >= 1");
  const Subspace fs = sum(f, right_multiply(f, s));
  return make_rational(static_cast<std::int64_t>(fs.rank() - f.rank()), static_cast<std::int64_t>(f.rank()));
}

Rational set_defect(const GroupOracle& group, const ElementSet& f, const ElementSet& s) {
  if (f.empty()) throw ContractError("set defect needs a nonempty F");
  ElementSet both = right_translate(group, f, s);
  both.insert(f.begin(), f.end());
  return make_rational(static_cast<std::int64_t>(both.size() - f.size()), static_cast<std::int64_t>(f.size()));
}

}  // namespace gradedgrowth
