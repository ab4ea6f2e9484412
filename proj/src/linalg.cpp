#include "gradedgrowth/linalg.hpp"

#include <algorithm>
#include <bit>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

Vec to_dense(const SparseVec& v, std::size_t dim) {
  Vec out(dim, 0);
  for (const auto& [i, c] : v) {
    if (i >= dim) throw ContractError("sparse vector coordinate outside the ambient dimension");
    out[i] = c;
  }
  return out;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

bool is_zero(const Vec& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

Echelon::Echelon(std::uint32_t p, std::size_t dim) : field_(p), dim_(dim), row_of_pivot_(dim, -1) {}

void Echelon::eliminate(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    const Vec& row = rows_[r];
    const std::uint32_t f = field_.neg(c);
    for (std::size_t j = pivots_[r]; j < dim_; ++j)
      if (row[j] != 0) v[j] = field_.add(v[j], field_.mul(f, row[j]));
  }
}

Vec Echelon::reduce(Vec v) const {
  if (v.size() != dim_) throw ContractError("vector dimension does not match the ambient space");
  eliminate(v);
  return v;
}

bool Echelon::insert(Vec v) {
  if (v.size() != dim_) throw ContractError("vector dimension does not match the ambient space");
  for (auto& x : v) x %= field_.p();
  eliminate(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const std::uint32_t scale = field_.inv(v[pivot]);
  for (std::size_t j = pivot; j < dim_; ++j) v[j] = field_.mul(v[j], scale);
  for (auto& row : rows_) {
    const std::uint32_t c = row[pivot];
    if (c == 0) continue;
    const std::uint32_t f = field_.neg(c);
    for (std::size_t j = pivot; j < dim_; ++j)
      if (v[j] != 0) row[j] = field_.add(row[j], field_.mul(f, v[j]));
  }
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  for (std::size_t r = pos; r < pivots_.size(); ++r) row_of_pivot_[pivots_[r]] = static_cast<std::ptrdiff_t>(r);
  return true;
}

std::vector<Vec> Echelon::kernel() const {
  std::vector<Vec> out;
  for (std::size_t free = 0; free < dim_; ++free) {
    if (row_of_pivot_[free] >= 0) continue;
    Vec x(dim_, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = field_.neg(rows_[r][free]);
    out.push_back(std::move(x));
  }
  return out;
}

bool BitVec::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

bool BitVec::dot(const BitVec& o) const noexcept {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVec::lowest() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return bits_;
}

bool BitEchelon::insert(BitVec v) {
  if (v.size() != dim_) throw ContractError("bit vector dimension does not match the ambient space");
  // Rows are fully reduced, so a single pass clears every pivot column.
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v.get(pivots_[r])) v.xor_with(rows_[r]);
  const std::size_t pivot = v.lowest();
  if (pivot == dim_) return false;
  for (auto& row : rows_)
    if (row.get(pivot)) row.xor_with(v);
  row_of_pivot_[pivot] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

std::vector<BitVec> BitEchelon::kernel() const {
  // Rows are fully reduced: each pivot column is zero in all other rows.
  std::vector<BitVec> out;
  for (std::size_t free = 0; free < dim_; ++free) {
    if (row_of_pivot_[free] >= 0) continue;
    BitVec x(dim_);
    x.set(free);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r].get(free)) x.set(pivots_[r]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace gradedgrowth
