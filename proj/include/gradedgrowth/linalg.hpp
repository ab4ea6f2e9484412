#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gradedgrowth/arith.hpp"

namespace gradedgrowth {

/// Dense vector over GF(p), entries in [0, p).
using Vec = std::vector<std::uint32_t>;

/// Sparse vector: (coordinate, nonzero coefficient) pairs.
using SparseVec = std::vector<std::pair<std::size_t, std::uint32_t>>;

Vec to_dense(const SparseVec& v, std::size_t dim);
SparseVec to_sparse(const Vec& v);
bool is_zero(const Vec& v) noexcept;

/// Reduced row echelon basis over GF(p), maintained incrementally. Rows are
/// kept sorted by pivot column, each pivot is 1 and pivot columns are zero
/// in every other row, so equal spans give identical rows.
class Echelon {
 public:
  Echelon(std::uint32_t p, std::size_t dim);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Returns true when v was independent of the current rows.
  bool insert(Vec v);
  /// v minus its projection onto the span along pivot coordinates; zero iff
  /// v lies in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  /// Basis of {x : <row, x> = 0 for every row} (the right kernel).
  std::vector<Vec> kernel() const;

 private:
  void eliminate(Vec& v) const;

  PrimeField field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

/// Bit-packed vector over GF(2).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool get(std::size_t i) const noexcept { return (words_[i >> 6U] >> (i & 63U)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6U] |= std::uint64_t{1} << (i & 63U); }
  void flip(std::size_t i) noexcept { words_[i >> 6U] ^= std::uint64_t{1} << (i & 63U); }
  void xor_with(const BitVec& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }
  bool any() const noexcept;
  /// Parity of the bitwise AND (the GF(2) dot product).
  bool dot(const BitVec& o) const noexcept;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t lowest() const noexcept;
  bool operator==(const BitVec& o) const = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Echelon basis over GF(2) on packed rows (not kept fully reduced; use
/// kernel() for canonical output).
class BitEchelon {
 public:
  explicit BitEchelon(std::size_t dim) : dim_(dim), row_of_pivot_(dim, -1) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool insert(BitVec v);
  /// Basis of the right kernel of the inserted rows.
  std::vector<BitVec> kernel() const;

 private:
  std::size_t dim_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

}  // namespace gradedgrowth
