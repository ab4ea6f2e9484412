#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradedgrowth/arith.hpp"
#include "gradedgrowth/words.hpp"

namespace gradedgrowth {

inline constexpr std::size_t kDefaultMagnusDegree = 12;
/// Cap on the number of monomials of a truncated series.
inline constexpr std::size_t kMagnusMonomialCap = 4'000'000;

/// Element of F_p<<X_1..X_k>> truncated above degree D. Coefficients are
/// stored by degree; monomials of degree d are indexed in base k.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t k, std::size_t max_deg, std::uint32_t p);

  static TruncatedSeries one(std::size_t k, std::size_t max_deg, std::uint32_t p);

  std::size_t generators() const noexcept { return k_; }
  std::size_t max_deg() const noexcept { return coeffs_.size() - 1; }
  const std::vector<std::uint32_t>& degree(std::size_t d) const { return coeffs_.at(d); }
  std::vector<std::uint32_t>& degree(std::size_t d) { return coeffs_.at(d); }

  /// this * (1 + X_i)
  void right_multiply_letter(std::size_t i);
  /// this * (1 + X_i)^-1 = this * (1 - X_i + X_i^2 - ...)
  void right_multiply_inverse_letter(std::size_t i);
  TruncatedSeries operator*(const TruncatedSeries& other) const;

  /// Least d >= 1 with a nonzero coefficient in (this - 1), if any.
  std::optional<std::size_t> valuation_of_difference_from_one() const;

 private:
  std::size_t k_;
  PrimeField field_;
  std::vector<std::vector<std::uint32_t>> coeffs_;
};

/// Magnus image of a word over the free group on `rank` generators
/// (alphabet index 2i = x_i, 2i+1 = x_i^-1), truncated at degree D.
TruncatedSeries magnus_image(const Word& w, std::size_t rank, std::uint32_t p, std::size_t max_deg);

/// deg_p: least degree of a nonzero term of (image - 1); nullopt means
/// "greater than max_deg".
std::optional<std::size_t> magnus_deg(const Word& w, std::size_t rank, std::uint32_t p,
                                      std::size_t max_deg = kDefaultMagnusDegree);

/// dim of the degree-n part of gr F_p F_k for n = 0..n_max, as the rank of
/// the degree-n components of Magnus images of all products
/// (g_1 - 1)...(g_n - 1) with g_i in the symmetric generating set.
std::vector<std::size_t> free_graded_dims(std::size_t k, std::size_t n_max, std::uint32_t p,
                                          std::size_t max_deg = 0);

}  // namespace gradedgrowth
