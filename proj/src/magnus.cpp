#include "gradedgrowth/magnus.hpp"

#include "gradedgrowth/error.hpp"
#include "gradedgrowth/linalg.hpp"

namespace gradedgrowth {

namespace {

std::size_t checked_power(std::size_t k, std::size_t d, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (v > cap / k) throw ResourceError("truncated series exceeds the monomial cap");
    v *= k;
  }
  return v;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t k, std::size_t max_deg, std::uint32_t p) : k_(k), field_(p) {
  if (k == 0) throw ContractError("series needs at least one generator");
  std::size_t total = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    const std::size_t n = checked_power(k, d, kMagnusMonomialCap);
    total += n;
    if (total > kMagnusMonomialCap)
      throw ResourceError("truncation degree " + std::to_string(max_deg) + " with " + std::to_string(k) +
                          " generators exceeds the monomial cap");
    coeffs_.emplace_back(n, 0);
  }
}

TruncatedSeries TruncatedSeries::one(std::size_t k, std::size_t max_deg, std::uint32_t p) {
  TruncatedSeries s(k, max_deg, p);
  s.coeffs_[0][0] = 1;
  return s;
}

void TruncatedSeries::right_multiply_letter(std::size_t i) {
  for (std::size_t d = max_deg(); d-- > 0;) {
    const auto& src = coeffs_[d];
    auto& dst = coeffs_[d + 1];
    for (std::size_t m = 0; m < src.size(); ++m)
      if (src[m] != 0) dst[m * k_ + i] = field_.add(dst[m * k_ + i], src[m]);
  }
}

void TruncatedSeries::right_multiply_inverse_letter(std::size_t i) {
  // R (1 + X_i) = M  gives  R_d = M_d - R_(d-1) X_i, degree by degree.
  for (std::size_t d = 1; d <= max_deg(); ++d) {
    const auto& prev = coeffs_[d - 1];
    auto& cur = coeffs_[d];
    for (std::size_t m = 0; m < prev.size(); ++m)
      if (prev[m] != 0) cur[m * k_ + i] = field_.sub(cur[m * k_ + i], prev[m]);
  }
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  if (other.k_ != k_ || other.max_deg() != max_deg() || other.field_.p() != field_.p())
    throw ContractError("series of different shapes");
  TruncatedSeries out(k_, max_deg(), field_.p());
  for (std::size_t da = 0; da <= max_deg(); ++da) {
    for (std::size_t db = 0; da + db <= max_deg(); ++db) {
      const auto& a = coeffs_[da];
      const auto& b = other.coeffs_[db];
      auto& c = out.coeffs_[da + db];
      const std::size_t shift = b.size();
      for (std::size_t ma = 0; ma < a.size(); ++ma) {
        if (a[ma] == 0) continue;
        for (std::size_t mb = 0; mb < b.size(); ++mb)
          if (b[mb] != 0) c[ma * shift + mb] = field_.add(c[ma * shift + mb], field_.mul(a[ma], b[mb]));
      }
    }
  }
  return out;
}

std::optional<std::size_t> TruncatedSeries::valuation_of_difference_from_one() const {
  for (std::size_t d = 1; d <= max_deg(); ++d)
    for (std::uint32_t c : coeffs_[d])
      if (c != 0) return d;
  if (coeffs_[0][0] != 1) return 0;
  return std::nullopt;
}

TruncatedSeries magnus_image(const Word& w, std::size_t rank, std::uint32_t p, std::size_t max_deg) {
  TruncatedSeries s = TruncatedSeries::one(rank, max_deg, p);
  for (std::size_t letter : w) {
    if (letter >= 2 * rank) throw ParseError("letter outside the free generators");
    if (letter % 2 == 0) s.right_multiply_letter(letter / 2);
    else s.right_multiply_inverse_letter(letter / 2);
  }
  return s;
}

std::optional<std::size_t> magnus_deg(const Word& w, std::size_t rank, std::uint32_t p, std::size_t max_deg) {
  return magnus_image(w, rank, p, max_deg).valuation_of_difference_from_one();
}

namespace {

struct GradedSearch {
  std::size_t k;
  std::size_t n;
  std::uint32_t p;
  Echelon* echelon;
  std::size_t target;

  // Multiplies by (g - 1) for symbol s (2i = x_i, 2i+1 = x_i^-1).
  TruncatedSeries times_factor(const TruncatedSeries& m, std::size_t s) const {
    TruncatedSeries out = m;
    if (s % 2 == 0) {
      out.right_multiply_letter(s / 2);
    } else {
      out.right_multiply_inverse_letter(s / 2);
    }
    const PrimeField f(p);
    for (std::size_t d = 0; d <= out.max_deg(); ++d) {
      auto& dst = out.degree(d);
      const auto& src = m.degree(d);
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = f.sub(dst[i], src[i]);
    }
    return out;
  }

  void run(const TruncatedSeries& m, std::size_t depth) {
    if (echelon->rank() == target) return;
    if (depth == n) {
      echelon->insert(m.degree(n));
      return;
    }
    for (std::size_t s = 0; s < 2 * k; ++s) run(times_factor(m, s), depth + 1);
  }
};

}  // namespace

std::vector<std::size_t> free_graded_dims(std::size_t k, std::size_t n_max, std::uint32_t p, std::size_t max_deg) {
  if (k == 0) throw ContractError("free_graded_dims needs k >= 1");
  const std::size_t deg = std::max(max_deg, n_max);
  std::vector<std::size_t> out{1};
  for (std::size_t n = 1; n <= n_max; ++n) {
    (void)checked_power(2 * k, n, 1'000'000);
    const std::size_t target = checked_power(k, n, kMagnusMonomialCap);
    Echelon e(p, target);
    GradedSearch search{k, n, p, &e, target};
    search.run(TruncatedSeries::one(k, deg, p), 0);
    out.push_back(e.rank());
  }
  return out;
}

}  // namespace gradedgrowth
