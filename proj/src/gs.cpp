#include "gradedgrowth/gs.hpp"

#include <algorithm>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

namespace {

std::vector<std::size_t> finite_degrees(const GSPresentation& pres) {
  std::vector<std::size_t> out;
  out.reserve(pres.degrees.size());
  for (const auto& d : pres.degrees) {
    if (!d)
      throw ContractError("relator degree exceeds the truncation " + std::to_string(pres.max_deg) +
                          "; raise --max-deg or pass --assume-min-degree");
    if (*d == 0) throw ContractError("relator degrees must be >= 1");
    out.push_back(*d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_presentation(const GSPresentation& pres) {
  if (pres.d == 0) throw ContractError("generator count must be >= 1");
  if (pres.tail && pres.tail->from_degree == 0) throw ContractError("tail degrees must be >= 1");
}

Rational value_at(const GSPresentation& pres, const std::vector<std::size_t>& degrees, const Rational& t) {
  if (t <= 0 || t >= 1) throw ContractError("t must lie in (0, 1), got " + to_string(t));
  Rational v = Rational(1) - Rational(static_cast<long long>(pres.d)) * t;
  Rational power(1);
  std::size_t at = 0;
  for (std::size_t deg : degrees) {  // sorted ascending
    for (; at < deg; ++at) power *= t;
    v += power;
  }
  if (pres.tail && pres.tail->per_degree > 0)
    v += Rational(BigInt(pres.tail->per_degree)) * pow(t, pres.tail->from_degree) / (Rational(1) - t);
  return v;
}

}  // namespace

GSPresentation assume_min_degree(GSPresentation pres) {
  for (auto& d : pres.degrees)
    if (!d) {
      d = pres.max_deg + 1;
      pres.assumed_min_degree = true;
    }
  return pres;
}

Rational gs_value(const GSPresentation& pres, const Rational& t) {
  check_presentation(pres);
  return value_at(pres, finite_degrees(pres), t);
}

GsCertificate gs_certificate(const GSPresentation& pres, std::size_t grid) {
  check_presentation(pres);
  if (grid < 100) throw ContractError("grid must be >= 100");
  const auto degrees = finite_degrees(pres);

  Rational best_t;
  Rational best_v;
  bool have = false;
  auto consider = [&](const Rational& t) {
    if (t <= 0 || t >= 1) return;
    Rational v = value_at(pres, degrees, t);
    // ties keep the smaller t so the result is order independent
    if (!have || v < best_v || (v == best_v && t < best_t)) {
      best_t = t;
      best_v = v;
      have = true;
    }
  };

  const BigInt den(static_cast<unsigned long long>(grid));
  for (std::size_t i = 1; i < grid; ++i) consider(Rational(BigInt(static_cast<unsigned long long>(i)), den));

  Rational step(BigInt(1), den);
  for (int pass = 0; pass < 2; ++pass) {
    step /= 2;
    const Rational centre = best_t;
    consider(centre - step);
    consider(centre + step);
  }

  GsCertificate cert;
  cert.is_gs = best_v < 0;
  cert.t = best_t;
  cert.value = best_v;
  cert.d = pres.d;
  cert.p = pres.p;
  cert.degrees = degrees;
  cert.grid = grid;
  cert.assumed_min_degree = pres.assumed_min_degree;
  cert.max_deg = pres.max_deg;
  cert.tail = pres.tail;
  return cert;
}

bool verify_gs_certificate(const GsCertificate& cert) {
  GSPresentation pres;
  pres.d = cert.d;
  pres.p = cert.p;
  pres.max_deg = cert.max_deg;
  pres.tail = cert.tail;
  for (std::size_t deg : cert.degrees) pres.degrees.emplace_back(deg);
  const Rational v = gs_value(pres, cert.t);
  if (v != cert.value) return false;
  return !cert.is_gs || v < 0;
}

std::vector<std::optional<std::size_t>> relator_degrees(const std::vector<Word>& relators, std::size_t rank,
                                                        std::uint32_t p, std::size_t max_deg) {
  if (rank == 0 || rank > kMaxGsRank) throw ContractError("relator degrees need 1 to 3 free generators");
  if (!is_prime(p)) throw ContractError("p must be prime");
  std::vector<std::optional<std::size_t>> out;
  out.reserve(relators.size());
  for (const Word& w : relators) out.push_back(magnus_deg(w, rank, p, max_deg));
  return out;
}

std::vector<std::optional<std::size_t>> relator_degrees(const std::vector<std::string>& relators,
                                                        std::size_t rank, std::uint32_t p, std::size_t max_deg) {
  if (rank == 0 || rank > kMaxGsRank) throw ContractError("relator degrees need 1 to 3 free generators");
  static const std::vector<std::string> names{"x", "y", "z"};
  const Alphabet alphabet =
      Alphabet::letters(std::vector<std::string>(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(rank)));
  std::vector<Word> words;
  words.reserve(relators.size());
  for (const auto& r : relators) words.push_back(alphabet.parse(r));
  return relator_degrees(words, rank, p, max_deg);
}

}  // namespace gradedgrowth
