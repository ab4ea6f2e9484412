#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradedgrowth/arith.hpp"
#include "gradedgrowth/magnus.hpp"
#include "gradedgrowth/words.hpp"

namespace gradedgrowth {

inline constexpr std::size_t kDefaultGsGrid = 100;
inline constexpr std::size_t kMaxGsRank = 3;

/// User-asserted bound on relators left out of the finite list: at most
/// `per_degree` relators of each degree >= `from_degree`. Their contribution
/// to the GS sum is then at most per_degree * t^from_degree / (1 - t).
struct GsTailBound {
  std::uint64_t per_degree = 0;
  std::size_t from_degree = 1;
};

/// nullopt degree = "greater than max_deg" (the Magnus truncation).
struct GSPresentation {
  std::size_t d = 1;
  std::vector<std::optional<std::size_t>> degrees;
  std::uint32_t p = 2;
  std::size_t max_deg = kDefaultMagnusDegree;
  std::optional<GsTailBound> tail;
  bool assumed_min_degree = false;
};

/// Replaces every "greater than D" degree with D + 1 and marks the
/// presentation; a larger true degree only lowers the GS value.
GSPresentation assume_min_degree(GSPresentation pres);

/// 1 - d t + sum t^deg (+ the tail bound, when given), exactly.
Rational gs_value(const GSPresentation& pres, const Rational& t);

struct GsCertificate {
  bool is_gs = false;
  Rational t;      // witness when is_gs, otherwise the best point found
  Rational value;  // gs_value at t
  std::size_t d = 0;
  std::uint32_t p = 2;
  std::vector<std::size_t> degrees;
  std::size_t grid = 0;
  bool assumed_min_degree = false;
  std::size_t max_deg = 0;
  std::optional<GsTailBound> tail;
};

/// Minimises gs_value over {i/grid}, then refines twice around the best
/// point with half the previous step. is_gs is true iff a negative value
/// was seen; false only means no witness was found.
GsCertificate gs_certificate(const GSPresentation& pres, std::size_t grid = kDefaultGsGrid);

/// Re-evaluates the witness exactly.
bool verify_gs_certificate(const GsCertificate& cert);

/// deg_p of each relator, words over the free group x, y, z (rank <= 3).
std::vector<std::optional<std::size_t>> relator_degrees(const std::vector<Word>& relators, std::size_t rank,
                                                        std::uint32_t p, std::size_t max_deg = kDefaultMagnusDegree);

/// Parses relators written over x, y, z (inverses X, Y, Z), e.g. "x^3",
/// "[x,y]".
std::vector<std::optional<std::size_t>> relator_degrees(const std::vector<std::string>& relators,
                                                        std::size_t rank, std::uint32_t p,
                                                        std::size_t max_deg = kDefaultMagnusDegree);

}  // namespace gradedgrowth
