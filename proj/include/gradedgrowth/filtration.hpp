#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gradedgrowth/finite_group.hpp"
#include "gradedgrowth/subspace.hpp"

namespace gradedgrowth {

using AlgebraPtrF = std::shared_ptr<const FiniteGroupAlgebra>;

/// varpi^0 = R, varpi^1 = augmentation ideal, ... up to the first n with
/// varpi^n = varpi^(n+1).
struct AugmentationLadder {
  std::vector<Subspace> powers;          // varpi^0 .. varpi^N (varpi^N is stable)
  std::vector<std::size_t> dims;         // dim varpi^n, n = 0..N
  std::vector<std::size_t> graded_dims;  // r_n = dim varpi^n - dim varpi^(n+1), n = 0..N-1
  bool reaches_zero = false;
};

AugmentationLadder aug_ladder(const AlgebraPtrF& algebra);

/// Graded dims r_0..r_max_n of F_2 G computed from the dual side: the
/// annihilator of varpi^n is the space of functions f with
/// f(s g) - f(g) in the annihilator of varpi^(n-1) for every generator s,
/// so only a low-dimensional system is solved at each step. Works for
/// groups far beyond the explicit-algebra cap. Stops early once the
/// quotient exhausts the group algebra.
std::vector<std::size_t> dual_graded_dims(const FiniteGroup& group, std::size_t max_n);

/// Graded dims of a residually finite group read off a pair of consecutive
/// finite quotients: entries are kept for n below the first index where
/// the two levels disagree (the stabilization horizon).
struct QuotientGrowth {
  std::string coarse_name;
  std::string fine_name;
  std::vector<std::size_t> coarse;
  std::vector<std::size_t> fine;
  std::size_t horizon = 0;              // first n where the levels differ
  bool agree_through_max = false;       // no disagreement up to max_n
  std::vector<std::size_t> graded_dims; // fine[0..horizon)
};

QuotientGrowth quotient_growth(const FiniteGroup& coarse, const FiniteGroup& fine, std::uint32_t p,
                               std::size_t max_n);

/// Graded dims of a finite group algebra, switching to the dual computation
/// (p = 2) when the order exceeds the explicit-algebra cap.
std::vector<std::size_t> graded_dims(const FiniteGroupPtr& group, std::uint32_t p, std::size_t max_n,
                                     std::uint64_t cap = kDefaultAlgebraCap);

struct JenningsSeries {
  std::vector<std::vector<std::uint32_t>> subgroups;  // G_1 = G, G_2, ..., ending with {1}
  std::vector<std::size_t> dims;                      // d_n = log_p [G_n : G_(n+1)]
};

/// G_1 = G, G_n = [G_(n-1), G] (G_ceil(n/p))^p. Throws ContractError
/// when |G| is not a power of p.
JenningsSeries jennings_series(const FiniteGroup& group, std::uint32_t p);

/// Coefficients of prod_n ((1 - t^(pn)) / (1 - t^n))^(d_n) up to max_deg
/// (default: the full polynomial degree).
std::vector<std::uint64_t> jennings_hilbert_coeffs(const std::vector<std::size_t>& dims, std::uint32_t p,
                                                   std::optional<std::size_t> max_deg = std::nullopt);

/// (1/n) sum_{d | n} mu(d) k^(n/d) for n = 1..n_max.
std::vector<std::uint64_t> witt_ranks(std::uint64_t k, std::size_t n_max);

// Reidemeister-Schreier generators of right ideals.

/// span{v g : v in vectors, g in G}.
Subspace right_ideal(const AlgebraPtrF& algebra, const std::vector<Vec>& vectors);
bool is_right_ideal(const AlgebraPtrF& algebra, const Subspace& ideal);

/// Complement F of I spanned by group elements, containing 1, with the
/// projection along I.
struct IdealComplement {
  std::vector<std::uint32_t> elements;  // basis group elements of F
  Subspace complement;
  /// v -> its component in F (v minus an element of I).
  std::function<Vec(const Vec&)> project;
};

IdealComplement ideal_complement(const AlgebraPtrF& algebra, const Subspace& ideal);

/// {f s - proj_F(f s) : f in F, s in S}, zero entries dropped.
std::vector<Vec> rs_generators(const AlgebraPtrF& algebra, const Subspace& ideal,
                               const std::vector<std::uint32_t>& s);

struct RsStepBound {
  std::size_t quotient_dim = 0;  // dim I / I varpi
  std::size_t bound = 0;         // dim (F + FS) cap I
  bool holds = false;
};

RsStepBound rs_step_bound(const AlgebraPtrF& algebra, const Subspace& ideal, const std::vector<std::uint32_t>& s);

/// A proper nonzero right ideal generated by one random element.
Subspace random_right_ideal(const AlgebraPtrF& algebra, std::mt19937_64& rng);

struct GrowthReport {
  std::vector<std::size_t> dims;    // positive prefix r_0, r_1, ...
  std::vector<double> roots;        // r_n^(1/n) for n >= 1 (index n-1)
  std::size_t fekete_n = 0;         // largest n attaining min r_n^(1/n)
  double fekete_estimate = 0.0;     // min over n >= 1 of r_n^(1/n)
  bool min_at_last = false;
  bool nonincreasing = false;       // roots nonincreasing in n
  double loglog_slope = 0.0;        // least-squares slope of log r_n against log n
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // (m, n) with r_m r_n < r_(m+n)
};

GrowthReport growth_report(const std::vector<std::size_t>& dims);

}  // namespace gradedgrowth
