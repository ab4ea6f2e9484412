#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedgrowth/arith.hpp"
#include "gradedgrowth/group.hpp"
#include "gradedgrowth/tiling.hpp"

namespace gradedgrowth {

// Experimental: the subspace analogue of the tiling pipeline in F_p G for
// G = Z or Z^2, with ideals I_n = ker(F_p G -> F_p[G/N_n]). The report
// records what happened at every greedy step; it never asserts that a
// complement with small defect must exist.

/// Group-ring element: (group element, coefficient in [1, p)) sorted by
/// element, no zero coefficients.
using RingElement = std::vector<std::pair<Element, std::uint32_t>>;

/// "x", "2*x", "x + y" style terms over the group's words.
RingElement parse_ring_element(const GroupOracle& group, const std::string& text, std::uint32_t p);
std::string format_ring_element(const GroupOracle& group, const RingElement& r);

struct ProbeParams {
  std::optional<Rational> delta;
  std::optional<Rational> zeta;
  std::optional<std::size_t> t;
  std::size_t max_radius = 64;
  std::size_t set_cap = 20'000;
  std::size_t max_cells = 4096;
  std::size_t max_tower = 4096;
};

struct ProbeStep {
  std::size_t level = 0;
  std::size_t dim_k = 0;
  std::size_t s = 0;
  std::size_t dim_b = 0;
  std::size_t dim_bs = 0;
  Rational nu, alpha, mu, nu_prime, alpha_prime;

  std::size_t dim_kl = 0;   // dim(K L*)
  std::size_t dim_bk = 0;   // dim(B K*)
  std::size_t dim_bl = 0;   // dim(B L*)
  std::size_t dim_bsl = 0;  // dim(B_s L*)
  bool hyp_injective = false;
  bool hyp_kl = false;
  bool hyp_bk = false;
  bool hyp_bl = false;

  bool overlap_bound = false;   // dim(x_i K cap B_(i-1)) <= delta dim K at every placement
  bool dim_equation = false;    // dim B_s = nu' dim Omega
  bool envelope_bound = false;  // dim(B_s L*) <= alpha' dim Omega
  bool maximality = false;      // dim(B_s cap xK) > delta dim K for every x
  bool mu_ge_delta = false;
  bool s_ge_one = false;
  std::optional<std::string> counterexample;
};

struct AlgebraProbeReport {
  std::string group;
  std::uint32_t p = 2;
  std::vector<RingElement> k_basis;
  bool adjoined_unit = false;
  Rational epsilon, delta, zeta;
  std::size_t t = 0;
  bool params_override = false;
  std::vector<std::pair<std::string, std::size_t>> tower;  // (shape radius, dim)
  std::string chain;
  std::string quotient;
  std::size_t quotient_level = 0;
  std::size_t omega_dim = 0;
  std::vector<ProbeStep> steps;
  std::optional<std::size_t> stopped_after;
  std::size_t complement_dim = 0;
  bool complement_is_transversal = false;  // pi restricted to T is bijective onto Omega
  Rational defect;
  bool defect_below_epsilon = false;
};

/// Throws ContractError when a basis element is not invertible, the basis
/// is dependent or the group is not Z^d (d <= 2); SearchFailure as in
/// build_transversal.
AlgebraProbeReport algebra_tiling_probe(const GroupPtr& group, std::uint32_t p, const std::vector<RingElement>& k_basis,
                                        const Rational& epsilon, const QuotientChain& chain,
                                        const ProbeParams& params = {});

std::string probe_report_json(const AlgebraProbeReport& report, const GroupOracle& group);

}  // namespace gradedgrowth
