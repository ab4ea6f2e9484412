#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedgrowth/arith.hpp"
#include "gradedgrowth/finite_group.hpp"
#include "gradedgrowth/group.hpp"

namespace gradedgrowth {

/// Ordered finite subset of a group (enumeration order matters for scans).
using ElementList = std::vector<Element>;

/// AK* = {x : xK meets A} = A K^-1.
ElementSet inverse_envelope(const GroupOracle& group, const ElementSet& a, const ElementSet& k);

struct ThetaParams {
  Rational delta;  // in (0, 1)
  Rational zeta;   // >= 1
};

void validate(const ThetaParams& params);

/// Theta_mu(nu, alpha) = (nu + mu(1-alpha), alpha + mu(1-alpha) zeta / (1-delta)).
std::pair<Rational, Rational> theta(const ThetaParams& params, const Rational& mu, const Rational& nu,
                                    const Rational& alpha);

/// Theta_delta^t(0, 0).
std::pair<Rational, Rational> theta_bar(const ThetaParams& params, std::size_t t);

inline constexpr std::size_t kDefaultFolnerRadius = 128;
inline constexpr std::size_t kDefaultFolnerSetCap = 200'000;

/// Candidate Folner sets in search order: for each radius r, the box
/// [0, r)^d (free abelian groups only) and then the ball B(r).
struct FolnerCandidate {
  std::string shape;  // "box" or "ball"
  std::size_t radius = 0;
  ElementList elements;
};

/// Visits candidates with increasing radius (every radius up to 16, then
/// steps of about r/8) until `accept` returns true. Throws SearchFailure
/// when max_radius or the set cap is reached.
FolnerCandidate folner_search_if(const GroupOracle& group, const std::function<bool(const ElementList&)>& accept,
                                 std::size_t max_radius, std::size_t set_cap, const std::string& what);

/// A set F with set_defect(F, K) < bound.
ElementList folner_search(const GroupOracle& group, const ElementSet& k, const Rational& bound,
                          std::size_t max_radius = kDefaultFolnerRadius, std::size_t set_cap = kDefaultFolnerSetCap);

/// Finite quotient Omega = G/N of a group oracle by a normal subgroup,
/// with cells numbered 0..size-1 (0 is the identity coset).
class QuotientSet {
 public:
  virtual ~QuotientSet() = default;
  virtual std::string name() const = 0;
  /// Spec string accepted by make_quotient, e.g. "zd:2:8".
  virtual std::string spec() const = 0;
  virtual std::size_t size() const = 0;
  virtual std::size_t project(const Element& g) const = 0;
  /// Chosen lift of a cell; project(section(x)) == x.
  virtual Element section(std::size_t x) const = 0;
  /// Product of cells in the quotient group.
  virtual std::size_t mul(std::size_t x, std::size_t y) const = 0;
  virtual std::size_t inv(std::size_t x) const = 0;
  /// Right action of G on Omega.
  std::size_t act(std::size_t x, const Element& g) const { return mul(x, project(g)); }
};

using QuotientPtr = std::shared_ptr<const QuotientSet>;

/// Z^d -> (Z/modulus)^d.
QuotientPtr make_zd_quotient(std::size_t dim, std::uint64_t modulus);
/// Heisenberg -> Heisenberg(Z/modulus), entrywise reduction.
QuotientPtr make_heisenberg_quotient(std::uint64_t modulus);
/// G -> finite group given by the image of every alphabet symbol of G.
QuotientPtr make_coset_table_quotient(const GroupPtr& group, const FiniteGroupPtr& finite,
                                      const std::vector<std::uint32_t>& symbol_images, std::string spec);
/// Images matched by symbol name; spec "table:<key>", key defaulting to the
/// finite group's name. Pass the registry name so the spec can be resolved.
QuotientPtr make_coset_table_quotient(const GroupPtr& group, const FiniteGroupPtr& finite,
                                      const std::string& key = {});

/// Nested quotients N_0 >= N_1 >= ... of a group.
struct QuotientChain {
  std::string name;
  std::size_t levels = 0;  // usable n = 0..levels-1
  std::function<QuotientPtr(std::size_t)> level;
};

/// N_n = (base^n Z)^d.
QuotientChain zd_chain(std::size_t dim, std::uint64_t base = 2, std::size_t levels = 16);
/// N_n = kernel of reduction mod p^n.
QuotientChain heisenberg_chain(std::uint64_t p, std::size_t levels = 8);
QuotientChain explicit_chain(std::string name, std::vector<QuotientPtr> quotients);
/// Rebuilds a quotient from QuotientSet::spec(): "zd:<dim>:<modulus>",
/// "heis:<modulus>" or "table:<finite group>" (symbols matched by name,
/// resolved through `lookup`).
QuotientPtr make_quotient(const GroupPtr& group, const std::string& spec,
                          const std::function<FiniteGroupPtr(const std::string&)>& lookup = {});

/// Lemma-level bookkeeping of one greedy covering step.
struct GreedyResult {
  std::vector<std::size_t> centers;                 // x_1..x_s in scan order
  std::vector<std::vector<std::size_t>> new_cells;  // indices into K of x_j k not in B_(j-1)
  std::vector<char> covered;                        // B_s as a mask on Omega
  std::size_t s = 0;
  std::size_t omega_size = 0;
  std::size_t b_size = 0;
  std::size_t bs_size = 0;
  std::size_t k_size = 0;
  Rational delta, zeta, nu, alpha, mu, nu_prime, alpha_prime;

  // hypotheses
  std::size_t kl_envelope = 0;  // #(K L*)
  std::size_t bk_envelope = 0;  // #(B K*)
  std::size_t bl_envelope = 0;  // #(B L*)
  bool hyp_kl = false;
  bool hyp_bk = false;
  bool hyp_bl = false;

  // conclusions
  std::size_t bsl_envelope = 0;  // #(B_s L*)
  bool overlaps_ok = false;      // every placed tile met B_(j-1) in <= delta #K cells
  bool maximal = false;          // every x has #(B_s cap xK) > delta #K
  bool mu_ge_delta = false;
  bool s_ge_one = false;
  bool eq_nu = false;            // #B_s = nu' #Omega
  bool eq_alpha = false;         // #(B_s L*) <= alpha' #Omega
  std::optional<std::string> counterexample;
};

/// Greedy covering of Omega by translates xK overlapping the covered part
/// in at most delta #K cells, scanning Omega in index order. Throws
/// ContractError unless k -> xk is injective on K and 0 <= nu, alpha < 1.
GreedyResult greedy_fill(const QuotientSet& omega, const std::vector<char>& b, const ElementList& k,
                         const ElementList& l, const Rational& delta, const Rational& zeta, const Rational& alpha);

struct TilingParams {
  std::optional<Rational> delta;
  std::optional<Rational> zeta;
  std::optional<std::size_t> t;
  std::size_t max_radius = kDefaultFolnerRadius;
  std::size_t set_cap = kDefaultFolnerSetCap;
  std::size_t max_cells = std::size_t{1} << 22U;
  std::size_t max_tower = 4096;
};

/// Recipe constants: the largest delta = 2^-k with delta #K < eps/2 and
/// (1 + eps/2)(1 - delta) > 1, the smallest zeta = 1 + 2^-k with
/// (1 - delta)/zeta > 1 - eps/(2#K), and the least t with
/// nu_bar_t > 1 - eps/(2#K).
Rational recipe_delta(std::size_t k_size, const Rational& epsilon);
Rational recipe_zeta(const Rational& delta, std::size_t k_size, const Rational& epsilon);
std::size_t recipe_height(const ThetaParams& params, std::size_t k_size, const Rational& epsilon,
                          std::size_t max_height);

struct TowerLevel {
  std::string shape;
  std::size_t radius = 0;
  ElementList elements;
};

struct Placement {
  std::size_t level = 0;
  Element center;
  ElementList tile;  // K_(i,j), a subset of K_i
};

struct TilingCertificate {
  std::string group;
  std::string chain;
  std::size_t quotient_level = 0;
  std::string quotient;  // QuotientSet::spec()
  std::size_t omega_size = 0;
  ElementList k;
  Rational epsilon;
  Rational delta;
  Rational zeta;
  std::size_t t = 0;
  bool params_override = false;
  std::vector<TowerLevel> tower;  // K_1..K_t
  std::vector<Placement> placements;
  ElementList remainder;
  ElementList transversal;
  Rational defect;
  bool defect_below_epsilon = false;
  std::vector<GreedyResult> trace;  // levels t, t-1, ... as run
  std::vector<std::size_t> trace_levels;
  std::optional<std::size_t> stopped_after;  // level whose step gave alpha >= 1
};

/// Builds a (K, eps)-invariant transversal for the first usable level of
/// the chain. Throws SearchFailure when the tower or the quotient index
/// cannot be found within budget.
TilingCertificate build_transversal(const GroupPtr& group, const ElementSet& k, const Rational& epsilon,
                                    const QuotientChain& chain, const TilingParams& params = {});

struct CertificateCheck {
  bool bijective = false;
  bool disjoint = false;
  bool defect_matches = false;
  Rational recomputed_defect;
  bool ok() const noexcept { return bijective && disjoint && defect_matches; }
  std::string message;
};

/// Independent re-verification: pi restricted to T is a bijection onto
/// Omega, T is the disjoint union of Q and the placed tiles, and the defect
/// recounted from scratch matches.
CertificateCheck verify_certificate(const TilingCertificate& cert, const GroupOracle& group, const QuotientSet& omega);

/// Serialization (exact fractions as {num, den}).
std::string certificate_json(const TilingCertificate& cert, const GroupOracle& group);
TilingCertificate parse_certificate(const std::string& text, const GroupOracle& group);

}  // namespace gradedgrowth
