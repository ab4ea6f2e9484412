#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "gradedgrowth/arith.hpp"
#include "gradedgrowth/ball.hpp"
#include "gradedgrowth/group.hpp"

namespace gradedgrowth {

/// GF(p), Z or Q. Scalars of every ring are stored as Rationals; GF(p)
/// values are kept reduced to [0, p).
class CoefficientRing {
 public:
  enum class Kind { prime_field, integers, rationals };

  static CoefficientRing prime_field(std::uint32_t p);
  static CoefficientRing integers() { return CoefficientRing(Kind::integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::rationals, 0); }
  /// "gf5" / "gf(5)", "z" / "int", "q" / "rat".
  static CoefficientRing parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t p() const noexcept { return p_; }
  std::string name() const;

  /// Maps a rational into the ring; throws ContractError when impossible.
  Rational element(const Rational& x) const;
  Rational add(const Rational& a, const Rational& b) const { return element(a + b); }
  Rational mul(const Rational& a, const Rational& b) const { return element(a * b); }
  /// x^e with 0^0 = 1.
  Rational pow(const Rational& x, std::uint64_t e) const;
  bool is_invertible(const Rational& x) const;
  Rational inverse(const Rational& x) const;

  bool operator==(const CoefficientRing& o) const { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  CoefficientRing(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// (kG)_lambda on the elements of a fixed word-metric ball.
class HeckeAlgebra {
 public:
  HeckeAlgebra(GroupPtr group, std::shared_ptr<const WordMetricBall> ball, CoefficientRing ring,
               const Rational& lambda);

  const GroupOracle& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const WordMetricBall& ball() const noexcept { return *ball_; }
  const CoefficientRing& ring() const noexcept { return ring_; }
  const Rational& lambda() const noexcept { return lambda_; }

 private:
  GroupPtr group_;
  std::shared_ptr<const WordMetricBall> ball_;
  CoefficientRing ring_;
  Rational lambda_;
};

using HeckePtr = std::shared_ptr<const HeckeAlgebra>;

/// Finitely supported sum of delta_g; zero coefficients are never stored.
struct HeckeElement {
  HeckePtr algebra;
  std::map<Element, Rational> terms;

  bool operator==(const HeckeElement& o) const { return algebra == o.algebra && terms == o.terms; }
};

/// Element of the ordinary group ring over a coefficient ring.
struct GroupRingElement {
  CoefficientRing ring = CoefficientRing::integers();
  std::map<Element, Rational> terms;

  bool operator==(const GroupRingElement& o) const { return ring == o.ring && terms == o.terms; }
};

/// coeff * delta_g; g must lie in the ball.
HeckeElement delta(const HeckePtr& algebra, const Element& g, const Rational& coeff = 1);
/// lambda^(l(g)+l(h)-l(gh)) delta_gh.
HeckeElement delta_mul(const HeckePtr& algebra, const Element& g, const Element& h);
HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);
/// delta_g -> lambda^l(g) g; lambda must be invertible.
GroupRingElement untwist(const HeckeElement& a);
GroupRingElement group_ring_mul(const GroupOracle& group, const GroupRingElement& a, const GroupRingElement& b);

/// Parses "coeff*g + coeff*h - g" where g, h are words or tuples.
HeckeElement parse_hecke(const HeckePtr& algebra, const std::string& text);
std::string format(const HeckeElement& a);
std::string format(const GroupOracle& group, const GroupRingElement& a);

struct CrystalCheck {
  bool monomial = true;  // every product is 0 or a single delta with coefficient 1
  bool graded = true;    // nonzero products of lengths m, n have length m + n
  std::size_t pairs = 0;
};

/// Checks delta_g delta_h at lambda = 0 for pairs g, h of length <= radius:
/// all pairs when sample_size == 0, otherwise sample_size random pairs.
CrystalCheck crystal_monomial_check(const GroupPtr& group, std::size_t radius, std::size_t sample_size = 0,
                                    std::uint64_t seed = 0);

}  // namespace gradedgrowth
