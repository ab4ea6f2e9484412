#include "gradedgrowth/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <regex>
#include <sstream>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

CoefficientRing CoefficientRing::prime_field(std::uint32_t p) {
  (void)PrimeField(p);  // validates p
  return CoefficientRing(Kind::prime_field, p);
}

CoefficientRing CoefficientRing::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static const std::regex gf(R"(gf\(?(\d+)\)?|f(\d+))");
  std::smatch m;
  if (std::regex_match(t, m, gf)) return prime_field(static_cast<std::uint32_t>(std::stoul(m[1].matched ? m[1] : m[2])));
  if (t == "z" || t == "int" || t == "integers") return integers();
  if (t == "q" || t == "rat" || t == "rationals") return rationals();
  throw UsageError("unknown coefficient ring '" + text + "' (use gfP, z or q)");
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::prime_field: return "GF(" + std::to_string(p_) + ")";
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
  }
  return "?";
}

Rational CoefficientRing::element(const Rational& x) const {
  switch (kind_) {
    case Kind::rationals: return x;
    case Kind::integers:
      if (denominator(x) != 1) throw ContractError(to_string(x) + " is not an integer");
      return x;
    case Kind::prime_field: {
      const BigInt p = p_;
      const BigInt den = denominator(x) % p;
      if (den == 0) throw ContractError(to_string(x) + " is not defined in " + name());
      const PrimeField f(p_);
      BigInt num = numerator(x) % p;
      if (num < 0) num += p;
      const auto n = static_cast<std::uint32_t>(num);
      const auto d = static_cast<std::uint32_t>(den < 0 ? den + p : den);
      return Rational(f.mul(n, f.inv(d)));
    }
  }
  return x;
}

Rational CoefficientRing::pow(const Rational& x, std::uint64_t e) const {
  return element(gradedgrowth::pow(element(x), e));
}

bool CoefficientRing::is_invertible(const Rational& x) const {
  const Rational y = element(x);
  switch (kind_) {
    case Kind::rationals:
    case Kind::prime_field: return y != 0;
    case Kind::integers: return y == 1 || y == -1;
  }
  return false;
}

Rational CoefficientRing::inverse(const Rational& x) const {
  if (!is_invertible(x)) throw ContractError(to_string(x) + " is not invertible in " + name());
  return element(Rational(1) / element(x));
}

HeckeAlgebra::HeckeAlgebra(GroupPtr group, std::shared_ptr<const WordMetricBall> ball, CoefficientRing ring,
                           const Rational& lambda)
    : group_(std::move(group)), ball_(std::move(ball)), ring_(ring), lambda_(ring.element(lambda)) {}

namespace {

void accumulate(const CoefficientRing& ring, std::map<Element, Rational>& terms, const Element& g,
                const Rational& c) {
  auto [it, inserted] = terms.try_emplace(g, 0);
  it->second = ring.add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

void require_compatible(const HeckeElement& a, const HeckeElement& b) {
  if (!a.algebra || !b.algebra) throw ContractError("Hecke element without an algebra");
  if (a.algebra == b.algebra) return;
  const HeckeAlgebra& x = *a.algebra;
  const HeckeAlgebra& y = *b.algebra;
  if (x.group_ptr() != y.group_ptr() || !(x.ring() == y.ring()) || x.lambda() != y.lambda() ||
      &x.ball() != &y.ball())
    throw ContractError("Hecke elements come from different algebras");
}

}  // namespace

HeckeElement delta(const HeckePtr& algebra, const Element& g, const Rational& coeff) {
  (void)algebra->ball().index_of(g);
  HeckeElement out{algebra, {}};
  const Rational c = algebra->ring().element(coeff);
  if (c != 0) out.terms.emplace(g, c);
  return out;
}

HeckeElement delta_mul(const HeckePtr& algebra, const Element& g, const Element& h) {
  const WordMetricBall& b = algebra->ball();
  const Element gh = algebra->group().product(g, h);
  const std::size_t exponent = b.length(g) + b.length(h) - b.length(gh);
  return delta(algebra, gh, algebra->ring().pow(algebra->lambda(), exponent));
}

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
  require_compatible(a, b);
  HeckeElement out = a;
  for (const auto& [g, c] : b.terms) accumulate(a.algebra->ring(), out.terms, g, c);
  return out;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  require_compatible(a, b);
  const CoefficientRing& ring = a.algebra->ring();
  HeckeElement out{a.algebra, {}};
  for (const auto& [g, c] : a.terms) {
    for (const auto& [h, d] : b.terms) {
      const HeckeElement t = delta_mul(a.algebra, g, h);
      for (const auto& [gh, e] : t.terms) accumulate(ring, out.terms, gh, ring.mul(ring.mul(c, d), e));
    }
  }
  return out;
}

GroupRingElement untwist(const HeckeElement& a) {
  const HeckeAlgebra& alg = *a.algebra;
  if (!alg.ring().is_invertible(alg.lambda()))
    throw ContractError("untwist needs an invertible lambda, got " + to_string(alg.lambda()) + " in " +
                        alg.ring().name());
  GroupRingElement out{alg.ring(), {}};
  for (const auto& [g, c] : a.terms)
    accumulate(alg.ring(), out.terms, g, alg.ring().mul(c, alg.ring().pow(alg.lambda(), alg.ball().length(g))));
  return out;
}

GroupRingElement group_ring_mul(const GroupOracle& group, const GroupRingElement& a, const GroupRingElement& b) {
  if (!(a.ring == b.ring)) throw ContractError("group ring elements over different rings");
  GroupRingElement out{a.ring, {}};
  for (const auto& [g, c] : a.terms)
    for (const auto& [h, d] : b.terms) accumulate(a.ring, out.terms, group.product(g, h), a.ring.mul(c, d));
  return out;
}

namespace {

std::vector<std::pair<int, std::string>> split_terms(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0;
  int sign = 1;
  std::string current;
  auto flush = [&](int next_sign) {
    std::string t;
    for (char c : current)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty()) out.emplace_back(sign, t);
    else if (!out.empty() || sign != 1) throw ParseError("empty term in '" + text + "'");
    current.clear();
    sign = next_sign;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    const auto last = current.find_last_not_of(' ');
    const bool after_caret = last != std::string::npos && current[last] == '^';
    if (depth == 0 && (c == '+' || c == '-') && !after_caret) {
      flush(c == '+' ? 1 : -1);
      continue;
    }
    current += c;
  }
  flush(1);
  return out;
}

}  // namespace

HeckeElement parse_hecke(const HeckePtr& algebra, const std::string& text) {
  HeckeElement out{algebra, {}};
  for (const auto& [sign, term] : split_terms(text)) {
    Rational coeff = 1;
    std::string element_text = term;
    const auto star = term.find('*');
    if (star != std::string::npos) {
      coeff = parse_rational(term.substr(0, star));
      element_text = term.substr(star + 1);
    }
    const Element g = algebra->group().parse_element(element_text);
    out = hecke_add(out, delta(algebra, g, sign * coeff));
  }
  return out;
}

namespace {

std::string format_terms(const GroupOracle& group, const std::map<Element, Rational>& terms,
                         const std::function<std::size_t(const Element&)>& order) {
  if (terms.empty()) return "0";
  std::vector<std::pair<std::size_t, const std::pair<const Element, Rational>*>> sorted;
  for (const auto& t : terms) sorted.emplace_back(order(t.first), &t);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, t] : sorted) {
    Rational c = t->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    os << to_string(c) << "*" << group.format(t->first);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string format(const HeckeElement& a) {
  const WordMetricBall& b = a.algebra->ball();
  return format_terms(a.algebra->group(), a.terms, [&](const Element& g) { return b.index_of(g); });
}

std::string format(const GroupOracle& group, const GroupRingElement& a) {
  std::size_t next = 0;
  std::map<Element, std::size_t> order;
  for (const auto& t : a.terms) order[t.first] = next++;
  return format_terms(group, a.terms, [&](const Element& g) { return order.at(g); });
}

CrystalCheck crystal_monomial_check(const GroupPtr& group, std::size_t radius, std::size_t sample_size,
                                    std::uint64_t seed) {
  auto b = std::make_shared<const WordMetricBall>(ball(*group, 2 * radius, ball_cap_from_environment()));
  auto algebra = std::make_shared<const HeckeAlgebra>(group, b, CoefficientRing::integers(), 0);
  std::size_t n = 0;
  while (n < b->size() && b->length_at(n) <= radius) ++n;
  CrystalCheck result;
  auto check = [&](std::size_t i, std::size_t j) {
    const HeckeElement t = delta_mul(algebra, b->element(i), b->element(j));
    ++result.pairs;
    if (t.terms.empty()) return;
    if (t.terms.size() != 1 || t.terms.begin()->second != 1) result.monomial = false;
    if (b->length(t.terms.begin()->first) != b->length_at(i) + b->length_at(j)) result.graded = false;
  };
  if (sample_size == 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) check(i, j);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < sample_size; ++k) {
      const std::size_t i = pick(rng);
      check(i, pick(rng));
    }
  }
  return result;
}

}  // namespace gradedgrowth
