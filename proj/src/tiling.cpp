#include "gradedgrowth/tiling.hpp"

#include <algorithm>
#include <unordered_set>

#include "gradedgrowth/ball.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/subspace.hpp"

namespace gradedgrowth {

namespace {

using HashSet = std::unordered_set<Element, ElementHash>;

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

Rational ratio(std::size_t a, std::size_t b) {
  return Rational(BigInt(static_cast<unsigned long long>(a)), BigInt(static_cast<unsigned long long>(b)));
}

Rational count(std::size_t a) { return Rational(BigInt(static_cast<unsigned long long>(a))); }

/// #(A B^-1) >= threshold in G; stops counting once the threshold is met.
bool envelope_reaches(const GroupOracle& group, const ElementList& a, const ElementList& b, std::size_t threshold) {
  if (std::max(a.size(), b.size()) >= threshold) return true;
  HashSet out;
  out.reserve(threshold * 2);
  for (const auto& y : b) {
    const Element yinv = group.inverse(y);
    for (const auto& x : a) {
      out.insert(group.product(x, yinv));
      if (out.size() >= threshold) return true;
    }
  }
  return false;
}

/// #(A B) > threshold in G, for 1 in B.
bool outer_exceeds(const GroupOracle& group, const ElementList& a, const ElementList& b, std::size_t threshold) {
  HashSet out(a.begin(), a.end());
  if (out.size() > threshold) return true;
  for (const auto& y : b)
    for (const auto& x : a) {
      out.insert(group.product(x, y));
      if (out.size() > threshold) return true;
    }
  return false;
}

/// Least integer m with m >= q.
std::size_t ceil_count(const Rational& q) {
  const BigInt n = boost::multiprecision::numerator(q);
  const BigInt d = boost::multiprecision::denominator(q);
  BigInt c = n / d;
  if (c * d < n) ++c;
  return static_cast<std::size_t>(c);
}

/// Greatest integer m with m <= q (q >= 0).
std::size_t floor_count(const Rational& q) {
  return static_cast<std::size_t>(BigInt(boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q)));
}

ElementList box(std::size_t dim, std::size_t side) {
  ElementList out;
  Element cur(dim, 0);
  if (side == 0) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < dim) {
      if (++cur[i] < static_cast<std::int64_t>(side)) break;
      cur[i] = 0;
      ++i;
    }
    if (i == dim) break;
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > cap / base) throw ResourceError("quotient too large");
    v *= base;
  }
  return v;
}

class ZdQuotient final : public QuotientSet {
 public:
  ZdQuotient(std::size_t dim, std::uint64_t q) : dim_(dim), q_(static_cast<std::int64_t>(q)) {
    if (dim == 0 || q == 0) throw ContractError("Z^d quotient needs d >= 1 and modulus >= 1");
    size_ = checked_pow(q, dim, std::uint64_t{1} << 40U);
  }
  std::string name() const override {
    return "(Z/" + std::to_string(q_) + ")^" + std::to_string(dim_);
  }
  std::string spec() const override { return "zd:" + std::to_string(dim_) + ":" + std::to_string(q_); }
  std::size_t size() const override { return size_; }
  std::size_t project(const Element& g) const override {
    if (g.size() != dim_) throw ContractError("element of the wrong dimension");
    std::size_t x = 0;
    for (std::size_t i = dim_; i-- > 0;) x = x * q_ + static_cast<std::size_t>(floor_mod(g[i], q_));
    return x;
  }
  Element section(std::size_t x) const override {
    Element g(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      g[i] = static_cast<std::int64_t>(x % q_);
      x /= q_;
    }
    return g;
  }
  std::size_t mul(std::size_t x, std::size_t y) const override {
    std::size_t out = 0;
    std::size_t place = 1;
    const auto q = static_cast<std::size_t>(q_);
    for (std::size_t i = 0; i < dim_; ++i) {
      std::size_t c = x % q + y % q;
      if (c >= q) c -= q;
      out += c * place;
      place *= q;
      x /= q;
      y /= q;
    }
    return out;
  }
  std::size_t inv(std::size_t x) const override {
    std::size_t out = 0;
    std::size_t place = 1;
    const auto q = static_cast<std::size_t>(q_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const std::size_t c = x % q;
      out += (c == 0 ? 0 : q - c) * place;
      place *= q;
      x /= q;
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::int64_t q_;
  std::size_t size_ = 1;
};

class HeisenbergQuotient final : public QuotientSet {
 public:
  explicit HeisenbergQuotient(std::uint64_t q) : q_(static_cast<std::int64_t>(q)) {
    if (q == 0) throw ContractError("modulus must be >= 1");
    size_ = checked_pow(q, 3, std::uint64_t{1} << 40U);
  }
  std::string name() const override { return "Heis(Z/" + std::to_string(q_) + ")"; }
  std::string spec() const override { return "heis:" + std::to_string(q_); }
  std::size_t size() const override { return size_; }
  std::size_t project(const Element& g) const override {
    if (g.size() != 3) throw ContractError("Heisenberg elements are triples");
    return encode(floor_mod(g[0], q_), floor_mod(g[1], q_), floor_mod(g[2], q_));
  }
  Element section(std::size_t x) const override {
    const auto q = static_cast<std::size_t>(q_);
    return {static_cast<std::int64_t>(x % q), static_cast<std::int64_t>((x / q) % q),
            static_cast<std::int64_t>(x / q / q)};
  }
  std::size_t mul(std::size_t x, std::size_t y) const override {
    const Element a = section(x);
    const Element b = section(y);
    return encode(floor_mod(a[0] + b[0], q_), floor_mod(a[1] + b[1], q_), floor_mod(a[2] + b[2] + a[0] * b[1], q_));
  }
  std::size_t inv(std::size_t x) const override {
    const Element a = section(x);
    return encode(floor_mod(-a[0], q_), floor_mod(-a[1], q_), floor_mod(-a[2] + a[0] * a[1], q_));
  }

 private:
  std::size_t encode(std::int64_t a, std::int64_t b, std::int64_t c) const {
    const auto q = static_cast<std::size_t>(q_);
    return static_cast<std::size_t>(a) + q * (static_cast<std::size_t>(b) + q * static_cast<std::size_t>(c));
  }
  std::int64_t q_;
  std::size_t size_ = 1;
};

class CosetTableQuotient final : public QuotientSet {
 public:
  CosetTableQuotient(GroupPtr group, FiniteGroupPtr finite, std::vector<std::uint32_t> images, std::string spec)
      : group_(std::move(group)), finite_(std::move(finite)), images_(std::move(images)), spec_(std::move(spec)) {
    if (images_.size() != group_->alphabet().size())
      throw ContractError("one image per alphabet symbol is required");
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (images_[s] >= finite_->size()) throw ContractError("symbol image outside the finite group");
      const std::size_t si = group_->alphabet().inverse(s);
      if (finite_->mul(images_[s], images_[si]) != 0) throw ContractError("symbol images do not respect inverses");
    }
    // BFS lifts through the images; every cell must be reached.
    lift_.assign(finite_->size(), Word{});
    std::vector<char> seen(finite_->size(), 0);
    std::vector<std::uint32_t> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t x = queue[head];
      for (std::size_t s = 0; s < images_.size(); ++s) {
        const std::uint32_t y = finite_->mul(x, images_[s]);
        if (seen[y]) continue;
        seen[y] = 1;
        lift_[y] = lift_[x];
        lift_[y].push_back(s);
        queue.push_back(y);
      }
    }
    if (queue.size() != finite_->size()) throw ContractError("symbol images do not generate the finite group");
  }
  std::string name() const override { return finite_->name(); }
  std::string spec() const override { return spec_; }
  std::size_t size() const override { return finite_->size(); }
  std::size_t project(const Element& g) const override {
    std::uint32_t x = 0;
    for (std::size_t s : group_->word_of(g)) x = finite_->mul(x, images_[s]);
    return x;
  }
  Element section(std::size_t x) const override { return group_->normalize(lift_.at(x)); }
  std::size_t mul(std::size_t x, std::size_t y) const override {
    return finite_->mul(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
  }
  std::size_t inv(std::size_t x) const override { return finite_->inv(static_cast<std::uint32_t>(x)); }

 private:
  GroupPtr group_;
  FiniteGroupPtr finite_;
  std::vector<std::uint32_t> images_;
  std::string spec_;
  std::vector<Word> lift_;
};

std::vector<std::size_t> project_all(const QuotientSet& omega, const ElementList& k) {
  std::vector<std::size_t> out;
  out.reserve(k.size());
  for (const auto& g : k) out.push_back(omega.project(g));
  return out;
}

bool injective(std::vector<std::size_t> cells) {
  std::sort(cells.begin(), cells.end());
  return std::adjacent_find(cells.begin(), cells.end()) == cells.end();
}

/// #{x in Omega : x K meets A} for A given by a mask.
std::size_t cell_envelope(const QuotientSet& omega, const std::vector<char>& a, const std::vector<std::size_t>& k) {
  std::vector<std::size_t> kinv;
  kinv.reserve(k.size());
  for (std::size_t c : k) kinv.push_back(omega.inv(c));
  std::vector<char> hit(a.size(), 0);
  std::size_t n = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!a[x]) continue;
    for (std::size_t c : kinv) {
      const std::size_t y = omega.mul(x, c);
      if (!hit[y]) {
        hit[y] = 1;
        ++n;
      }
    }
  }
  return n;
}

}  // namespace

ElementSet inverse_envelope(const GroupOracle& group, const ElementSet& a, const ElementSet& k) {
  ElementSet out;
  std::vector<Element> kinv;
  kinv.reserve(k.size());
  for (const auto& x : k) kinv.push_back(group.inverse(x));
  for (const auto& x : a)
    for (const auto& y : kinv) out.insert(group.product(x, y));
  return out;
}

void validate(const ThetaParams& params) {
  if (params.delta <= 0 || params.delta >= 1) throw ContractError("delta must lie in (0, 1)");
  if (params.zeta < 1) throw ContractError("zeta must be >= 1");
}

std::pair<Rational, Rational> theta(const ThetaParams& params, const Rational& mu, const Rational& nu,
                                    const Rational& alpha) {
  validate(params);
  if (mu < params.delta) throw ContractError("theta needs mu >= delta");
  const Rational gain = mu * (Rational(1) - alpha);
  return {nu + gain, alpha + gain / (Rational(1) - params.delta) * params.zeta};
}

std::pair<Rational, Rational> theta_bar(const ThetaParams& params, std::size_t t) {
  std::pair<Rational, Rational> v{Rational(0), Rational(0)};
  for (std::size_t i = 0; i < t; ++i) v = theta(params, params.delta, v.first, v.second);
  return v;
}

FolnerCandidate folner_search_if(const GroupOracle& group, const std::function<bool(const ElementList&)>& accept,
                                 std::size_t max_radius, std::size_t set_cap, const std::string& what) {
  const bool boxes = group.kind() == GroupKind::free_abelian;
  const std::size_t dim = group.identity().size();
  std::size_t r = 0;
  while (r <= max_radius) {
    if (boxes && r >= 1) {
      std::uint64_t vol = 1;
      bool small = true;
      for (std::size_t i = 0; i < dim && small; ++i) {
        vol *= r;
        small = vol <= set_cap;
      }
      if (small) {
        ElementList b = box(dim, r);
        if (accept(b)) return {"box", r, std::move(b)};
      }
    }
    WordMetricBall bl;
    try {
      bl = ball(group, r, set_cap);
    } catch (const ResourceError&) {
      throw SearchFailure("no candidate for " + what + " within the set cap of " + std::to_string(set_cap) +
                          " elements (reached radius " + std::to_string(r) + ")");
    }
    if (accept(bl.elements())) return {"ball", r, bl.elements()};
    r += r < 16 ? 1 : std::max<std::size_t>(1, r / 8);
  }
  throw SearchFailure("no candidate for " + what + " up to radius " + std::to_string(max_radius));
}

ElementList folner_search(const GroupOracle& group, const ElementSet& k, const Rational& bound,
                          std::size_t max_radius, std::size_t set_cap) {
  if (bound <= 0) throw ContractError("Folner bound must be positive");
  const ElementList kl(k.begin(), k.end());
  auto accept = [&](const ElementList& f) {
    if (f.empty()) return false;
    HashSet both(f.begin(), f.end());
    for (const auto& x : f)
      for (const auto& s : kl) both.insert(group.product(x, s));
    return ratio(both.size() - f.size(), f.size()) < bound;
  };
  return folner_search_if(group, accept, max_radius, set_cap, "set defect < " + to_string(bound)).elements;
}

QuotientPtr make_zd_quotient(std::size_t dim, std::uint64_t modulus) {
  return std::make_shared<ZdQuotient>(dim, modulus);
}

QuotientPtr make_heisenberg_quotient(std::uint64_t modulus) {
  return std::make_shared<HeisenbergQuotient>(modulus);
}

QuotientPtr make_coset_table_quotient(const GroupPtr& group, const FiniteGroupPtr& finite,
                                      const std::vector<std::uint32_t>& symbol_images, std::string spec) {
  return std::make_shared<CosetTableQuotient>(group, finite, symbol_images, std::move(spec));
}

QuotientPtr make_coset_table_quotient(const GroupPtr& group, const FiniteGroupPtr& finite, const std::string& key) {
  std::vector<std::uint32_t> images;
  for (const auto& sym : group->alphabet().symbols()) {
    if (!finite->alphabet().contains(sym))
      throw ContractError("finite group " + finite->name() + " has no symbol '" + sym + "'");
    images.push_back(finite->symbol_element(finite->alphabet().find(sym)));
  }
  return make_coset_table_quotient(group, finite, images, "table:" + (key.empty() ? finite->name() : key));
}

QuotientChain zd_chain(std::size_t dim, std::uint64_t base, std::size_t levels) {
  if (base < 2) throw ContractError("chain base must be >= 2");
  QuotientChain c;
  c.name = "(" + std::to_string(base) + "^n Z)^" + std::to_string(dim);
  c.levels = levels;
  c.level = [dim, base](std::size_t n) { return make_zd_quotient(dim, checked_pow(base, n, std::uint64_t{1} << 40U)); };
  return c;
}

QuotientChain heisenberg_chain(std::uint64_t p, std::size_t levels) {
  if (p < 2) throw ContractError("chain base must be >= 2");
  QuotientChain c;
  c.name = "Heis mod " + std::to_string(p) + "^n";
  c.levels = levels;
  c.level = [p](std::size_t n) { return make_heisenberg_quotient(checked_pow(p, n, std::uint64_t{1} << 20U)); };
  return c;
}

QuotientChain explicit_chain(std::string name, std::vector<QuotientPtr> quotients) {
  QuotientChain c;
  c.name = std::move(name);
  c.levels = quotients.size();
  c.level = [qs = std::move(quotients)](std::size_t n) { return qs.at(n); };
  return c;
}

QuotientPtr make_quotient(const GroupPtr& group, const std::string& spec,
                          const std::function<FiniteGroupPtr(const std::string&)>& lookup) {
  auto number = [&](const std::string& text) -> std::uint64_t {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(text, &used);
      if (used != text.size()) throw ParseError("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("bad quotient spec '" + spec + "'");
    }
  };
  if (spec.rfind("zd:", 0) == 0) {
    const auto colon = spec.find(':', 3);
    if (colon == std::string::npos) throw ParseError("bad quotient spec '" + spec + "'");
    if (group->kind() != GroupKind::free_abelian) throw ContractError("zd quotients need a free abelian group");
    const auto dim = number(spec.substr(3, colon - 3));
    if (dim != group->identity().size()) throw ContractError("quotient dimension differs from the group");
    return make_zd_quotient(dim, number(spec.substr(colon + 1)));
  }
  if (spec.rfind("heis:", 0) == 0) {
    if (group->kind() != GroupKind::heisenberg) throw ContractError("heis quotients need the Heisenberg group");
    return make_heisenberg_quotient(number(spec.substr(5)));
  }
  if (spec.rfind("table:", 0) == 0) {
    if (!lookup) throw UsageError("table quotients need a group registry");
    return make_coset_table_quotient(group, lookup(spec.substr(6)), spec.substr(6));
  }
  throw ParseError("unknown quotient spec '" + spec + "'");
}

GreedyResult greedy_fill(const QuotientSet& omega, const std::vector<char>& b, const ElementList& k,
                         const ElementList& l, const Rational& delta, const Rational& zeta, const Rational& alpha) {
  const std::size_t n = omega.size();
  if (b.size() != n) throw ContractError("B must be a mask on Omega");
  if (k.empty()) throw ContractError("K must be nonempty");
  if (delta <= 0 || delta >= 1) throw ContractError("delta must lie in (0, 1)");
  if (zeta < 1) throw ContractError("zeta must be >= 1");
  if (alpha < 0 || alpha >= 1) throw ContractError("alpha must lie in [0, 1)");
  const auto kc = project_all(omega, k);
  const auto lc = project_all(omega, l);
  if (!injective(kc)) throw ContractError("the orbit map k -> xk is not injective on K");

  GreedyResult r;
  r.omega_size = n;
  r.k_size = k.size();
  r.b_size = static_cast<std::size_t>(std::count(b.begin(), b.end(), char{1}));
  r.delta = delta;
  r.zeta = zeta;
  r.alpha = alpha;
  r.nu = ratio(r.b_size, n);
  if (r.nu >= 1) throw ContractError("nu must lie in [0, 1): B already covers Omega");

  // hypotheses, counted in Omega
  {
    std::vector<char> kmask(n, 0);
    for (std::size_t c : kc) kmask[c] = 1;
    r.kl_envelope = cell_envelope(omega, kmask, lc);
  }
  r.bk_envelope = cell_envelope(omega, b, kc);
  r.bl_envelope = cell_envelope(omega, b, lc);
  r.hyp_kl = count(r.kl_envelope) <= zeta * count(k.size());
  r.hyp_bk = count(r.bk_envelope) <= alpha * count(n);
  r.hyp_bl = count(r.bl_envelope) <= alpha * count(n);

  // overlap <= delta #K  <=>  overlap <= floor(delta #K)
  const std::size_t limit = floor_count(delta * count(k.size()));

  auto overlap_exceeds = [&](const std::vector<char>& cover, std::size_t x) {
    std::size_t hits = 0;
    for (std::size_t c : kc)
      if (cover[omega.mul(x, c)] && ++hits > limit) return true;
    return false;
  };

  r.covered = b;
  for (std::size_t x = 0; x < n; ++x) {
    if (overlap_exceeds(r.covered, x)) continue;
    std::vector<std::size_t> fresh;
    for (std::size_t i = 0; i < kc.size(); ++i) {
      const std::size_t y = omega.mul(x, kc[i]);
      if (!r.covered[y]) fresh.push_back(i);
    }
    for (std::size_t i : fresh) r.covered[omega.mul(x, kc[i])] = 1;
    r.centers.push_back(x);
    r.new_cells.push_back(std::move(fresh));
  }
  r.s = r.centers.size();
  r.bs_size = static_cast<std::size_t>(std::count(r.covered.begin(), r.covered.end(), char{1}));

  // replay the placements against the stated overlap bound
  {
    std::vector<char> cover = b;
    r.overlaps_ok = true;
    for (std::size_t x : r.centers) {
      if (overlap_exceeds(cover, x)) r.overlaps_ok = false;
      for (std::size_t c : kc) cover[omega.mul(x, c)] = 1;
    }
    r.overlaps_ok = r.overlaps_ok && cover == r.covered;
  }
  r.maximal = true;
  for (std::size_t x = 0; x < n && r.maximal; ++x) r.maximal = overlap_exceeds(r.covered, x);

  r.mu = (ratio(r.bs_size, n) - r.nu) / (Rational(1) - alpha);
  const Rational gain = r.mu * (Rational(1) - alpha);
  r.nu_prime = r.nu + gain;
  r.alpha_prime = alpha + gain / (Rational(1) - delta) * zeta;
  r.bsl_envelope = cell_envelope(omega, r.covered, lc);
  r.mu_ge_delta = r.mu >= delta;
  r.s_ge_one = r.s >= 1;
  r.eq_nu = count(r.bs_size) == r.nu_prime * count(n);
  r.eq_alpha = count(r.bsl_envelope) <= r.alpha_prime * count(n);

  if (!r.overlaps_ok || !r.maximal || !r.eq_nu) {
    r.counterexample = "internal bookkeeping failed (overlaps " + std::to_string(r.overlaps_ok) + ", maximal " +
                       std::to_string(r.maximal) + ")";
  } else if (r.hyp_bk && (!r.mu_ge_delta || !r.s_ge_one)) {
    r.counterexample = "mu = " + to_string(r.mu) + " < delta with #(BK*) <= alpha #Omega";
  } else if (r.hyp_bk && r.hyp_bl && r.hyp_kl && !r.eq_alpha) {
    r.counterexample = "#(B_s L*) = " + std::to_string(r.bsl_envelope) + " > alpha' #Omega under the hypotheses";
  }
  return r;
}

Rational recipe_delta(std::size_t k_size, const Rational& epsilon) {
  if (k_size == 0 || epsilon <= 0) throw ContractError("recipe needs #K >= 1 and eps > 0");
  const Rational half = epsilon / 2;
  Rational delta(BigInt(1), BigInt(2));
  for (int i = 0; i < 256; ++i, delta /= 2)
    if (delta * count(k_size) < half && (Rational(1) + half) * (Rational(1) - delta) > 1) return delta;
  throw ContractError("no delta = 2^-k meets the overlap conditions");
}

Rational recipe_zeta(const Rational& delta, std::size_t k_size, const Rational& epsilon) {
  const Rational target = Rational(1) - epsilon / (2 * count(k_size));
  Rational step(1);
  for (int i = 0; i < 256; ++i, step /= 2) {
    const Rational zeta = Rational(1) + step;
    if ((Rational(1) - delta) / zeta > target) return zeta;
  }
  throw ContractError("no zeta = 1 + 2^-k meets the relative Folner condition");
}

std::size_t recipe_height(const ThetaParams& params, std::size_t k_size, const Rational& epsilon,
                          std::size_t max_height) {
  validate(params);
  const Rational target = Rational(1) - epsilon / (2 * count(k_size));
  std::pair<Rational, Rational> v{Rational(0), Rational(0)};
  for (std::size_t t = 1; t <= max_height; ++t) {
    v = theta(params, params.delta, v.first, v.second);
    if (v.first > target) return t;
  }
  throw ResourceError("tower height exceeds " + std::to_string(max_height));
}

TilingCertificate build_transversal(const GroupPtr& group, const ElementSet& k, const Rational& epsilon,
                                    const QuotientChain& chain, const TilingParams& params) {
  if (k.empty() || !k.count(group->identity())) throw ContractError("K must contain the identity");
  if (epsilon <= 0) throw ContractError("epsilon must be positive");

  TilingCertificate cert;
  cert.group = group->name();
  cert.chain = chain.name;
  cert.k.assign(k.begin(), k.end());
  cert.epsilon = epsilon;
  cert.params_override = params.delta || params.zeta || params.t;
  cert.delta = params.delta ? *params.delta : recipe_delta(k.size(), epsilon);
  cert.zeta = params.zeta ? *params.zeta : recipe_zeta(cert.delta, k.size(), epsilon);
  const ThetaParams tp{cert.delta, cert.zeta};
  validate(tp);
  cert.t = params.t ? *params.t : recipe_height(tp, k.size(), epsilon, params.max_tower);
  if (cert.t == 0) throw ContractError("tower height must be >= 1");
  if (cert.t > params.max_tower) throw ResourceError("tower height exceeds " + std::to_string(params.max_tower));

  // Rokhlin tower K_1..K_t; level 0 is K itself
  const Rational grow = (Rational(1) + epsilon / 2) * (Rational(1) - cert.delta);
  std::vector<ElementList> levels{cert.k};
  for (std::size_t i = 1; i <= cert.t; ++i) {
    std::string last;
    auto accept = [&](const ElementList& cand) {
      const Rational size = count(cand.size());
      // #(K_i K) <= grow #K_i  and  #(K_i K_j*) < zeta #K_i  (the latter fails iff the count reaches ceil)
      if (outer_exceeds(*group, cand, cert.k, floor_count(grow * size))) {
        last = "#(K_" + std::to_string(i) + " K) <= (1+eps/2)(1-delta) #K_" + std::to_string(i);
        return false;
      }
      const std::size_t bound = ceil_count(cert.zeta * size);
      for (std::size_t j = i; j-- > 0;) {
        if (envelope_reaches(*group, cand, levels[j], bound)) {
          last = "#(K_" + std::to_string(i) + " K_" + std::to_string(j) + "*) < zeta #K_" + std::to_string(i);
          return false;
        }
      }
      return true;
    };
    FolnerCandidate found;
    try {
      found = folner_search_if(*group, accept, params.max_radius, params.set_cap,
                               "tower level " + std::to_string(i));
    } catch (const SearchFailure& e) {
      throw SearchFailure("Rokhlin tower level " + std::to_string(i) + " of " + std::to_string(cert.t) +
                          ": unmet constraint " + last + "; " + e.what());
    }
    levels.push_back(found.elements);
    cert.tower.push_back({found.shape, found.radius, std::move(found.elements)});
  }

  // quotient index: pi injective on every K_i
  QuotientPtr omega;
  for (std::size_t n = 0; n < chain.levels && !omega; ++n) {
    QuotientPtr cand;
    try {
      cand = chain.level(n);
    } catch (const ResourceError&) {
      break;
    }
    if (cand->size() > params.max_cells) break;
    bool ok = true;
    for (std::size_t i = 1; i <= cert.t && ok; ++i) ok = injective(project_all(*cand, levels[i]));
    if (ok) {
      omega = cand;
      cert.quotient_level = n;
    }
  }
  if (!omega)
    throw SearchFailure("no level of " + chain.name + " within " + std::to_string(params.max_cells) +
                        " cells separates the tower");
  cert.quotient = omega->spec();
  cert.omega_size = omega->size();

  std::vector<char> covered(omega->size(), 0);
  Rational alpha(0);
  for (std::size_t i = cert.t; i >= 1; --i) {
    GreedyResult step = greedy_fill(*omega, covered, levels[i], levels[i - 1], cert.delta, cert.zeta, alpha);
    for (std::size_t j = 0; j < step.s; ++j) {
      Placement p;
      p.level = i;
      p.center = omega->section(step.centers[j]);
      for (std::size_t idx : step.new_cells[j]) p.tile.push_back(levels[i][idx]);
      cert.placements.push_back(std::move(p));
    }
    covered = step.covered;
    alpha = step.alpha_prime;
    const bool full = step.bs_size == omega->size();
    cert.trace.push_back(std::move(step));
    cert.trace_levels.push_back(i);
    if (alpha >= 1 || full) {
      if (i > 1) cert.stopped_after = i;
      break;
    }
  }

  for (std::size_t x = 0; x < covered.size(); ++x)
    if (!covered[x]) cert.remainder.push_back(omega->section(x));
  cert.transversal = cert.remainder;
  for (const auto& p : cert.placements)
    for (const auto& g : p.tile) cert.transversal.push_back(group->product(p.center, g));
  cert.defect = set_defect(*group, ElementSet(cert.transversal.begin(), cert.transversal.end()), k);
  cert.defect_below_epsilon = cert.defect < epsilon;
  return cert;
}

CertificateCheck verify_certificate(const TilingCertificate& cert, const GroupOracle& group, const QuotientSet& omega) {
  CertificateCheck c;
  const std::size_t n = omega.size();

  std::vector<char> hit(n, 0);
  c.bijective = cert.transversal.size() == n;
  for (const auto& g : cert.transversal) {
    const std::size_t x = omega.project(g);
    if (hit[x]) c.bijective = false;
    hit[x] = 1;
  }
  if (!c.bijective) c.message += "projection is not a bijection; ";

  // T = Q + sum x K_(i,j) as a disjoint union of subsets of the tower levels
  HashSet pieces;
  std::size_t total = 0;
  bool tiles_in_tower = true;
  for (const auto& q : cert.remainder) {
    pieces.insert(q);
    ++total;
  }
  for (const auto& p : cert.placements) {
    if (p.level == 0 || p.level > cert.tower.size()) {
      tiles_in_tower = false;
      continue;
    }
    const auto& lvl = cert.tower[p.level - 1].elements;
    const HashSet level_set(lvl.begin(), lvl.end());
    for (const auto& g : p.tile) {
      if (!level_set.count(g)) tiles_in_tower = false;
      pieces.insert(group.product(p.center, g));
      ++total;
    }
  }
  const HashSet tset(cert.transversal.begin(), cert.transversal.end());
  c.disjoint = tiles_in_tower && total == pieces.size() && pieces == tset && tset.size() == cert.transversal.size();
  if (!c.disjoint) c.message += "decomposition is not a disjoint union of tower tiles; ";

  // recount #(T u TK) - #T directly
  if (!cert.transversal.empty()) {
    std::size_t outside = 0;
    HashSet extra;
    for (const auto& g : cert.transversal)
      for (const auto& s : cert.k) {
        Element h = group.product(g, s);
        if (!tset.count(h) && extra.insert(std::move(h)).second) ++outside;
      }
    c.recomputed_defect = ratio(outside, cert.transversal.size());
    c.defect_matches = c.recomputed_defect == cert.defect;
  }
  if (!c.defect_matches) c.message += "defect recount differs; ";
  if (c.message.empty()) c.message = "ok";
  return c;
}

}  // namespace gradedgrowth
