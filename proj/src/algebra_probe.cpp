#include "gradedgrowth/algebra_probe.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "gradedgrowth/error.hpp"
#include "gradedgrowth/linalg.hpp"

namespace gradedgrowth {

namespace {

Rational ratio(std::size_t a, std::size_t b) {
  return Rational(BigInt(static_cast<unsigned long long>(a)), BigInt(static_cast<unsigned long long>(b)));
}

Rational count(std::size_t a) { return Rational(BigInt(static_cast<unsigned long long>(a))); }

std::size_t floor_count(const Rational& q) {
  return static_cast<std::size_t>(BigInt(boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q)));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

RingElement normalize_terms(std::map<Element, std::uint32_t> terms) {
  RingElement out;
  for (auto& [g, c] : terms)
    if (c != 0) out.emplace_back(g, c);
  return out;
}

RingElement ring_mul(const GroupOracle& group, const PrimeField& f, const RingElement& a, const RingElement& b) {
  std::map<Element, std::uint32_t> acc;
  for (const auto& [g, c] : a)
    for (const auto& [h, d] : b) {
      auto& slot = acc[group.product(g, h)];
      slot = f.add(slot, f.mul(c, d));
    }
  return normalize_terms(std::move(acc));
}

bool invertible(const RingElement& r) { return r.size() == 1 && r.front().second != 0; }

RingElement ring_inverse(const GroupOracle& group, const PrimeField& f, const RingElement& r) {
  if (!invertible(r)) throw ContractError("element is not invertible in the group ring");
  return {{group.inverse(r.front().first), f.inv(r.front().second)}};
}

/// Dimension of the span of ring elements with finite support.
std::size_t span_dim(const std::vector<RingElement>& vs, std::uint32_t p) {
  bool monomial = true;
  for (const auto& v : vs) monomial = monomial && v.size() <= 1;
  if (monomial) {
    std::vector<Element> support;
    for (const auto& v : vs)
      if (!v.empty()) support.push_back(v.front().first);
    std::sort(support.begin(), support.end());
    return static_cast<std::size_t>(std::unique(support.begin(), support.end()) - support.begin());
  }
  std::unordered_map<Element, std::size_t, ElementHash> index;
  for (const auto& v : vs)
    for (const auto& term : v) index.emplace(term.first, index.size());
  Echelon e(p, index.size());
  for (const auto& v : vs) {
    Vec dense(index.size(), 0);
    for (const auto& [g, c] : v) dense[index.at(g)] = c;
    e.insert(std::move(dense));
  }
  return e.rank();
}

std::vector<RingElement> products(const GroupOracle& group, const PrimeField& f, const std::vector<RingElement>& a,
                                  const std::vector<RingElement>& b) {
  std::vector<RingElement> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(ring_mul(group, f, x, y));
  return out;
}

std::vector<RingElement> inverses(const GroupOracle& group, const PrimeField& f, const std::vector<RingElement>& a) {
  std::vector<RingElement> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(ring_inverse(group, f, x));
  return out;
}

/// A ring element pushed to F_p[Omega], as (cell, coefficient) terms.
SparseVec project(const QuotientSet& omega, const PrimeField& f, const RingElement& r) {
  std::map<std::size_t, std::uint32_t> acc;
  for (const auto& [g, c] : r) {
    auto& slot = acc[omega.project(g)];
    slot = f.add(slot, c);
  }
  SparseVec out;
  for (auto [cell, c] : acc)
    if (c != 0) out.emplace_back(cell, c);
  return out;
}

/// v * y in F_p[Omega] for dense v and sparse y.
Vec right_mul(const QuotientSet& omega, const PrimeField& f, const Vec& v, const SparseVec& y) {
  Vec out(v.size(), 0);
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[x] == 0) continue;
    for (const auto& [c, a] : y) {
      const std::size_t z = omega.mul(x, c);
      out[z] = f.add(out[z], f.mul(v[x], a));
    }
  }
  return out;
}

/// e_x * y.
Vec cell_times(const QuotientSet& omega, std::size_t x, const SparseVec& y) {
  Vec out(omega.size(), 0);
  for (const auto& [c, a] : y) out[omega.mul(x, c)] = a;  // distinct cells: x*c is injective in c
  return out;
}

std::size_t dim_of_products(const QuotientSet& omega, const PrimeField& f, const std::vector<Vec>& rows,
                            const std::vector<SparseVec>& by) {
  Echelon e(f.p(), omega.size());
  for (const auto& r : rows)
    for (const auto& y : by) {
      e.insert(right_mul(omega, f, r, y));
      if (e.rank() == omega.size()) return e.rank();
    }
  return e.rank();
}

struct SubspaceGreedy {
  const QuotientSet& omega;
  const PrimeField& f;
  std::vector<SparseVec> k;  // projected basis of K
  std::size_t limit;         // floor(delta dim K)

  /// dim(xK cap B) and the indices of basis vectors k with xk independent of B + earlier ones.
  std::pair<std::size_t, std::vector<std::size_t>> overlap(const Echelon& b, std::size_t x) const {
    Echelon local(f.p(), omega.size());
    std::vector<std::size_t> fresh;
    for (std::size_t i = 0; i < k.size(); ++i) {
      Vec r = b.reduce(cell_times(omega, x, k[i]));
      if (local.insert(std::move(r))) fresh.push_back(i);
    }
    return {k.size() - fresh.size(), std::move(fresh)};
  }
};

}  // namespace

RingElement parse_ring_element(const GroupOracle& group, const std::string& text, std::uint32_t p) {
  const PrimeField f(p);
  std::map<Element, std::uint32_t> acc;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    const std::string term = trim(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    if (term.empty()) throw ParseError("empty term in '" + text + "'");
    std::int64_t coeff = 1;
    std::string word = term;
    if (const auto star = term.find('*'); star != std::string::npos && term.find_first_not_of("-0123456789 ") >= star) {
      try {
        coeff = std::stoll(trim(term.substr(0, star)));
      } catch (const std::exception&) {
        throw ParseError("bad coefficient in '" + term + "'");
      }
      word = trim(term.substr(star + 1));
    }
    auto& slot = acc[group.parse_element(word)];
    slot = f.add(slot, f.reduce(coeff));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return normalize_terms(std::move(acc));
}

std::string format_ring_element(const GroupOracle& group, const RingElement& r) {
  if (r.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : r) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += group.format(g);
  }
  return out;
}

AlgebraProbeReport algebra_tiling_probe(const GroupPtr& group, std::uint32_t p, const std::vector<RingElement>& k_basis,
                                        const Rational& epsilon, const QuotientChain& chain,
                                        const ProbeParams& params) {
  if (group->kind() != GroupKind::free_abelian || group->identity().size() > 2)
    throw ContractError("the algebra probe supports F_p Z and F_p Z^2 only");
  if (!is_prime(p)) throw ContractError("p must be prime");
  if (epsilon <= 0) throw ContractError("epsilon must be positive");
  if (k_basis.empty()) throw ContractError("K needs a basis");
  const PrimeField f(p);
  for (const auto& b : k_basis)
    if (!invertible(b)) throw ContractError("basis element " + format_ring_element(*group, b) + " is not invertible");
  if (span_dim(k_basis, p) != k_basis.size()) throw ContractError("the basis of K is linearly dependent");

  AlgebraProbeReport rep;
  rep.group = group->name();
  rep.p = p;
  rep.k_basis = k_basis;
  const RingElement one{{group->identity(), 1}};
  {
    auto with_one = k_basis;
    with_one.push_back(one);
    if (span_dim(with_one, p) > k_basis.size()) {
      rep.k_basis.push_back(one);
      rep.adjoined_unit = true;
    }
  }
  const std::size_t dim_k = rep.k_basis.size();
  rep.epsilon = epsilon;
  rep.chain = chain.name;
  rep.params_override = params.delta || params.zeta || params.t;
  rep.delta = params.delta ? *params.delta : recipe_delta(dim_k, epsilon);
  rep.zeta = params.zeta ? *params.zeta : recipe_zeta(rep.delta, dim_k, epsilon);
  const ThetaParams tp{rep.delta, rep.zeta};
  validate(tp);
  rep.t = params.t ? *params.t : recipe_height(tp, dim_k, epsilon, params.max_tower);
  if (rep.t == 0) throw ContractError("tower height must be >= 1");

  // tower of i-subspaces spanned by Folner sets
  const Rational grow = (Rational(1) + epsilon / 2) * (Rational(1) - rep.delta);
  std::vector<std::vector<RingElement>> levels{rep.k_basis};
  std::vector<std::vector<RingElement>> level_inverses{inverses(*group, f, rep.k_basis)};
  for (std::size_t i = 1; i <= rep.t; ++i) {
    std::string last;
    auto accept = [&](const ElementList& cand) {
      std::vector<RingElement> basis;
      for (const auto& g : cand) basis.push_back({{g, 1}});
      const Rational dim = count(basis.size());
      if (count(span_dim(products(*group, f, basis, rep.k_basis), p)) > grow * dim) {
        last = "dim(K_" + std::to_string(i) + " K) <= (1+eps/2)(1-delta) dim K_" + std::to_string(i);
        return false;
      }
      for (std::size_t j = i; j-- > 0;) {
        if (!(count(span_dim(products(*group, f, basis, level_inverses[j]), p)) < rep.zeta * dim)) {
          last = "dim(K_" + std::to_string(i) + " K_" + std::to_string(j) + "*) < zeta dim K_" + std::to_string(i);
          return false;
        }
      }
      return true;
    };
    FolnerCandidate found;
    try {
      found = folner_search_if(*group, accept, params.max_radius, params.set_cap, "tower level " + std::to_string(i));
    } catch (const SearchFailure& e) {
      throw SearchFailure("tower level " + std::to_string(i) + " of " + std::to_string(rep.t) + ": unmet constraint " +
                          last + "; " + e.what());
    }
    std::vector<RingElement> basis;
    for (const auto& g : found.elements) basis.push_back({{g, 1}});
    rep.tower.emplace_back(found.shape + " " + std::to_string(found.radius), basis.size());
    level_inverses.push_back(inverses(*group, f, basis));
    levels.push_back(std::move(basis));
  }

  // quotient index: K_i K_i* meets I_n only in 0, i.e. projection keeps its dimension
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
    for (std::size_t i = 1; i <= rep.t && ok; ++i) {
      const auto kk = products(*group, f, levels[i], level_inverses[i]);
      Echelon e(p, cand->size());
      for (const auto& v : kk) e.insert(to_dense(project(*cand, f, v), cand->size()));
      ok = e.rank() == span_dim(kk, p);
    }
    if (ok) {
      omega = cand;
      rep.quotient_level = n;
    }
  }
  if (!omega)
    throw SearchFailure("no level of " + chain.name + " within " + std::to_string(params.max_cells) +
                        " cells meets the separation condition");
  rep.quotient = omega->spec();
  const std::size_t n = omega->size();
  rep.omega_dim = n;

  std::vector<std::vector<SparseVec>> projected(levels.size());
  std::vector<std::vector<SparseVec>> projected_inv(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (const auto& v : levels[i]) projected[i].push_back(project(*omega, f, v));
    for (const auto& v : level_inverses[i]) projected_inv[i].push_back(project(*omega, f, v));
  }

  struct Carved {
    std::size_t level;
    std::size_t center;
    std::vector<std::size_t> basis;  // indices into levels[level]
  };
  std::vector<Carved> pieces;
  Echelon a(p, n);
  Rational alpha(0);
  for (std::size_t i = rep.t; i >= 1; --i) {
    ProbeStep st;
    st.level = i;
    st.dim_k = levels[i].size();
    st.dim_b = a.rank();
    st.alpha = alpha;
    st.nu = ratio(st.dim_b, n);
    if (st.nu >= 1) break;
    {
      Echelon e(p, n);
      for (const auto& v : projected[i]) e.insert(to_dense(v, n));
      st.hyp_injective = e.rank() == st.dim_k;
    }
    {
      std::vector<Vec> krows;
      for (const auto& v : projected[i]) krows.push_back(to_dense(v, n));
      st.dim_kl = dim_of_products(*omega, f, krows, projected_inv[i - 1]);
    }
    st.dim_bk = dim_of_products(*omega, f, a.rows(), projected_inv[i]);
    st.dim_bl = dim_of_products(*omega, f, a.rows(), projected_inv[i - 1]);
    st.hyp_kl = count(st.dim_kl) <= rep.zeta * count(st.dim_k);
    st.hyp_bk = count(st.dim_bk) <= alpha * count(n);
    st.hyp_bl = count(st.dim_bl) <= alpha * count(n);
    if (!st.hyp_injective) throw ContractError("the orbit map is not injective on K_" + std::to_string(i));

    SubspaceGreedy g{*omega, f, projected[i], floor_count(rep.delta * count(st.dim_k))};
    const Echelon before = a;
    std::vector<std::size_t> centers;
    for (std::size_t x = 0; x < n; ++x) {
      auto [over, fresh] = g.overlap(a, x);
      if (over > g.limit) continue;
      for (std::size_t idx : fresh) a.insert(cell_times(*omega, x, projected[i][idx]));
      centers.push_back(x);
      pieces.push_back({i, x, std::move(fresh)});
    }
    st.s = centers.size();
    st.dim_bs = a.rank();

    Echelon replay = before;
    st.overlap_bound = true;
    for (std::size_t x : centers) {
      if (g.overlap(replay, x).first > g.limit) st.overlap_bound = false;
      for (const auto& v : projected[i]) replay.insert(cell_times(*omega, x, v));
    }
    st.maximality = true;
    for (std::size_t x = 0; x < n && st.maximality; ++x) st.maximality = g.overlap(a, x).first > g.limit;

    st.mu = (ratio(st.dim_bs, n) - st.nu) / (Rational(1) - alpha);
    const Rational gain = st.mu * (Rational(1) - alpha);
    st.nu_prime = st.nu + gain;
    st.alpha_prime = alpha + gain / (Rational(1) - rep.delta) * rep.zeta;
    st.dim_bsl = dim_of_products(*omega, f, a.rows(), projected_inv[i - 1]);
    st.mu_ge_delta = st.mu >= rep.delta;
    st.s_ge_one = st.s >= 1;
    st.dim_equation = count(st.dim_bs) == st.nu_prime * count(n);
    st.envelope_bound = count(st.dim_bsl) <= st.alpha_prime * count(n);
    const bool hyps = st.hyp_injective && st.hyp_kl && st.hyp_bk && st.hyp_bl;
    if (hyps && !(st.mu_ge_delta && st.s_ge_one && st.overlap_bound && st.dim_equation && st.envelope_bound))
      st.counterexample = "an assertion failed while every hypothesis held at level " + std::to_string(i);

    alpha = st.alpha_prime;
    const bool full = st.dim_bs == n;
    rep.steps.push_back(std::move(st));
    if (alpha >= 1 || full) {
      if (i > 1) rep.stopped_after = i;
      break;
    }
  }

  // T = Q + sum x_ij K_ij, Q spanned by lifts of the non-pivot cells of A
  std::vector<RingElement> t;
  {
    std::vector<char> pivot(n, 0);
    for (std::size_t c : a.pivots()) pivot[c] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (!pivot[c]) t.push_back({{omega->section(c), 1}});
  }
  for (const auto& pc : pieces) {
    const RingElement x{{omega->section(pc.center), 1}};
    for (std::size_t idx : pc.basis) t.push_back(ring_mul(*group, f, x, levels[pc.level][idx]));
  }
  rep.complement_dim = span_dim(t, p);
  {
    Echelon e(p, n);
    for (const auto& v : t) e.insert(to_dense(project(*omega, f, v), n));
    rep.complement_is_transversal = t.size() == n && rep.complement_dim == n && e.rank() == n;
  }
  auto tk = products(*group, f, t, rep.k_basis);
  tk.insert(tk.end(), t.begin(), t.end());
  rep.defect = ratio(span_dim(tk, p) - rep.complement_dim, rep.complement_dim);
  rep.defect_below_epsilon = rep.defect < epsilon;
  return rep;
}

}  // namespace gradedgrowth
