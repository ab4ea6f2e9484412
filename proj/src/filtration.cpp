#include "gradedgrowth/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

namespace {

// v * (s - 1) in F_p G using the right generator table.
Vec times_generator_minus_one(const FiniteGroupAlgebra& alg, const Vec& v, std::size_t symbol) {
  const PrimeField f(alg.prime());
  const FiniteGroup& g = alg.finite_group();
  Vec out(v.size(), 0);
  for (std::uint32_t x = 0; x < v.size(); ++x) {
    if (v[x] == 0) continue;
    const std::uint32_t y = g.right_gen(x, symbol);
    out[y] = f.add(out[y], v[x]);
    out[x] = f.sub(out[x], v[x]);
  }
  return out;
}

Vec unit_vector(std::size_t dim, std::size_t i) {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

std::size_t order_log(std::uint64_t n, std::uint32_t p) {
  std::size_t e = 0;
  while (n > 1) {
    if (n % p != 0) return static_cast<std::size_t>(-1);
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

AugmentationLadder aug_ladder(const AlgebraPtrF& algebra) {
  const std::size_t n = algebra->dim();
  const auto& symbols = algebra->group().alphabet().generators();
  AugmentationLadder ladder;
  ladder.powers.push_back(Subspace::whole(algebra));
  ladder.dims.push_back(n);
  {
    Echelon e(algebra->prime(), n);
    for (std::size_t s : symbols)
      for (std::size_t g = 0; g < n; ++g) e.insert(times_generator_minus_one(*algebra, unit_vector(n, g), s));
    ladder.powers.emplace_back(algebra, std::move(e));
  }
  while (true) {
    const Subspace& last = ladder.powers.back();
    ladder.dims.push_back(last.rank());
    const std::size_t k = ladder.dims.size();
    ladder.graded_dims.push_back(ladder.dims[k - 2] - ladder.dims[k - 1]);
    if (ladder.dims[k - 1] == ladder.dims[k - 2]) {
      // varpi^(N) == varpi^(N+1): drop the duplicate.
      ladder.powers.pop_back();
      ladder.dims.pop_back();
      ladder.graded_dims.pop_back();
      break;
    }
    if (last.rank() == 0) break;
    Echelon e(algebra->prime(), n);
    for (const auto& row : last.rows())
      for (std::size_t s : symbols) e.insert(times_generator_minus_one(*algebra, row, s));
    ladder.powers.emplace_back(algebra, std::move(e));
  }
  ladder.reaches_zero = ladder.dims.back() == 0;
  return ladder;
}

std::vector<std::size_t> dual_graded_dims(const FiniteGroup& group, std::size_t max_n) {
  const std::size_t order = group.size();
  const auto& symbols = group.alphabet().generators();
  const std::size_t k = symbols.size();
  std::vector<std::size_t> r(max_n + 1, 0);

  // BFS order of the left Cayley graph, fixed for all steps.
  std::vector<std::uint32_t> bfs{0};
  std::vector<char> seen(order, 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (std::size_t s : symbols) {
      const std::uint32_t h = group.left_gen(s, bfs[head]);
      if (!seen[h]) {
        seen[h] = 1;
        bfs.push_back(h);
      }
    }

  // values[g] = (b_1(g), ..., b_D(g)) for a basis b of V_(n-1); V_1 = constants.
  std::vector<BitVec> values(order, BitVec(1));
  for (auto& v : values) v.set(0);
  std::size_t dim = 1;
  r[0] = 1;
  for (std::size_t n = 1; n <= max_n && dim < order; ++n) {
    // Unknowns: f(1), then coordinates of Delta_s f in V_(n-1) for each s.
    const std::size_t unknowns = 1 + k * dim;
    std::vector<BitVec> phi(order);
    std::vector<char> assigned(order, 0);
    phi[0] = BitVec(unknowns);
    phi[0].set(0);
    assigned[0] = 1;
    BitEchelon equations(unknowns);
    for (std::uint32_t g : bfs) {
      for (std::size_t j = 0; j < k; ++j) {
        const std::uint32_t h = group.left_gen(symbols[j], g);
        BitVec val = phi[g];
        for (std::size_t i = 0; i < dim; ++i)
          if (values[g].get(i)) val.flip(1 + j * dim + i);
        if (!assigned[h]) {
          phi[h] = std::move(val);
          assigned[h] = 1;
        } else {
          val.xor_with(phi[h]);
          if (val.any()) equations.insert(std::move(val));
        }
      }
    }
    const std::vector<BitVec> solutions = equations.kernel();
    const std::size_t next_dim = solutions.size();
    if (next_dim < dim) throw ContractError("dual ladder lost dimension (internal error)");
    r[n] = next_dim - dim;
    std::vector<BitVec> next(order, BitVec(next_dim));
    for (std::uint32_t g = 0; g < order; ++g)
      for (std::size_t j = 0; j < next_dim; ++j)
        if (phi[g].dot(solutions[j])) next[g].set(j);
    values = std::move(next);
    dim = next_dim;
  }
  return r;
}

std::vector<std::size_t> graded_dims(const FiniteGroupPtr& group, std::uint32_t p, std::size_t max_n,
                                     std::uint64_t cap) {
  if (group->size() <= cap && group->has_full_table()) {
    const AugmentationLadder ladder = aug_ladder(build_group_algebra(group, p, cap));
    std::vector<std::size_t> out(max_n + 1, 0);
    for (std::size_t n = 0; n <= max_n && n < ladder.graded_dims.size(); ++n) out[n] = ladder.graded_dims[n];
    return out;
  }
  if (p != 2)
    throw ResourceError("group " + group->name() + " exceeds the explicit algebra cap; the dual ladder needs p = 2");
  return dual_graded_dims(*group, max_n);
}

QuotientGrowth quotient_growth(const FiniteGroup& coarse, const FiniteGroup& fine, std::uint32_t p,
                               std::size_t max_n) {
  auto dims_of = [&](const FiniteGroup& g) -> std::vector<std::size_t> {
    if (p == 2) return dual_graded_dims(g, max_n);
    std::shared_ptr<const FiniteGroup> ptr(std::shared_ptr<const FiniteGroup>{}, &g);
    return graded_dims(ptr, p, max_n);
  };
  QuotientGrowth q;
  q.coarse_name = coarse.name();
  q.fine_name = fine.name();
  q.coarse = dims_of(coarse);
  q.fine = dims_of(fine);
  q.horizon = 0;
  while (q.horizon <= max_n && q.coarse[q.horizon] == q.fine[q.horizon]) ++q.horizon;
  q.agree_through_max = q.horizon > max_n;
  q.graded_dims.assign(q.fine.begin(), q.fine.begin() + static_cast<std::ptrdiff_t>(q.horizon));
  return q;
}

JenningsSeries jennings_series(const FiniteGroup& group, std::uint32_t p) {
  if (!is_prime(p)) throw ContractError("Jennings series needs a prime p");
  if (order_log(group.size(), p) == static_cast<std::size_t>(-1))
    throw ContractError("order " + std::to_string(group.size()) + " of " + group.name() + " is not a power of " +
                        std::to_string(p));
  const auto n_elements = static_cast<std::uint32_t>(group.size());
  JenningsSeries series;
  std::vector<std::uint32_t> all(n_elements);
  for (std::uint32_t i = 0; i < n_elements; ++i) all[i] = i;
  series.subgroups.push_back(all);
  while (series.subgroups.back().size() > 1) {
    const std::size_t n = series.subgroups.size() + 1;  // index of the subgroup being built
    const auto& prev = series.subgroups.back();
    const auto& powered = series.subgroups[(n + p - 1) / p - 1];
    std::vector<std::uint32_t> gens;
    for (std::uint32_t a : prev)
      for (std::uint32_t g = 0; g < n_elements; ++g) gens.push_back(group.commutator(a, g));
    for (std::uint32_t a : powered) gens.push_back(group.pow(a, p));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    auto next = group.subgroup(gens);
    if (n > 4 * group.size() + 4) throw ContractError("Jennings series does not terminate (internal error)");
    series.subgroups.push_back(std::move(next));
  }
  for (std::size_t i = 0; i + 1 < series.subgroups.size(); ++i)
    series.dims.push_back(order_log(series.subgroups[i].size() / series.subgroups[i + 1].size(), p));
  return series;
}

std::vector<std::uint64_t> jennings_hilbert_coeffs(const std::vector<std::size_t>& dims, std::uint32_t p,
                                                   std::optional<std::size_t> max_deg) {
  std::size_t full = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) full += dims[i] * (i + 1) * (p - 1);
  const std::size_t top = max_deg.value_or(full);
  std::vector<std::uint64_t> poly(top + 1, 0);
  poly[0] = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::size_t n = i + 1;
    for (std::size_t rep = 0; rep < dims[i]; ++rep) {
      // multiply by 1 + t^n + ... + t^((p-1)n)
      std::vector<std::uint64_t> next(top + 1, 0);
      for (std::size_t d = 0; d <= top; ++d) {
        if (poly[d] == 0) continue;
        for (std::size_t j = 0; j < p && d + j * n <= top; ++j) next[d + j * n] += poly[d];
      }
      poly = std::move(next);
    }
  }
  return poly;
}

std::vector<std::uint64_t> witt_ranks(std::uint64_t k, std::size_t n_max) {
  auto mobius = [](std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
      if (n % q != 0) continue;
      n /= q;
      if (n % q == 0) return 0;
      mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
  };
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt total = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      total += mobius(d) * boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(n / d));
    }
    total /= n;
    if (total > std::numeric_limits<std::uint64_t>::max()) throw ResourceError("Witt rank overflows 64 bits");
    out.push_back(static_cast<std::uint64_t>(total));
  }
  return out;
}

Subspace right_ideal(const AlgebraPtrF& algebra, const std::vector<Vec>& vectors) {
  const FiniteGroup& g = algebra->finite_group();
  const PrimeField f(algebra->prime());
  Echelon e(algebra->prime(), algebra->dim());
  std::deque<Vec> queue;
  for (const auto& v : vectors)
    if (e.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    const Vec v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t s : g.alphabet().generators()) {
      Vec w(v.size(), 0);
      for (std::uint32_t x = 0; x < v.size(); ++x)
        if (v[x] != 0) w[g.right_gen(x, s)] = f.add(w[g.right_gen(x, s)], v[x]);
      if (e.insert(w)) queue.push_back(std::move(w));
    }
  }
  return {algebra, std::move(e)};
}

bool is_right_ideal(const AlgebraPtrF& algebra, const Subspace& ideal) {
  const FiniteGroup& g = algebra->finite_group();
  for (const auto& row : ideal.rows())
    for (std::size_t s : g.alphabet().generators())
      if (!ideal.contains(times_generator_minus_one(*algebra, row, s))) return false;
  return true;
}

IdealComplement ideal_complement(const AlgebraPtrF& algebra, const Subspace& ideal) {
  if (ideal.ambient() != std::static_pointer_cast<const BasisAlgebra>(algebra))
    throw ContractError("ideal lives in a different algebra");
  const std::size_t n = algebra->dim();
  // Column order with the identity (index 0) last, so it is a pivot only
  // when 1 itself lies in I.
  auto permute = [n](const Vec& v) {
    Vec out(n);
    for (std::size_t i = 1; i < n; ++i) out[i - 1] = v[i];
    out[n - 1] = v[0];
    return out;
  };
  auto unpermute = [n](const Vec& v) {
    Vec out(n);
    for (std::size_t i = 1; i < n; ++i) out[i] = v[i - 1];
    out[0] = v[n - 1];
    return out;
  };
  auto echelon = std::make_shared<Echelon>(algebra->prime(), n);
  for (const auto& row : ideal.rows()) echelon->insert(permute(row));
  std::vector<char> pivot(n, 0);
  for (std::size_t c : echelon->pivots()) pivot[c] = 1;
  if (pivot[n - 1]) throw ContractError("1 lies in the ideal; no complement contains 1");
  IdealComplement out{{}, Subspace::zero(algebra), {}};
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot[c]) continue;
    const std::size_t element = c == n - 1 ? 0 : c + 1;
    out.elements.push_back(static_cast<std::uint32_t>(element));
    basis.push_back(unit_vector(n, element));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.complement = Subspace::span(algebra, basis);
  out.project = [echelon, permute, unpermute](const Vec& v) { return unpermute(echelon->reduce(permute(v))); };
  return out;
}

std::vector<Vec> rs_generators(const AlgebraPtrF& algebra, const Subspace& ideal,
                               const std::vector<std::uint32_t>& s) {
  if (!is_right_ideal(algebra, ideal)) throw ContractError("I is not a right ideal");
  const IdealComplement c = ideal_complement(algebra, ideal);
  const PrimeField f(algebra->prime());
  const FiniteGroup& g = algebra->finite_group();
  std::vector<Vec> out;
  for (std::uint32_t x : c.elements) {
    for (std::uint32_t y : s) {
      Vec fs = unit_vector(algebra->dim(), g.mul(x, y));
      const Vec proj = c.project(fs);
      for (std::size_t i = 0; i < fs.size(); ++i) fs[i] = f.sub(fs[i], proj[i]);
      if (!is_zero(fs)) out.push_back(std::move(fs));
    }
  }
  return out;
}

RsStepBound rs_step_bound(const AlgebraPtrF& algebra, const Subspace& ideal, const std::vector<std::uint32_t>& s) {
  if (!is_right_ideal(algebra, ideal)) throw ContractError("I is not a right ideal");
  const IdealComplement c = ideal_complement(algebra, ideal);
  const FiniteGroup& g = algebra->finite_group();
  Echelon i_varpi(algebra->prime(), algebra->dim());
  for (const auto& row : ideal.rows())
    for (std::size_t sym : g.alphabet().generators()) i_varpi.insert(times_generator_minus_one(*algebra, row, sym));
  std::vector<Vec> f_fs;
  for (std::uint32_t x : c.elements) {
    f_fs.push_back(unit_vector(algebra->dim(), x));
    for (std::uint32_t y : s) f_fs.push_back(unit_vector(algebra->dim(), g.mul(x, y)));
  }
  RsStepBound out;
  out.quotient_dim = ideal.rank() - i_varpi.rank();
  out.bound = intersect(Subspace::span(algebra, f_fs), ideal).rank();
  out.holds = out.quotient_dim <= out.bound;
  return out;
}

Subspace random_right_ideal(const AlgebraPtrF& algebra, std::mt19937_64& rng) {
  const std::size_t n = algebra->dim();
  const auto& symbols = algebra->group().alphabet().generators();
  std::uniform_int_distribution<std::uint32_t> coeff(0, algebra->prime() - 1);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec v(n);
    for (auto& x : v) x = coeff(rng);
    Subspace ideal = right_ideal(algebra, {v});
    if (ideal.rank() == n) ideal = right_ideal(algebra, {times_generator_minus_one(*algebra, v, symbols[pick(rng)])});
    if (ideal.rank() > 0 && ideal.rank() < n) return ideal;
  }
  throw SearchFailure("no proper nonzero right ideal found in 1000 random attempts");
}

GrowthReport growth_report(const std::vector<std::size_t>& dims) {
  GrowthReport rep;
  for (std::size_t r : dims) {
    if (r == 0) break;
    rep.dims.push_back(r);
  }
  const std::size_t top = rep.dims.size();
  if (top < 2) return rep;
  // r_a^(1/a) < r_b^(1/b) iff r_a^b < r_b^a, compared exactly.
  auto root_less = [&](std::size_t a, std::size_t b) {
    return boost::multiprecision::pow(BigInt(rep.dims[a]), static_cast<unsigned>(b)) <
           boost::multiprecision::pow(BigInt(rep.dims[b]), static_cast<unsigned>(a));
  };
  rep.fekete_n = 1;
  rep.nonincreasing = true;
  for (std::size_t n = 1; n < top; ++n) {
    rep.roots.push_back(std::pow(static_cast<double>(rep.dims[n]), 1.0 / static_cast<double>(n)));
    if (!root_less(rep.fekete_n, n)) rep.fekete_n = n;
    if (n > 1 && root_less(n - 1, n)) rep.nonincreasing = false;
  }
  rep.fekete_estimate = rep.roots[rep.fekete_n - 1];
  rep.min_at_last = rep.fekete_n == top - 1;
  if (top >= 3) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(top - 1);
    for (std::size_t n = 1; n < top; ++n) {
      const double x = std::log(static_cast<double>(n));
      const double y = std::log(static_cast<double>(rep.dims[n]));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    rep.loglog_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  for (std::size_t a = 1; a < top; ++a)
    for (std::size_t b = a; a + b < top; ++b)
      if (rep.dims[a] * rep.dims[b] < rep.dims[a + b]) rep.violations.emplace_back(a, b);
  return rep;
}

}  // namespace gradedgrowth
