#include <algorithm>
#include <queue>
#include <unordered_set>

#include "fsplit/ideal.hpp"

namespace fsplit {
namespace {

// Work polynomials are kept in ascending term order so the leading term sits
// at the back and can be popped in O(1).
using Ascending = std::vector<Term>;

Ascending to_ascending(const Polynomial& f) { return Ascending(f.terms().rbegin(), f.terms().rend()); }

// f -= c * m * g, with g monic and stored descending.
void subtract_multiple(Ascending& f, const Monomial& m, Coeff c, const Polynomial& g,
                       const Ring& r, Ascending& scratch) {
  scratch.clear();
  scratch.reserve(f.size() + g.size());
  const auto gt = g.terms();
  const Coeff neg_c = r.neg(c);
  std::size_t i = 0;
  std::size_t j = gt.size();
  Monomial gm;
  bool have_gm = false;
  while (i < f.size() && j > 0) {
    if (!have_gm) {
      gm = r.multiply(gt[j - 1].monomial, m);
      have_gm = true;
    }
    const int cmp = r.compare(f[i].monomial, gm);
    if (cmp < 0) {
      scratch.push_back(f[i++]);
    } else if (cmp > 0) {
      scratch.push_back({gm, r.mul(gt[j - 1].coeff, neg_c)});
      --j;
      have_gm = false;
    } else {
      const Coeff s = r.add(f[i].coeff, r.mul(gt[j - 1].coeff, neg_c));
      if (s != 0) scratch.push_back({gm, s});
      ++i;
      --j;
      have_gm = false;
    }
  }
  for (; i < f.size(); ++i) scratch.push_back(f[i]);
  for (; j > 0; --j) {
    scratch.push_back({r.multiply(gt[j - 1].monomial, m), r.mul(gt[j - 1].coeff, neg_c)});
  }
  f.swap(scratch);
}

int find_divisor(const Monomial& m, std::span<const Polynomial> basis,
                 std::span<const char> alive = {}) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!alive.empty() && !alive[k]) continue;
    if (basis[k].leading_monomial().divides(m)) return static_cast<int>(k);
  }
  return -1;
}

// Reduces f by monic `basis`. With top_only, stops at the first irreducible
// leading term.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, bool top_only,
                  std::span<const char> alive = {}) {
  const Ring& r = *f.ring();
  Ascending work = to_ascending(f);
  Ascending scratch;
  std::vector<Term> remainder;
  while (!work.empty()) {
    const Term lt = work.back();
    const int k = find_divisor(lt.monomial, basis, alive);
    if (k >= 0) {
      const auto& g = basis[static_cast<std::size_t>(k)];
      subtract_multiple(work, monomial_quotient(lt.monomial, g.leading_monomial()), lt.coeff, g, r,
                        scratch);
    } else if (top_only) {
      remainder.insert(remainder.end(), work.rbegin(), work.rend());
      break;
    } else {
      remainder.push_back(lt);
      work.pop_back();
    }
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(remainder));
}

std::vector<Polynomial> minimal_monomial_generators(const RingPtr& ring,
                                                    std::vector<Polynomial> gens) {
  std::vector<Monomial> monos;
  for (const auto& g : gens) monos.push_back(g.leading_monomial());
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree < b.degree;
  });
  std::vector<Monomial> kept;
  for (const auto& m : monos) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->less(a, b); });
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& m : kept) out.push_back(Polynomial::term(ring, m, 1));
  return out;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (std::uint64_t{i} << 32) | j;
}

}  // namespace

std::vector<Polynomial> reduced_groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  for (const auto& g : gens) require_same_ring(ring, g.ring());
  if (gens.empty()) return {};
  if (std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_constant(); })) {
    return {Polynomial::constant(ring, 1)};
  }
  if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_term(); })) {
    return minimal_monomial_generators(ring, std::move(gens));
  }

  const Ring& r = *ring;
  std::vector<Polynomial> basis;
  std::vector<std::uint32_t> sugar;
  std::vector<char> alive;

  auto pair_order = [&](const CriticalPair& a, const CriticalPair& b) {
    if (a.sugar != b.sugar) return a.sugar > b.sugar;
    const int c = r.compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    return pair_key(a.i, a.j) > pair_key(b.i, b.j);
  };
  std::priority_queue<CriticalPair, std::vector<CriticalPair>, decltype(pair_order)> queue(
      pair_order);
  std::unordered_set<std::uint64_t> pending;

  auto insert = [&](Polynomial h, std::uint32_t s) {
    const std::size_t idx = basis.size();
    basis.push_back(std::move(h));
    sugar.push_back(s);
    alive.push_back(1);
    const auto& lm = basis[idx].leading_monomial();
    for (std::size_t i = 0; i < idx; ++i) {
      const auto& li = basis[i].leading_monomial();
      const auto l = monomial_lcm(li, lm);
      const std::uint32_t si = sugar[i] + (l.degree - li.degree);
      const std::uint32_t sj = s + (l.degree - lm.degree);
      queue.push({i, idx, l, std::max(si, sj)});
      pending.insert(pair_key(i, idx));
    }
    // Elements whose leading monomial is now redundant stay usable for
    // reduction but are skipped when the basis is finalized.
    for (std::size_t i = 0; i < idx; ++i) {
      if (alive[i] && lm.divides(basis[i].leading_monomial())) alive[i] = 0;
    }
  };

  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return r.less(a.leading_monomial(), b.leading_monomial());
  });
  for (const auto& g : gens) {
    auto h = reduce(g, basis, /*top_only=*/false);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::constant(ring, 1)};
    insert(h.monic(), static_cast<std::uint32_t>(g.total_degree()));
  }

  while (!queue.empty()) {
    const CriticalPair pair = queue.top();
    queue.pop();
    pending.erase(pair_key(pair.i, pair.j));
    const auto& fi = basis[pair.i];
    const auto& fj = basis[pair.j];
    // Product criterion.
    if (monomial_gcd(fi.leading_monomial(), fj.leading_monomial()).degree == 0) continue;
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
      chain = !pending.contains(pair_key(pair.i, k)) && !pending.contains(pair_key(pair.j, k));
    }
    if (chain) continue;

    const auto mi = monomial_quotient(pair.lcm, fi.leading_monomial());
    const auto mj = monomial_quotient(pair.lcm, fj.leading_monomial());
    auto s = fi.times_term(mi, 1) - fj.times_term(mj, 1);
    auto h = reduce(s, basis, /*top_only=*/true);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::constant(ring, 1)};
    insert(h.monic(), pair.sugar);
  }

  // Minimalize, then inter-reduce tails.
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!alive[k]) continue;
    const auto& lm = basis[k].leading_monomial();
    bool redundant = false;
    for (const auto& m : minimal) {
      if (m.leading_monomial().divides(lm)) redundant = true;
    }
    if (!redundant) {
      std::erase_if(minimal, [&](const Polynomial& m) { return lm.divides(m.leading_monomial()); });
      minimal.push_back(basis[k]);
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return r.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    const auto& g = minimal[k];
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    const auto tail = reduce(g - Polynomial::term(ring, g.leading_monomial(), g.leading_coeff()),
                             others, false);
    reduced.push_back((Polynomial::term(ring, g.leading_monomial(), g.leading_coeff()) + tail).monic());
  }
  return reduced;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  require_same_ring(f.ring(), basis.ring);
  return reduce(f, basis.elements, /*top_only=*/false);
}

}  // namespace fsplit
