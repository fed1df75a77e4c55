#include "fsplit/frobenius.hpp"

#include <map>

namespace fsplit {

std::uint64_t frobenius_q(const Ring& ring, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= ring.characteristic();
    if (q > static_cast<std::uint64_t>(ring.degree_cap())) {
      throw DegreeCapError("p^e = " + std::to_string(q) + " exceeds the degree cap " +
                           std::to_string(ring.degree_cap()));
    }
  }
  return q;
}

Ideal bracket_power(const Ideal& j, unsigned e) {
  frobenius_q(*j.ring(), e);
  if (j.is_zero() || e == 0) return j;
  if (j.is_unit()) return Ideal::unit(j.ring());
  // in(J^{[q]}) = in(J)^{[q]} by flatness, so q-th powers of a reduced basis
  // form a reduced basis, still sorted since the order is multiplicative.
  std::vector<Polynomial> powers;
  for (const auto& g : j.basis().elements) powers.push_back(g.frobenius(e));
  return Ideal::from_basis({j.ring(), std::move(powers)});
}

Ideal frobenius_root(const Ideal& k, unsigned e) {
  const RingPtr& ring = k.ring();
  const auto q = frobenius_q(*ring, e);
  if (e == 0) return k;
  const std::size_t n = ring->num_vars();
  std::vector<Polynomial> roots;
  for (const auto& g : k.generators()) {
    std::map<std::array<std::uint16_t, kMaxVariables>, std::vector<Term>> by_remainder;
    for (const auto& t : g.terms()) {
      std::array<std::uint16_t, kMaxVariables> remainder{};
      Monomial quotient;
      for (std::size_t i = 0; i < n; ++i) {
        remainder[i] = static_cast<std::uint16_t>(t.monomial.exp[i] % q);
        quotient.set(i, static_cast<unsigned>(t.monomial.exp[i] / q));
      }
      by_remainder[remainder].push_back({quotient, t.coeff});
    }
    for (auto& [remainder, terms] : by_remainder) {
      roots.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
  }
  Ideal result(ring, std::move(roots));
  if (result.has_monomial_generators()) return Ideal::from_basis(result.basis());
  return result;
}

Ideal fedder_multiplier(const PresentedRing& ring, unsigned e) {
  const Ideal& i = ring.defining_ideal();
  if (e == 0 || i.is_zero()) return Ideal::unit(ring.ambient());
  return ring.cached_multiplier(e, [&] {
    const auto& basis = i.basis().elements;
    if (basis.size() == 1) {
      // <f^q> : <f> = <f^{q-1}> in the domain S.
      const auto q = frobenius_q(*ring.ambient(), e);
      return Ideal(ring.ambient(), {basis.front().pow(q - 1)});
    }
    return colon(bracket_power(i, e), i);
  });
}

}  // namespace fsplit
