#include "fsplit/transforms.hpp"

#include <numeric>

namespace fsplit {

namespace {

std::string fresh_name(const Ring& ring, std::string base) {
  while (ring.index_of(base)) base += '_';
  return base;
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return map;
}

RingPtr append_variable(const Ring& ring, const std::string& name) {
  auto names = ring.names();
  names.push_back(fresh_name(ring, name));
  return Ring::create(ring.characteristic(), std::move(names), TermOrder::grevlex(),
                      ring.degree_cap());
}

}  // namespace

// ------------------------------------------------------- homogenization

HomogenizationContext::HomogenizationContext(RingPtr source, std::string t_name)
    : source_(std::move(source)), target_(append_variable(*source_, t_name)) {}

Polynomial HomogenizationContext::homogenize(const Polynomial& f) const {
  require_same_ring(source_, f.ring());
  const int d = f.total_degree();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    m.set(t_index(), static_cast<unsigned>(d) - t.monomial.degree);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target_, std::move(terms));
}

Polynomial HomogenizationContext::dehomogenize(const Polynomial& f) const {
  require_same_ring(target_, f.ring());
  std::vector<std::optional<std::size_t>> map(target_->num_vars());
  for (std::size_t i = 0; i < source_->num_vars(); ++i) map[i] = i;
  return specialize_to_one(f, source_, map);
}

Ideal HomogenizationContext::homogenize_ideal(const Ideal& j) const {
  require_same_ring(source_, j.ring());
  // Homogenizing a degree-compatible Groebner basis generates J^h.
  const Ideal graded_copy = source_->order().degree_compatible()
                                ? j
                                : remap(j, source_->with_order(TermOrder::grevlex()),
                                        identity_map(source_->num_vars()));
  std::vector<Polynomial> gens;
  for (const auto& g : graded_copy.basis().elements) {
    gens.push_back(homogenize(remap(g, source_, identity_map(source_->num_vars()))));
  }
  return Ideal(target_, std::move(gens));
}

Ideal HomogenizationContext::dehomogenize_ideal(const Ideal& j) const {
  require_same_ring(target_, j.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : j.generators()) gens.push_back(dehomogenize(g));
  return Ideal(source_, std::move(gens));
}

PresentedRing HomogenizationContext::extend(const PresentedRing& ring) const {
  require_same_ring(source_, ring.ambient());
  if (!ring.graded()) throw ValidationError("extension along t needs a homogeneous defining ideal");
  return PresentedRing(extend_ideal(ring.defining_ideal(), target_));
}

PresentedRing HomogenizationContext::homogenize_ring(const PresentedRing& ring) const {
  require_same_ring(source_, ring.ambient());
  return PresentedRing(homogenize_ideal(ring.defining_ideal()));
}

// ------------------------------------------------------ adjoin variable

AdjoinedRing adjoin_variable(const PresentedRing& ring, std::string name) {
  const auto target = append_variable(*ring.ambient(), name);
  return {PresentedRing(extend_ideal(ring.defining_ideal(), target)), ring.ambient()->num_vars()};
}

Ideal extend_ideal(const Ideal& j, const RingPtr& target) {
  return remap(j, target, identity_map(j.ring()->num_vars()));
}

Ideal contract_last_variable(const Ideal& j, const RingPtr& base) {
  const std::size_t n = base->num_vars();
  if (j.ring()->num_vars() != n + 1) throw std::logic_error("contraction expects one extra variable");
  std::vector<std::string> names{j.ring()->name(n)};
  names.insert(names.end(), base->names().begin(), base->names().end());
  const auto elim = Ring::create(base->characteristic(), std::move(names), TermOrder::elimination(1),
                                 base->degree_cap());
  std::vector<std::size_t> map(n + 1);
  for (std::size_t i = 0; i < n; ++i) map[i] = i + 1;
  map[n] = 0;
  return eliminate_leading(remap(j, elim, map), 1, base);
}

AdjoinVariableCheck adjoin_variable_core_check(const PresentedRing& ring, const Ideal& j,
                                               const AdjoinedRing& adjoined, const Ideal& j_prime,
                                               CoreOptions options) {
  const RingPtr& big = adjoined.ring.ambient();
  require_same_ring(big, j_prime.ring());
  const Ideal lifted = ring.normalize(j);
  const Ideal lower = extend_ideal(lifted, big);
  const Ideal upper = sum(lower, Ideal(big, {Polynomial::variable(big, adjoined.variable)}));
  const Ideal j_prime_lifted = adjoined.ring.normalize(j_prime);
  if (!ideal_leq(lower, j_prime_lifted) || !ideal_leq(j_prime_lifted, upper)) {
    throw ValidationError("J' is not between J R[x] and J R[x] + <x>");
  }
  AdjoinVariableCheck check{false, false, cartier_core(ring, lifted, options),
                            cartier_core(adjoined.ring, j_prime_lifted, options)};
  check.extension_equal = ideal_equal(extend_ideal(check.base.core, big), check.extended.core);
  check.contraction_equal =
      ideal_equal(contract_last_variable(check.extended.core, ring.ambient()), check.base.core);
  return check;
}

// ------------------------------------------------------------ restriction

PresentedRing restrict_to_contained_minimal_primes(const PresentedRing& ring, MonomialPrime q) {
  const auto mins = monomial_minimal_primes(ring);
  if (!mins) throw ValidationError("restriction needs a Stanley-Reisner ring");
  const RingPtr& s = ring.ambient();
  if (!ideal_leq(ring.defining_ideal(), q.to_ideal(s))) {
    throw ValidationError("prime " + q.to_string(*s) + " does not contain I");
  }
  std::optional<Ideal> restricted;
  for (const auto& p : *mins) {
    if (!(p <= q)) continue;
    const Ideal pi = p.to_ideal(s);
    restricted = restricted ? intersect(*restricted, pi) : pi;
  }
  // q contains I, so it contains some minimal prime.
  if (!restricted) throw std::logic_error("no minimal prime inside a prime containing I");
  return PresentedRing(*restricted);
}

}  // namespace fsplit
