#include "fsplit/ideal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace fsplit {

// ------------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (!g.is_term()) monomial_gens_ = false;
    generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::from_basis(GroebnerBasis basis) {
  Ideal ideal(basis.ring, basis.elements);
  std::call_once(ideal.cache_->once, [&] {
    ideal.cache_->basis = std::make_unique<GroebnerBasis>(std::move(basis));
    ideal.cache_->ready = true;
  });
  return ideal;
}

const GroebnerBasis& Ideal::basis() const {
  std::call_once(cache_->once, [&] {
    cache_->basis = std::make_unique<GroebnerBasis>(
        GroebnerBasis{ring_, reduced_groebner_basis(ring_, generators_)});
    cache_->ready = true;
  });
  return *cache_->basis;
}

bool Ideal::has_cached_basis() const { return cache_->ready; }

MonomialFlag Ideal::monomial_flag() const {
  if (monomial_gens_) return MonomialFlag::monomial;
  if (!has_cached_basis()) return MonomialFlag::unknown;
  const auto& elements = basis().elements;
  return std::all_of(elements.begin(), elements.end(),
                     [](const Polynomial& g) { return g.is_term(); })
             ? MonomialFlag::monomial
             : MonomialFlag::not_monomial;
}

bool Ideal::is_unit() const {
  if (std::any_of(generators_.begin(), generators_.end(),
                  [](const Polynomial& g) { return g.is_constant(); })) {
    return true;
  }
  if (monomial_gens_) return false;
  const auto& elements = basis().elements;
  return elements.size() == 1 && elements.front().is_constant();
}

std::vector<std::string> Ideal::basis_strings() const {
  std::vector<std::string> out;
  for (const auto& g : basis().elements) out.push_back(g.to_string());
  return out;
}

std::string Ideal::to_string() const {
  std::string out = "<";
  bool first = true;
  for (const auto& s : basis_strings()) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + ">";
}

GroebnerBasis groebner_basis(const Ideal& ideal) { return ideal.basis(); }

// -------------------------------------------------------------- membership

namespace {

bool monomial_ideal_contains(const Ideal& ideal, const Polynomial& f) {
  const auto& gens = ideal.generators();
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) {
    return std::any_of(gens.begin(), gens.end(),
                       [&](const Polynomial& g) { return g.leading_monomial().divides(t.monomial); });
  });
}

}  // namespace

bool contains(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  if (ideal.has_monomial_generators()) return monomial_ideal_contains(ideal, f);
  return normal_form(f, ideal.basis()).is_zero();
}

bool ideal_leq(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& gens = a.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return contains(b, g); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return ideal_leq(a, b) && ideal_leq(b, a); }

// -------------------------------------------------------------- arithmetic

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  Ideal result(a.ring(), std::move(gens));
  if (result.has_monomial_generators()) return Ideal::from_basis(result.basis());
  return result;
}

Ideal power(const Ideal& a, unsigned n) {
  Ideal result = Ideal::unit(a.ring());
  for (unsigned k = 0; k < n; ++k) result = product(result, a);
  return result;
}

Ideal remap(const Ideal& ideal, const RingPtr& target, std::span<const std::size_t> var_map) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(remap(g, target, var_map));
  return Ideal(target, std::move(gens));
}

Ideal eliminate_leading(const Ideal& ideal, std::size_t k, const RingPtr& target) {
  const auto& order = ideal.ring()->order();
  if (order.kind != TermOrder::Kind::block_elimination || order.block != k ||
      !order.permutation.empty()) {
    throw std::logic_error("eliminate_leading needs an identity block elimination order");
  }
  std::vector<std::size_t> var_map(ideal.ring()->num_vars(), 0);
  for (std::size_t i = k; i < var_map.size(); ++i) var_map[i] = i - k;
  std::vector<Polynomial> kept;
  for (const auto& g : ideal.basis().elements) {
    const bool free_of_block = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < k; ++i) {
        if (t.monomial.exp[i] != 0) return false;
      }
      return true;
    });
    if (free_of_block) kept.push_back(remap(g, target, var_map));
  }
  return Ideal(target, std::move(kept));
}

namespace {

std::string fresh_name(const Ring& ring, std::string base) {
  while (ring.index_of(base)) base += '_';
  return base;
}

// Ring with one extra leading variable and an order eliminating it.
RingPtr elimination_ring(const Ring& ring) {
  std::vector<std::string> names{fresh_name(ring, "_t")};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  return Ring::create(ring.characteristic(), std::move(names), TermOrder::elimination(1),
                      ring.degree_cap());
}

Ideal monomial_intersect(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.basis().elements) {
    for (const auto& g : b.basis().elements) {
      gens.push_back(
          Polynomial::term(a.ring(), monomial_lcm(f.leading_monomial(), g.leading_monomial())));
    }
  }
  Ideal raw(a.ring(), std::move(gens));
  return Ideal::from_basis(raw.basis());
}

Ideal elimination_intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  const RingPtr big = elimination_ring(*ring);
  std::vector<std::size_t> shift(ring->num_vars());
  std::iota(shift.begin(), shift.end(), std::size_t{1});
  const auto t = Polynomial::variable(big, 0);
  const auto one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * remap(f, big, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * remap(g, big, shift));
  Ideal lifted(big, std::move(gens));
  Ideal result = eliminate_leading(lifted, 1, ring);
  return Ideal::from_basis(result.basis());
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.has_monomial_generators() && b.has_monomial_generators()) return monomial_intersect(a, b);
  if (ideal_leq(a, b)) return a;
  if (ideal_leq(b, a)) return b;
  return elimination_intersect(a, b);
}

Ideal colon(const Ideal& a, const Polynomial& g) {
  require_same_ring(a.ring(), g.ring());
  if (g.is_zero()) throw ValidationError("colon by zero ideal");
  if (g.is_constant() || a.is_zero()) return a;
  if (contains(a, g)) return Ideal::unit(a.ring());
  if (a.has_monomial_generators() && g.is_term()) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.basis().elements) {
      gens.push_back(
          Polynomial::term(a.ring(), monomial_colon(f.leading_monomial(), g.leading_monomial())));
    }
    Ideal raw(a.ring(), std::move(gens));
    return Ideal::from_basis(raw.basis());
  }
  const Ideal with_g = intersect(a, Ideal(a.ring(), {g}));
  std::vector<Polynomial> quotients;
  for (const auto& h : with_g.basis().elements) quotients.push_back(divide_exact(h, g));
  Ideal raw(a.ring(), std::move(quotients));
  return Ideal::from_basis(raw.basis());
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw ValidationError("colon by zero ideal");
  if (ideal_leq(b, a)) return Ideal::unit(a.ring());
  const auto& gens = b.has_monomial_generators() ? b.basis().elements : b.generators();
  std::optional<Ideal> result;
  for (const auto& g : gens) {
    Ideal part = colon(a, g);
    result = result ? intersect(*result, part) : part;
    if (ideal_leq(*result, a)) break;  // cannot shrink below a
  }
  return *result;
}

Ideal saturate(const Ideal& a, const Polynomial& g) {
  if (g.is_zero()) throw ValidationError("saturation by the zero polynomial");
  Ideal current = a;
  for (;;) {
    Ideal next = colon(current, g);
    if (ideal_leq(next, current)) return current;
    current = next;
  }
}

// ------------------------------------------------------- monomial primes

std::size_t MonomialPrime::size() const { return static_cast<std::size_t>(std::popcount(variables)); }

Ideal MonomialPrime::to_ideal(const RingPtr& ring) const {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    if (contains_variable(i)) gens.push_back(Polynomial::variable(ring, i));
  }
  return Ideal(ring, std::move(gens));
}

std::vector<std::string> MonomialPrime::names(const Ring& ring) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (contains_variable(i)) out.push_back(ring.name(i));
  }
  return out;
}

std::string MonomialPrime::to_string(const Ring& ring) const {
  std::string out = "<";
  bool first = true;
  for (const auto& n : names(ring)) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + ">";
}

std::optional<MonomialPrime> as_monomial_prime(const Ideal& ideal) {
  MonomialPrime prime;
  for (const auto& g : ideal.basis().elements) {
    if (!g.is_term() || g.leading_monomial().degree != 1) return std::nullopt;
    prime.variables |= g.leading_monomial().support();
  }
  return prime;
}

bool is_squarefree_monomial(const Ideal& ideal) {
  if (!ideal.has_monomial_generators()) {
    if (ideal.monomial_flag() == MonomialFlag::not_monomial) return false;
    const auto& elements = ideal.basis().elements;
    if (!std::all_of(elements.begin(), elements.end(), [](const Polynomial& g) { return g.is_term(); })) {
      return false;
    }
  }
  const auto& elements = ideal.basis().elements;
  return std::all_of(elements.begin(), elements.end(),
                     [](const Polynomial& g) { return g.leading_monomial().is_squarefree(); });
}

std::vector<MonomialPrime> minimal_primes_squarefree(const Ideal& ideal) {
  if (!is_squarefree_monomial(ideal)) {
    throw ValidationError("minimal primes need a squarefree monomial ideal");
  }
  std::vector<std::uint32_t> edges;
  for (const auto& g : ideal.basis().elements) edges.push_back(g.leading_monomial().support());
  if (std::any_of(edges.begin(), edges.end(), [](std::uint32_t e) { return e == 0; })) return {};

  // Branch on the vertices of the first edge the cover misses.
  std::vector<std::uint32_t> covers;
  auto branch = [&](auto&& self, std::uint32_t cover) -> void {
    for (const auto e : edges) {
      if ((e & cover) != 0) continue;
      for (std::uint32_t rest = e; rest != 0; rest &= rest - 1) {
        self(self, cover | (rest & (~rest + 1)));
      }
      return;
    }
    covers.push_back(cover);
  };
  branch(branch, 0);

  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<MonomialPrime> minimal;
  for (const auto c : covers) {
    const bool has_smaller = std::any_of(covers.begin(), covers.end(), [&](std::uint32_t d) {
      return d != c && (d & ~c) == 0;
    });
    if (!has_smaller) minimal.push_back({c});
  }
  std::sort(minimal.begin(), minimal.end(), [](const MonomialPrime& a, const MonomialPrime& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.variables < b.variables;
  });
  return minimal;
}

}  // namespace fsplit
