#include "fsplit/cartier.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "fsplit/stanley_reisner.hpp"

namespace fsplit {

// ---------------------------------------------------------------- Rational

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (ec != std::errc() || ptr != end || part.empty()) {
      throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    return value;
  };
  Rational r;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
  } else {
    r.num = parse_int(text);
  }
  if (r.den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::uint64_t Rational::ceil_times(std::uint64_t n) const {
  if (num <= 0) return 0;
  const auto prod = static_cast<unsigned __int128>(num) * n;
  const auto q = (prod + static_cast<unsigned __int128>(den) - 1) / static_cast<unsigned __int128>(den);
  return static_cast<std::uint64_t>(q);
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

// ----------------------------------------------------------- MultiplierMap

MultiplierMap MultiplierMap::make(const PresentedRing& ring, Polynomial s, unsigned e) {
  require_same_ring(ring.ambient(), s.ring());
  if (!contains(fedder_multiplier(ring, e), s)) {
    throw ValidationError("multiplier " + s.to_string() + " is not in I^[p^" + std::to_string(e) +
                          "] : I");
  }
  return MultiplierMap(std::move(s), e);
}

MultiplierMap multiplier_compose(const PresentedRing& ring, const MultiplierMap& f,
                                 const MultiplierMap& g) {
  MultiplierMap composed(f.multiplier().frobenius(g.level()) * g.multiplier(),
                         f.level() + g.level());
  if (!contains(fedder_multiplier(ring, composed.level()), composed.multiplier())) {
    throw std::logic_error("composed multiplier left I^[q] : I at level " +
                           std::to_string(composed.level()));
  }
  return composed;
}

// ------------------------------------------------------------- CartierPair

CartierPair::CartierPair(const PresentedRing& ring, Ideal a_ideal, Rational t_value)
    : a(std::move(a_ideal)), t(t_value) {
  require_same_ring(ring.ambient(), a.ring());
  if (t.num <= 0) throw ValidationError("pair exponent t must be positive");
  if (a.is_zero()) throw ValidationError("pair ideal a must be nonzero");
  if (!a.is_unit() && ideal_leq(a, ring.defining_ideal())) {
    throw ValidationError("pair ideal a lies inside the defining ideal");
  }
}

std::uint64_t CartierPair::exponent(std::uint32_t p, unsigned e) const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  return t.ceil_times(q - 1);
}

// ------------------------------------------------------------ contractions

std::string to_string(Certification c) {
  switch (c) {
    case Certification::closed_form_exact: return "closed_form_exact";
    case Certification::compatible_to_e: return "compatible_to_E";
    case Certification::heuristic: return "heuristic";
  }
  return "heuristic";
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    case Tristate::unknown: return "unknown";
  }
  return "unknown";
}

Ideal cartier_contraction(const PresentedRing& ring, const Ideal& j, unsigned e) {
  require_same_ring(ring.ambient(), j.ring());
  if (e == 0) throw ValidationError("contraction level must be at least 1");
  const Ideal lifted = ring.normalize(j);
  if (ring.defining_ideal().is_zero() || ring.defining_ideal().basis().elements.size() != 1) {
    return colon(bracket_power(lifted, e), fedder_multiplier(ring, e));
  }
  // Principal I: f^{pq-1} = (f^{q-1})^p f^{p-1}, and flatness of Frobenius on S
  // turns J^{[pq]} : f^{pq-1} into (J^{[q]} : f^{q-1})^{[p]} : f^{p-1}. Iterating
  // the level-one step avoids ever forming f^{q-1}.
  frobenius_q(*ring.ambient(), e);
  const Ideal step = fedder_multiplier(ring, 1);
  Ideal k = lifted;
  for (unsigned level = 0; level < e; ++level) k = colon(bracket_power(k, 1), step);
  return k;
}

bool is_compatible(const PresentedRing& ring, const Ideal& k, unsigned e) {
  const Ideal lifted = ring.normalize(k);
  return ideal_leq(lifted, cartier_contraction(ring, lifted, e));
}

namespace {

using Contraction = std::function<Ideal(const Ideal&, unsigned)>;

// Reduced-basis elements of `current` that also occur in `previous`.
Ideal persistent_part(const Ideal& previous, const Ideal& current) {
  const auto& before = previous.basis().elements;
  std::vector<Polynomial> kept;
  for (const auto& g : current.basis().elements) {
    if (std::find(before.begin(), before.end(), g) != before.end()) kept.push_back(g);
  }
  return Ideal(current.ring(), std::move(kept));
}

struct Descent {
  Ideal candidate;
  std::map<unsigned, Ideal> contractions;
  std::map<unsigned, Ideal> partial;
  std::optional<unsigned> stabilized_at;
  unsigned levels = 0;
  std::vector<std::string> warnings;
};

Descent descend(const PresentedRing& ring, const Ideal& j, const CoreOptions& options,
                const Contraction& contraction) {
  if (options.e_max < 2) throw ValidationError("e_max must be at least 2");
  if (options.window < 1) throw ValidationError("window must be at least 1");
  Descent d{Ideal::zero(ring.ambient()), {}, {}, std::nullopt, 0, {}};
  std::optional<Ideal> running;
  unsigned run = 0;
  for (unsigned n = 1; n <= options.e_max; ++n) {
    Ideal level = contraction(j, n);
    d.contractions.emplace(n, level);
    Ideal next = running ? intersect(*running, level) : level;
    run = (running && ideal_equal(next, *running)) ? run + 1 : 1;
    running = Ideal::from_basis(next.basis());
    d.partial.emplace(n, *running);
    d.levels = n;
    if (run >= options.window && n >= 2) {
      d.stabilized_at = n - run + 1;
      break;
    }
  }
  if (d.stabilized_at) {
    d.candidate = *running;
  } else {
    const Ideal& last = d.partial.at(d.levels);
    const Ideal& before = d.partial.at(d.levels - 1);
    d.candidate = ring.normalize(persistent_part(before, last));
    d.candidate = Ideal::from_basis(d.candidate.basis());
    d.warnings.push_back("partial intersections still descending at level " +
                         std::to_string(d.levels) +
                         "; core taken as the basis elements persistent across the last two "
                         "levels plus I");
  }
  return d;
}

bool compatible_through(const Ideal& k, unsigned e_max, const Contraction& contraction) {
  for (unsigned e = 1; e <= e_max; ++e) {
    if (!ideal_leq(k, contraction(k, e))) return false;
  }
  return true;
}

CoreReport make_report(Descent d) {
  CoreReport report{std::move(d.candidate), std::move(d.contractions), std::move(d.partial),
                    d.stabilized_at, d.levels, Certification::heuristic, 0, false,
                    std::move(d.warnings)};
  return report;
}

}  // namespace

CoreReport cartier_core(const PresentedRing& ring, const Ideal& j, CoreOptions options) {
  require_same_ring(ring.ambient(), j.ring());
  const Ideal lifted = ring.normalize(j);
  const Contraction contraction = [&](const Ideal& k, unsigned e) {
    return cartier_contraction(ring, k, e);
  };
  CoreReport report = make_report(descend(ring, lifted, options, contraction));
  report.f_pure = is_f_pure(ring);

  if (is_stanley_reisner(ring)) {
    if (const auto q = as_monomial_prime(lifted)) {
      const Ideal closed = core_closed_form(ring, *q);
      if (ideal_equal(closed, report.core)) {
        report.certification = Certification::closed_form_exact;
        return report;
      }
      report.warnings.push_back("computed core " + report.core.to_string() +
                                " disagrees with the Stanley-Reisner closed form " +
                                closed.to_string());
      return report;
    }
  }
  if (compatible_through(report.core, options.e_max, contraction)) {
    report.certification = Certification::compatible_to_e;
    report.certified_to = options.e_max;
  }
  return report;
}

// ----------------------------------------------------------- classifiers

Ideal f_pure_locus(const PresentedRing& ring) {
  if (ring.is_regular()) return Ideal::unit(ring.ambient());
  return ring.normalize(frobenius_root(fedder_multiplier(ring, 1), 1));
}

bool is_f_pure(const PresentedRing& ring) { return f_pure_locus(ring).is_unit(); }

SplittingAlong is_f_pure_along(const PresentedRing& ring, const Polynomial& c, unsigned e_max) {
  require_same_ring(ring.ambient(), c.ring());
  if (!ring.graded()) throw ValidationError("splitting along c is tested only for graded rings");
  const Ideal m = ring.maximal_ideal();
  SplittingAlong result;
  result.e_max = e_max;
  for (unsigned e = 1; e <= e_max; ++e) {
    if (!contains(cartier_contraction(ring, m, e), c)) {
      result.splits = true;
      result.level = e;
      return result;
    }
  }
  return result;
}

CoreReport splitting_prime(const PresentedRing& ring, CoreOptions options) {
  if (!ring.graded()) throw ValidationError("the splitting prime is computed only for graded rings");
  return cartier_core(ring, ring.maximal_ideal(), options);
}

RegularityVerdict is_strongly_f_regular(const PresentedRing& ring, CoreOptions options) {
  if (!ring.graded()) throw ValidationError("strong F-regularity is tested only for graded rings");
  RegularityVerdict verdict;
  if (!is_f_pure(ring)) {
    verdict.answer = Tristate::no;
    verdict.reason = "ring is not F-pure";
    return verdict;
  }
  verdict.splitting = splitting_prime(ring, options);
  const Ideal& core = verdict.splitting->core;
  if (verdict.splitting->certification == Certification::heuristic) {
    verdict.answer = Tristate::unknown;
    verdict.reason = "splitting prime is only heuristic";
    return verdict;
  }
  if (const auto mins = monomial_minimal_primes(ring)) {
    const bool inside = std::any_of(mins->begin(), mins->end(), [&](const MonomialPrime& p) {
      return ideal_leq(core, ring.normalize(p.to_ideal(ring.ambient())));
    });
    verdict.answer = inside ? Tristate::yes : Tristate::no;
    verdict.reason = inside ? "splitting prime lies in a minimal prime"
                            : "splitting prime lies in no minimal prime";
    return verdict;
  }
  // A graded strongly F-regular ring is a domain and F-pure rings are reduced,
  // so the only minimal prime is I itself.
  const bool equals_i = ideal_equal(core, ring.defining_ideal());
  verdict.answer = equals_i ? Tristate::yes : Tristate::no;
  verdict.reason = equals_i ? "splitting prime is the zero ideal of R"
                            : "splitting prime is nonzero in R";
  return verdict;
}

// ------------------------------------------------------------------ pairs

Ideal pair_contraction(const PresentedRing& ring, const Ideal& j, const CartierPair& pair,
                       unsigned e) {
  Ideal result = cartier_contraction(ring, j, e);
  const auto k = pair.exponent(ring.characteristic(), e);
  if (pair.a.is_unit()) return result;
  if (pair.a.has_monomial_generators()) {
    return k == 0 ? result : colon(result, power(pair.a, static_cast<unsigned>(k)));
  }
  // (X : a^k) computed as k successive colons; it stops early once stable.
  for (std::uint64_t i = 0; i < k; ++i) {
    Ideal next = colon(result, pair.a);
    if (ideal_leq(next, result)) break;
    result = next;
  }
  return result;
}

CoreReport pair_core(const PresentedRing& ring, const Ideal& j, const CartierPair& pair,
                     CoreOptions options) {
  require_same_ring(ring.ambient(), j.ring());
  const Ideal lifted = ring.normalize(j);
  const Contraction contraction = [&](const Ideal& k, unsigned e) {
    return pair_contraction(ring, k, pair, e);
  };
  CoreReport report = make_report(descend(ring, lifted, options, contraction));
  report.f_pure = is_pair_f_pure(ring, pair, options.e_max);
  report.warnings.push_back(
      "core is contained in J only when the pair is F-pure (checked up to e_max: " +
      std::string(report.f_pure ? "F-pure" : "not shown F-pure") + ")");
  if (compatible_through(report.core, options.e_max, contraction)) {
    report.certification = Certification::compatible_to_e;
    report.certified_to = options.e_max;
  }
  return report;
}

bool is_pair_f_pure(const PresentedRing& ring, const CartierPair& pair, unsigned e_max) {
  Ideal roots = ring.defining_ideal();
  for (unsigned e = 1; e <= e_max; ++e) {
    const auto k = pair.exponent(ring.characteristic(), e);
    Ideal maps = fedder_multiplier(ring, e);
    if (k > 0 && !pair.a.is_unit()) maps = product(maps, power(pair.a, static_cast<unsigned>(k)));
    roots = sum(roots, frobenius_root(maps, e));
    if (roots.is_unit()) return true;
  }
  return false;
}

}  // namespace fsplit
