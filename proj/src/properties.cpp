#include "fsplit/properties.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "fsplit/stanley_reisner.hpp"

namespace fsplit {

std::string to_string(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::pass: return "pass";
    case PropertyStatus::fail: return "fail";
    case PropertyStatus::skipped: return "skipped";
  }
  return "skipped";
}

namespace {

constexpr std::size_t kGeneralUniverseVars = 6;

std::string key(const Ideal& ideal) {
  std::string k;
  for (const auto& s : ideal.basis_strings()) k += s + ";";
  return k;
}

class CoreTable {
 public:
  CoreTable(const PresentedRing& ring, CoreOptions options) : ring_(ring), options_(options) {}

  const Ideal& core(const Ideal& j) {
    const Ideal lifted = ring_.normalize(j);
    const auto k = key(lifted);
    if (auto it = cores_.find(k); it != cores_.end()) return it->second;
    auto report = cartier_core(ring_, lifted, options_);
    return cores_.emplace(k, std::move(report.core)).first->second;
  }

 private:
  const PresentedRing& ring_;
  CoreOptions options_;
  std::map<std::string, Ideal> cores_;
};

struct Tally {
  PropertyResult result;

  explicit Tally(std::string name) { result.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++result.cases;
    if (!ok && result.status != PropertyStatus::fail) {
      result.status = PropertyStatus::fail;
      result.detail = what;
    }
  }
  PropertyResult finish() {
    if (result.status != PropertyStatus::fail) {
      result.status = result.cases > 0 ? PropertyStatus::pass : PropertyStatus::skipped;
      if (result.cases == 0 && result.detail.empty()) result.detail = "no applicable cases";
    }
    return result;
  }
};

PropertyResult skipped(std::string name, std::string why) {
  PropertyResult r;
  r.name = std::move(name);
  r.status = PropertyStatus::skipped;
  r.detail = std::move(why);
  return r;
}

// Evenly spaced selection of at most `limit` index pairs i < j.
std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::size_t limit) {
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  if (all.size() <= limit) return all;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < limit; ++k) out.push_back(all[k * all.size() / limit]);
  return out;
}

bool is_radical_sampled(const PresentedRing& ring, const Ideal& core) {
  const auto& s = ring.ambient();
  if (core.has_monomial_generators() || core.monomial_flag() == MonomialFlag::monomial) {
    return std::all_of(core.basis().elements.begin(), core.basis().elements.end(),
                       [](const Polynomial& g) { return g.leading_monomial().is_squarefree(); });
  }
  std::vector<Polynomial> samples;
  const std::size_t n = s->num_vars();
  for (std::size_t i = 0; i < n; ++i) {
    samples.push_back(Polynomial::variable(s, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      samples.push_back(Polynomial::variable(s, i) * Polynomial::variable(s, j));
      samples.push_back(Polynomial::variable(s, i) + Polynomial::variable(s, j));
    }
  }
  return std::all_of(samples.begin(), samples.end(), [&](const Polynomial& r) {
    return !contains(core, r.frobenius(1)) || contains(core, r);
  });
}

}  // namespace

std::vector<PropertyResult> check_cartier_properties(const PresentedRing& ring,
                                                     PropertyOptions options) {
  const RingPtr& s = ring.ambient();
  const Ring& r = *s;
  const bool sr = is_stanley_reisner(ring);
  const bool f_pure = is_f_pure(ring);
  CoreTable table(ring, options.core);

  std::vector<Ideal> universe;
  std::vector<std::string> labels;
  if (sr) {
    for (const auto& q : enumerate_monomial_primes(ring)) {
      universe.push_back(q.to_ideal(s));
      labels.push_back(q.to_string(r));
    }
  } else {
    if (r.num_vars() > kGeneralUniverseVars) {
      throw ValidationError("property suite on non-monomial rings is limited to " +
                            std::to_string(kGeneralUniverseVars) + " variables");
    }
    // Intermediate subsets are usually primary to the maximal ideal here and
    // add little beyond it at a high cost in q = p^e.
    const std::uint32_t all = (1u << r.num_vars()) - 1;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
      if (mask != all && std::popcount(mask) > 1) continue;
      MonomialPrime q{mask};
      universe.push_back(ring.normalize(q.to_ideal(s)));
      labels.push_back(q.to_string(r) + " + I");
    }
  }
  const auto pairs = sample_pairs(universe.size(), options.max_pairs);
  std::vector<PropertyResult> results;

  {
    Tally t("monotonicity");
    for (std::size_t i = 0; i < universe.size(); ++i) {
      for (std::size_t j = 0; j < universe.size(); ++j) {
        if (i == j || !ideal_leq(universe[i], universe[j])) continue;
        t.check(ideal_leq(table.core(universe[i]), table.core(universe[j])),
                "core(" + labels[i] + ") not inside core(" + labels[j] + ")");
      }
    }
    results.push_back(t.finish());
  }
  {
    Tally t("intersection");
    for (const auto& [i, j] : pairs) {
      const Ideal meet = ring.normalize(intersect(universe[i], universe[j]));
      t.check(ideal_equal(table.core(meet), intersect(table.core(universe[i]), table.core(universe[j]))),
              "core(" + labels[i] + " cap " + labels[j] + ") differs from the intersection of cores");
    }
    results.push_back(t.finish());
  }
  if (!f_pure) {
    results.push_back(skipped("sum_of_fixed", "ring is not F-pure"));
  } else {
    Tally t("sum_of_fixed");
    std::vector<std::size_t> fixed;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (ideal_equal(table.core(universe[i]), universe[i])) fixed.push_back(i);
    }
    for (const auto& [a, b] : sample_pairs(fixed.size(), options.max_pairs)) {
      const auto i = fixed[a], j = fixed[b];
      const Ideal joined = sum(universe[i], universe[j]);
      t.check(ideal_equal(table.core(joined), sum(table.core(universe[i]), table.core(universe[j]))),
              "core(" + labels[i] + " + " + labels[j] + ") differs from the sum of cores");
    }
    results.push_back(t.finish());
  }
  {
    Tally t("compatibility_characterization");
    const unsigned levels = std::min(options.core.e_max, 3u);
    for (std::size_t i = 0; i < universe.size(); ++i) {
      const Ideal& k = universe[i];
      bool every_level = true;
      std::optional<Ideal> partial;
      for (unsigned e = 1; e <= levels; ++e) {
        const Ideal a = cartier_contraction(ring, k, e);
        every_level = every_level && ideal_leq(ring.normalize(k), a);
        partial = partial ? intersect(*partial, a) : a;
      }
      t.check(every_level == ideal_leq(ring.normalize(k), *partial),
              "compatibility of " + labels[i] + " disagrees with containment in its contractions");
    }
    results.push_back(t.finish());
  }

  if (!f_pure) {
    for (const char* name : {"core_in_ideal", "idempotence", "radicality", "prime_cores_prime"}) {
      results.push_back(skipped(name, "ring is not F-pure"));
    }
  } else {
    Tally inside("core_in_ideal"), idem("idempotence"), radical("radicality"),
        prime("prime_cores_prime");
    for (std::size_t i = 0; i < universe.size(); ++i) {
      const Ideal core = table.core(universe[i]);
      inside.check(ideal_leq(core, universe[i]), "core(" + labels[i] + ") not inside " + labels[i]);
      idem.check(ideal_equal(table.core(core), core), "core is not idempotent at " + labels[i]);
      radical.check(is_radical_sampled(ring, core), "core(" + labels[i] + ") is not radical");
      if (sr) {
        prime.check(as_monomial_prime(core).has_value(),
                    "core(" + labels[i] + ") is not generated by variables");
      }
    }
    results.push_back(inside.finish());
    results.push_back(idem.finish());
    results.push_back(radical.finish());
    results.push_back(sr ? prime.finish()
                         : skipped("prime_cores_prime", "primes enumerated only for Stanley-Reisner rings"));
  }

  if (!sr) {
    results.push_back(skipped("minimal_primes_fixed", "minimal primes need a Stanley-Reisner ring"));
    results.push_back(skipped("finite_atlas_image", "atlas needs a Stanley-Reisner ring"));
    return results;
  }
  const auto mins = *monomial_minimal_primes(ring);
  {
    Tally t("minimal_primes_fixed");
    for (const auto& p : mins) {
      const Ideal ideal = p.to_ideal(s);
      t.check(ideal_equal(table.core(ideal), ideal), "minimal prime " + p.to_string(r) + " moved");
    }
    results.push_back(t.finish());
  }
  {
    Tally t("finite_atlas_image");
    std::vector<std::uint32_t> image;
    for (const auto& ideal : universe) {
      const auto q = as_monomial_prime(table.core(ideal));
      t.check(q.has_value(), "a core is not a monomial prime");
      if (q) image.push_back(q->variables);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const auto expected = sums_of_primes(mins).size();
    t.check(image.size() == expected, "image has " + std::to_string(image.size()) +
                                          " primes, expected " + std::to_string(expected));
    results.push_back(t.finish());
  }
  return results;
}

}  // namespace fsplit
