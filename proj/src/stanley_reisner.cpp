#include "fsplit/stanley_reisner.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <sstream>
#include <thread>

namespace fsplit {

namespace {

bool by_size_then_mask(std::uint32_t a, std::uint32_t b) {
  const auto sa = std::popcount(a), sb = std::popcount(b);
  return sa != sb ? sa < sb : a < b;
}

bool prime_less(const MonomialPrime& a, const MonomialPrime& b) {
  return by_size_then_mask(a.variables, b.variables);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

// ------------------------------------------------------ SimplicialComplex

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<std::uint32_t> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  if (vertices_.size() > kMaxVariables) throw ValidationError("too many vertices");
  std::set<std::string> names(vertices_.begin(), vertices_.end());
  if (names.size() != vertices_.size()) throw ValidationError("duplicate vertex name");
  const std::uint32_t all = vertices_.size() == 32 ? ~0u : (1u << vertices_.size()) - 1;
  if (facets_.empty()) throw ValidationError("a complex needs at least one facet (possibly empty)");
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if ((facets_[i] & ~all) != 0) throw ValidationError("facet uses an undeclared vertex");
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (i != j && (facets_[i] & ~facets_[j]) == 0) {
        throw ValidationError("facet contained in another facet");
      }
    }
  }
  std::sort(facets_.begin(), facets_.end(), by_size_then_mask);
}

SimplicialComplex SimplicialComplex::parse(std::string_view text,
                                           const std::vector<std::string>& extra_vertices) {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto body = trim(line);
    if (body.empty()) continue;
    std::vector<std::string> facet;
    if (body != "{}") {
      std::istringstream fields(body);
      std::string name;
      while (std::getline(fields, name, ',')) {
        name = trim(name);
        if (name.empty()) throw ParseError("empty vertex name in facet line \"" + body + "\"");
        facet.push_back(name);
      }
    }
    for (const auto& v : facet) {
      if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
    }
    facets.push_back(std::move(facet));
  }
  for (const auto& v : extra_vertices) {
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
  }
  if (facets.empty()) throw ParseError("facet list is empty");
  std::vector<std::uint32_t> masks;
  for (const auto& facet : facets) {
    std::uint32_t mask = 0;
    for (const auto& v : facet) {
      const auto idx = std::find(vertices.begin(), vertices.end(), v) - vertices.begin();
      mask |= 1u << idx;
    }
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return SimplicialComplex(std::move(vertices), std::move(masks));
}

bool SimplicialComplex::is_face(std::uint32_t subset) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](std::uint32_t f) { return (subset & ~f) == 0; });
}

std::vector<std::uint32_t> SimplicialComplex::faces() const {
  std::set<std::uint32_t> out;
  for (const auto f : facets_) {
    // Every submask of the facet.
    for (std::uint32_t s = f;; s = (s - 1) & f) {
      out.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::uint32_t> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), by_size_then_mask);
  return v;
}

std::vector<std::uint32_t> SimplicialComplex::minimal_nonfaces() const {
  const std::size_t n = vertices_.size();
  if (n > kDefaultPrimeEnumerationBound) {
    throw ValidationError("minimal non-face enumeration is limited to " +
                          std::to_string(kDefaultPrimeEnumerationBound) + " vertices");
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (is_face(s)) continue;
    // Minimal iff dropping any one vertex gives a face.
    bool minimal = true;
    for (std::uint32_t rest = s; rest != 0 && minimal; rest &= rest - 1) {
      minimal = is_face(s & ~(rest & (~rest + 1)));
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), by_size_then_mask);
  return out;
}

Ideal sr_ideal(const SimplicialComplex& complex, const RingPtr& ring) {
  std::vector<std::size_t> index;
  for (const auto& v : complex.vertices()) {
    const auto i = ring->index_of(v);
    if (!i) throw ValidationError("vertex '" + v + "' is not a ring variable");
    index.push_back(*i);
  }
  std::vector<Polynomial> gens;
  for (const auto s : complex.minimal_nonfaces()) {
    Monomial m;
    for (std::size_t k = 0; k < index.size(); ++k) {
      if ((s >> k) & 1u) m.set(index[k], 1);
    }
    gens.push_back(Polynomial::term(ring, m));
  }
  return Ideal(ring, std::move(gens));
}

PresentedRing sr_ring(const SimplicialComplex& complex, std::uint32_t p, int degree_cap) {
  const auto ring = Ring::create(p, complex.vertices(), TermOrder::grevlex(), degree_cap);
  return PresentedRing(sr_ideal(complex, ring));
}

// ------------------------------------------------------------ closed form

bool is_stanley_reisner(const PresentedRing& ring) {
  const Ideal& i = ring.defining_ideal();
  return i.is_zero() || (i.has_monomial_generators() && is_squarefree_monomial(i));
}

std::optional<std::vector<MonomialPrime>> monomial_minimal_primes(const PresentedRing& ring) {
  if (!is_stanley_reisner(ring)) return std::nullopt;
  if (ring.defining_ideal().is_zero()) return std::vector<MonomialPrime>{MonomialPrime{}};
  return minimal_primes_squarefree(ring.defining_ideal());
}

MonomialPrime closed_form_prime(const PresentedRing& ring, MonomialPrime q) {
  const auto mins = monomial_minimal_primes(ring);
  if (!mins) throw ValidationError("closed form needs a Stanley-Reisner ring");
  MonomialPrime total;
  bool any = false;
  for (const auto& p : *mins) {
    if (p <= q) {
      total.variables |= p.variables;
      any = true;
    }
  }
  if (!any) throw ValidationError("prime " + q.to_string(*ring.ambient()) + " does not contain I");
  return total;
}

Ideal core_closed_form(const PresentedRing& ring, MonomialPrime q) {
  return closed_form_prime(ring, q).to_ideal(ring.ambient());
}

std::vector<MonomialPrime> enumerate_monomial_primes(const PresentedRing& ring, std::size_t bound) {
  if (!is_stanley_reisner(ring)) throw ValidationError("monomial primes need a Stanley-Reisner ring");
  const std::size_t n = ring.ambient()->num_vars();
  if (n > bound) {
    throw ValidationError("monomial prime enumeration is limited to " + std::to_string(bound) +
                          " variables");
  }
  std::vector<std::uint32_t> edges;
  for (const auto& g : ring.defining_ideal().basis().elements) {
    edges.push_back(g.leading_monomial().support());
  }
  std::vector<MonomialPrime> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::all_of(edges.begin(), edges.end(), [&](std::uint32_t e) { return (e & s) != 0; })) {
      out.push_back({s});
    }
  }
  std::sort(out.begin(), out.end(), prime_less);
  return out;
}

std::vector<MonomialPrime> sums_of_primes(const std::vector<MonomialPrime>& primes) {
  std::set<std::uint32_t> sums;
  for (const auto& p : primes) {
    std::set<std::uint32_t> grown = sums;
    grown.insert(p.variables);
    for (const auto s : sums) grown.insert(s | p.variables);
    sums = std::move(grown);
  }
  std::vector<MonomialPrime> out;
  for (const auto s : sums) out.push_back({s});
  std::sort(out.begin(), out.end(), prime_less);
  return out;
}

// ------------------------------------------------------------------ atlas

std::vector<MonomialPrime> AtlasGraph::image() const {
  std::set<std::uint32_t> seen;
  for (const auto& node : nodes) seen.insert(node.image.variables);
  std::vector<MonomialPrime> out;
  for (const auto s : seen) out.push_back({s});
  std::sort(out.begin(), out.end(), prime_less);
  return out;
}

std::vector<MonomialPrime> AtlasGraph::fixed_points() const {
  std::vector<MonomialPrime> out;
  for (const auto& node : nodes) {
    if (node.fixed) out.push_back(node.prime);
  }
  return out;
}

std::vector<std::string> AtlasGraph::invariant_violations() const {
  std::vector<std::string> problems;
  const Ring& r = *ring;
  const auto img = image();
  if (img != sums_of_primes(minimal_primes)) {
    problems.push_back("image differs from the set of sums of minimal primes");
  }
  auto find = [&](MonomialPrime q) -> const AtlasNode* {
    for (const auto& node : nodes) {
      if (node.prime == q) return &node;
    }
    return nullptr;
  };
  for (const auto& node : nodes) {
    const AtlasNode* target = find(node.image);
    if (target == nullptr) {
      problems.push_back("image of " + node.prime.to_string(r) + " is not a node");
    } else if (!(target->image == node.image)) {
      problems.push_back("map is not idempotent at " + node.prime.to_string(r));
    }
    if (!(node.image <= node.prime)) {
      problems.push_back("core of " + node.prime.to_string(r) + " is not contained in it");
    }
    for (const auto& other : nodes) {
      if (node.prime <= other.prime && !(node.image <= other.image)) {
        problems.push_back("containment not preserved from " + node.prime.to_string(r) + " to " +
                           other.prime.to_string(r));
      }
    }
  }
  return problems;
}

std::string AtlasGraph::to_dot() const {
  const Ring& r = *ring;
  auto label = [&](MonomialPrime q) {
    std::string s;
    for (const auto& n : q.names(r)) s += (s.empty() ? "" : ",") + n;
    return "\"{" + s + "}\"";
  };
  std::ostringstream out;
  out << "digraph cartier_core_map {\n";
  for (const auto& node : nodes) {
    out << "  " << label(node.prime);
    if (node.fixed) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const auto& node : nodes) {
    out << "  " << label(node.prime) << " -> " << label(node.image) << ";\n";
  }
  out << "}\n";
  return out.str();
}

AtlasGraph core_map_atlas(const PresentedRing& ring, CoreOptions options, unsigned threads) {
  AtlasGraph graph;
  graph.ring = ring.ambient();
  graph.minimal_primes = *monomial_minimal_primes(ring);
  const auto primes = enumerate_monomial_primes(ring);
  graph.nodes.resize(primes.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < primes.size(); k = next++) {
      try {
        const auto q = primes[k];
        const auto closed = closed_form_prime(ring, q);
        const auto report = cartier_core(ring, q.to_ideal(ring.ambient()), options);
        const auto computed = as_monomial_prime(report.core);
        if (!computed || !(*computed == closed)) {
          throw std::logic_error("Cartier core of " + q.to_string(*ring.ambient()) + " computed as " +
                                 report.core.to_string() + " but the closed form gives " +
                                 closed.to_string(*ring.ambient()));
        }
        graph.nodes[k] = {q, closed, report.certification, closed == q};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = primes.size();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, primes.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return graph;
}

}  // namespace fsplit
