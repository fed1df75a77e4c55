#include "fsplit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fsplit/properties.hpp"
#include "fsplit/stanley_reisner.hpp"

namespace fsplit::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw ParseError(what + ": expected an integer, got '" + text + "'");
  }
}

json ideal_json(const Ideal& ideal) { return ideal.basis_strings(); }

json prime_json(const MonomialPrime& q, const Ring& ring) { return q.names(ring); }

json ring_json(const PresentedRing& ring) {
  return {{"characteristic", ring.characteristic()},
          {"variables", ring.ambient()->names()},
          {"defining_ideal", ideal_json(ring.defining_ideal())},
          {"graded", ring.graded()}};
}

json optional_json(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

// Exact for monomial ideals; null otherwise.
json radical_json(const Ideal& ideal) {
  if (ideal.monomial_flag() != MonomialFlag::monomial) return nullptr;
  const auto& gens = ideal.basis().elements;
  return std::all_of(gens.begin(), gens.end(),
                     [](const Polynomial& g) { return g.leading_monomial().is_squarefree(); });
}

json levels_json(const std::map<unsigned, Ideal>& levels) {
  json out = json::object();
  for (const auto& [e, ideal] : levels) out[std::to_string(e)] = ideal_json(ideal);
  return out;
}

json core_result(const CoreReport& report) {
  return {{"core", ideal_json(report.core)},
          {"radical", radical_json(report.core)},
          {"f_pure", report.f_pure},
          {"stabilized_at", optional_json(report.stabilized_at)},
          {"certified_to", report.certified_to},
          {"contractions", levels_json(report.contractions)},
          {"partial_intersections", levels_json(report.partial)}};
}

json envelope(const json& ring, json result, const std::string& certification, unsigned levels,
              std::vector<std::string> warnings) {
  return {{"ring", ring},
          {"result", std::move(result)},
          {"certification", certification},
          {"levels_computed", levels},
          {"warnings", std::move(warnings)}};
}

json core_envelope(const PresentedRing& ring, json result, const CoreReport& report) {
  return envelope(ring_json(ring), std::move(result), to_string(report.certification),
                  report.levels_computed, report.warnings);
}

struct Flags {
  std::string ring;
  std::string ideal;
  std::optional<int> degree_cap;
  unsigned e_max = CoreOptions{}.e_max;
  unsigned window = CoreOptions{}.window;
  unsigned level = 1;
  std::string element;
  std::string pair_ideal;
  std::string exponent;
  std::string facets;
  std::string dot;
  std::uint32_t prime = 2;
  unsigned threads = 0;
  std::size_t max_pairs = PropertyOptions{}.max_pairs;
};

CoreOptions core_options(const Flags& f) {
  if (f.e_max == 0) throw ValidationError("--e-max must be positive");
  if (f.window == 0) throw ValidationError("--window must be positive");
  return {f.e_max, f.window};
}

PresentedRing load_ring(const Flags& f) {
  return parse_ring_spec(f.ring, resolve_degree_cap(f.degree_cap));
}

Ideal required_ideal(const Flags& f, const PresentedRing& ring) {
  return parse_ideal(f.ideal, ring.ambient());
}

json run_core(const Flags& f) {
  const auto ring = load_ring(f);
  const auto j = required_ideal(f, ring);
  const auto report = cartier_core(ring, j, core_options(f));
  auto result = core_result(report);
  result["ideal"] = ideal_json(ring.normalize(j));
  return core_envelope(ring, std::move(result), report);
}

json run_contraction(const Flags& f) {
  const auto ring = load_ring(f);
  const auto j = required_ideal(f, ring);
  if (f.level == 0) throw ValidationError("-e must be positive");
  const auto a = cartier_contraction(ring, j, f.level);
  json result = {{"ideal", ideal_json(ring.normalize(j))},
                 {"e", f.level},
                 {"contraction", ideal_json(a)},
                 {"compatible", ideal_leq(ring.normalize(j), a)}};
  return envelope(ring_json(ring), std::move(result), "exact", f.level, {});
}

json run_fpure(const Flags& f) {
  const auto ring = load_ring(f);
  return envelope(ring_json(ring), {{"f_pure", is_f_pure(ring)}}, "exact", 1, {});
}

json run_fpure_locus(const Flags& f) {
  const auto ring = load_ring(f);
  const auto locus = f_pure_locus(ring);
  json result = {{"non_f_pure_locus", ideal_json(locus)}, {"empty", locus.is_unit()}};
  return envelope(ring_json(ring), std::move(result), "exact", 1,
                  {"locus ideal is correct up to radical"});
}

json run_split_along(const Flags& f) {
  const auto ring = load_ring(f);
  const auto c = parse_polynomial(f.element, ring.ambient());
  if (f.e_max == 0) throw ValidationError("--e-max must be positive");
  const auto s = is_f_pure_along(ring, c, f.e_max);
  json result = {{"c", c.to_string()}, {"splits", s.splits}, {"level", optional_json(s.level)},
                 {"e_max", s.e_max}};
  std::vector<std::string> warnings;
  if (!s.splits) warnings.push_back("no splitting found up to level " + std::to_string(s.e_max));
  return envelope(ring_json(ring), std::move(result), s.splits ? "exact" : "heuristic",
                  s.level.value_or(s.e_max), std::move(warnings));
}

json run_splitting_prime(const Flags& f) {
  const auto ring = load_ring(f);
  const auto report = splitting_prime(ring, core_options(f));
  auto result = core_result(report);
  result["proper"] = !report.core.is_unit();
  return core_envelope(ring, std::move(result), report);
}

json run_sfr(const Flags& f) {
  const auto ring = load_ring(f);
  const auto v = is_strongly_f_regular(ring, core_options(f));
  json result = {{"strongly_f_regular", to_string(v.answer)},
                 {"reason", v.reason},
                 {"splitting_prime", v.splitting ? ideal_json(v.splitting->core) : json(nullptr)}};
  if (!v.splitting) return envelope(ring_json(ring), std::move(result), "exact", 1, {});
  return core_envelope(ring, std::move(result), *v.splitting);
}

json run_pair_core(const Flags& f) {
  const auto ring = load_ring(f);
  const auto j = required_ideal(f, ring);
  const CartierPair pair(ring, parse_ideal(f.pair_ideal, ring.ambient()), Rational::parse(f.exponent));
  const auto report = pair_core(ring, j, pair, core_options(f));
  auto result = core_result(report);
  result["ideal"] = ideal_json(ring.normalize(j));
  result["a"] = ideal_json(pair.a);
  result["t"] = pair.t.to_string();
  return core_envelope(ring, std::move(result), report);
}

json run_sr_atlas(const Flags& f) {
  std::ifstream in(f.facets);
  if (!in) throw ValidationError("cannot read facet file '" + f.facets + "'");
  std::stringstream text;
  text << in.rdbuf();
  const auto complex = SimplicialComplex::parse(text.str());
  if (!is_prime(f.prime)) throw ValidationError("p = " + std::to_string(f.prime) + " is not prime");
  const auto ring = sr_ring(complex, f.prime, resolve_degree_cap(f.degree_cap));
  const auto atlas = core_map_atlas(ring, core_options(f), f.threads);
  const Ring& r = *ring.ambient();

  json nodes = json::array();
  bool all_exact = true;
  for (const auto& node : atlas.nodes) {
    all_exact = all_exact && node.certification == Certification::closed_form_exact;
    nodes.push_back({{"prime", prime_json(node.prime, r)},
                     {"image", prime_json(node.image, r)},
                     {"fixed", node.fixed},
                     {"certification", to_string(node.certification)}});
  }
  auto primes = [&](const std::vector<MonomialPrime>& list) {
    json out = json::array();
    for (const auto& q : list) out.push_back(prime_json(q, r));
    return out;
  };
  json result = {{"minimal_primes", primes(atlas.minimal_primes)},
                 {"nodes", std::move(nodes)},
                 {"image", primes(atlas.image())},
                 {"fixed_points", primes(atlas.fixed_points())},
                 {"sums_of_minimal_primes", primes(sums_of_primes(atlas.minimal_primes))},
                 {"violations", atlas.invariant_violations()}};
  if (!f.dot.empty()) {
    std::ofstream dot(f.dot);
    if (!dot) throw ValidationError("cannot write DOT file '" + f.dot + "'");
    dot << atlas.to_dot();
  }
  return envelope(ring_json(ring), std::move(result),
                  all_exact ? "closed_form_exact" : "heuristic", f.e_max, {});
}

json run_check_props(const Flags& f) {
  const auto ring = load_ring(f);
  const auto results = check_cartier_properties(ring, {core_options(f), f.max_pairs});
  json props = json::array();
  bool ok = true;
  for (const auto& p : results) {
    ok = ok && p.status != PropertyStatus::fail;
    props.push_back({{"name", p.name},
                     {"status", to_string(p.status)},
                     {"cases", p.cases},
                     {"detail", p.detail}});
  }
  return envelope(ring_json(ring), {{"properties", std::move(props)}, {"all_passed", ok}},
                  "compatible_to_E", f.e_max, {});
}

}  // namespace

PresentedRing parse_ring_spec(std::string_view text, int degree_cap) {
  std::optional<std::uint32_t> p;
  std::optional<std::vector<std::string>> vars;
  std::string gens;
  for (const auto& clause : split(text, ';')) {
    if (clause.empty()) continue;
    const auto eq = clause.find('=');
    if (eq == std::string::npos) throw ParseError("ring clause '" + clause + "' lacks '='");
    const auto key = trim(std::string_view(clause).substr(0, eq));
    const auto value = trim(std::string_view(clause).substr(eq + 1));
    if (key == "p") {
      const int v = parse_int(value, "p");
      if (v < 2) throw ValidationError("p = " + value + " is not prime");
      p = static_cast<std::uint32_t>(v);
    } else if (key == "vars") {
      vars = split(value, ',');
    } else if (key == "I") {
      gens = value;
    } else {
      throw ParseError("unknown ring clause '" + key + "'");
    }
  }
  if (!p) throw ParseError("ring description needs p=...");
  if (!vars) throw ParseError("ring description needs vars=...");
  const auto ring = Ring::create(*p, *vars, TermOrder::grevlex(), degree_cap);
  return PresentedRing(parse_ideal(gens, ring));
}

Ideal parse_ideal(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  const auto trimmed = trim(text);
  if (trimmed.empty()) return Ideal::zero(ring);
  for (const auto& part : split(trimmed, ',')) {
    if (part.empty()) throw ParseError("empty generator in '" + trimmed + "'");
    gens.push_back(parse_polynomial(part, ring));
  }
  return Ideal(ring, std::move(gens));
}

int resolve_degree_cap(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FSPLIT_DEGREE_CAP"); env && *env) {
    return parse_int(trim(env), "FSPLIT_DEGREE_CAP");
  }
  return kDefaultDegreeCap;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cartier cores and F-splitting invariants of quotients of polynomial rings over F_p",
               "fsplit"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub, bool ring_required = true) {
    if (ring_required) sub->add_option("--ring", f.ring, "p=..; vars=..; I=..")->required();
    sub->add_option("--e-max", f.e_max, "largest Frobenius level");
    sub->add_option("--window", f.window, "stabilization window");
    sub->add_option("--degree-cap", f.degree_cap, "per-variable exponent cap");
  };
  auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("--ideal", f.ideal, "comma-separated generators")->required();
  };

  std::vector<std::pair<CLI::App*, json (*)(const Flags&)>> commands;
  auto command = [&](const char* name, const char* help, json (*fn)(const Flags&)) {
    auto* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* core = command("core", "Cartier core of an ideal", run_core);
  add_common(core);
  add_ideal(core);
  auto* contraction = command("contraction", "Cartier contraction at one level", run_contraction);
  add_common(contraction);
  add_ideal(contraction);
  contraction->add_option("-e", f.level, "Frobenius level")->required();
  add_common(command("fpure", "global F-purity", run_fpure));
  add_common(command("fpure-locus", "non-F-pure locus", run_fpure_locus));
  auto* along = command("split-along", "F-purity along an element", run_split_along);
  add_common(along);
  along->add_option("-c", f.element, "element c")->required();
  add_common(command("splitting-prime", "core of the homogeneous maximal ideal", run_splitting_prime));
  add_common(command("sfr", "strong F-regularity", run_sfr));
  auto* pair = command("pair-core", "core for the pair (R, a^t)", run_pair_core);
  add_common(pair);
  add_ideal(pair);
  pair->add_option("-a", f.pair_ideal, "ideal a")->required();
  pair->add_option("-t", f.exponent, "exponent t, n or n/d")->required();
  auto* atlas = command("sr-atlas", "core map on monomial primes of a face ring", run_sr_atlas);
  add_common(atlas, false);
  atlas->add_option("--facets", f.facets, "facet file")->required();
  atlas->add_option("--dot", f.dot, "write the atlas as DOT");
  atlas->add_option("-p", f.prime, "characteristic");
  atlas->add_option("--threads", f.threads, "worker threads, 0 = all cores");
  auto* props = command("check-props", "structural laws of the core map", run_check_props);
  add_common(props);
  props->add_option("--max-pairs", f.max_pairs, "pairs per two-ideal law");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fsplit: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) {
        out << fn(f).dump(2) << "\n";
        return kExitOk;
      }
    }
  } catch (const DegreeCapError& e) {
    err << "fsplit: degree cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "fsplit: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "fsplit: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace fsplit::cli
