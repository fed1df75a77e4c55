#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "fsplit/cartier.hpp"
#include "fsplit/stanley_reisner.hpp"

namespace fsplit::testing {

inline std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  std::string name;
  while (std::getline(in, name, ',')) out.push_back(name);
  return out;
}

inline RingPtr ring(std::uint32_t p, const std::string& vars, int cap = kDefaultDegreeCap) {
  return Ring::create(p, split_names(vars), TermOrder::grevlex(), cap);
}

inline Polynomial poly(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> polys;
  for (const char* g : gens) polys.push_back(parse_polynomial(g, r));
  return Ideal(r, std::move(polys));
}

inline PresentedRing quotient(const RingPtr& r, std::initializer_list<const char*> gens) {
  return PresentedRing(ideal(r, gens));
}

}  // namespace fsplit::testing
