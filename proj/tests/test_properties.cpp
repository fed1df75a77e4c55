#include <doctest.h>

#include <algorithm>

#include "fsplit/properties.hpp"
#include "oracles.hpp"

using namespace fsplit;
using namespace fsplit::testing;

namespace {

const PropertyResult& law(const std::vector<PropertyResult>& rs, const std::string& name) {
  const auto it = std::find_if(rs.begin(), rs.end(), [&](const auto& r) { return r.name == name; });
  REQUIRE(it != rs.end());
  return *it;
}

const std::vector<std::string> kLaws = {
    "monotonicity", "intersection", "sum_of_fixed", "compatibility_characterization",
    "core_in_ideal", "idempotence", "radicality", "prime_cores_prime", "minimal_primes_fixed",
    "finite_atlas_image"};

}  // namespace

TEST_CASE("laws come back in a fixed order") {
  const auto rs = check_cartier_properties(quotient(ring(2, "x,y"), {"x*y"}));
  REQUIRE(rs.size() == kLaws.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CHECK(rs[i].name == kLaws[i]);
    CHECK_MESSAGE(rs[i].status == PropertyStatus::pass, (rs[i].name + ": " + rs[i].detail));
  }
}

TEST_CASE("Stanley-Reisner rings pass every law") {
  const auto r = ring(3, "a,b,c,d");
  for (const auto& R : {quotient(r, {"a*b", "c*d"}), quotient(r, {"a*b*c"}), quotient(r, {"a*c", "a*d", "b*d"}),
                        PresentedRing::regular(r)}) {
    for (const auto& res : check_cartier_properties(R)) {
      CHECK_MESSAGE(res.status != PropertyStatus::fail, (res.name + ": " + res.detail));
    }
  }
}

TEST_CASE("non-reduced rings skip the F-pure laws") {
  const auto rs = check_cartier_properties(quotient(ring(2, "x"), {"x^2"}));
  for (const char* name : {"sum_of_fixed", "core_in_ideal", "idempotence", "radicality", "prime_cores_prime",
                           "minimal_primes_fixed", "finite_atlas_image"}) {
    CHECK(law(rs, name).status == PropertyStatus::skipped);
    CHECK_FALSE(law(rs, name).detail.empty());
  }
  CHECK(law(rs, "monotonicity").status != PropertyStatus::fail);
  CHECK(law(rs, "compatibility_characterization").status == PropertyStatus::pass);
}

TEST_CASE("hypersurfaces") {
  const auto rs = check_cartier_properties(quotient(ring(3, "x,y,z"), {"x*y - z^2"}));
  CHECK(law(rs, "core_in_ideal").status == PropertyStatus::pass);
  CHECK(law(rs, "radicality").status == PropertyStatus::pass);
  CHECK(law(rs, "minimal_primes_fixed").status == PropertyStatus::skipped);
  for (const auto& res : rs) CHECK_MESSAGE(res.status != PropertyStatus::fail, (res.name + ": " + res.detail));
}

TEST_CASE("status names") {
  CHECK(to_string(PropertyStatus::pass) == "pass");
  CHECK(to_string(PropertyStatus::fail) == "fail");
  CHECK(to_string(PropertyStatus::skipped) == "skipped");
}

TEST_CASE("large non-monomial rings are refused") {
  const auto r = ring(2, "a,b,c,d,e,f,g");
  CHECK_THROWS_AS(check_cartier_properties(quotient(r, {"a*b - c*d"})), ValidationError);
}
