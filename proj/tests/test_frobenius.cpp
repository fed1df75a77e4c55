#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace fsplit;
using namespace fsplit::testing;

TEST_CASE("bracket powers") {
  const auto r = ring(2, "x,y");
  CHECK(ideal_equal(bracket_power(ideal(r, {"x", "y^2"}), 1), ideal(r, {"x^2", "y^4"})));
  CHECK(bracket_power(Ideal::unit(r), 1).is_unit());
  CHECK(bracket_power(Ideal::zero(r), 1).is_zero());
  CHECK(ideal_equal(bracket_power(ideal(r, {"x + y"}), 1), ideal(r, {"x^2 + y^2"})));
  CHECK_THROWS_AS(bracket_power(ideal(ring(5, "x", 100), {"x"}), 3), DegreeCapError);
}

TEST_CASE("bracket power does not depend on the generating set") {
  const auto r = ring(3, "x,y,z");
  const auto a = ideal(r, {"x + y", "y*z"});
  const auto b = ideal(r, {"x + y", "y*z + x^2 + x*y", "x*z + y*z"});
  REQUIRE(ideal_equal(a, b));
  CHECK(ideal_equal(bracket_power(a, 1), bracket_power(b, 1)));
  CHECK(ideal_equal(bracket_power(a, 2), bracket_power(b, 2)));
}

TEST_CASE("Frobenius roots") {
  const auto r = ring(2, "x,y");
  CHECK(ideal_equal(frobenius_root(ideal(r, {"x^3*y"}), 1), ideal(r, {"x"})));
  CHECK(ideal_equal(frobenius_root(ideal(r, {"x^2 + y^2"}), 1), ideal(r, {"x + y"})));
  CHECK(frobenius_root(Ideal::unit(r), 1).is_unit());
  CHECK(frobenius_root(ideal(r, {"x*y"}), 1).is_unit());
  const auto r3 = ring(3, "x,y");
  CHECK(ideal_equal(frobenius_root(ideal(r3, {"x^3 + x*y^3"}), 1), ideal(r3, {"x", "y"})));
}

TEST_CASE("root adjunction against brute-force monomial candidates") {
  // Every monomial ideal L on two variables with two generators of degree
  // at most four, against a fixed K.
  const auto r = ring(2, "x,y");
  const std::vector<Exps> k{{3, 1}, {0, 5}};
  const auto ki = exps_ideal(r, k);
  const auto root = frobenius_root(ki, 1);
  int agreeing = 0;
  for (unsigned a = 0; a <= 4; ++a) {
    for (unsigned b = 0; a + b <= 4; ++b) {
      for (unsigned c = 0; c <= 4; ++c) {
        for (unsigned d = 0; c + d <= 4; ++d) {
          const std::vector<Exps> l{{a, b}, {c, d}};
          const bool expected = oracle_monomial_leq(k, oracle_monomial_bracket(l, 2));
          CHECK(ideal_leq(root, exps_ideal(r, l)) == expected);
          agreeing += expected;
        }
      }
    }
  }
  CHECK(agreeing > 0);
}

TEST_CASE("randomized monomial adjunction for q in {2, 3, 4}") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<unsigned> exp(0, 6);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint32_t p = trial % 3 == 1 ? 3 : 2;
    const unsigned e = trial % 3 == 2 ? 2 : 1;
    const std::uint64_t q = e == 2 ? 4 : p;
    const auto r = ring(p, "x,y,z");
    auto random = [&](int count) {
      std::vector<Exps> out;
      for (int k = 0; k < count; ++k) out.push_back({exp(rng), exp(rng), exp(rng)});
      return out;
    };
    const auto k = random(3), l = random(2);
    const auto ki = exps_ideal(r, k), li = exps_ideal(r, l);
    CHECK(ideal_equal(frobenius_root(ki, e), exps_ideal(r, oracle_monomial_root(k, q))));
    CHECK(ideal_leq(ki, bracket_power(li, e)) == ideal_leq(frobenius_root(ki, e), li));
    CHECK(ideal_leq(ki, bracket_power(li, e)) == oracle_monomial_leq(k, oracle_monomial_bracket(l, q)));
  }
}

TEST_CASE("root of a bracket power is the ideal") {
  const auto r = ring(3, "x,y,z");
  for (const auto& j : {ideal(r, {"x + y^2", "z"}), ideal(r, {"x*y - z^2"}), ideal(r, {"x^2", "y + z + 1"})}) {
    CHECK(ideal_equal(frobenius_root(bracket_power(j, 1), 1), j));
    CHECK(ideal_equal(frobenius_root(bracket_power(j, 2), 2), j));
  }
}

TEST_CASE("flatness: bracket power commutes with intersection and colon") {
  const auto r = ring(2, "x,y,z");
  const auto a = ideal(r, {"x + y", "z^2"});
  const auto b = ideal(r, {"x*z", "y^2 + z"});
  for (unsigned e : {1u, 2u}) {
    CHECK(ideal_equal(bracket_power(intersect(a, b), e),
                      intersect(bracket_power(a, e), bracket_power(b, e))));
    CHECK(ideal_equal(bracket_power(colon(a, b), e), colon(bracket_power(a, e), bracket_power(b, e))));
    CHECK(ideal_equal(bracket_power(sum(a, b), e), sum(bracket_power(a, e), bracket_power(b, e))));
  }
}

TEST_CASE("Fedder multipliers") {
  const auto r = ring(2, "x,y");
  const auto R = quotient(r, {"x*y"});
  CHECK(ideal_equal(fedder_multiplier(R, 1), ideal(r, {"x*y"})));
  CHECK(fedder_multiplier(PresentedRing::regular(r), 1).is_unit());
  const auto r5 = ring(5, "x,y,z");
  const auto f = poly(r5, "x^3 + y^3 + z^3");
  const auto fermat = PresentedRing(Ideal(r5, {f}));
  const auto m = fedder_multiplier(fermat, 1);
  CHECK(contains(m, f.pow(4)));
  CHECK(divide_exact(f.pow(4) * f, f.frobenius(1)).is_one());
  const auto r3 = ring(3, "x,y,z");
  const auto ci = quotient(r3, {"x*y", "z^2"});
  CHECK(ideal_equal(fedder_multiplier(ci, 1), colon(bracket_power(ci.defining_ideal(), 1), ci.defining_ideal())));
  CHECK(contains(fedder_multiplier(ci, 1), poly(r3, "x^2*y^2*z^4")));
}
