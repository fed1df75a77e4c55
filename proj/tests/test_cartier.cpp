#include <doctest.h>

#include "oracles.hpp"

using namespace fsplit;
using namespace fsplit::testing;

TEST_CASE("contractions") {
  const auto r = ring(2, "x,y");
  const auto R = quotient(r, {"x*y"});
  CHECK(ideal_equal(cartier_contraction(R, ideal(r, {"x", "y"}), 1), ideal(r, {"x", "y"})));
  CHECK(ideal_equal(cartier_contraction(PresentedRing::regular(r), ideal(r, {"x", "y"}), 1),
                    ideal(r, {"x^2", "y^2"})));
  for (std::uint32_t p : kCorpusPrimes) {
    const auto s = ring(p, "x");
    const auto nonreduced = quotient(s, {"x^2"});
    for (unsigned e = 1; e <= 4; ++e) {
      CHECK(ideal_equal(cartier_contraction(nonreduced, ideal(s, {"x^2"}), e), ideal(s, {"x^2"})));
    }
  }
  CHECK_THROWS_AS(cartier_contraction(R, ideal(r, {"x"}), 0), ValidationError);
}

TEST_CASE("iterated level-one contraction matches the direct formula on hypersurfaces") {
  const auto r = ring(3, "x,y,z");
  const auto f = poly(r, "x*y - z^2");
  const auto R = PresentedRing(Ideal(r, {f}));
  for (const auto& j : {ideal(r, {"x", "z"}), ideal(r, {"x", "y", "z"}), ideal(r, {"y - 1", "z"})}) {
    const auto lifted = R.normalize(j);
    const auto direct = colon(bracket_power(lifted, 2), Ideal(r, {f.pow(8)}));
    CHECK(ideal_equal(cartier_contraction(R, j, 2), direct));
  }
}

TEST_CASE("cores of the documented examples") {
  for (std::uint32_t p : kCorpusPrimes) {
    const auto s = ring(p, "x");
    const auto report = cartier_core(quotient(s, {"x^2"}), ideal(s, {"x^2"}));
    CHECK(ideal_equal(report.core, ideal(s, {"x^2"})));
    CHECK_FALSE(report.f_pure);
    CHECK(report.certification != Certification::heuristic);
  }
  const auto r = ring(2, "x,y");
  const auto xy = cartier_core(quotient(r, {"x*y"}), ideal(r, {"x", "y"}));
  CHECK(ideal_equal(xy.core, ideal(r, {"x", "y"})));
  CHECK(xy.certification == Certification::closed_form_exact);
  CHECK(xy.f_pure);

  const auto regular = cartier_core(PresentedRing::regular(r), ideal(r, {"x", "y"}));
  CHECK(regular.core.is_zero());
  CHECK(regular.certification == Certification::closed_form_exact);
  for (const auto& [level, partial] : regular.partial) {
    if (level < 3) continue;
    for (const auto& g : partial.basis().elements) CHECK(g.total_degree() >= 8);
  }
}

TEST_CASE("core report invariants") {
  const auto r = ring(3, "x,y,z");
  const auto R = quotient(r, {"x*y - z^2"});
  const auto report = cartier_core(R, ideal(r, {"x", "z"}), {4, 2});
  CHECK(ideal_leq(R.defining_ideal(), report.core));
  CHECK(report.levels_computed >= 2);
  if (report.certification == Certification::compatible_to_e) {
    for (unsigned e = 1; e <= report.certified_to; ++e) CHECK(is_compatible(R, report.core, e));
  }
  CHECK(ideal_equal(report.core, R.defining_ideal()));
  CHECK_THROWS(cartier_core(R, ideal(ring(5, "x,y,z"), {"x"})));
}

TEST_CASE("multiplier composition") {
  const auto r = ring(2, "x,y");
  const auto R = quotient(r, {"x*y"});
  const auto phi = MultiplierMap::make(R, poly(r, "x*y"), 1);
  const auto composed = multiplier_compose(R, phi, phi);
  CHECK(composed.level() == 2);
  CHECK(composed.multiplier() == poly(r, "x^3*y^3"));
  CHECK(contains(colon(ideal(r, {"x^4*y^4"}), ideal(r, {"x*y"})), composed.multiplier()));

  const auto S = PresentedRing::regular(r);
  const auto one = multiplier_compose(S, MultiplierMap::make(S, poly(r, "1"), 2),
                                      MultiplierMap::make(S, poly(r, "1"), 3));
  CHECK(one.level() == 5);
  CHECK(one.multiplier().is_one());

  const auto identity = MultiplierMap::make(R, poly(r, "1"), 0);
  const auto same = multiplier_compose(R, phi, identity);
  CHECK(same.level() == 1);
  CHECK(same.multiplier() == phi.multiplier());

  CHECK_THROWS_AS(MultiplierMap::make(R, poly(r, "x"), 1), ValidationError);
}

TEST_CASE("compatibility") {
  const auto r = ring(2, "x,y");
  const auto R = quotient(r, {"x*y"});
  for (unsigned e = 1; e <= 3; ++e) CHECK(is_compatible(R, R.defining_ideal(), e));
  CHECK(is_compatible(R, ideal(r, {"x"}), 1));
  CHECK_FALSE(is_compatible(R, ideal(r, {"x + y"}), 1));
}

TEST_CASE("F-purity and its locus") {
  const auto r = ring(2, "x,y");
  CHECK(is_f_pure(quotient(r, {"x*y"})));
  CHECK(is_f_pure(PresentedRing::regular(r)));
  for (std::uint32_t p : kCorpusPrimes) {
    const auto s = ring(p, "x");
    const auto R = quotient(s, {"x^2"});
    CHECK_FALSE(is_f_pure(R));
    CHECK(ideal_equal(f_pure_locus(R), ideal(s, {"x"})));
  }
  CHECK(f_pure_locus(PresentedRing::regular(r)).is_unit());
  const auto r5 = ring(5, "x,y,z");
  const auto locus = f_pure_locus(quotient(r5, {"x^3 + y^3 + z^3"}));
  CHECK_FALSE(locus.is_unit());
  for (const char* v : {"x", "y", "z"}) CHECK(contains(locus, poly(r5, v).pow(5)));
  CHECK(ideal_leq(locus, ideal(r5, {"x", "y", "z"})));
  for (std::uint32_t p : {7u, 13u}) {
    const auto rp = ring(p, "x,y,z");
    CHECK(is_f_pure(quotient(rp, {"x^3 + y^3 + z^3"})) == oracle_fermat_cubic_f_pure(p));
  }
  CHECK(is_f_pure(quotient(ring(11, "x,y,z"), {"x^3 + y^3 + z^3"})) == oracle_fermat_cubic_f_pure(11));
}

TEST_CASE("splitting along an element") {
  const auto r = ring(2, "x,y");
  const auto R = quotient(r, {"x*y"});
  const auto one = is_f_pure_along(R, poly(r, "1"), 3);
  CHECK(one.splits);
  CHECK(one.level == 1u);
  CHECK_FALSE(is_f_pure_along(R, poly(r, "x"), 3).splits);
  const auto s = ring(3, "x");
  CHECK_FALSE(is_f_pure_along(quotient(s, {"x^2"}), poly(s, "1"), 3).splits);
  CHECK_THROWS_AS(is_f_pure_along(quotient(ring(2, "x,y"), {"x^2 - y"}), poly(r, "1"), 2), ValidationError);
}

TEST_CASE("splitting primes and strong F-regularity") {
  const auto r2 = ring(2, "x,y");
  const auto xy = quotient(r2, {"x*y"});
  CHECK(ideal_equal(splitting_prime(xy).core, ideal(r2, {"x", "y"})));
  const auto v = is_strongly_f_regular(xy);
  CHECK(v.answer == Tristate::no);

  const auto r3 = ring(3, "x,y,z");
  const auto a1 = quotient(r3, {"x*y - z^2"});
  const auto sp = splitting_prime(a1);
  CHECK(ideal_equal(sp.core, a1.defining_ideal()));
  CHECK(sp.certification != Certification::heuristic);
  CHECK(is_strongly_f_regular(a1).answer == Tristate::yes);

  CHECK(splitting_prime(PresentedRing::regular(r3)).core.is_zero());
  CHECK(is_strongly_f_regular(PresentedRing::regular(r3)).answer == Tristate::yes);
  CHECK(is_strongly_f_regular(quotient(ring(3, "x"), {"x^2"})).answer == Tristate::no);
}

TEST_CASE("pairs") {
  const auto r = ring(2, "x,y");
  const auto S = PresentedRing::regular(r);
  const auto m = ideal(r, {"x", "y"});
  const CartierPair pair(S, m, Rational::parse("1"));
  CHECK(pair.exponent(2, 1) == 1);
  CHECK(ideal_equal(pair_contraction(S, m, pair, 1), ideal(r, {"x^2", "x*y", "y^2"})));

  const auto R = quotient(r, {"x*y"});
  const CartierPair whole(R, Ideal::unit(r), Rational::parse("3/2"));
  for (unsigned e = 1; e <= 2; ++e) {
    CHECK(ideal_equal(pair_contraction(R, m, whole, e), cartier_contraction(R, m, e)));
  }
  const CartierPair tiny(R, ideal(r, {"x + y"}), Rational::parse("1/1000"));
  CHECK(tiny.exponent(2, 1) == 1);
  const CartierPair zero_at_one(S, m, Rational::parse("1/2"));
  CHECK(zero_at_one.exponent(2, 1) == 1);
  CHECK(zero_at_one.exponent(3, 1) == 1);

  CHECK_THROWS_AS(CartierPair(S, m, Rational::parse("0")), ValidationError);
  CHECK_THROWS_AS(CartierPair(S, Ideal::zero(r), Rational::parse("1")), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);

  const auto report = pair_core(S, m, pair);
  CHECK(report.certification != Certification::closed_form_exact);
  CHECK_FALSE(report.warnings.empty());
  CHECK(is_pair_f_pure(S, CartierPair(S, m, Rational::parse("1/2")), 2));
  CHECK_FALSE(is_pair_f_pure(S, CartierPair(S, m, Rational::parse("3")), 3));
}

TEST_CASE("rationals") {
  CHECK(Rational::parse("3/4").ceil_times(7) == 6);
  CHECK(Rational::parse("2").ceil_times(4) == 8);
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}
