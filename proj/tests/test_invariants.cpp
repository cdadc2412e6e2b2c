#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fplevel/errors.hpp"
#include "fplevel/invariants.hpp"
#include "fplevel/parse.hpp"

using namespace fplevel;

namespace {

Polynomial poly(const char* text, std::uint32_t p) { return parse_poly(text, PrimeField(p), 3); }

}  // namespace

TEST_CASE("rational normalization and order") {
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(19, 25) < Rational(4, 5));
  CHECK_FALSE(Rational(4, 5) < Rational(4, 5));
  CHECK(Rational(24, 25).str() == "24/25");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("level of the Fermat cubic") {
  LevelResult r5 = level(poly("x^3+y^3+z^3", 5));
  CHECK(r5.determined);
  CHECK(r5.level == 2);
  CHECK(r5.stabilization_index == 1);
  REQUIRE(r5.chain.size() == 3);  // J_0, J_1, J_2
  CHECK(r5.chain[0].is_unit());
  CHECK(r5.chain[1].equals(r5.chain[2]));

  LevelResult r7 = level(poly("x^3+y^3+z^3", 7));
  CHECK(r7.determined);
  CHECK(r7.level == 1);
  CHECK(r7.stabilization_index == 0);
}

TEST_CASE("cutoff produces a flagged lower bound, hsl throws") {
  Polynomial f = poly("x^3+y^3+z^3", 5);
  LevelResult r = level(f, 1);  // cannot see past J_0 vs J_1
  CHECK_FALSE(r.determined);
  CHECK(r.level >= 2);
  CHECK_THROWS_AS(hsl_number(f, 1), Error);
  try {
    hsl_number(f, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CutoffExceeded);
  }
  CHECK_THROWS_AS(level(f, 0), Error);  // cutoff below the first comparison
}

TEST_CASE("hsl is 1 for stabilized chains") {
  CHECK(hsl_number(poly("x^3+y^3+z^3", 5)) == 1);
  CHECK(hsl_number(poly("x^3+y^3+z^3", 7)) == 1);
}

TEST_CASE("nu values of the Fermat cubic at p = 5") {
  Polynomial f = poly("x^3+y^3+z^3", 5);
  CHECK(nu(f, 1) == 3);
  CHECK(nu(f, 2) == 19);
}

TEST_CASE("fpt bounds nest and bracket") {
  Polynomial f = poly("x^3+y^3+z^3", 5);
  auto bounds = fpt_bounds(f, 3);
  REQUIRE(bounds.size() == 3);
  CHECK(bounds[0].first == Rational(3, 5));
  CHECK(bounds[0].second == Rational(4, 5));
  CHECK(bounds[1].first == Rational(19, 25));
  CHECK(bounds[1].second == Rational(4, 5));
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    // nested intervals; equivalently nu(p^{e+1}) >= p * nu(p^e)
    CHECK_FALSE(bounds[i + 1].first < bounds[i].first);
    CHECK_FALSE(bounds[i].second < bounds[i + 1].second);
  }
}

TEST_CASE("largest grid jump") {
  auto lam5 = largest_grid_jump(poly("x^3+y^3+z^3", 5));
  REQUIRE(lam5.has_value());
  CHECK(*lam5 == Rational(4, 5));
  CHECK_FALSE(largest_grid_jump(poly("x^3+y^3+z^3", 7)).has_value());
}

TEST_CASE("level recovered from the jump exponent") {
  PrimeField F5(5);
  CHECK(level_from_exponent(Rational(4, 5), F5) == 2);    // 1 - 1/5
  CHECK(level_from_exponent(Rational(24, 25), F5) == 3);  // 1 - 1/25
  CHECK(level_from_exponent(Rational(19, 25), F5) == 2);  // 6*5 >= 25 already
  CHECK_THROWS_AS(level_from_exponent(Rational(1, 3), F5), Error);  // not on the p-grid
  CHECK_THROWS_AS(level_from_exponent(Rational(0, 1), F5), Error);
}

TEST_CASE("hasse-witt scalar of Fermat hypersurfaces") {
  CHECK(hasse_witt_scalar(poly("x^3+y^3+z^3", 5)) == 0);
  CHECK(hasse_witt_scalar(poly("x^3+y^3+z^3", 7)) == 6);  // multinomial(6;2,2,2)
  Polynomial quartic = parse_poly("x0^4+x1^4+x2^4+x3^4", PrimeField(5), 4);
  CHECK(hasse_witt_scalar(quartic) == 4);  // 4! = 24 = 4 mod 5
  CHECK(is_ordinary_cy(quartic));
  CHECK(level(quartic).level == 1);  // ordinary CY has level 1
  CHECK_THROWS_AS(hasse_witt_scalar(parse_poly("x^2+y^2+z^2", PrimeField(5), 3)), Error);
}

TEST_CASE("known ordinary and supersingular elliptic curves") {
  // y^2 = x^3 + x is supersingular exactly when p = 3 mod 4
  const char* curve = "x1^2*x2 - x0^3 - x0*x2^2";
  CHECK_FALSE(is_ordinary_cy(poly(curve, 7)));
  CHECK(is_ordinary_cy(poly(curve, 5)));
  CHECK(level(poly(curve, 7)).level == 2);
  CHECK(level(poly(curve, 5)).level == 1);
}
