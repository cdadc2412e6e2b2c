#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fplevel/errors.hpp"
#include "fplevel/monomial.hpp"
#include "fplevel/polynomial.hpp"
#include "fplevel/prime_field.hpp"

using namespace fplevel;

namespace {

Polynomial random_poly(PrimeField F, std::uint32_t nvars, std::uint32_t max_deg,
                       std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> expd(0, max_deg);
  std::uniform_int_distribution<std::uint32_t> coeffd(0, F.p() - 1);
  std::vector<Polynomial::Term> terms;
  for (int i = 0; i < 6; ++i) {
    std::vector<std::uint32_t> e(nvars);
    for (auto& v : e) v = expd(rng);
    terms.push_back({Monomial(std::move(e)), coeffd(rng)});
  }
  return Polynomial(F, nvars, std::move(terms));
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField F(13);
  CHECK(F.p() == 13);
  CHECK(F.add(7, 9) == 3);
  CHECK(F.sub(2, 5) == 10);
  CHECK(F.neg(0) == 0);
  CHECK(F.mul(6, 11) == 66 % 13);
  CHECK(F.pow(2, 12) == 1);  // Fermat
  for (std::uint32_t a = 1; a < 13; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.reduce_signed(-1) == 12);
  CHECK(F.reduce_signed(-27) == 12);
}

TEST_CASE("prime field rejects bad moduli") {
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(91), Error);  // 7*13
  CHECK(PrimeField::is_prime(2147483647));
  CHECK_FALSE(PrimeField::is_prime(2147483646));
}

TEST_CASE("monomial operations") {
  Monomial a({2, 0, 3});
  Monomial b({1, 1, 0});
  CHECK(a.degree() == 5);
  CHECK(a.times(b) == Monomial({3, 1, 3}));
  CHECK(b.divides(a.times(b)));
  CHECK_FALSE(b.divides(a));
  CHECK(b.divide_into(a.times(b)) == a);
  CHECK(Monomial({7, 5, 0}).mod_q(3) == Monomial({1, 2, 0}));
  CHECK(Monomial({7, 5, 0}).div_q(3) == Monomial({2, 1, 0}));
  CHECK(Monomial({2, 1, 0}).scale(3) == Monomial({6, 3, 0}));
  CHECK_THROWS_AS(Monomial({1u << 30, 0, 0}).scale(4), Error);
}

TEST_CASE("graded lex order, x0 largest") {
  CHECK(grlex_greater(Monomial({0, 0, 2}), Monomial({1, 0, 0})));  // degree first
  CHECK(grlex_greater(Monomial({1, 1, 0}), Monomial({1, 0, 1})));
  CHECK(grlex_greater(Monomial({2, 0, 0}), Monomial({1, 1, 0})));
  auto ms = monomials_of_degree(3, 4);
  CHECK(ms.size() == 15);  // C(4+2, 2)
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(grlex_greater(ms[i], ms[i + 1]));
  CHECK(ms.front() == Monomial({4, 0, 0}));
  CHECK(ms.back() == Monomial({0, 0, 4}));
}

TEST_CASE("polynomial normalization") {
  PrimeField F(5);
  // duplicate monomials combine, zero coefficients drop
  Polynomial f(F, 2, {{Monomial({1, 0}), 3}, {Monomial({1, 0}), 2}, {Monomial({0, 1}), 4}});
  CHECK(f == Polynomial::monomial(F, Monomial({0, 1}), 4));
  CHECK(Polynomial::constant(F, 2, 10).is_zero());
  CHECK(Polynomial::one(F, 2).is_one());
  CHECK(Polynomial::variable(F, 3, 1) == Polynomial::monomial(F, Monomial({0, 1, 0}), 1));
}

TEST_CASE("degree and homogeneity") {
  PrimeField F(7);
  Polynomial f(F, 2, {{Monomial({3, 0}), 1}, {Monomial({1, 2}), 6}});
  CHECK(f.degree() == 3);
  CHECK(f.is_homogeneous());
  Polynomial g = f + Polynomial::one(F, 2);
  CHECK_FALSE(g.is_homogeneous());
  CHECK_FALSE(Polynomial::zero(F, 2).degree().has_value());
  auto comps = homogeneous_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == f);
  CHECK(comps[1].is_one());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(42);
  PrimeField F(5);
  for (int it = 0; it < 25; ++it) {
    Polynomial a = random_poly(F, 2, 3, rng);
    Polynomial b = random_poly(F, 2, 3, rng);
    Polynomial c = random_poly(F, 2, 3, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Polynomial::zero(F, 2));
    CHECK(poly_neg(a) + a == Polynomial::zero(F, 2));
    CHECK(poly_scale(a, 3) == a + a + a);
  }
}

TEST_CASE("poly_pow against repeated multiplication") {
  std::mt19937 rng(7);
  PrimeField F(5);
  for (int it = 0; it < 5; ++it) {
    Polynomial a = random_poly(F, 2, 2, rng);
    Polynomial acc = Polynomial::one(F, 2);
    for (std::uint64_t m = 0; m <= 9; ++m) {
      CHECK(poly_pow(a, m) == acc);
      acc = acc * a;
    }
    // exercises the base-p Frobenius factorization (24 = 4 + 4*5)
    Polynomial p24 = poly_pow(a, 24);
    Polynomial q = poly_pow(a, 9);
    CHECK(p24 == q * q * poly_pow(a, 6));
  }
}

TEST_CASE("frobenius twist is the p^e-th power") {
  PrimeField F(3);
  Polynomial f(F, 2, {{Monomial({1, 0}), 1}, {Monomial({0, 1}), 2}});
  CHECK(frobenius_twist(f, 1) == f * f * f);
  CHECK(frobenius_twist(f, 2) == poly_pow(f, 9));
  CHECK(frobenius_twist(f, 0) == f);
}

TEST_CASE("coefficient lookup") {
  PrimeField F(7);
  Polynomial f(F, 3, {{Monomial({1, 1, 1}), 5}, {Monomial({3, 0, 0}), 2}});
  CHECK(coefficient_of(f, Monomial({1, 1, 1})) == 5);
  CHECK(coefficient_of(f, Monomial({3, 0, 0})) == 2);
  CHECK(coefficient_of(f, Monomial({0, 0, 3})) == 0);
}

TEST_CASE("canonical printing") {
  PrimeField F(5);
  Polynomial f(F, 3,
               {{Monomial({3, 0, 0}), 1}, {Monomial({0, 3, 0}), 2}, {Monomial({0, 0, 0}), 4}});
  CHECK(to_string(f) == "x0^3 + 2*x1^3 + 4");
  CHECK(to_string(Polynomial::zero(F, 3)) == "0");
  CHECK(to_string(Polynomial::monomial(F, Monomial({1, 1, 0}), 1)) == "x0*x1");
}

TEST_CASE("context mismatches are rejected") {
  PrimeField F5(5), F7(7);
  Polynomial a = Polynomial::one(F5, 2);
  CHECK_THROWS_AS((void)poly_add(a, Polynomial::one(F7, 2)), Error);
  CHECK_THROWS_AS((void)poly_mul(a, Polynomial::one(F5, 3)), Error);
}
