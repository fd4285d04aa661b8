#include <doctest.h>

#include <random>

#include "jack/alpha_poly.hpp"
#include "support.hpp"

using namespace jack;
using support::a;

TEST_CASE("alpha polynomials are trimmed and compare by coefficients") {
  CHECK(AlphaPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(AlphaPoly{0, 0}.is_zero());
  CHECK(AlphaPoly().degree() == -1);
  CHECK(AlphaPoly::linear(2, 3) == AlphaPoly{3, 2});
  CHECK(a - a == AlphaPoly());
}

TEST_CASE("alpha polynomial arithmetic") {
  const AlphaPoly p = a + AlphaPoly(1);
  CHECK(p * p == AlphaPoly{1, 2, 1});
  CHECK((a + 2) * (a + 1) - p * p == a + AlphaPoly(1));
  CHECK(-(a - 1) == AlphaPoly{1, -1});
  CHECK(AlphaPoly{1, 2, 1}.evaluate(mpq_class(1, 2)) == mpq_class(9, 4));
  CHECK(AlphaPoly{4, 6}.content() == 2);
  CHECK(AlphaPoly{4, 6}.primitive_part() == AlphaPoly{2, 3});
  CHECK(AlphaPoly{0, 3, 1}.is_nonnegative());
  CHECK_FALSE(AlphaPoly{1, -1}.is_nonnegative());
}

TEST_CASE("exact division reports non-divisibility") {
  CHECK(AlphaPoly{4, 6}.divexact(mpz_class(2)) == AlphaPoly{2, 3});
  CHECK_THROWS_AS((AlphaPoly{4, 5}.divexact(mpz_class(2))), std::domain_error);
  CHECK(AlphaPoly{2, 3, 1}.divexact(a + 1) == a + 2);
  CHECK_THROWS_AS((AlphaPoly{1, 0, 1}.divexact(a + 1)), std::domain_error);
  CHECK_THROWS_AS((AlphaPoly{1}.divexact(AlphaPoly())), std::domain_error);
}

TEST_CASE("gcd is primitive with positive leading coefficient") {
  CHECK(gcd((a + 1) * (a + 2), (a + 1) * (a + 3)) == a + 1);
  CHECK(gcd(AlphaPoly{2, 2}, AlphaPoly{4, 4}) == a + 1);
  CHECK(gcd(AlphaPoly{-2, -2}, AlphaPoly()) == a + 1);
  CHECK(gcd(AlphaPoly(6), AlphaPoly(4)) == AlphaPoly(1));
  CHECK(gcd(AlphaPoly(), AlphaPoly()).is_zero());
}

TEST_CASE("fractions reduce to a canonical form") {
  CHECK(AlphaFrac(AlphaPoly{2, 2}, AlphaPoly{4, 4}) == AlphaFrac(mpq_class(1, 2)));
  CHECK(AlphaFrac(AlphaPoly(3), AlphaPoly(6)).den() == AlphaPoly(2));
  const AlphaFrac neg(AlphaPoly(1), -a);
  CHECK(neg.num() == AlphaPoly(-1));
  CHECK(neg.den() == a);
  CHECK(AlphaFrac(a + 1, a + 1) == AlphaFrac(1));
  CHECK(AlphaFrac(AlphaPoly(), a).den() == AlphaPoly(1));
  CHECK_THROWS_AS((AlphaFrac(a, AlphaPoly())), std::domain_error);
  CHECK(AlphaFrac(AlphaPoly(2), a + 1).is_polynomial() == false);
}

TEST_CASE("fraction arithmetic and evaluation") {
  const AlphaFrac x(AlphaPoly(1), a + 1);
  CHECK(x + x == AlphaFrac(AlphaPoly(2), a + 1));
  CHECK(x * AlphaFrac(a + 1) == AlphaFrac(1));
  CHECK(x / x == AlphaFrac(1));
  CHECK(x - x == AlphaFrac());
  CHECK(x.inverse() == AlphaFrac(a + 1));
  CHECK(x.evaluate(1) == mpq_class(1, 2));
  CHECK_THROWS_AS((x.evaluate(-1)), std::domain_error);
  CHECK_THROWS_AS((AlphaFrac().inverse()), std::domain_error);
}

TEST_CASE("canonical form is independent of construction (property)") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const AlphaPoly p = support::random_alpha_poly(rng, 3, 6);
    AlphaPoly q = support::random_alpha_poly(rng, 3, 6);
    AlphaPoly r = support::random_alpha_poly(rng, 2, 6);
    if (q.is_zero()) q = AlphaPoly(1);
    if (r.is_zero()) r = AlphaPoly(-3);
    const AlphaFrac direct(p, q);
    const AlphaFrac scaled(p * r, q * r);
    CHECK(direct == scaled);
    CHECK(direct.num() == scaled.num());
    CHECK(direct.den() == scaled.den());
    CHECK(sgn(direct.den().leading()) > 0);
    CHECK(gcd(direct.num(), direct.den()).degree() <= 0);
    const AlphaFrac sum = direct + AlphaFrac(r);
    CHECK(sum == AlphaFrac(p + r * q, q));
  }
}

TEST_CASE("alpha polynomial ring axioms (property)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const AlphaPoly p = support::random_alpha_poly(rng, 4, 9);
    const AlphaPoly q = support::random_alpha_poly(rng, 4, 9);
    const AlphaPoly r = support::random_alpha_poly(rng, 4, 9);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    if (!q.is_zero()) CHECK((p * q).divexact(q) == p);
  }
}
