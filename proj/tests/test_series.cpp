#include <doctest.h>

#include "spincone/polynomial.hpp"
#include "spincone/series.hpp"

using namespace spincone;

namespace {

Poly1 one_minus_t() { return Poly1(1) - Poly1::monomial(1, 1); }

}  // namespace

TEST_CASE("univariate arithmetic and expansion") {
  // 1/(1-t)^11: binomial coefficients
  Rat1 r(Poly1(1), one_minus_t().pow(11));
  auto e = r.expand(0, 3);
  CHECK(e[0] == 1);
  CHECK(e[1] == 11);
  CHECK(e[2] == 66);
  CHECK(e[3] == 286);

  Poly1 num(1);
  num.set_coeff(1, 5);
  num.set_coeff(2, 5);
  num.set_coeff(3, 1);
  Rat1 a00(num, one_minus_t().pow(11));
  auto e2 = a00.expand(0, 2);
  CHECK(e2[2] == 126);
}

TEST_CASE("rat1 normal form and gcd") {
  // (1-t^2)/(1-t) reduces to 1+t
  Poly1 n = Poly1(1) - Poly1::monomial(1, 2);
  Rat1 r(n, one_minus_t());
  CHECK(r.den() == Poly1(1));
  Poly1 expect(1);
  expect.set_coeff(1, 1);
  CHECK(r.num() == expect);
  // equality by cross-multiplication
  CHECK(Rat1(n, one_minus_t()) == Rat1(expect, Poly1(1)));
}

TEST_CASE("reciprocal substitution") {
  Rat1 f(Poly1(1), one_minus_t());
  Rat1 g = f.substitute_reciprocal();  // 1/(1-1/t) = t/(t-1)
  Rat1 expect(Poly1::monomial(-1, 1), one_minus_t());
  CHECK(g == expect);
}

TEST_CASE("palindromy of the base fixture") {
  Poly1 num(1);
  num.set_coeff(1, 5);
  num.set_coeff(2, 5);
  num.set_coeff(3, 1);
  Rat1 r(num, one_minus_t().pow(11));
  // R(1/t) == (-1)^11 t^8 R(t)
  Rat1 flipped = r.substitute_reciprocal();
  Rat1 rhs = Rat1(Poly1::monomial(-1, 8), Poly1(1)) * r;
  CHECK(flipped == rhs);
}

TEST_CASE("bivariate arithmetic, substitution, gcd") {
  Poly2 t = Poly2::monomial(1, 1, 0);
  Poly2 q = Poly2::monomial(1, 0, 1);
  Poly2 one(1);
  Rat2 f(one, one - q * t);  // 1/(1-qt)
  // t -> qt gives 1/(1-q^2 t)
  Rat2 g = f.substitute_monomial(1, 1, 0, 1);
  Rat2 expect(one, one - Poly2::monomial(1, 1, 2));
  CHECK(g == expect);

  // gcd cancellation: (1-(qt)^2)/(1-qt) = 1+qt
  Rat2 h(one - (q * t).pow(2), one - q * t);
  CHECK(h.den() == one);
  CHECK(h.num() == one + q * t);

  // B_0^1 fixture under t -> qt
  Poly2 numB = one + Poly2::monomial(3, 1, 0) + Poly2::monomial(1, 2, 0);
  Poly2 denB = (one - t).pow(8) * (one - q * t);
  Rat2 b01(numB, denB);
  Rat2 b01_sub = b01.substitute_monomial(1, 1, 0, 1);
  Poly2 numB2 = one + Poly2::monomial(3, 1, 1) + Poly2::monomial(1, 2, 2);
  Poly2 denB2 = (one - q * t).pow(8) * (one - Poly2::monomial(1, 1, 2));
  CHECK(b01_sub == Rat2(numB2, denB2));
}

TEST_CASE("graded series ring ops under truncation") {
  GradedSeries f(5), zero(5);
  f.add(0, 0, 1);
  f.add(1, -1, 3);
  f.add(2, 2, mpq_class(1, 2));
  CHECK(f + zero == f);
  GradedSeries g = f - f;
  CHECK(g.zero());
  // truncation functoriality of products
  GradedSeries p = (f * f).truncated(3);
  GradedSeries p2 = f.truncated(3) * f.truncated(3);
  CHECK(p == p2.truncated(3));
}

TEST_CASE("bivariate expansion in the t direction") {
  Poly2 one(1);
  Poly2 t = Poly2::monomial(1, 1, 0);
  Poly2 q = Poly2::monomial(1, 0, 1);
  // (1+5t+5t^2+t^3)/(1-t)^11 * 1/(1-qt): t-slices have finite q support
  Poly2 num = one + Poly2::monomial(5, 1, 0) + Poly2::monomial(5, 2, 0) +
              Poly2::monomial(1, 3, 0);
  Rat2 f(num, (one - t).pow(11) * (one - q * t));
  GradedSeries s = expand(f, 2);
  CHECK(s.coeff(0, 0) == 1);
  CHECK(s.coeff(1, 0) == 16);
  CHECK(s.coeff(1, 1) == 1);
  CHECK(s.coeff(2, 2) == 1);
  CHECK(s.coeff(2, 1) == 16);
  CHECK(s.coeff(2, 0) == 126);

  // pure-q denominators cannot be expanded in the t direction
  Rat2 bad(one, one - q);
  CHECK_THROWS_AS(expand(bad, 3), NonExpandableDirection);
}

TEST_CASE("expansion then rational reconstruction by linear solve") {
  // recover (1+3t+t^2)/((1-t)^8 (1-qt)) coefficients from its own expansion
  Poly2 one(1);
  Poly2 t = Poly2::monomial(1, 1, 0);
  Poly2 q = Poly2::monomial(1, 0, 1);
  Poly2 num = one + Poly2::monomial(3, 1, 0) + Poly2::monomial(1, 2, 0);
  Poly2 den = (one - t).pow(8) * (one - q * t);
  Rat2 f(num, den);
  GradedSeries s = expand(f, 9);
  // multiply the series by the denominator and check the numerator emerges
  GradedSeries ds(9);
  for (const auto& [k, c] : den.terms()) ds.add(k.first, k.second, c);
  GradedSeries back = ds * s;
  GradedSeries expect(9);
  for (const auto& [k, c] : num.terms()) expect.add(k.first, k.second, c);
  CHECK(back == expect);
}

TEST_CASE("q-directed expansion with rational slice coefficients") {
  Poly2 one(1);
  Poly2 t = Poly2::monomial(1, 1, 0);
  Poly2 q = Poly2::monomial(1, 0, 1);
  // 1/((1-t)(1-qt)): slice at q^u is t^u/(1-t)
  Rat2 f(one, (one - t) * (one - q * t));
  auto slices = q_expansion(f, 0, 3);
  for (int u = 0; u <= 3; ++u) {
    Rat1 expect(Poly1::monomial(1, u), Poly1(1) - Poly1::monomial(1, 1));
    CHECK(slices.at(u) == expect);
  }
  // Laurent slice: q^-1 factor shifts the support down
  Rat2 g = f * Rat2(Poly2::monomial(1, 0, -1), Poly2(1));
  auto slices2 = q_expansion(g, -1, 1);
  CHECK(slices2.at(-1) ==
        Rat1(Poly1(1), Poly1(1) - Poly1::monomial(1, 1)));
  CHECK(slices2.at(1).zero() == false);
}
