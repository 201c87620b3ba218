#include <gtest/gtest.h>

#include "mipoly/errors.hpp"
#include "mipoly/laurent.hpp"
#include "mipoly/qseries.hpp"
#include "mipoly/rational.hpp"

using namespace mipoly;

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("-2/4"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse_decimal("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse_decimal("1e-3"), Rational(1, 1000));
  EXPECT_EQ(Rational::parse_decimal("-3"), Rational(-3));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
}

TEST(Rational, PrintRoundTrips) {
  for (const char* text : {"7/9", "-12/5", "0", "123456789012345678901234567890/7"}) {
    const Rational r = Rational::parse(text);
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
}

TEST(Rational, PowersAndInverse) {
  EXPECT_EQ(Rational(1, 2).pow(-3), Rational(8));
  EXPECT_EQ(Rational(2, 3).pow(0), Rational(1));
  EXPECT_EQ(Rational(-3, 7).inverse(), Rational(-7, 3));
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(QSeries, Pochhammer) {
  EXPECT_EQ(qpoch(Rational(1, 2), Rational(1, 2), 0), Rational(1));
  EXPECT_EQ(qpoch(Rational(1, 2), Rational(1, 2), 2), Rational(3, 8));
  EXPECT_EQ(qpoch(Rational(1), Rational(1, 3), 4), Rational(0));
}

TEST(QSeries, TerminatingSumMatchesQChuVandermonde) {
  // 2phi1(q^-n, b; c; q, q) = (c/b; q)_n / (c; q)_n * b^n
  const Rational q(1, 3), b(2, 5), c(1, 7);
  for (int n = 0; n <= 5; ++n) {
    const Rational lhs = phi_terminating({q.pow(-n), b}, {c}, q, q, n);
    const Rational rhs = qpoch(c / b, q, n) / qpoch(c, q, n) * b.pow(n);
    EXPECT_EQ(lhs, rhs) << "n = " << n;
  }
}

TEST(QSeries, PolyFormAgreesWithScalarForm) {
  const Rational q(1, 2), a(1, 3);
  const LaurentPoly poly = phi_terminating_poly({q.pow(-3), a}, {Rational(1, 5)}, q, q, 1, 3);
  for (int x = -2; x <= 4; ++x) {
    EXPECT_EQ(eval_int_x(poly, x, q),
              phi_terminating({q.pow(-3), a}, {Rational(1, 5)}, q, q.pow(x + 1), 3));
  }
}

TEST(QSeries, VanishingLowerPochhammerThrows) {
  const Rational q(1, 2);
  EXPECT_THROW(phi_terminating({q.pow(-3)}, {q.pow(-1)}, q, q, 3), ZeroDenominator);
}

TEST(Laurent, ShiftMultipliesByPowersOfQ) {
  const Rational q(1, 2);
  const LaurentPoly f = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(1, -1);
  const LaurentPoly g = shift_x(f, 2, q);
  EXPECT_EQ(g.coeff(2), Rational(3) * q.pow(4));
  EXPECT_EQ(g.coeff(-1), q.pow(-2));
  for (int x = -3; x <= 3; ++x) EXPECT_EQ(eval_int_x(g, x, q), eval_int_x(f, x + 2, q));
}

TEST(Laurent, EtaConversionRoundTrips) {
  const LaurentPoly f = LaurentPoly(2) - LaurentPoly::monomial(Rational(5, 3), 1) +
                        LaurentPoly::monomial(Rational(1, 7), 3);
  EXPECT_EQ(from_eta(to_eta(f)), f);
  const EtaPoly e = to_eta(f);
  EXPECT_EQ(e.eval(1 - Rational(1, 4)), eval_int_x(f, 2, Rational(1, 2)));
  EXPECT_THROW(to_eta(LaurentPoly::monomial(1, -1)), NegativePowers);
}

TEST(Laurent, InfinityValueIsConstantTerm) {
  const LaurentPoly f = LaurentPoly(Rational(4, 9)) + LaurentPoly::monomial(7, 2);
  EXPECT_EQ(eval_infinity(f), Rational(4, 9));
  EXPECT_THROW(eval_infinity(LaurentPoly::monomial(1, -2)), NegativePowers);
}

TEST(Laurent, ExactDivision) {
  const LaurentPoly a = LaurentPoly(1) - LaurentPoly::y();
  const LaurentPoly b = LaurentPoly(3) + LaurentPoly::monomial(2, 2);
  EXPECT_EQ(divide_exact(a * b, a), b);
  EXPECT_THROW(divide_exact(b, a), InternalInvariantError);
}

TEST(Laurent, SmallDeterminant) {
  const LaurentPoly one_minus_y = LaurentPoly(1) - LaurentPoly::y();
  const LaurentMatrix m{{one_minus_y, LaurentPoly::y()}, {LaurentPoly::y(), one_minus_y}};
  EXPECT_EQ(det_laurent(m), LaurentPoly(1) - LaurentPoly::monomial(2, 1));
}

TEST(Laurent, BareissAgreesWithCofactorExpansion) {
  // A 4x4 matrix whose determinant is fixed by a block structure.
  const LaurentPoly y = LaurentPoly::y();
  const LaurentPoly z(0);
  const LaurentMatrix m{{y, LaurentPoly(1), z, z},
                        {LaurentPoly(2), y, z, z},
                        {z, z, y + LaurentPoly(1), LaurentPoly(3)},
                        {z, z, LaurentPoly::monomial(1, -1), LaurentPoly(1)}};
  const LaurentPoly upper = y * y - LaurentPoly(2);
  const LaurentPoly lower = y + LaurentPoly(1) - LaurentPoly::monomial(3, -1);
  EXPECT_EQ(det_laurent(m), upper * lower);
}
