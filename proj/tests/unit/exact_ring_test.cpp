#include <gtest/gtest.h>

#include "hecke/errors.hpp"
#include "hecke/laurent_poly.hpp"
#include "test_support.hpp"

namespace hecke {
namespace {

using testing::naive_mul;
using testing::random_poly;
using testing::terms;

const LaurentPoly u = LaurentPoly::monomial(Rational(1), 1);

TEST(Rational, ReducesAndFormats) {
    EXPECT_EQ(Rational(6, -4).fraction(), "-3/2");
    EXPECT_THROW(Rational::parse("6/-4"), std::exception);
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational(0, 7).fraction(), "0/1");
    EXPECT_EQ(Rational(4).fraction(), "4/1");
    EXPECT_EQ(Rational(4).to_string(), "4");
}

TEST(Rational, ParseRejectsMalformedText) {
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse("1/"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, PowAndSqrt) {
    EXPECT_EQ(Rational(2, 3).pow(-3), Rational(27, 8));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
    EXPECT_EQ(Rational(81, 16).sqrt(), Rational(9, 4));
    EXPECT_FALSE(Rational(2).sqrt());
    EXPECT_FALSE(Rational(-4).sqrt());
    EXPECT_THROW((void)Rational(0).inverse(), NotInvertible);
}

TEST(LaurentPoly, Multiplication) {
    EXPECT_EQ((1 + u) * (1 - u), 1 - u * u);
    EXPECT_EQ(LaurentPoly::monomial(Rational(1), -1) * u, LaurentPoly(1));
    const LaurentPoly q_term = LaurentPoly(Rational(3, 2)) - u * Rational(2, 3);
    EXPECT_TRUE((q_term * LaurentPoly()).is_zero());
}

TEST(LaurentPoly, InvertUnit) {
    EXPECT_EQ(invert_unit(LaurentPoly::monomial(Rational(2), 3)), LaurentPoly::monomial(Rational(1, 2), -3));
    EXPECT_EQ(invert_unit(LaurentPoly(1)), LaurentPoly(1));
    EXPECT_THROW(invert_unit(1 + u), NotAUnit);
    EXPECT_THROW(invert_unit(LaurentPoly()), NotAUnit);
}

TEST(LaurentPoly, DerivativeAtOne) {
    EXPECT_EQ(derivative_at_one(LaurentPoly(Rational(7, 3))), Rational(0));
    EXPECT_EQ(derivative_at_one(u), Rational(-2));
    EXPECT_EQ(derivative_at_one(u * u - LaurentPoly::monomial(Rational(1), -1)), Rational(-6));
}

TEST(LaurentPoly, Proportional) {
    const auto r1 = proportional(u, u * u * u);
    ASSERT_TRUE(r1);
    EXPECT_EQ(r1->num, LaurentPoly::monomial(Rational(1), -2));
    const auto r2 = proportional(2 + u * Rational(2), 1 + u);
    ASSERT_TRUE(r2);
    EXPECT_EQ(r2->num, LaurentPoly(2));
    EXPECT_FALSE(proportional(1 + u, 1 + u * Rational(2)));
    const auto r0 = proportional(LaurentPoly(), LaurentPoly());
    ASSERT_TRUE(r0);
    EXPECT_EQ(r0->num, LaurentPoly(1));
}

TEST(LaurentPoly, SubstitutionAndShift) {
    const LaurentPoly p = 1 + u * Rational(3) - u * u;
    // u -> 2 u^-1
    EXPECT_EQ(p.substituted(Rational(2), -1),
              1 + LaurentPoly::monomial(Rational(6), -1) - LaurentPoly::monomial(Rational(4), -2));
    EXPECT_EQ(p.shifted(-1).min_deg(), -1);
    EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(9, 4));
}

TEST(LaurentPoly, GcdAndExactDivision) {
    const LaurentPoly a = (1 + u) * (2 - u);
    const LaurentPoly b = (1 + u) * (3 + u * u);
    EXPECT_EQ(poly_gcd(a, b), 1 + u);
    EXPECT_EQ(exact_divide(a, 1 + u), 2 - u);
    EXPECT_THROW(exact_divide(a, 3 + u), InternalMismatch);
}

TEST(LaurentPolyProperties, RingAxiomsAgainstCoefficientMaps) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly a = random_poly(rng, -3, 2);
        const LaurentPoly b = random_poly(rng, -1, 4);
        const LaurentPoly c = random_poly(rng, 0, 3);
        EXPECT_EQ(terms(a * b), naive_mul(terms(a), terms(b)));
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        if (!a.is_zero() && !b.is_zero()) {
            EXPECT_EQ((a * b).min_deg(), a.min_deg() + b.min_deg());
            EXPECT_EQ((a * b).max_deg(), a.max_deg() + b.max_deg());
        }
    }
}

TEST(LaurentPolyProperties, UnitInversionIsInvolutive) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int deg = static_cast<int>(rng() % 11) - 5;
        const LaurentPoly unit = LaurentPoly::monomial(Rational(static_cast<long>(rng() % 9) + 1, 7), deg);
        EXPECT_EQ(invert_unit(invert_unit(unit)), unit);
        EXPECT_EQ(invert_unit(unit) * unit, LaurentPoly(1));
    }
}

TEST(LaurentPolyProperties, ProportionalImpliesIdentity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const LaurentPoly b = random_poly(rng, -2, 2);
        if (b.is_zero()) continue;
        const LaurentPoly a = b * LaurentPoly::monomial(Rational(static_cast<long>(rng() % 5) + 1, 3),
                                                        static_cast<int>(rng() % 5) - 2);
        const auto r = proportional(a, b);
        ASSERT_TRUE(r);
        EXPECT_EQ(a * r->den, b * r->num);
    }
}

}  // namespace
}  // namespace hecke
