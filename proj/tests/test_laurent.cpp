#include <gtest/gtest.h>

#include "oracles.hpp"

using qss::LaurentPoly;
using qss::RationalFn;

TEST(Laurent, BarNegatesExponents) {
    const LaurentPoly p = LaurentPoly::v(2) + LaurentPoly(3);
    EXPECT_EQ(p.bar(), LaurentPoly::v(-2) + LaurentPoly(3));
    EXPECT_EQ(LaurentPoly().bar(), LaurentPoly());
}

TEST(Laurent, BarIsInvolutionAndRingMap) {
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly p = oracle::random_laurent(), q = oracle::random_laurent();
        EXPECT_EQ(p.bar().bar(), p);
        EXPECT_EQ((p * q).bar(), p.bar() * q.bar());
        EXPECT_EQ((p + q).bar(), p.bar() + q.bar());
    }
}

TEST(Laurent, NoZeroCoefficientsStored) {
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly p = oracle::random_laurent();
        const LaurentPoly s = p - p;
        EXPECT_TRUE(s.is_zero());
        const LaurentPoly prod = p * oracle::random_laurent();
        for (const auto& [e, c] : prod.terms()) EXPECT_NE(c, 0);
    }
}

TEST(Laurent, RingAxiomsOnRandomTriples) {
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly a = oracle::random_laurent(), b = oracle::random_laurent(), c = oracle::random_laurent();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(Laurent, SmallIdentities) {
    const LaurentPoly s = LaurentPoly::v(1) + LaurentPoly::v(-1);
    EXPECT_EQ(s * s, LaurentPoly::v(2) + LaurentPoly(2) + LaurentPoly::v(-2));
    EXPECT_EQ(LaurentPoly::neg_q(-1), LaurentPoly::monomial(-2, -1));
    EXPECT_EQ(LaurentPoly::neg_q(2), LaurentPoly::v(4));
    EXPECT_EQ(s.pow(3), s * s * s);
}

TEST(Laurent, BigCoefficientsDoNotOverflow) {
    LaurentPoly p = LaurentPoly(1) + LaurentPoly::v(1);
    p = p.pow(200);
    qss::BigInt binom = 1;
    for (int i = 1; i <= 100; ++i) binom = binom * (100 + i) / i;
    EXPECT_EQ(p.coefficient(100), binom);
    EXPECT_GT(binom, qss::BigInt(1) << 190);
}

TEST(Laurent, ExactDivision) {
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly a = oracle::random_laurent(), b = oracle::random_laurent();
        if (b.is_zero()) continue;
        EXPECT_EQ((a * b).divide_exact(b), a);
    }
    EXPECT_THROW((LaurentPoly(1) + LaurentPoly::v(2)).divide_exact(LaurentPoly(2)), std::domain_error);
}

TEST(Laurent, EvaluateAtRational) {
    const LaurentPoly p = LaurentPoly::v(2) - LaurentPoly::v(-1);
    EXPECT_EQ(p.evaluate(qss::BigRational(2)), qss::BigRational(7, 2));
}

TEST(Poincare, SmallCases) {
    const std::vector<int> ones{1, 1}, two{2};
    EXPECT_EQ(qss::poincare(ones), LaurentPoly(1));
    EXPECT_EQ(qss::poincare(two), LaurentPoly(1) + LaurentPoly::q(1));
    const std::vector<int> three{3};
    EXPECT_EQ(qss::poincare(three), oracle::poincare_bruteforce(qss::Composition({3})));
}

TEST(Poincare, MatchesEnumerationAndDegree) {
    for (int n = 1; n <= 6; ++n) {
        const std::vector<int> p{n};
        const LaurentPoly P = qss::poincare(p);
        EXPECT_EQ(P.max_exponent(), n * (n - 1));
        EXPECT_EQ(P.coefficient(0), 1);
        if (n <= 5) {
            EXPECT_EQ(P, oracle::poincare_bruteforce(qss::Composition({n})));
        }
    }
    const qss::Composition lam({2, 0, 3, 1});
    EXPECT_EQ(qss::poincare(lam.parts()), oracle::poincare_bruteforce(lam));
}

TEST(RationalFn, CanonicalFormIsUnique) {
    for (int i = 0; i < 60; ++i) {
        const LaurentPoly a = oracle::random_laurent(3, 3, 5), b = oracle::random_laurent(3, 3, 5);
        const LaurentPoly c = oracle::random_laurent(3, 3, 5);
        if (b.is_zero() || c.is_zero()) continue;
        const RationalFn f(a, b), g(a * c, b * c);
        EXPECT_EQ(f, g);
        if (!f.is_zero()) {
            EXPECT_EQ(f.denominator().min_exponent(), 0);
            EXPECT_GT(f.denominator().leading_coefficient(), 0);
        }
    }
}

TEST(RationalFn, FieldOperations) {
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly a = oracle::random_laurent(3, 3, 5), b = oracle::random_laurent(3, 3, 5);
        const LaurentPoly c = oracle::random_laurent(3, 3, 5), d = oracle::random_laurent(3, 3, 5);
        if (b.is_zero() || d.is_zero()) continue;
        const RationalFn x(a, b), y(c, d);
        EXPECT_EQ((x + y) - y, x);
        if (!y.is_zero()) {
            EXPECT_EQ((x * y) / y, x);
        }
        EXPECT_EQ((x * y).bar(), x.bar() * y.bar());
    }
    const RationalFn h(LaurentPoly(1) + LaurentPoly::q(1));
    EXPECT_TRUE(h.is_laurent());
    EXPECT_EQ((h.inverse() * h).to_laurent(), LaurentPoly(1));
    EXPECT_EQ(RationalFn(LaurentPoly::v(3), LaurentPoly::v(1)).to_laurent(), LaurentPoly::v(2));
    EXPECT_THROW(RationalFn(LaurentPoly(1), LaurentPoly()), std::domain_error);
}
