#include <random>

#include <gtest/gtest.h>

#include "wpd/errors.hpp"
#include "wpd/laurent.hpp"
#include "wpd/linalg.hpp"
#include "wpd/rational.hpp"
#include "wpd/ypoly.hpp"

using namespace wpd;

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
    EXPECT_EQ(Rational::parse("-7").str(), "-7");
    EXPECT_EQ(Rational::parse("0/5").str(), "0");
    EXPECT_EQ(Rational(1, 3).decimal(4), "0.3333");
    EXPECT_THROW(Rational::parse("1.5"), InputError);
    EXPECT_THROW(Rational::parse("x"), InputError);
    EXPECT_THROW(Rational(1, 0), DomainError);
    EXPECT_THROW(Rational(0).inverse(), DomainError);
}

TEST(Rational, Arithmetic) {
    Rational a(1, 2), b(1, 3);
    EXPECT_EQ(a + b, Rational(5, 6));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 6));
    EXPECT_EQ(a / b, Rational(3, 2));
    EXPECT_EQ(Rational(-2, 3).pow(-2), Rational(9, 4));
    EXPECT_LT(b, a);
}

TEST(Linalg, SolveAndDeterminant) {
    QMatrix A{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    auto x = solve_linear(A, {Rational(3), Rational(5)});
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (QVector{Rational(4, 5), Rational(7, 5)}));
    EXPECT_EQ(determinant(A), Rational(5));
    QMatrix S{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    EXPECT_FALSE(solve_linear(S, {Rational(1), Rational(1)}));
    EXPECT_EQ(rank(S), 1u);
    auto N = nullspace(S, 2);
    ASSERT_EQ(N.size(), 1u);
    EXPECT_TRUE(dot(S[0], N[0]).is_zero());
}

TEST(Linalg, Primitive) {
    auto p = primitive({Rational(2, 3), Rational(-4, 3), Rational(0)});
    EXPECT_EQ(p, (std::vector<Integer>{1, -2, 0}));
    EXPECT_THROW(primitive({Rational(0), Rational(0)}), DomainError);
}

TEST(Linalg, PrimitiveScalingProperty) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-9, 9), s(1, 12);
    for (int t = 0; t < 200; ++t) {
        QVector v{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
        if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
            continue;
        QVector w = Rational(s(rng), s(rng)) * v;
        EXPECT_EQ(primitive(v), primitive(w));
    }
}

TEST(YPoly, GcdAndPrint) {
    YPoly a = YPoly::one_plus_y() * YPoly::one_plus_y();
    YPoly b = YPoly::one_plus_y() * YPoly::y();
    EXPECT_EQ(YPoly::gcd(a, b), YPoly::one_plus_y());
    EXPECT_EQ(YPoly(std::vector<Rational>{Rational(1, 2), Rational(-1), Rational(3)}).str(), "3*y^2 - y + 1/2");
}

TEST(YRational, WeightsAndEquality) {
    auto w = YRational::weight(1, 1);
    EXPECT_EQ(w.eval(1), Rational(1, 4));
    EXPECT_EQ(w, YRational(YPoly::y(), YPoly::one_plus_y().pow(2)));
    EXPECT_THROW(w.eval(-1), DomainError);
    EXPECT_EQ((YRational(1) / YPoly::one_plus_y()).str(), "1/(y + 1)");
}

// Evaluation at y is a ring homomorphism.
TEST(YRational, EvalIsHomomorphism) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-5, 5);
    auto rnd = [&] {
        return YRational(YPoly(std::vector<Rational>{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))}),
                         YPoly(std::vector<Rational>{Rational(1), Rational(d(rng))}) +
                             YPoly(std::vector<Rational>{Rational(0), Rational(0), Rational(1)}));
    };
    for (int t = 0; t < 100; ++t) {
        YRational a = rnd(), b = rnd();
        Rational y(d(rng), 7);
        try {
            Rational ea = a.eval(y), eb = b.eval(y);
            EXPECT_EQ((a + b).eval(y), ea + eb);
            EXPECT_EQ((a * b).eval(y), ea * eb);
            EXPECT_EQ((a - b).eval(y), ea - eb);
        } catch (const DomainError&) {
        }
    }
}

TEST(Laurent, GeometricSeriesIdentity) {
    // (1 - z^3)/(1 - z) = 1 + z + z^2
    LaurentPoly one = LaurentPoly::constant(1, YPoly(1));
    LaurentPoly z = LaurentPoly::variable(1, 0);
    RationalFunction f(one - z * z * z, one - z);
    EXPECT_TRUE(f.equals(one + z + z * z));
    EXPECT_EQ(f.eval({Rational(2)}, 0), Rational(7));
    EXPECT_THROW(RationalFunction(one, LaurentPoly(1)), DomainError);
}

TEST(Laurent, EvalMatchesProduct) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int t = 0; t < 50; ++t) {
        LaurentPoly a(2), b(2);
        for (int k = 0; k < 3; ++k) {
            a.add_term({d(rng), d(rng)}, YPoly(std::vector<Rational>{Rational(d(rng)), Rational(d(rng))}));
            b.add_term({d(rng), d(rng)}, YPoly(Rational(d(rng))));
        }
        QVector z{Rational(5, 3), Rational(-4, 7)};
        Rational y(1, 3);
        EXPECT_EQ((a * b).eval(z, y), a.eval(z, y) * b.eval(z, y));
        EXPECT_EQ((a + b).eval(z, y), a.eval(z, y) + b.eval(z, y));
    }
    EXPECT_THROW(LaurentPoly::monomial({-1}).eval({Rational(0)}, 0), DomainError);
}

TEST(Laurent, RationalFunctionArithmetic) {
    LaurentPoly one = LaurentPoly::constant(1, YPoly(1));
    LaurentPoly z = LaurentPoly::variable(1, 0);
    RationalFunction f(one, one - z), g(z, one - z);
    // 1/(1-z) - z/(1-z) = 1
    EXPECT_TRUE((f - g).equals(one));
    QVector p{Rational(3, 5)};
    EXPECT_EQ((f * g).eval(p, 2), f.eval(p, 2) * g.eval(p, 2));
}
