#include "lacunary/intpoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lacunary;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_deg, int max_abs) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
    std::vector<Int> v(deg(rng) + 1);
    for (Int& c : v) c = coeff(rng);
    return IntPolynomial(std::move(v));
}

}  // namespace

TEST(IntPolynomial, MulExamples) {
    auto a = IntPolynomial::from_ints({1, 1});    // 1+z
    auto b = IntPolynomial::from_ints({1, -1});   // 1-z
    EXPECT_EQ(a * b, IntPolynomial::from_ints({1, 0, -1}));

    EXPECT_TRUE((IntPolynomial() * IntPolynomial::from_ints({3, 0, 0, 0, 0, 1})).is_zero());

    auto g = IntPolynomial::from_ints({1, 1, 1});  // 1+z+z^2
    auto h = IntPolynomial::from_ints({-1, 1});    // z-1
    EXPECT_EQ(g * h, IntPolynomial::from_ints({-1, 0, 0, 1}));
}

TEST(IntPolynomial, MulDegreeAdds) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_poly(rng, 9, 8);
        auto q = random_poly(rng, 9, 8);
        if (p.is_zero() || q.is_zero()) continue;
        EXPECT_EQ((p * q).degree_checked(), p.degree_checked() + q.degree_checked());
    }
}

TEST(IntPolynomial, PowExamples) {
    EXPECT_EQ(IntPolynomial::from_ints({1, 1}).pow(2), IntPolynomial::from_ints({1, 2, 1}));
    EXPECT_EQ(IntPolynomial::monomial(1).pow(3), IntPolynomial::monomial(3));
    EXPECT_EQ(IntPolynomial::from_ints({-1, 2}).pow(0), IntPolynomial::one());
}

TEST(IntPolynomial, DerivativeExamples) {
    EXPECT_EQ(IntPolynomial::monomial(3).derivative(), IntPolynomial::monomial(2, 3));
    EXPECT_EQ(IntPolynomial::from_ints({1, 2, 1}).derivative(2), IntPolynomial::constant(2));
    EXPECT_TRUE(IntPolynomial::monomial(2).derivative(3).is_zero());
    auto p = IntPolynomial::from_ints({5, -3, 2, 7});
    EXPECT_EQ(p.derivative(0), p);
}

TEST(IntPolynomial, LengthHeightExamples) {
    auto p = IntPolynomial::from_ints({1, -2, 3});
    EXPECT_EQ(p.length(), 6);
    EXPECT_EQ(p.height(), 3);
    EXPECT_EQ(IntPolynomial().length(), 0);
    EXPECT_EQ(IntPolynomial().height(), 0);
    EXPECT_EQ(IntPolynomial::from_ints({1, 1}).pow(2).length(), 4);
    EXPECT_EQ(IntPolynomial::constant(7).height(), 7);
    EXPECT_EQ(IntPolynomial::monomial(5).height(), 1);
}

TEST(IntPolynomial, EvalExamples) {
    auto p = IntPolynomial::from_ints({1, 1});
    EXPECT_EQ(p.eval(make_rat(1, 2)), make_rat(3, 2));

    auto q = IntPolynomial::from_ints({1, 0, 1});  // z^2+1 at i
    RationalComplex i(Rat(0), Rat(1));
    EXPECT_TRUE(q.eval(i).is_zero());

    auto r = IntPolynomial::from_ints({1, 1, 1});
    EXPECT_EQ(r.eval(make_rat(1, 3)), make_rat(13, 9));
}

TEST(IntPolynomial, ExponentGcdSplit) {
    auto [d1, q1] = IntPolynomial::from_ints({0, 0, 1, 0, 1}).exponent_gcd_split();
    EXPECT_EQ(d1, 2u);
    EXPECT_EQ(q1, IntPolynomial::from_ints({0, 1, 1}));

    auto [d2, q2] = IntPolynomial::monomial(3).exponent_gcd_split();
    EXPECT_EQ(d2, 3u);
    EXPECT_EQ(q2, IntPolynomial::monomial(1));

    auto [d3, q3] = IntPolynomial::from_ints({0, 1, 1}).exponent_gcd_split();
    EXPECT_EQ(d3, 1u);
    EXPECT_EQ(q3, IntPolynomial::from_ints({0, 1, 1}));

    EXPECT_THROW(IntPolynomial().exponent_gcd_split(), Error);
}

TEST(IntPolynomial, SplitReassembles) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(rng, 12, 5);
        if (p.is_zero()) continue;
        auto [d, q] = p.exponent_gcd_split();
        // q(z^d) = p(z)
        std::vector<Int> lifted((q.degree_checked()) * d + 1, Int(0));
        for (std::size_t n = 0; n <= q.degree_checked(); ++n) lifted[n * d] = q[n];
        EXPECT_EQ(IntPolynomial(std::move(lifted)), p);
    }
}

TEST(IntPolynomial, PrimitivePart) {
    EXPECT_EQ(IntPolynomial::from_ints({2, -4}).primitive_part(),
              IntPolynomial::from_ints({-1, 2}));
    EXPECT_EQ(IntPolynomial::monomial(2, -3).primitive_part(), IntPolynomial::monomial(2));
    EXPECT_EQ(IntPolynomial::from_ints({5, 10, -15}).primitive_part(),
              IntPolynomial::from_ints({-1, -2, 3}));
    EXPECT_THROW(IntPolynomial().primitive_part(), Error);
}

TEST(IntPolynomial, PrimitivePartLeadingPositive) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(rng, 8, 20);
        if (p.is_zero()) continue;
        auto pp = p.primitive_part();
        EXPECT_EQ(pp.content(), 1);
        EXPECT_GT(sgn(pp.leading()), 0);
    }
}

TEST(IntPolynomial, LengthSubmultiplicative) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_poly(rng, 8, 9);
        auto q = random_poly(rng, 8, 9);
        EXPECT_LE((p + q).length(), p.length() + q.length());
        EXPECT_LE((p * q).length(), p.length() * q.length());
        EXPECT_LE(p.height(), p.length());
    }
}

TEST(IntPolynomial, EvalBoundInsideUnitDisk) {
    // |p(z)| <= L(p) for |z| <= 1, via exact |z|^2 <= 1 sample points.
    std::mt19937 rng(19);
    std::vector<RationalComplex> pts = {
        RationalComplex(make_rat(3, 5), make_rat(4, 5)),    // |z| = 1
        RationalComplex(make_rat(1, 2), make_rat(1, 2)),
        RationalComplex(make_rat(-5, 13), make_rat(12, 13)),
        RationalComplex(Rat(0), Rat(0)),
        RationalComplex(Rat(1), Rat(0)),
        RationalComplex(make_rat(-1, 3), make_rat(-2, 3)),
    };
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_poly(rng, 10, 7);
        for (const auto& z : pts) {
            ASSERT_LE(z.abs_sq(), 1);
            Rat bound(p.length());
            EXPECT_LE(p.eval(z).abs_sq(), bound * bound);
        }
    }
}

TEST(IntPolynomial, EvalIsRingHom) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_poly(rng, 7, 9);
        auto q = random_poly(rng, 7, 9);
        RationalComplex z(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
        EXPECT_EQ((p * q).eval(z), p.eval(z) * q.eval(z));
        EXPECT_EQ((p + q).eval(z), p.eval(z) + q.eval(z));
    }
}

TEST(IntPolynomial, DerivativeLinearAndProductRule) {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_poly(rng, 7, 9);
        auto q = random_poly(rng, 7, 9);
        EXPECT_EQ((p + q).derivative(), p.derivative() + q.derivative());
        EXPECT_EQ((p * q).derivative(), p.derivative() * q + p * q.derivative());
    }
}

TEST(IntPolynomial, KaratsubaMatchesSchoolbook) {
    // Sizes straddling the threshold; compare against a direct convolution.
    std::mt19937 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        auto p = random_poly(rng, 140, 1000);
        auto q = random_poly(rng, 120, 1000);
        if (p.is_zero() || q.is_zero()) continue;
        std::vector<Int> conv(p.degree_checked() + q.degree_checked() + 1, Int(0));
        for (std::size_t i = 0; i <= p.degree_checked(); ++i)
            for (std::size_t j = 0; j <= q.degree_checked(); ++j) conv[i + j] += p[i] * q[j];
        EXPECT_EQ(p * q, IntPolynomial(std::move(conv)));
    }
}

TEST(IntPolynomial, DivideExactAndGcd) {
    auto a = IntPolynomial::from_ints({-1, 0, 0, 1});  // z^3-1
    auto b = IntPolynomial::from_ints({-1, 1});        // z-1
    auto q = divide_exact(a, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, IntPolynomial::from_ints({1, 1, 1}));
    EXPECT_FALSE(divide_exact(a, IntPolynomial::from_ints({1, 1, 1, 1})).has_value());

    EXPECT_TRUE(divides(IntPolynomial::from_ints({-1, 2}),
                        IntPolynomial::from_ints({-1, 0, 4}) * IntPolynomial::from_ints({3, 7})));

    auto g = poly_gcd(a * b, b * IntPolynomial::from_ints({1, 1}));
    EXPECT_EQ(g, b);
}

TEST(IntPolynomial, SquarefreeHelpers) {
    auto p = IntPolynomial::from_ints({-1, 1});
    EXPECT_TRUE(is_squarefree(p * IntPolynomial::from_ints({1, 1})));
    EXPECT_FALSE(is_squarefree(p * p));
    EXPECT_EQ(squarefree_part(p * p * IntPolynomial::from_ints({1, 1})),
              p * IntPolynomial::from_ints({1, 1}));
}

TEST(IntPolynomial, ZeroDegreeIsDistinguished) {
    EXPECT_FALSE(IntPolynomial().degree().has_value());
    EXPECT_EQ(IntPolynomial::constant(5).degree(), std::size_t{0});
    EXPECT_THROW(IntPolynomial().degree_checked(), Error);
}
