#include "lacunary/algebraic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lacunary;

namespace {

IntPolynomial ipoly(std::initializer_list<long> cs) { return IntPolynomial::from_ints(cs); }

Rat q(long n, long d = 1) { return make_rat(n, d); }

}  // namespace

TEST(RootIsolation, LinearAndSimple) {
    auto boxes = isolate_roots(ipoly({-1, 2}), 30);  // 2z-1
    ASSERT_EQ(boxes.size(), 1u);
    EXPECT_TRUE(boxes[0].contains(RationalComplex(q(1, 2), q(0))));

    boxes = isolate_roots(ipoly({0, -1, 1}), 20);  // z^2-z: roots 0, 1
    ASSERT_EQ(boxes.size(), 2u);
    EXPECT_TRUE(boxes[0].contains(RationalComplex(q(0), q(0))));
    EXPECT_TRUE(boxes[1].contains(RationalComplex(q(1), q(0))));
    EXPECT_TRUE(boxes[0].disjoint(boxes[1]));
}

TEST(RootIsolation, CubeRootsOfUnity) {
    // z^3 - 1: roots 1 and (-1 +- i sqrt3)/2. Quadratic-formula oracle:
    // sqrt3 in [1732050807/10^9, 1732050809/10^9].
    auto boxes = isolate_roots(ipoly({-1, 0, 0, 1}), 25);
    ASSERT_EQ(boxes.size(), 3u);
    Rat s3_lo("1732050807/1000000000"), s3_hi("1732050809/1000000000");
    // sorted by (re, im): conjugate pair first (re = -1/2), then 1
    EXPECT_TRUE(boxes[0].re.contains(q(-1, 2)));
    EXPECT_LT(boxes[0].im.hi, 0);
    EXPECT_LE(boxes[0].im.lo, -s3_lo / 2);
    EXPECT_GE(boxes[0].im.hi, -s3_hi / 2);
    EXPECT_TRUE(boxes[1].re.contains(q(-1, 2)));
    EXPECT_GT(boxes[1].im.lo, 0);
    EXPECT_TRUE(boxes[2].contains(RationalComplex(q(1), q(0))));
    // conjugate pair is mirrored exactly
    EXPECT_EQ(boxes[0].re.lo, boxes[1].re.lo);
    EXPECT_EQ(boxes[0].im.lo, -boxes[1].im.hi);
}

TEST(RootIsolation, ScaledSixthRoots) {
    // 4z^2+2z+1: roots (-1 +- i sqrt3)/4
    auto boxes = isolate_roots(ipoly({1, 2, 4}), 30);
    ASSERT_EQ(boxes.size(), 2u);
    Rat s3_lo("1732050807/1000000000"), s3_hi("1732050809/1000000000");
    for (const auto& b : boxes) {
        EXPECT_TRUE(b.re.contains(q(-1, 4)));
        RatInterval target{s3_lo / 4, s3_hi / 4};
        RatInterval im = b.im.lo > 0 ? b.im : -b.im;
        EXPECT_FALSE(im.disjoint(target));
    }
}

TEST(RootIsolation, WidthHonorsPrecision) {
    auto boxes = isolate_roots(ipoly({-2, 0, 1}), 40);  // z^2-2
    Rat w("1/10000000000000000000000000000000000000000");
    for (const auto& b : boxes) EXPECT_LE(b.width(), w);
}

TEST(RootIsolation, RejectsNonSquarefree) {
    auto p = ipoly({-1, 1});
    EXPECT_THROW(isolate_roots(p * p, 10), Error);
    EXPECT_THROW(isolate_roots(IntPolynomial::constant(3), 10), Error);
}

TEST(RootIsolation, ResidueAtCenterIsSmall) {
    auto p = ipoly({-3, 1, -2, 0, 5, 1});
    auto boxes = isolate_roots(p, 25);
    ASSERT_EQ(boxes.size(), 5u);
    for (const auto& b : boxes) {
        RationalComplex v = p.eval(b.center());
        Rat w = b.width();
        Rat lim = Rat(p.length()) * w * Rat(Int(p.degree_checked() + 1)) * Rat(1000);
        EXPECT_LE(v.abs_sq(), lim * lim);
    }
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            EXPECT_TRUE(boxes[i].disjoint(boxes[j]));
}

TEST(Irreducibility, Basics) {
    EXPECT_TRUE(factor_detail::is_irreducible(ipoly({-1, 2})));
    EXPECT_TRUE(factor_detail::is_irreducible(ipoly({1, 0, 1})));    // z^2+1
    EXPECT_TRUE(factor_detail::is_irreducible(ipoly({-2, 0, 1})));   // z^2-2
    EXPECT_TRUE(factor_detail::is_irreducible(ipoly({1, 2, 4})));    // 4z^2+2z+1
    EXPECT_FALSE(factor_detail::is_irreducible(ipoly({-1, 0, 1})));  // (z-1)(z+1)
    EXPECT_FALSE(factor_detail::is_irreducible(ipoly({1, 2, 1})));   // (z+1)^2
    EXPECT_TRUE(factor_detail::is_irreducible(ipoly({2, 0, 2}).primitive_part()));
    // quartic splitting into two irrational quadratics
    EXPECT_FALSE(factor_detail::is_irreducible(ipoly({-2, 0, 1}) * ipoly({-3, 0, 1})));
    // z^4+1: irreducible over Q though reducible mod every prime
    EXPECT_TRUE(factor_detail::is_irreducible(ipoly({1, 0, 0, 0, 1})));
    // Salem quartic: irreducible, two roots on the unit circle
    EXPECT_TRUE(factor_detail::is_irreducible(ipoly({1, -1, -1, -1, 1})));
}

TEST(MakeAlgebraic, Examples) {
    auto half = make_algebraic(ipoly({-1, 2}), RationalComplex(q(1, 2), q(0)));
    EXPECT_TRUE(half.is_rational());
    EXPECT_EQ(half.rational_value(), q(1, 2));

    auto i_unit = make_algebraic(ipoly({1, 0, 1}), RationalComplex(q(0), q(1)));
    EXPECT_EQ(i_unit.degree(), 2u);
    EXPECT_GT(i_unit.enclosure().im.lo, 0);

    // hint -0.25 + 0.43i picks the upper root of 4z^2+2z+1
    auto zeta = make_algebraic(ipoly({1, 2, 4}), RationalComplex(q(-25, 100), q(43, 100)));
    EXPECT_GT(zeta.enclosure().im.lo, 0);
    // 4a^2+2a+1 = 0 exactly via reduce
    EXPECT_TRUE(reduce(ipoly({1, 2, 4}), zeta).is_zero());
    // and the enclosure pushed through the polynomial straddles 0
    Box img = eval_box(ipoly({1, 2, 4}), zeta.enclosure());
    EXPECT_TRUE(img.contains(RationalComplex(q(0), q(0))));
}

TEST(MakeAlgebraic, RejectsReducibleAndBig) {
    EXPECT_THROW(make_algebraic(ipoly({-1, 0, 1}), RationalComplex(q(1), q(0))), ConfigError);
    EXPECT_THROW(make_algebraic(ipoly({1, 2, 1}), RationalComplex(q(-1), q(0))), ConfigError);
    EXPECT_THROW(make_algebraic(IntPolynomial::constant(2), RationalComplex()), ConfigError);
    std::vector<Int> big(10, Int(1));
    EXPECT_THROW(make_algebraic(IntPolynomial(std::move(big)), RationalComplex()),
                 ConfigError);
}

TEST(Reduce, Examples) {
    auto half = AlgebraicNumber::from_rational(q(1, 2));
    auto fe = reduce(IntPolynomial::monomial(2), half);
    ASSERT_EQ(fe.coords().size(), 1u);
    EXPECT_EQ(fe.coords()[0], q(1, 4));

    auto i_unit = make_algebraic(ipoly({1, 0, 1}), RationalComplex(q(0), q(1)));
    EXPECT_TRUE(reduce(ipoly({1, 0, 1}), i_unit).is_zero());

    // alpha root of 2z^2-1: z^3 -> (1/2) z, long-division oracle
    auto r2 = make_algebraic(ipoly({-1, 0, 2}), RationalComplex(q(7, 10), q(0)));
    auto fe3 = reduce(IntPolynomial::monomial(3), r2);
    ASSERT_EQ(fe3.coords().size(), 2u);
    EXPECT_EQ(fe3.coords()[0], q(0));
    EXPECT_EQ(fe3.coords()[1], q(1, 2));
}

TEST(Reduce, MultiplicativeProperty) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(0, 7);
    std::vector<AlgebraicNumber> alphas = {
        make_algebraic(ipoly({1, 2, 4}), RationalComplex(q(-1, 4), q(43, 100))),
        make_algebraic(ipoly({-1, 0, 2}), RationalComplex(q(7, 10), q(0))),
        AlgebraicNumber::from_rational(q(-2, 3)),
    };
    for (const auto& a : alphas) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Int> pv(deg(rng) + 1), qv(deg(rng) + 1);
            for (Int& c : pv) c = coeff(rng);
            for (Int& c : qv) c = coeff(rng);
            IntPolynomial p{std::move(pv)}, r{std::move(qv)};
            EXPECT_TRUE(reduce(p * r, a) == reduce(p, a) * reduce(r, a));
        }
    }
}

TEST(IsExactRoot, Examples) {
    auto half = AlgebraicNumber::from_rational(q(1, 2));
    auto p = ipoly({-1, 2}).pow(3) * ipoly({1, 1});
    EXPECT_TRUE(is_exact_root(p, half));
    EXPECT_FALSE(is_exact_root(ipoly({1, 1}), half));
    auto i_unit = make_algebraic(ipoly({1, 0, 1}), RationalComplex(q(0), q(1)));
    EXPECT_TRUE(is_exact_root(ipoly({1, 0, 1}), i_unit));
    for (const auto& a :
         {half, i_unit, make_algebraic(ipoly({1, 2, 4}), RationalComplex(q(-1, 4), q(2, 5)))})
        EXPECT_TRUE(is_exact_root(a.minpoly(), a));
}

TEST(ModulusSide, ExactDecisions) {
    EXPECT_EQ(modulus_side(AlgebraicNumber::from_rational(q(1, 2)), Rat(1)),
              ModulusSide::inside);
    EXPECT_EQ(modulus_side(AlgebraicNumber::from_rational(q(-1)), Rat(1)),
              ModulusSide::on_circle);
    auto i_unit = make_algebraic(ipoly({1, 0, 1}), RationalComplex(q(0), q(1)));
    EXPECT_EQ(modulus_side(i_unit, Rat(1)), ModulusSide::on_circle);
    EXPECT_EQ(modulus_side(i_unit, q(1, 2)), ModulusSide::outside);
    auto zeta = make_algebraic(ipoly({1, 2, 4}), RationalComplex(q(-1, 4), q(2, 5)));
    EXPECT_EQ(modulus_side(zeta, Rat(1)), ModulusSide::inside);  // |zeta3/2| = 1/2
    EXPECT_EQ(modulus_side(zeta, q(1, 2)), ModulusSide::on_circle);
    EXPECT_EQ(modulus_side(zeta, q(499, 1000)), ModulusSide::outside);
}

TEST(ModulusSide, SalemCircleRootsResolve) {
    // z^4-z^3-z^2-z+1: roots theta > 1, 1/theta < 1, and a conjugate pair
    // exactly on the unit circle. The pair must classify as on_circle.
    auto roots = roots_of(ipoly({1, -1, -1, -1, 1}), 30);
    ASSERT_EQ(roots.size(), 4u);
    int inside = 0, outside = 0, on = 0;
    for (const auto& r : roots) {
        switch (modulus_side(r, Rat(1))) {
            case ModulusSide::inside: ++inside; break;
            case ModulusSide::outside: ++outside; break;
            case ModulusSide::on_circle: ++on; break;
        }
    }
    EXPECT_EQ(inside, 1);
    EXPECT_EQ(outside, 1);
    EXPECT_EQ(on, 2);
}

TEST(ConjugatesInBall, Examples) {
    auto half = AlgebraicNumber::from_rational(q(1, 2));
    auto c1 = conjugates_in_ball(half, Rat(1));
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_TRUE(c1[0] == half);

    auto zeta = make_algebraic(ipoly({1, 2, 4}), RationalComplex(q(-1, 4), q(2, 5)));
    auto c2 = conjugates_in_ball(zeta, Rat(1));
    EXPECT_EQ(c2.size(), 2u);

    auto i_unit = make_algebraic(ipoly({1, 0, 1}), RationalComplex(q(0), q(1)));
    EXPECT_TRUE(conjugates_in_ball(i_unit, q(1, 2)).empty());

    for (const auto& a : {half, zeta, i_unit})
        EXPECT_LE(conjugates_in_ball(a, Rat(1)).size(), a.degree());
}

TEST(CheckClosedRelative, Examples) {
    std::vector<AlgebraicNumber> rats = {AlgebraicNumber::from_rational(q(0)),
                                         AlgebraicNumber::from_rational(q(1, 2)),
                                         AlgebraicNumber::from_rational(q(-1, 2))};
    EXPECT_TRUE(check_closed_relative(rats, Rat(1)).closed);

    auto zeta_pair = roots_of(ipoly({1, 2, 4}), 30);
    ASSERT_EQ(zeta_pair.size(), 2u);
    std::vector<AlgebraicNumber> missing = {AlgebraicNumber::from_rational(q(0)),
                                            zeta_pair[1]};
    auto res = check_closed_relative(missing, Rat(1));
    EXPECT_FALSE(res.closed);
    ASSERT_TRUE(res.witness.has_value());
    EXPECT_TRUE(*res.witness == zeta_pair[0]);

    std::vector<AlgebraicNumber> full = {AlgebraicNumber::from_rational(q(0)), zeta_pair[0],
                                         zeta_pair[1]};
    EXPECT_TRUE(check_closed_relative(full, Rat(1)).closed);
}

TEST(EnumerateUnitBall, Examples) {
    auto e1 = enumerate_unit_ball(3, 1, 2);
    ASSERT_EQ(e1.numbers.size(), 3u);
    EXPECT_FALSE(e1.shortfall);
    EXPECT_EQ(e1.numbers[0].rational_value(), q(0));
    EXPECT_EQ(e1.numbers[1].rational_value(), q(-1, 2));
    EXPECT_EQ(e1.numbers[2].rational_value(), q(1, 2));

    auto e2 = enumerate_unit_ball(1, 1, 1);
    ASSERT_EQ(e2.numbers.size(), 1u);
    EXPECT_TRUE(e2.numbers[0].is_zero());

    auto e3 = enumerate_unit_ball(5, 2, 2);
    ASSERT_EQ(e3.numbers.size(), 5u);
    EXPECT_EQ(e3.numbers[1].rational_value(), q(-1, 2));
    EXPECT_EQ(e3.numbers[2].rational_value(), q(1, 2));
    EXPECT_EQ(e3.numbers[3].degree(), 2u);
    EXPECT_EQ(e3.numbers[4].degree(), 2u);

    // a deeper prefix picks up the roots of 2z^2-1
    auto e4 = enumerate_unit_ball(20, 2, 2);
    bool found = false;
    for (const auto& a : e4.numbers)
        if (a.minpoly() == ipoly({-1, 0, 2})) found = true;
    EXPECT_TRUE(found);

    // determinism
    auto e5 = enumerate_unit_ball(5, 2, 2);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_TRUE(e5.numbers[i] == e3.numbers[i]);

    // shortfall: only one degree-1 height-1 number exists in the open ball
    auto e6 = enumerate_unit_ball(10, 1, 1);
    EXPECT_TRUE(e6.shortfall);
    EXPECT_EQ(e6.numbers.size(), 1u);

    EXPECT_THROW(enumerate_unit_ball(1, 0, 1), ConfigError);
}

TEST(ImageAlgebraic, CubeAndSquare) {
    auto zeta = make_algebraic(ipoly({1, 2, 4}), RationalComplex(q(-1, 4), q(2, 5)));
    // (zeta3/2)^3 = 1/8
    auto img = image_algebraic(IntPolynomial::monomial(3), zeta);
    ASSERT_TRUE(img.is_rational());
    EXPECT_EQ(img.rational_value(), q(1, 8));

    // (zeta3/2)^2 = zeta3^2/4, minimal polynomial 16z^2+4z+1
    auto img2 = image_algebraic(IntPolynomial::monomial(2), zeta);
    EXPECT_EQ(img2.degree(), 2u);
    EXPECT_EQ(img2.minpoly(), ipoly({1, 4, 16}));
    EXPECT_TRUE(is_exact_root(img2.minpoly(), img2));
}

TEST(IdentifyRoot, RoundTripsEnclosures) {
    auto roots = roots_of(ipoly({1, 2, 4}), 30);
    for (const auto& r : roots) {
        auto again = identify_root(r.minpoly(), r.enclosure());
        EXPECT_TRUE(again == r);
    }
}
