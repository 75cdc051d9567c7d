#include <gtest/gtest.h>

#include <complex>

#include "support.hpp"

using namespace vortexeq;
using namespace vortexeq::testing;

TEST(Poly, ConstructionTrimsAndReportsDegree)
{
    Poly p({R(1), R(2), R(0), R(0)});
    EXPECT_EQ(p.deg(), 1u);
    EXPECT_TRUE(Poly().is_zero());
    EXPECT_FALSE(Poly().degree().has_value());
    EXPECT_EQ(Poly::monomial(4, R(3)).valuation(), 4u);
    EXPECT_EQ(terms({{3, 1}, {0, 1}}).shift_up(2), terms({{5, 1}, {2, 1}}));
}

TEST(Poly, Display)
{
    EXPECT_EQ(to_display(terms({{3, 1}, {0, 1}})), "z^3 + 1");
    EXPECT_EQ(to_display(terms({{5, 1}, {1, Q("1+5i")}, {0, -4}})), "z^5 + (1+5i)*z - 4");
    EXPECT_EQ(to_display(terms({{2, -1}, {1, -1}})), "-z^2 - z");
    EXPECT_EQ(to_display(terms({{4, 1}, {3, 1}, {2, 1}, {1, 1}}), 2), "z^4 + z^3 + ... (2 more terms)");
}

TEST(Poly, DerivativeAndPower)
{
    EXPECT_EQ(derivative(terms({{3, 1}, {0, 1}})), terms({{2, 3}}));
    EXPECT_EQ(derivative(terms({{5, 1}, {1, Q("1+5i")}, {0, -4}})), terms({{4, 5}, {0, Q("1+5i")}}));
    EXPECT_EQ(pow(terms({{1, 1}, {0, 1}}), 3), terms({{3, 1}, {2, 3}, {1, 3}, {0, 1}}));
    EXPECT_EQ(pow(Poly::z(), 0), Poly::constant(1));
}

TEST(Poly, HornerMatchesDirectSum)
{
    RationalSource src(21);
    for (int k = 0; k < 20; ++k)
    {
        const Poly p = src.poly(7);
        const GaussianRational x = src.gaussian();
        GaussianRational direct(0), xk(1);
        for (const auto& c : p.coeffs())
        {
            direct += c * xk;
            xk *= x;
        }
        EXPECT_EQ(p(x), direct);
        const std::complex<double> xd = x.to_complex();
        EXPECT_NEAR(std::abs(p(xd) - direct.to_complex()), 0.0, 1e-9 * (1 + std::abs(direct.to_complex())));
    }
}

TEST(Poly, DivmodReconstructsDividend)
{
    RationalSource src(22);
    for (int k = 0; k < 30; ++k)
    {
        const Poly a = src.poly(9), b = src.poly(1 + k % 6);
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_TRUE(r.is_zero() || r.deg() < b.deg());
    }
    EXPECT_THROW(divmod(Poly::z(), Poly()), DomainError);
}

TEST(HalfPoly, ParityArithmetic)
{
    EXPECT_EQ(HalfPoly::sqrt_z() * HalfPoly::sqrt_z(), HalfPoly::z());
    EXPECT_EQ(H(terms({{3, 1}, {0, 1}})) + H(terms({{3, -1}})), HalfPoly::one());
    EXPECT_EQ(HalfPoly::sqrt_z() * H(terms({{4, 1}, {0, 3}})), Hhalf(terms({{4, 1}, {0, 3}})));
    EXPECT_EQ(Hhalf(terms({{4, 1}, {0, 3}})).twice_degree(), 9u);
    EXPECT_THROW(HalfPoly::sqrt_z() + HalfPoly::one(), ParityError);
    EXPECT_THROW(static_cast<void>(HalfPoly::sqrt_z().degree()), ParityError);
}

TEST(HalfPoly, PrincipalBranchEvaluation)
{
    const HalfPoly f = Hhalf(terms({{1, 1}, {0, 2}}));
    const std::complex<double> x(-4.0, 1e-300);
    EXPECT_NEAR(std::abs(f(std::complex<double>(4.0)) - std::complex<double>(12.0)), 0, 1e-12);
    EXPECT_NEAR(std::abs(f(x) - std::complex<double>(0, -4.0)), 0, 1e-12);
}

TEST(Wronskian, NamedCases)
{
    // f = q2 at t1 = 1, s2 = 0; g = q1 = z
    const HalfPoly q2 = H(terms({{5, 1}, {0, -4}}));
    EXPECT_EQ(wronskian(q2, HalfPoly::z()), H(terms({{5, 4}, {0, 4}})));
    EXPECT_TRUE(wronskian(q2, q2).is_zero());

    const HalfPoly P1 = HalfPoly::z(), P2 = H(terms({{3, 1}, {0, 1}}));
    const HalfPoly P3 = H(terms({{6, 1}, {3, 5}, {0, -5}}));
    EXPECT_EQ(wronskian(P3, P1), P2 * P2 * R(5));

    EXPECT_EQ(wronskian(HalfPoly::one(), HalfPoly::z()), H(Poly::constant(-1)));
    EXPECT_THROW(wronskian(HalfPoly::sqrt_z(), HalfPoly::one()), NotPolynomialError);
    EXPECT_EQ(wronskian(Hhalf(terms({{4, 1}})), HalfPoly::sqrt_z()), H(terms({{4, 4}})));
}

// f'g - fg' against the product rule evaluated numerically.
TEST(Wronskian, MatchesNumericDerivative)
{
    RationalSource src(23);
    for (int k = 0; k < 10; ++k)
    {
        const HalfPoly f(k % 2, src.poly(4)), g(0, src.poly(3));
        HalfPoly w;
        try
        {
            w = wronskian(f * HalfPoly::z(), g * HalfPoly::z());
        }
        catch (const NotPolynomialError&)
        {
            FAIL();
        }
        const HalfPoly F = f * HalfPoly::z(), Gz = g * HalfPoly::z();
        const std::complex<double> x(1.3, 0.4);
        auto Fd = [&](std::complex<double> t) { return F(t); };
        auto Gd = [&](std::complex<double> t) { return Gz(t); };
        const auto expected = central_difference(Fd, x) * Gz(x) - F(x) * central_difference(Gd, x);
        EXPECT_NEAR(std::abs(w(x) - expected), 0.0, 1e-5 * (1 + std::abs(expected)));
    }
}

TEST(Gcd, NamedCases)
{
    auto a = gcd_and_squarefree(Poly::monomial(2), Poly::monomial(3));
    EXPECT_EQ(a.gcd, Poly::monomial(2));
    EXPECT_FALSE(a.a_squarefree);
    EXPECT_FALSE(a.b_squarefree);

    auto b = gcd_and_squarefree(terms({{3, 1}, {0, 1}}), Poly::z());
    EXPECT_EQ(b.gcd, Poly::constant(1));
    EXPECT_TRUE(b.a_squarefree);
    EXPECT_TRUE(b.b_squarefree);

    const Poly q2 = terms({{5, 1}, {1, Q("1+5i")}, {0, -4}}), p1 = terms({{5, 1}, {0, 1}});
    auto c = gcd_and_squarefree(q2, p1);
    EXPECT_EQ(c.gcd, Poly::constant(1));
    EXPECT_TRUE(c.a_squarefree && c.b_squarefree);

    EXPECT_THROW(gcd_and_squarefree(Poly(), Poly::z()), DomainError);
    EXPECT_EQ(gcd(Poly(), terms({{1, 2}, {0, 4}})), terms({{1, 1}, {0, 2}}));
}

// A planted common factor c: gcd(a·c, b·c) = monic(c) for coprime a, b.
TEST(Gcd, RecoversPlantedFactor)
{
    RationalSource src(24);
    for (int k = 0; k < 25; ++k)
    {
        const Poly a = src.poly(3 + k % 5), b = src.poly(2 + k % 4), c = src.poly(1 + k % 4);
        ASSERT_TRUE(detail::euclid_gcd(a, b).is_constant());
        const Poly g = gcd(a * c, b * c);
        EXPECT_EQ(g, monic(c));
        EXPECT_TRUE(divmod(a * c, g).second.is_zero());
    }
}

TEST(Gcd, ModularAgreesWithEuclid)
{
    RationalSource src(25);
    for (int k = 0; k < 25; ++k)
    {
        Poly a = src.poly(4 + k % 3), b = src.poly(3 + k % 4);
        if (k % 3 == 0)
        {
            const Poly c = pow(src.poly(1), 2);
            a = a * c;
            b = b * c;
        }
        EXPECT_EQ(gcd(a, b), detail::euclid_gcd(a, b));
    }
}

TEST(Gcd, LargeCoefficientsAndHighDegree)
{
    RationalSource src(26);
    Poly c = src.poly(6, true);
    Poly a = pow(src.poly(4), 3), b = pow(src.poly(3), 4);
    const Poly g = gcd(a * c, b * c);
    EXPECT_TRUE(divmod(a * c, g).second.is_zero());
    EXPECT_TRUE(divmod(b * c, g).second.is_zero());
    EXPECT_TRUE(divmod(g, c).second.is_zero());
    EXPECT_EQ(g, detail::euclid_gcd(a * c, b * c));
}

TEST(Squarefree, YunDecomposition)
{
    const Poly x = Poly::z(), xp1 = terms({{1, 1}, {0, 1}});
    const Poly p = x * pow(xp1, 2) * pow(terms({{1, 1}, {0, -2}}), 3) * R(3);
    const auto f = squarefree_factors(p);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], x);
    EXPECT_EQ(f[1], xp1);
    EXPECT_EQ(f[2], terms({{1, 1}, {0, -2}}));
    EXPECT_FALSE(is_squarefree(p));
    EXPECT_TRUE(is_squarefree(x * xp1));
}
