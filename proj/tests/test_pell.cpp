#include <gtest/gtest.h>

#include <random>

#include "galois/pell.hpp"
#include "support/curve_oracles.hpp"

using namespace galois;

namespace {

IntPoly ip(std::initializer_list<long> c)
{
    std::vector<BigInt> v;
    for (long a : c)
        v.emplace_back(a);
    return IntPoly(std::move(v));
}

RatPoly rp(std::initializer_list<long> c)
{
    std::vector<BigRat> v;
    for (long a : c)
        v.emplace_back(a);
    return RatPoly(std::move(v));
}

CurvePoint pt(long x, long y) { return CurvePoint{x, y, false}; }

} // namespace

TEST(SqrtPart, Examples)
{
    EXPECT_EQ(poly_sqrt_part(ip({1, 0, 0, 0, 1})), rp({0, 0, 1}));
    EXPECT_EQ(poly_sqrt_part(ip({2, 2, 3, 2, 1})), rp({1, 1, 1}));
    EXPECT_EQ(poly_sqrt_part(ip({5, 0, 0, 0, 0, 0, 4})), rp({0, 0, 0, 2}));
    EXPECT_THROW(poly_sqrt_part(ip({1, 0, 0, 1})), precondition_error);
    EXPECT_THROW(poly_sqrt_part(ip({1, 0, 2, 0, 1})), precondition_error);
    EXPECT_THROW(poly_sqrt_part(ip({1, 0, 0, 0, 2})), precondition_error);
}

TEST(ContinuedFraction, QuarticPlusOne)
{
    IntPoly R = ip({1, 0, 0, 0, 1});
    CFReport rep = cf_expand(R);
    ASSERT_TRUE(rep.periodic);
    EXPECT_EQ(rep.preperiod, 1);
    EXPECT_EQ(rep.quasi_period, 1);
    EXPECT_EQ(rep.partial_quotient(0), rp({0, 0, 1}));
    EXPECT_EQ(rep.partial_quotient(1), rp({0, 0, 2}));
    FunctionalUnit u = unit_from_period(rep);
    EXPECT_EQ(u.p, rp({0, 0, 1}));
    EXPECT_EQ(u.q, rp({1}));
    EXPECT_EQ(u.norm, -1);
    FunctionalUnit u2 = square(R, u);
    EXPECT_TRUE(is_unit(R, u2));
    EXPECT_EQ(u2.norm, 1);
}

TEST(ContinuedFraction, ScaledRadicand)
{
    // 4x^4 + 1: leading coefficient a square other than 1.
    IntPoly R = ip({1, 0, 0, 0, 4});
    CFReport rep = cf_expand(R);
    ASSERT_TRUE(rep.periodic);
    FunctionalUnit u = unit_from_period(rep);
    EXPECT_TRUE(is_unit(R, u));
}

TEST(ContinuedFraction, UnitFromNonPeriodicFails)
{
    CFReport rep = cf_expand(oracle::nontorsion_instance(*std::make_unique<std::mt19937_64>(1)).R, 10);
    EXPECT_FALSE(rep.periodic);
    EXPECT_THROW(unit_from_period(rep), precondition_error);
}

TEST(ContinuedFraction, StateInvariants)
{
    std::mt19937_64 rng(71);
    for (int order = 2; order <= 6; ++order) {
        auto inst = oracle::torsion_instance(rng, order);
        CFReport rep = cf_expand(inst.R);
        ASSERT_TRUE(rep.periodic) << order;
        const RatPoly R = to_rat(inst.R);
        for (std::size_t k = 0; k + 1 < rep.states.size(); ++k) {
            const auto& s = rep.states[k];
            EXPECT_TRUE(((R - s.P * s.P) % s.Q()).is_zero());
            EXPECT_LE(s.P.degree(), 2);
            if (k >= 1) {
                EXPECT_GE(rep.partial_monic[k].degree(), 1);
            }
        }
        FunctionalUnit u = unit_from_period(rep);
        EXPECT_TRUE(is_unit(inst.R, square(inst.R, u)));
    }
}

TEST(QuarticModel, QuarticPlusOne)
{
    QuarticModel M = quartic_to_weierstrass(ip({1, 0, 0, 0, 1}));
    EXPECT_TRUE(on_curve(M.curve, M.marked));
    EXPECT_FALSE(M.marked.infinity);
    EXPECT_TRUE(multiply(M.curve, M.marked, 2).infinity);
    auto t = torsion_order(M.curve, M.marked);
    ASSERT_TRUE(t.order.has_value());
    EXPECT_EQ(*t.order, 2);
}

TEST(QuarticModel, RoundTripOnRationals)
{
    std::mt19937_64 rng(72);
    for (int t = 0; t < 10; ++t) {
        auto inst = oracle::torsion_instance(rng, 2 + t % 5);
        QuarticModel M = quartic_to_weierstrass(inst.R);
        for (int j = 0; j < 5; ++j)
            EXPECT_TRUE(round_trip_at(M, oracle::small_rational(rng, 7)));
    }
}

TEST(QuarticModel, InverseConstructionKeepsOrder)
{
    WeierstrassCurve E(0, 1);
    IntPoly R = quartic_from_point(E, pt(2, 3));
    EXPECT_EQ(R, ip({-12, -24, -12, 0, 1}));
    QuarticModel M = quartic_to_weierstrass(R);
    auto t = torsion_order(M.curve, M.marked);
    ASSERT_TRUE(t.order.has_value());
    EXPECT_EQ(*t.order, 6);
}

TEST(QuarticModel, Errors)
{
    EXPECT_THROW(quartic_to_weierstrass(ip({1, 0, 0, 0, 0, 0, 1})), precondition_error);
    EXPECT_THROW(quartic_to_weierstrass(ip({1, 0, 0, 0, 3})), precondition_error);
}

TEST(Elliptic, GroupLawExamples)
{
    WeierstrassCurve E(0, 1);
    CurvePoint P = pt(2, 3);
    EXPECT_EQ(multiply(E, P, 2), pt(0, 1));
    EXPECT_EQ(multiply(E, P, 3), pt(-1, 0));
    EXPECT_TRUE(multiply(E, P, 6).infinity);
    EXPECT_TRUE(add(E, P, negate(P)).infinity);
    EXPECT_THROW(WeierstrassCurve(0, 0), precondition_error);
}

TEST(Elliptic, TorsionOrder)
{
    WeierstrassCurve E(0, 1);
    EXPECT_EQ(torsion_order(E, pt(2, 3)).order, 6);
    EXPECT_EQ(torsion_order(E, pt(0, 1)).order, 3);
    EXPECT_EQ(torsion_order(E, CurvePoint::at_infinity()).order, 1);
    auto nt = torsion_order(WeierstrassCurve(0, -2), pt(3, 5));
    EXPECT_FALSE(nt.order.has_value());
    EXPECT_EQ(nt.heights.size(), 16u);
    EXPECT_THROW(torsion_order(E, pt(1, 1)), precondition_error);
}

TEST(Elliptic, DivisionPolynomialExamples)
{
    WeierstrassCurve E(0, 1);
    auto psi = division_polynomials(E, 12);
    EXPECT_EQ(psi[2].f, rp({2}));
    EXPECT_TRUE(psi[2].times_y);
    EXPECT_EQ(psi[3].f, rp({0, 12, 0, 0, 3}));
    EXPECT_EQ(psi[3].f(BigRat(0)), 0);
    for (int n = 1; n <= 12; ++n) {
        const int expected = (n % 2 == 1) ? (n * n - 1) / 2 : (n * n - 4) / 2;
        EXPECT_EQ(psi[static_cast<std::size_t>(n)].f.degree(), expected) << n;
    }
}

TEST(EllipticProperty, GroupLawAssociativeAndInverse)
{
    std::mt19937_64 rng(73);
    for (int t = 0; t < 20; ++t) {
        auto inst = oracle::nontorsion_instance(rng);
        QuarticModel M = quartic_to_weierstrass(inst.R);
        const auto& E = M.curve;
        CurvePoint P = M.marked, Q = multiply(E, P, 2), S = multiply(E, P, -3);
        EXPECT_EQ(add(E, add(E, P, Q), S), add(E, P, add(E, Q, S)));
        EXPECT_TRUE(add(E, Q, negate(Q)).infinity);
        EXPECT_TRUE(on_curve(E, add(E, Q, S)));
    }
}

TEST(EllipticProperty, DivisionPolynomialsMatchOrders)
{
    std::mt19937_64 rng(74);
    for (int t = 0; t < 20; ++t) {
        auto inst = (t % 2 == 0) ? oracle::torsion_instance(rng, 2 + (t / 2) % 5) : oracle::nontorsion_instance(rng);
        QuarticModel M = quartic_to_weierstrass(inst.R);
        auto psi = division_polynomials(M.curve, 12);
        for (int n = 1; n <= 12; ++n) {
            const bool killed = multiply(M.curve, M.marked, n).infinity;
            EXPECT_EQ(psi[static_cast<std::size_t>(n)].at(M.marked) == 0, killed) << t << " " << n;
        }
        // x(nP) = x - psi_(n-1) psi_(n+1) / psi_n^2 away from the kernel.
        const CurvePoint& P = M.marked;
        for (int n = 2; n <= 11; ++n) {
            const BigRat pn = psi[static_cast<std::size_t>(n)].at(P);
            if (pn == 0)
                continue;
            const BigRat x = P.x - psi[static_cast<std::size_t>(n - 1)].at(P) * psi[static_cast<std::size_t>(n + 1)].at(P) / (pn * pn);
            EXPECT_EQ(multiply(M.curve, P, n).x, x) << t << " " << n;
        }
        auto rep = torsion_order(M.curve, M.marked);
        EXPECT_EQ(rep.order, inst.order);
    }
}

TEST(Commensurability, Examples)
{
    auto a = is_commensurable(ip({1, 0, 0, 0, 1}));
    EXPECT_TRUE(a.commensurable);
    ASSERT_TRUE(a.cf.has_value());
    EXPECT_EQ(a.cf->unit->p, rp({0, 0, 1}));
    auto b = is_commensurable(ip({-12, -24, -12, 0, 1}));
    EXPECT_TRUE(b.commensurable);
    EXPECT_EQ(b.torsion.order, 6);
    auto c = is_commensurable(quartic_from_point(WeierstrassCurve(0, -2), pt(3, 5)));
    EXPECT_FALSE(c.commensurable);
    EXPECT_FALSE(c.cf.has_value());
}

TEST(CommensurabilityProperty, PeriodicityMatchesTorsion)
{
    std::mt19937_64 rng(75);
    for (int t = 0; t < 10; ++t) {
        auto inst = oracle::torsion_instance(rng, 2 + t % 5);
        CFReport rep = cf_expand(inst.R);
        EXPECT_TRUE(rep.periodic);
        EXPECT_TRUE(is_commensurable(inst.R).commensurable);
    }
    for (int t = 0; t < 4; ++t) {
        auto inst = oracle::nontorsion_instance(rng);
        CFReport rep = cf_expand(inst.R, 48);
        EXPECT_FALSE(rep.periodic);
        EXPECT_FALSE(is_commensurable(inst.R).commensurable);
        for (std::size_t i = 1; i < rep.growth.size(); ++i)
            EXPECT_LE(rep.growth[i - 1].height_q, rep.growth[i].height_q);
    }
}

TEST(ContinuedFraction, MonicQHeightIsNotStepwiseMonotone)
{
    CFReport rep = cf_expand(ip({4, 16, -12, 0, 1}), 30);
    EXPECT_FALSE(rep.periodic);
    EXPECT_EQ(rep.growth[5].height_Q_monic, 4u);
    EXPECT_EQ(rep.growth[6].height_Q_monic, 3u);
    for (std::size_t i = 1; i < rep.growth.size(); ++i)
        EXPECT_LE(rep.growth[i - 1].height_q, rep.growth[i].height_q);
    EXPECT_LT(rep.growth.front().height_Q_monic * 10, rep.growth.back().height_Q_monic);
}
