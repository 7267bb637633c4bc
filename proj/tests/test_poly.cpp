#include <gtest/gtest.h>

#include <random>

#include "galois/poly.hpp"
#include "support/oracles.hpp"

using namespace galois;

namespace {

RatPoly rp(std::initializer_list<long> c)
{
    std::vector<BigRat> v;
    for (long a : c)
        v.emplace_back(a);
    return RatPoly(std::move(v));
}

RatPoly random_poly(std::mt19937_64& rng, int deg, long range)
{
    std::vector<BigRat> v;
    for (int i = 0; i <= deg; ++i)
        v.emplace_back(static_cast<long>(rng() % (2 * range + 1)) - range,
                       static_cast<long>(rng() % 3) + 1);
    for (auto& a : v)
        a.canonicalize();
    if (v.back() == 0)
        v.back() = 1;
    return RatPoly(std::move(v));
}

} // namespace

TEST(Poly, DifferenceOfSquares)
{
    EXPECT_EQ(rp({1, 1}) * rp({-1, 1}), rp({-1, 0, 1}));
}

TEST(Poly, SyntheticDivision)
{
    auto [q, r] = divrem(rp({-1, -1, 0, 1}), rp({-2, 1}));
    EXPECT_EQ(q, rp({3, 2, 1}));
    EXPECT_EQ(r, rp({5}));
}

TEST(Poly, Compose)
{
    EXPECT_EQ(compose(rp({0, 0, 1}), rp({1, 1})), rp({1, 2, 1}));
}

TEST(Poly, DivideByZeroThrows)
{
    EXPECT_THROW(divrem(rp({1, 1}), RatPoly()), precondition_error);
}

TEST(Poly, CanonicalZero)
{
    RatPoly z = rp({1, 2}) - rp({1, 2});
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    EXPECT_TRUE(z.coeffs().empty());
}

TEST(Poly, Gcd)
{
    EXPECT_EQ(poly_gcd(rp({-1, 0, 1}), rp({-1, 0, 0, 1})), rp({-1, 1}));
    RatPoly f = rp({-1, -1, 0, 1});
    EXPECT_EQ(poly_gcd(f, derivative(f)), rp({1}));
    EXPECT_EQ(poly_gcd(rp({4, 2}), RatPoly()), rp({2, 1}));
    EXPECT_THROW(poly_gcd(RatPoly(), RatPoly()), precondition_error);
}

TEST(Poly, Discriminant)
{
    EXPECT_EQ(discriminant(rp({0, -1, 0, 1})), 4);
    EXPECT_EQ(discriminant(rp({-1, -1, 0, 1})), -23);
    EXPECT_EQ(discriminant(rp({1, -2, 1})), 0);
    EXPECT_THROW(discriminant(rp({5})), precondition_error);
}

TEST(Poly, CrtScalars)
{
    EXPECT_EQ(crt_combine({{0, 2}, {0, 3}}), 0);
    EXPECT_EQ(crt_combine({{1, 2}, {1, 3}}), 1);
    EXPECT_THROW(crt_combine({{1, 2}, {1, 4}}), precondition_error);
}

TEST(Poly, CrtPolynomials)
{
    IntPoly a({1, 1, 0, 1});
    IntPoly b({0, 1, 0, 1});
    IntPoly c = crt_combine(std::vector<std::pair<IntPoly, BigInt>>{{a, 2}, {b, 3}});
    EXPECT_EQ(c, IntPoly({3, 1, 0, 1}));
}

TEST(Poly, RationalRootsExamples)
{
    EXPECT_EQ(rational_roots(rp({-2, -3, 0, 1})), (std::vector<BigRat>{-1, 2}));
    EXPECT_TRUE(rational_roots(rp({1, 0, 1})).empty());
    EXPECT_EQ(rational_roots(rp({1, -5, 6})), (std::vector<BigRat>{BigRat(1, 3), BigRat(1, 2)}));
    EXPECT_THROW(rational_roots(RatPoly()), precondition_error);
}

TEST(PolyProperty, DivremReconstructs)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        RatPoly a = random_poly(rng, static_cast<int>(rng() % 8), 9);
        RatPoly b = random_poly(rng, static_cast<int>(rng() % 5), 9);
        auto [q, r] = divrem(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(PolyProperty, GcdDividesAndScales)
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        RatPoly a = random_poly(rng, 1 + static_cast<int>(rng() % 4), 5);
        RatPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 4), 5);
        RatPoly c = monic(random_poly(rng, 1 + static_cast<int>(rng() % 3), 5));
        RatPoly g = poly_gcd(a, b);
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
        EXPECT_EQ(poly_gcd(a * c, b * c), monic(c * g));
    }
}

TEST(PolyProperty, CubicDiscriminantFormula)
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        BigRat p(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 4) + 1);
        BigRat q(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 4) + 1);
        p.canonicalize();
        q.canonicalize();
        RatPoly f(std::vector<BigRat>{q, p, 0, 1});
        BigRat expected = -4 * p * p * p - 27 * q * q;
        EXPECT_EQ(discriminant(f), expected);
        // Resultant definition via the Sylvester determinant.
        BigRat syl = oracle::sylvester_resultant(f, derivative(f));
        EXPECT_EQ(-syl, expected);
        EXPECT_EQ(resultant(f, derivative(f)), syl);
    }
}

TEST(PolyProperty, ResultantMatchesSylvester)
{
    std::mt19937_64 rng(14);
    for (int t = 0; t < 60; ++t) {
        RatPoly a = random_poly(rng, 1 + static_cast<int>(rng() % 5), 6);
        RatPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 5), 6);
        EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(a, b));
    }
}

TEST(PolyProperty, CrtReducesToEveryResidue)
{
    std::mt19937_64 rng(15);
    const std::vector<long> moduli{2, 3, 5, 7, 11, 13, 17, 19, 23};
    for (int t = 0; t < 200; ++t) {
        std::vector<std::pair<BigInt, BigInt>> in;
        BigInt prod = 1;
        for (long m : moduli) {
            if (rng() % 2 == 0)
                continue;
            in.emplace_back(static_cast<long>(rng() % 1000) - 500, m);
            prod *= m;
        }
        if (in.empty())
            continue;
        BigInt x = crt_combine(in);
        EXPECT_GT(2 * x, -prod);
        EXPECT_LE(2 * x, prod);
        for (const auto& [v, m] : in) {
            BigInt d = x - v;
            EXPECT_TRUE(mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t()));
        }
    }
}

TEST(PolyProperty, RationalRootsOfLinearProducts)
{
    std::mt19937_64 rng(16);
    for (int t = 0; t < 100; ++t) {
        RatPoly f = rp({static_cast<long>(rng() % 7) + 1});
        std::set<BigRat> expected;
        int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            BigRat r(static_cast<long>(rng() % 61) - 30, static_cast<long>(rng() % 9) + 1);
            r.canonicalize();
            expected.insert(r);
            f *= RatPoly(std::vector<BigRat>{-r, 1});
        }
        // An irreducible quadratic factor contributes no roots.
        if (rng() % 2 == 0)
            f *= rp({3, 0, 1});
        auto roots = rational_roots(f);
        EXPECT_EQ(std::set<BigRat>(roots.begin(), roots.end()), expected);
        for (const auto& r : roots)
            EXPECT_EQ(f(r), 0);
        EXPECT_EQ(std::set<BigRat>(roots.begin(), roots.end()), oracle::divisor_roots(f));
    }
}
