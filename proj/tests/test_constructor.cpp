#include <gtest/gtest.h>

#include "galois/constructor.hpp"
#include "support/oracles.hpp"

using namespace galois;

namespace {

PatternPrescription cubic_prescription(std::uint64_t seed)
{
    PatternPrescription pr;
    pr.degree = 3;
    pr.seed = seed;
    pr.patterns = {{2, pattern_of({3})}, {3, pattern_of({2, 1})}};
    return pr;
}

} // namespace

TEST(Bauer, WorkedCubic)
{
    EXPECT_EQ(bauer_combine(cubic_prescription(10)), IntPoly({3, 1, 0, 1}));
}

TEST(Bauer, PatternsHoldForManySeeds)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        PatternPrescription pr;
        pr.degree = 5;
        pr.seed = seed;
        pr.patterns = {{2, pattern_of({5})}, {3, pattern_of({3, 2})}, {7, pattern_of({1, 1, 1, 2})}, {11, pattern_of({4, 1})}};
        IntPoly f = bauer_combine(pr);
        BigInt m = 2 * 3 * 7 * 11;
        for (const auto& a : f.coeffs()) {
            EXPECT_GT(2 * a, -m);
            EXPECT_LE(2 * a, m);
        }
        for (const auto& [p, pat] : pr.patterns)
            EXPECT_EQ(distinct_degree_pattern(ModPoly::from_int(f, PrimeModulus(p))), pat);
        EXPECT_EQ(f, bauer_combine(pr));
    }
}

TEST(Bauer, CountingLimits)
{
    PatternPrescription ok;
    ok.degree = 2;
    ok.patterns = {{2, pattern_of({1, 1})}};
    EXPECT_EQ(bauer_combine(ok), IntPoly({0, 1, 1}));

    PatternPrescription bad;
    bad.degree = 3;
    bad.patterns = {{2, pattern_of({1, 1, 1})}};
    EXPECT_THROW(bauer_combine(bad), precondition_error);

    PatternPrescription dup = cubic_prescription(0);
    dup.patterns.push_back(dup.patterns.front());
    EXPECT_THROW(bauer_combine(dup), precondition_error);

    PatternPrescription wrong_sum = cubic_prescription(0);
    wrong_sum.patterns[0].second = pattern_of({2});
    EXPECT_THROW(bauer_combine(wrong_sum), precondition_error);
}

TEST(Symmetric, CubicDegenerate)
{
    auto c = construct_symmetric(3, 2, 3, 3, 10);
    EXPECT_EQ(c.polynomial, IntPoly({3, 1, 0, 1}));
    EXPECT_EQ(c.group, "S3");
    EXPECT_EQ(verify_certificate(c), "");
    EXPECT_EQ(discriminant(c.polynomial), -247);
    EXPECT_FALSE(exact_sqrt(discriminant(c.polynomial)).has_value());
}

TEST(Symmetric, QuarticReverifies)
{
    auto c = construct_symmetric(4, 2, 3, 5, 7);
    EXPECT_EQ(verify_certificate(c), "");
    auto id = identify_group(sample_cycle_types_below(c.polynomial, 3000));
    ASSERT_TRUE(id.unique());
    EXPECT_EQ(id.candidates[0].group->name, "S4");
}

TEST(Symmetric, Errors)
{
    EXPECT_THROW(construct_symmetric(5, 3, 5, 2, 1), precondition_error);
    EXPECT_THROW(construct_symmetric(4, 2, 3, 3, 1), precondition_error);
    EXPECT_THROW(construct_symmetric(4, 2, 3, 4, 1), precondition_error);
}

TEST(Symmetric, TamperedCertificateFails)
{
    auto c = construct_symmetric(4, 2, 3, 5, 7);
    auto bad = c;
    bad.polynomial += IntPoly({1});
    EXPECT_NE(verify_certificate(bad), "");
    bad = c;
    bad.evidence.pop_back();
    EXPECT_NE(verify_certificate(bad), "");
    bad = c;
    bad.group = "A4";
    EXPECT_NE(verify_certificate(bad), "");
}

TEST(Schur, ExponentialFamily)
{
    auto r = schur_alternating(4);
    EXPECT_EQ(r.polynomial, IntPoly({24, 24, 12, 4, 1}));
    EXPECT_TRUE(r.discriminant_square);
    EXPECT_TRUE(r.all_types_even);
    for (int n : {8, 12}) {
        auto s = schur_alternating(n);
        EXPECT_TRUE(s.discriminant_square) << n;
        EXPECT_TRUE(s.all_types_even) << n;
    }
    EXPECT_THROW(schur_alternating(6), precondition_error);
    EXPECT_THROW(schur_alternating(6, SchurMode::provisional), precondition_error);
    EXPECT_THROW(schur_alternating(5), precondition_error);
}

TEST(Schur, OddFamilyBehindGate)
{
    auto r = schur_alternating(3, SchurMode::provisional);
    EXPECT_EQ(r.polynomial, IntPoly({-24, 36, -12, 1}));
    EXPECT_EQ(r.family, "odd");
    for (int n : {5, 7, 9}) {
        auto s = schur_alternating(n, SchurMode::provisional);
        EXPECT_TRUE(s.discriminant_square);
        EXPECT_TRUE(s.all_types_even);
        EXPECT_NE(s.irreducibility_prime, 0u);
    }
}

TEST(Furtwaengler, SmallCases)
{
    auto r = furtwaengler_search(3, 2);
    EXPECT_EQ(r.g, 2u);
    EXPECT_NE(std::find(r.solutions.begin(), r.solutions.end(), std::vector<long>{2, -1}), r.solutions.end());
    EXPECT_TRUE(furtwaengler_search(3, 0).solutions.empty());
    EXPECT_THROW(furtwaengler_search(2, 3), precondition_error);
}

TEST(Furtwaengler, SolutionsReverifyAndAreDeterministic)
{
    for (std::uint64_t p : {3, 5, 7}) {
        auto r = furtwaengler_search(p, p == 7 ? 3 : 5);
        auto again = furtwaengler_search(p, p == 7 ? 3 : 5, 3);
        EXPECT_EQ(r.solutions, again.solutions);
        EXPECT_TRUE(std::is_sorted(r.solutions.begin(), r.solutions.end()));
        for (const auto& e : r.solutions) {
            EXPECT_TRUE(furtwaengler_check(p, r.g, e));
            std::vector<std::vector<long>> m(e.size(), std::vector<long>(e.size()));
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = 0; j < e.size(); ++j)
                    m[i][j] = e[(j + e.size() - i) % e.size()];
            BigInt d = oracle::leibniz_det(m);
            EXPECT_EQ(abs(d), BigInt(static_cast<unsigned long>(p)));
        }
    }
}

TEST(Furtwaengler, DeterminantMatchesLeibniz)
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng() % 6;
        std::vector<long> e(n);
        for (auto& v : e)
            v = static_cast<long>(rng() % 11) - 5;
        std::vector<std::vector<long>> m(n, std::vector<long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = e[(j + n - i) % n];
        EXPECT_EQ(circulant_determinant(e), oracle::leibniz_det(m));
    }
}
