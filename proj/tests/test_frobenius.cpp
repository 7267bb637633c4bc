#include <gtest/gtest.h>

#include <random>

#include "galois/frobenius.hpp"
#include "support/oracles.hpp"

using namespace galois;

namespace {

IntPoly ip(std::initializer_list<long> c)
{
    std::vector<BigInt> v;
    for (long a : c)
        v.emplace_back(a);
    return IntPoly(std::move(v));
}

CycleType ct(std::vector<int> parts) { return make_cycle_type(std::move(parts)); }

std::vector<std::string> names(const std::vector<GroupFit>& fits)
{
    std::vector<std::string> out;
    for (const auto& f : fits)
        out.push_back(f.group->name);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Frobenius, CycleTypeAt)
{
    IntPoly f = ip({3, 1, 0, 1});
    EXPECT_EQ(cycle_type_at(f, 2).type, ct({3}));
    EXPECT_EQ(cycle_type_at(f, 3).type, ct({2, 1}));
    EXPECT_EQ(cycle_type_at(ip({-1, 0, 1}), 2).status, PrimeStatus::ramified);
    EXPECT_EQ(cycle_type_at(ip({1, 1, 3}), 3).status, PrimeStatus::divides_leading);
}

TEST(Frobenius, SampleCubic)
{
    auto rep = sample_cycle_types_below(ip({-1, -1, 0, 1}), 100);
    EXPECT_EQ(rep.excluded(), std::vector<std::uint64_t>{23});
    std::set<CycleType> seen;
    for (const auto& [t, c] : rep.frequencies)
        seen.insert(t);
    EXPECT_EQ(seen, (std::set<CycleType>{ct({1, 1, 1}), ct({2, 1}), ct({3})}));
    EXPECT_EQ(rep.unramified(), rep.records.size() - 1);
    for (const auto& r : rep.records) {
        if (r.status == PrimeStatus::unramified) {
            EXPECT_EQ(r.type.size(), 3);
        }
    }
}

TEST(Frobenius, SampleX4Plus1)
{
    auto rep = sample_cycle_types_below(ip({1, 0, 0, 0, 1}), 100);
    std::set<CycleType> seen;
    for (const auto& [t, c] : rep.frequencies)
        seen.insert(t);
    EXPECT_EQ(seen, (std::set<CycleType>{ct({1, 1, 1, 1}), ct({2, 2})}));
    EXPECT_EQ(rep.excluded(), std::vector<std::uint64_t>{2});
}

TEST(Frobenius, RepeatedRootAllRamified)
{
    auto rep = sample_cycle_types_below(ip({0, 0, 1}), 50);
    EXPECT_EQ(rep.unramified(), 0u);
    EXPECT_EQ(rep.excluded().size(), rep.records.size());
    EXPECT_THROW(identify_group(rep), precondition_error);
}

TEST(Frobenius, SamplingErrors)
{
    EXPECT_THROW(sample_cycle_types(ip({1, 0, 1}), {}), precondition_error);
    EXPECT_THROW(sample_cycle_types(ip({1, 1}), {3}), precondition_error);
}

TEST(Frobenius, SamplingIndependentOfWorkers)
{
    IntPoly f = ip({24, 24, 12, 4, 1});
    auto one = sample_cycle_types_below(f, 3000, 1);
    for (unsigned w : {2U, 3U, 7U, 64U}) {
        auto many = sample_cycle_types_below(f, 3000, w);
        EXPECT_EQ(one.records, many.records);
        EXPECT_EQ(one.frequencies, many.frequencies);
    }
}

TEST(GroupTable, CountsAgainstClassSizeFormula)
{
    const auto& table = group_table();
    for (int n = 2; n <= 5; ++n) {
        const auto& sn = table.by_name("S" + std::to_string(n));
        BigInt fact = 1;
        for (int i = 2; i <= n; ++i)
            fact *= i;
        EXPECT_EQ(BigInt(static_cast<unsigned long>(sn.order)), fact);
        for (const auto& [t, c] : sn.class_counts)
            EXPECT_EQ(BigInt(static_cast<unsigned long>(c)), oracle::class_size(t.parts)) << t.str();
    }
}

TEST(GroupTable, Orders)
{
    const std::map<std::string, std::uint64_t> orders{{"S2", 2}, {"C3", 3}, {"S3", 6}, {"C4", 4}, {"V4", 4},
        {"D4", 8}, {"A4", 12}, {"S4", 24}, {"C5", 5}, {"D5", 10}, {"F20", 20}, {"A5", 60}, {"S5", 120}};
    for (const auto& [name, order] : orders)
        EXPECT_EQ(group_table().by_name(name).order, order) << name;
    const auto& a4 = group_table().by_name("A4");
    EXPECT_EQ(a4.class_counts.at(ct({1, 1, 1, 1})), 1u);
    EXPECT_EQ(a4.class_counts.at(ct({2, 2})), 3u);
    EXPECT_EQ(a4.class_counts.at(ct({3, 1})), 8u);
    // Alternating groups contain only even permutations.
    for (const auto* name : {"A4", "A5", "V4", "C3", "C5", "D5"})
        for (const auto& [t, c] : group_table().by_name(name).class_counts)
            EXPECT_EQ((t.size() - static_cast<int>(t.parts.size())) % 2, 0) << name << t.str();
}

TEST(Identify, X4Plus1IsV4)
{
    auto id = identify_group(sample_cycle_types_below(ip({1, 0, 0, 0, 1}), 100));
    EXPECT_EQ(names(id.candidates), std::vector<std::string>{"V4"});
    EXPECT_TRUE(id.unique());
}

TEST(Identify, CubicIsS3)
{
    auto rep = sample_cycle_types_below(ip({-1, -1, 0, 1}), 10000);
    auto id = identify_group(rep);
    EXPECT_EQ(names(id.candidates), std::vector<std::string>{"S3"});
    EXPECT_EQ(names(id.consistent), std::vector<std::string>{"S3"});
    EXPECT_NEAR(rep.density(ct({1, 1, 1})), 1.0 / 6, 0.03);
    EXPECT_NEAR(rep.density(ct({2, 1})), 1.0 / 2, 0.03);
    EXPECT_NEAR(rep.density(ct({3})), 1.0 / 3, 0.03);
}

TEST(Identify, SinglePrimeKeepsBoth)
{
    auto rep = sample_cycle_types(ip({3, 1, 0, 1}), {2});
    auto id = identify_group(rep);
    EXPECT_EQ(names(id.candidates), (std::vector<std::string>{"C3", "S3"}));
    EXPECT_FALSE(id.unique());
}

TEST(Identify, DegreeOutOfRange)
{
    auto rep = sample_cycle_types_below(ip({-1, -1, 0, 0, 0, 0, 1}), 50);
    EXPECT_THROW(identify_group(rep), precondition_error);
}

TEST(Identify, NeverReturnsIncompatibleGroup)
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
        for (auto& a : c)
            a = static_cast<long>(rng() % 21) - 10;
        c.back() = 1;
        IntPoly f(c);
        if (discriminant(f) == 0)
            continue;
        auto rep = sample_cycle_types_below(f, 300);
        auto id = identify_group(rep);
        for (const auto& fit : id.consistent)
            for (const auto& [type, cnt] : rep.frequencies)
                EXPECT_TRUE(fit.group->contains(type));
    }
}

TEST(Speiser, HandInstances)
{
    auto a = speiser_order(ip({1, 0, 1}), 5);
    EXPECT_EQ(a.period, 4u);
    EXPECT_EQ(a.frobenius_order, 1u);
    EXPECT_EQ(std::vector<std::uint64_t>(a.prefix.begin(), a.prefix.begin() + 6), (std::vector<std::uint64_t>{0, 1, 0, 4, 0, 1}));
    auto b = speiser_order(ip({1, 0, 1}), 3);
    EXPECT_EQ(b.period, 4u);
    EXPECT_EQ(b.frobenius_order, 2u);
    EXPECT_EQ(std::vector<std::uint64_t>(b.prefix.begin(), b.prefix.begin() + 6), (std::vector<std::uint64_t>{0, 1, 0, 2, 0, 1}));
    auto c = speiser_order(ip({-1, 0, 1}), 3);
    EXPECT_EQ(c.period, 2u);
    EXPECT_EQ(c.frobenius_order, 1u);
}

TEST(Speiser, Preconditions)
{
    EXPECT_THROW(speiser_order(ip({-1, 0, 1}), 2), precondition_error); // ramified
    EXPECT_THROW(speiser_order(ip({0, 1, 1}), 5), precondition_error);  // f(0) = 0
    EXPECT_THROW(speiser_order(ip({1, 1, 5}), 5), precondition_error);  // leading coefficient
}

TEST(Speiser, AgreesWithPatternOnRandomInputs)
{
    std::mt19937_64 rng(32);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    int done = 0;
    while (done < 300) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::uint64_t p = primes[rng() % primes.size()];
        if (std::pow(static_cast<double>(p), n) > 2e5)
            continue;
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
        for (auto& a : c)
            a = static_cast<long>(rng() % 41) - 20;
        c.back() = 1 + static_cast<long>(rng() % 3);
        IntPoly f(c);
        if (mod_u64(f.lead(), p) == 0 || mod_u64(f[0], p) == 0 || mod_u64(discriminant(f), p) == 0)
            continue;
        auto r = speiser_order(f, p);
        std::uint64_t l = 1;
        for (auto [d, m] : distinct_degree_pattern(ModPoly::from_int(f, PrimeModulus(p))).factors)
            l = std::lcm(l, static_cast<std::uint64_t>(d));
        EXPECT_EQ(r.frobenius_order, l);
        // p^f = 1 mod u, minimally.
        std::uint64_t x = 1;
        for (std::uint64_t k = 1; k <= r.frobenius_order; ++k) {
            x = x * p % r.period;
            if (k < r.frobenius_order) {
                EXPECT_NE(x, 1 % r.period);
            }
        }
        EXPECT_EQ(x, 1 % r.period);
        ++done;
    }
}
