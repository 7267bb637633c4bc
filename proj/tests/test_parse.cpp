#include <gtest/gtest.h>

#include <random>

#include "galois/parse.hpp"

using namespace galois;

namespace {

RatPoly rp(std::initializer_list<long> c)
{
    std::vector<BigRat> v;
    for (long a : c)
        v.emplace_back(a);
    return RatPoly(std::move(v));
}

std::size_t offset_of(const std::string& text)
{
    try {
        parse_poly(text);
    } catch (const parse_error& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no error for " << text;
    return std::string::npos;
}

RatPoly random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(0, 7), coef(-40, 40), den(1, 6), zero(0, 2);
    const int d = deg(rng);
    std::vector<BigRat> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        if (i < d && zero(rng) == 0)
            continue;
        BigRat v(coef(rng), den(rng));
        v.canonicalize();
        c[static_cast<std::size_t>(i)] = v;
    }
    if (d > 0 && c.back() == 0)
        c.back() = 1;
    return RatPoly(std::move(c));
}

} // namespace

TEST(Parse, Examples)
{
    EXPECT_EQ(parse_poly("x^3+x+3").poly, rp({3, 1, 0, 1}));
    EXPECT_EQ(parse_poly("x^3-3x^2+4x+1").poly, rp({1, 4, -3, 1}));
    EXPECT_EQ(parse_poly("24 + 24x + 12x^2 + 4x^3 + x^4").poly, rp({24, 24, 12, 4, 1}));
    EXPECT_EQ(parse_poly("(x+1)^2").poly, rp({1, 2, 1}));
    EXPECT_EQ(parse_poly("2*x*x - x/2").poly, RatPoly(std::vector<BigRat>{0, BigRat(-1, 2), 2}));
    EXPECT_EQ(parse_poly("-(t-1)(t+1)").poly, rp({1, 0, -1}));
    EXPECT_EQ(parse_poly("-(t-1)(t+1)").variable, "t");
    EXPECT_EQ(parse_poly(" 7 ").poly, rp({7}));
    EXPECT_TRUE(parse_poly("x^2+1").integral());
    EXPECT_FALSE(parse_poly("x/3").integral());
}

TEST(Parse, ErrorsCarryOffsets)
{
    EXPECT_EQ(offset_of("x^-1"), 2u);
    EXPECT_EQ(offset_of("x + y"), 4u);
    EXPECT_EQ(offset_of(""), 0u);
    EXPECT_EQ(offset_of("x^2 +"), 5u);
    EXPECT_EQ(offset_of("(x+1"), 4u);
    EXPECT_EQ(offset_of("x $ 1"), 2u);
    EXPECT_EQ(offset_of("1/x"), 2u);
    EXPECT_EQ(offset_of("x^1234567"), 2u);
    try {
        parse_poly("x^-1");
    } catch (const parse_error& e) {
        EXPECT_EQ(e.expected().count("nonnegative integer"), 1u);
    }
    EXPECT_THROW(parse_poly("1/0"), error);
}

TEST(Format, Canonical)
{
    EXPECT_EQ(format_poly(rp({3, 1, 0, 1})), "x^3+x+3");
    EXPECT_EQ(format_poly(rp({0})), "0");
    EXPECT_EQ(format_poly(rp({-1, 0, -1})), "-x^2-1");
    EXPECT_EQ(format_poly(RatPoly(std::vector<BigRat>{BigRat(1, 2), 0, BigRat(-3, 2)})), "-(3/2)x^2+1/2");
    EXPECT_EQ(format_poly(rp({0, 5}), "t"), "5t");
}

TEST(ParseProperty, RoundTripCorpus)
{
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 200; ++i) {
        const RatPoly f = random_poly(rng);
        const std::string text = format_poly(f);
        const PolyExpr e = parse_poly(text);
        ASSERT_EQ(e.poly, f) << text;
        ASSERT_EQ(format_poly(e.poly), text);
    }
}
