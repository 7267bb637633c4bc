#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "galois/error.hpp"

namespace galois {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
inline BigRat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw precondition_error("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigInt from_u64(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt from_i64(std::int64_t v)
{
    if (v >= 0)
        return from_u64(static_cast<std::uint64_t>(v));
    return -from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
}

/// Nonnegative residue of a modulo m (m > 0), as a machine word.
inline std::uint64_t mod_u64(const BigInt& a, std::uint64_t m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), from_u64(m).get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

/// Representative of a modulo m in the symmetric range (-m/2, m/2].
inline BigInt symmetric_mod(const BigInt& a, const BigInt& m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m)
        r -= m;
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigRat pow(const BigRat& base, unsigned long e)
{
    BigRat r(pow(base.get_num(), e), pow(base.get_den(), e));
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::optional<BigInt> exact_sqrt(const BigInt& a)
{
    if (a < 0 || mpz_perfect_square_p(a.get_mpz_t()) == 0)
        return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

/// Nonnegative rational square root, if a is the square of a rational.
inline std::optional<BigRat> exact_sqrt(const BigRat& a)
{
    auto n = exact_sqrt(a.get_num());
    auto d = exact_sqrt(a.get_den());
    if (!n || !d)
        return std::nullopt;
    return BigRat(*n, *d);
}

inline std::size_t bit_length(const BigInt& a)
{
    return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

/// Height of a rational in bits: max of numerator and denominator sizes.
inline std::size_t bit_height(const BigRat& a)
{
    return std::max(bit_length(a.get_num()), bit_length(a.get_den()));
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }
inline std::string to_string(const BigRat& a) { return a.get_str(); }

} // namespace galois
