#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "galois/poly.hpp"

namespace galois {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1U)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1U;
    }
    return r;
}

} // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// All primes strictly below bound.
inline std::vector<std::uint64_t> primes_below(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound <= 2)
        return out;
    std::vector<bool> composite(bound, false);
    for (std::uint64_t i = 2; i < bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j < bound; j += i)
            composite[j] = true;
    }
    return out;
}

/// Distinct prime divisors of n, ascending (trial division).
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

/// Word-sized prime modulus, validated at construction.
class PrimeModulus {
public:
    static constexpr std::uint64_t max_prime = 1ULL << 62;

    explicit PrimeModulus(std::uint64_t p) : p_(p)
    {
        require(p < max_prime, "prime modulus must be below 2^62");
        require(is_prime(p), "modulus " + std::to_string(p) + " is not prime");
    }

    /// Wraps a value already known to be prime.
    static PrimeModulus unchecked(std::uint64_t p)
    {
        PrimeModulus m;
        m.p_ = p;
        return m;
    }

    std::uint64_t value() const { return p_; }
    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }

private:
    PrimeModulus() = default;

    std::uint64_t p_ = 2;
};

/// Polynomial over the prime field F_p, residues in [0, p), ascending.
class ModPoly {
public:
    explicit ModPoly(PrimeModulus p) : p_(p.value()) {}

    ModPoly(PrimeModulus p, std::vector<std::uint64_t> coeffs) : p_(p.value()), c_(std::move(coeffs))
    {
        for (auto& a : c_)
            a %= p_;
        trim();
    }

    static ModPoly from_int(const IntPoly& f, PrimeModulus p)
    {
        std::vector<std::uint64_t> c;
        c.reserve(f.size());
        for (const auto& a : f.coeffs())
            c.push_back(mod_u64(a, p.value()));
        return ModPoly(p, std::move(c));
    }

    static ModPoly monomial(PrimeModulus p, std::uint64_t a, std::size_t k)
    {
        std::vector<std::uint64_t> c(k + 1, 0);
        c[k] = a;
        return ModPoly(p, std::move(c));
    }

    std::uint64_t prime() const { return p_; }
    PrimeModulus modulus() const { return PrimeModulus::unchecked(p_); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    IntPoly lift() const
    {
        std::vector<BigInt> c;
        c.reserve(c_.size());
        for (auto a : c_)
            c.push_back(from_u64(a));
        return IntPoly(std::move(c));
    }

    std::uint64_t eval(std::uint64_t at) const
    {
        std::uint64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = (detail::mulmod(acc, at, p_) + *it) % p_;
        return acc;
    }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b)
    {
        ModPoly r(a);
        if (b.c_.size() > r.c_.size())
            r.c_.resize(b.c_.size(), 0);
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            r.c_[i] += b.c_[i];
            if (r.c_[i] >= r.p_)
                r.c_[i] -= r.p_;
        }
        r.trim();
        return r;
    }

    friend ModPoly operator-(const ModPoly& a, const ModPoly& b)
    {
        ModPoly r(a);
        if (b.c_.size() > r.c_.size())
            r.c_.resize(b.c_.size(), 0);
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r.c_[i] = r.c_[i] >= b.c_[i] ? r.c_[i] - b.c_[i] : r.c_[i] + r.p_ - b.c_[i];
        r.trim();
        return r;
    }

    friend ModPoly operator*(const ModPoly& a, const ModPoly& b)
    {
        ModPoly r(PrimeModulus::unchecked(a.p_));
        if (a.is_zero() || b.is_zero())
            return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = (r.c_[i + j] + detail::mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
        }
        r.trim();
        return r;
    }

    ModPoly scaled(std::uint64_t s) const
    {
        ModPoly r(*this);
        for (auto& a : r.c_)
            a = detail::mulmod(a, s % p_, p_);
        r.trim();
        return r;
    }

    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }
    friend bool operator<(const ModPoly& a, const ModPoly& b)
    {
        if (a.c_.size() != b.c_.size())
            return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    require(a % p != 0, "inverse of zero in F_p");
    return detail::powmod(a, p - 2, p);
}

inline ModPoly monic(const ModPoly& f)
{
    if (f.is_zero())
        return f;
    return f.scaled(inverse_mod(f.lead(), f.prime()));
}

inline std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b)
{
    require(!b.is_zero(), "division by the zero polynomial");
    const std::uint64_t p = a.prime();
    const auto P = a.modulus();
    if (a.degree() < b.degree())
        return {ModPoly(P), a};
    std::vector<std::uint64_t> r = a.coeffs();
    const int db = b.degree();
    std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const std::uint64_t il = inverse_mod(b.lead(), p);
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        const std::uint64_t t = detail::mulmod(r[i], il, p);
        q[i - db] = t;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = (r[i - db + j] + p - detail::mulmod(t, b[j], p)) % p;
    }
    r.resize(static_cast<std::size_t>(db));
    return {ModPoly(P, std::move(q)), ModPoly(P, std::move(r))};
}

inline ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divrem(a, b).second; }
inline ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divrem(a, b).first; }

/// Monic gcd; gcd(0, 0) is rejected.
inline ModPoly gcd(ModPoly a, ModPoly b)
{
    require(!(a.is_zero() && b.is_zero()), "gcd of two zero polynomials");
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline ModPoly derivative(const ModPoly& f)
{
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        d.push_back(detail::mulmod(f[i], i % f.prime(), f.prime()));
    return ModPoly(f.modulus(), std::move(d));
}

/// base^e mod modulus by square-and-multiply.
inline ModPoly mod_pow_poly(const ModPoly& base, const BigInt& e, const ModPoly& modulus)
{
    require(modulus.degree() >= 1, "mod_pow_poly needs a nonconstant modulus");
    require(e >= 0, "mod_pow_poly needs a nonnegative exponent");
    ModPoly result = ModPoly(modulus.modulus(), {1}) % modulus;
    ModPoly b = base % modulus;
    const std::size_t bits = bit_length(e);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = (result * b) % modulus;
    }
    return result;
}

inline ModPoly mod_pow_poly(const ModPoly& base, std::uint64_t e, const ModPoly& modulus)
{
    return mod_pow_poly(base, from_u64(e), modulus);
}

/// Squarefree decomposition: pairwise coprime squarefree parts with
/// multiplicities, whose product (with powers) equals monic(f).
inline std::vector<std::pair<ModPoly, int>> squarefree_split(const ModPoly& f)
{
    require(f.degree() >= 1, "squarefree_split needs a nonconstant polynomial");
    const std::uint64_t p = f.prime();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly g = monic(f);
    ModPoly c = gcd(g, derivative(g));
    ModPoly w = g / c;
    int i = 1;
    while (w.degree() >= 1) {
        ModPoly y = gcd(w, c);
        ModPoly fac = w / y;
        if (fac.degree() >= 1)
            out.emplace_back(fac, i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() >= 1) {
        // c is a p-th power: take the p-th root coefficientwise.
        std::vector<std::uint64_t> root;
        for (std::size_t k = 0; k * p < c.coeffs().size(); ++k)
            root.push_back(c[k * p]);
        ModPoly r(f.modulus(), std::move(root));
        for (auto& [part, m] : squarefree_split(r)) {
            const int mult = m * static_cast<int>(p);
            auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.second == mult; });
            if (it != out.end())
                it->first = it->first * part;
            else
                out.emplace_back(part, mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

/// Shape of a factorization: (degree, multiplicity) per irreducible factor.
struct FactorPattern {
    std::vector<std::pair<int, int>> factors;

    int total_degree() const
    {
        int s = 0;
        for (auto [d, m] : factors)
            s += d * m;
        return s;
    }

    bool squarefree() const
    {
        return std::all_of(factors.begin(), factors.end(), [](const auto& e) { return e.second == 1; });
    }

    friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

/// Distinct-degree split of a squarefree monic polynomial into
/// (degree, number of irreducible factors of that degree).
inline std::vector<std::pair<int, int>> distinct_degree_counts(const ModPoly& f)
{
    std::vector<std::pair<int, int>> out;
    const auto P = f.modulus();
    ModPoly g = monic(f);
    const ModPoly x = ModPoly::monomial(P, 1, 1);
    ModPoly h = x % g;
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        h = mod_pow_poly(h, f.prime(), g);
        ModPoly gd = gcd(g, h - x);
        if (gd.degree() >= 1) {
            out.emplace_back(d, gd.degree() / d);
            g = g / gd;
            h = h % g;
        }
    }
    if (g.degree() >= 1)
        out.emplace_back(g.degree(), 1);
    return out;
}

/// Degrees and multiplicities of the irreducible factors of f mod p.
inline FactorPattern distinct_degree_pattern(const ModPoly& f)
{
    require(f.degree() >= 1, "distinct_degree_pattern needs a nonconstant polynomial");
    FactorPattern pat;
    for (const auto& [part, mult] : squarefree_split(f))
        for (auto [d, count] : distinct_degree_counts(part))
            for (int k = 0; k < count; ++k)
                pat.factors.emplace_back(d, mult);
    std::sort(pat.factors.begin(), pat.factors.end());
    return pat;
}

/// Rabin's test: x^{p^n} = x mod f and gcd(x^{p^{n/l}} - x, f) = 1 for l | n.
inline bool is_irreducible(const ModPoly& f)
{
    if (f.degree() < 1)
        return false;
    if (f.degree() == 1)
        return true;
    const ModPoly g = monic(f);
    const auto n = static_cast<std::uint64_t>(g.degree());
    const auto P = g.modulus();
    const ModPoly x = ModPoly::monomial(P, 1, 1);
    auto frob_power = [&](std::uint64_t k) {
        ModPoly h = x % g;
        for (std::uint64_t i = 0; i < k; ++i)
            h = mod_pow_poly(h, g.prime(), g);
        return h;
    };
    if (frob_power(n) != x % g)
        return false;
    for (std::uint64_t l : prime_divisors(n)) {
        if (!gcd(g, frob_power(n / l) - x).is_one())
            return false;
    }
    return true;
}

/// Uniform draw from [0, bound) by rejection on a 64-bit engine; the result
/// depends only on the engine state, not on the standard library in use.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit)
            return v % bound;
    }
}

/// Rejection-samples monic degree-n polynomials until one is irreducible.
inline ModPoly random_irreducible(int n, PrimeModulus p, std::mt19937_64& rng)
{
    require(n >= 1, "random_irreducible needs degree >= 1");
    for (;;) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i < n; ++i)
            c[static_cast<std::size_t>(i)] = uniform_below(rng, p.value());
        c[static_cast<std::size_t>(n)] = 1;
        ModPoly f(p, std::move(c));
        if (is_irreducible(f))
            return f;
    }
}

inline ModPoly random_irreducible(int n, PrimeModulus p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return random_irreducible(n, p, rng);
}

/// Number of monic irreducible polynomials of degree d over F_p (necklace
/// count), saturating at UINT64_MAX.
inline std::uint64_t count_irreducible(int d, std::uint64_t p)
{
    auto mobius = [](std::uint64_t m) {
        int sign = 1;
        for (std::uint64_t q : prime_divisors(m)) {
            if ((m / q) % q == 0)
                return 0;
            sign = -sign;
        }
        return sign;
    };
    BigInt total = 0;
    for (std::uint64_t e = 1; e <= static_cast<std::uint64_t>(d); ++e) {
        if (static_cast<std::uint64_t>(d) % e != 0)
            continue;
        total += mobius(e) * pow(from_u64(p), static_cast<unsigned long>(static_cast<std::uint64_t>(d) / e));
    }
    total /= d;
    if (bit_length(total) > 63)
        return UINT64_MAX;
    return total.get_ui();
}

} // namespace galois
