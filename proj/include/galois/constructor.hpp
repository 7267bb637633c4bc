#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "galois/frobenius.hpp"
#include "galois/modpoly.hpp"
#include "galois/poly.hpp"

namespace galois {

/// Squarefree pattern with the given factor degrees.
inline FactorPattern pattern_of(std::vector<int> degrees)
{
    std::sort(degrees.begin(), degrees.end());
    FactorPattern pat;
    for (int d : degrees) {
        require(d >= 1, "pattern degrees must be positive");
        pat.factors.emplace_back(d, 1);
    }
    return pat;
}

struct PatternPrescription {
    int degree = 0;
    std::vector<std::pair<std::uint64_t, FactorPattern>> patterns;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Product of distinct monic irreducibles mod p realizing the pattern.
inline ModPoly draw_pattern(const FactorPattern& pat, PrimeModulus p, std::mt19937_64& rng)
{
    std::map<int, int> need;
    for (auto [d, m] : pat.factors)
        ++need[d];
    ModPoly prod(p, {1});
    for (auto [d, k] : need) {
        std::set<ModPoly> chosen;
        while (static_cast<int>(chosen.size()) < k)
            chosen.insert(random_irreducible(d, p, rng));
        for (const auto& g : chosen)
            prod = prod * g;
    }
    return prod;
}

} // namespace detail

/// Monic integer polynomial with the prescribed squarefree factorization
/// pattern modulo each prime, coefficients in the symmetric range.
inline IntPoly bauer_combine(const PatternPrescription& pr)
{
    require(pr.degree >= 1, "prescription degree must be positive");
    require(!pr.patterns.empty(), "prescription lists no primes");
    std::set<std::uint64_t> seen;
    for (const auto& [p, pat] : pr.patterns) {
        require(is_prime(p) && p < PrimeModulus::max_prime, std::to_string(p) + " is not a usable prime");
        require(seen.insert(p).second, "prescription repeats the prime " + std::to_string(p));
        require(pat.total_degree() == pr.degree, "pattern degrees at " + std::to_string(p) + " do not sum to the degree");
        require(pat.squarefree(), "prescribed patterns must be squarefree");
        std::map<int, std::uint64_t> need;
        for (auto [d, m] : pat.factors)
            ++need[d];
        for (auto [d, k] : need)
            require(k <= count_irreducible(d, p),
                    "pattern needs " + std::to_string(k) + " distinct irreducible factors of degree " + std::to_string(d)
                        + " mod " + std::to_string(p) + ", only " + std::to_string(count_irreducible(d, p)) + " exist");
    }
    std::vector<std::pair<IntPoly, BigInt>> residues;
    for (const auto& [p, pat] : pr.patterns) {
        std::mt19937_64 rng(detail::splitmix64(pr.seed ^ detail::splitmix64(p)));
        residues.emplace_back(detail::draw_pattern(pat, PrimeModulus(p), rng).lift(), from_u64(p));
    }
    IntPoly f = crt_combine(residues);
    ensure(f.degree() == pr.degree && f.lead() == 1, "CRT lift is not monic of the prescribed degree");
    for (const auto& [p, pat] : pr.patterns)
        ensure(distinct_degree_pattern(ModPoly::from_int(f, PrimeModulus(p))) == pat, "CRT lift lost a prescribed pattern");
    return f;
}

struct ConstructionCertificate {
    IntPoly polynomial;
    std::vector<std::pair<std::uint64_t, FactorPattern>> patterns;
    std::uint64_t irreducibility_prime = 0;
    std::vector<PrimeRecord> evidence;
    std::string group;
};

/// Checks a certificate from scratch: each listed pattern is the actual
/// factorization shape, the witness prime gives an n-cycle, and the evidence
/// contains an n-cycle, an (n-1)-cycle and a transposition. Returns an empty
/// string on success, otherwise the first failing claim.
inline std::string verify_certificate(const ConstructionCertificate& c)
{
    const IntPoly& f = c.polynomial;
    const int n = f.degree();
    if (n < 2 || f.lead() != 1)
        return "polynomial is not monic of degree >= 2";
    for (const auto& [p, pat] : c.patterns) {
        if (!is_prime(p))
            return std::to_string(p) + " is not prime";
        if (distinct_degree_pattern(ModPoly::from_int(f, PrimeModulus(p))) != pat)
            return "pattern mismatch at " + std::to_string(p);
        if (!pat.squarefree())
            return "pattern at " + std::to_string(p) + " is not squarefree";
    }
    if (!is_prime(c.irreducibility_prime)
        || !is_irreducible(ModPoly::from_int(f, PrimeModulus(c.irreducibility_prime))))
        return "no irreducibility witness";
    const CycleType full = make_cycle_type({n});
    std::vector<int> sub(1, n - 1);
    sub.push_back(1);
    const CycleType near = make_cycle_type(sub);
    std::vector<int> tr(static_cast<std::size_t>(n - 2), 1);
    tr.push_back(2);
    const CycleType transposition = make_cycle_type(tr);
    std::set<CycleType> types;
    for (const auto& r : c.evidence) {
        PrimeRecord again = cycle_type_at(f, r.p);
        if (!(again == r))
            return "evidence at " + std::to_string(r.p) + " does not reproduce";
        if (r.status == PrimeStatus::unramified)
            types.insert(r.type);
    }
    if (c.group == "S" + std::to_string(n)) {
        if (!types.count(full) || !types.count(near) || !types.count(transposition))
            return "evidence lacks an n-cycle, an (n-1)-cycle or a transposition";
    } else {
        return "unsupported group claim " + c.group;
    }
    return {};
}

/// Bauer's recipe for the symmetric group: an n-cycle at p, an (n-1)-cycle at
/// q and a transposition at r. For n = 3 the last two coincide and q = r is
/// accepted.
inline ConstructionCertificate construct_symmetric(int n, std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t seed)
{
    require(n >= 3, "construct_symmetric needs n >= 3");
    for (auto v : {p, q, r})
        require(is_prime(v), std::to_string(v) + " is not prime");
    const bool merged = n == 3 && q == r;
    require(p != q && p != r && (q != r || merged), "primes p, q, r must be distinct");
    require(r >= static_cast<std::uint64_t>(n - 2), "r must be at least n - 2");

    PatternPrescription pr;
    pr.degree = n;
    pr.seed = seed;
    pr.patterns.emplace_back(p, pattern_of({n}));
    pr.patterns.emplace_back(q, pattern_of({n - 1, 1}));
    if (!merged) {
        std::vector<int> tr(static_cast<std::size_t>(n - 2), 1);
        tr.push_back(2);
        pr.patterns.emplace_back(r, pattern_of(tr));
    }
    ConstructionCertificate c;
    c.polynomial = bauer_combine(pr);
    c.patterns = pr.patterns;
    c.irreducibility_prime = p;
    for (const auto& [prime, pat] : pr.patterns)
        c.evidence.push_back(cycle_type_at(c.polynomial, prime));
    c.group = "S" + std::to_string(n);
    ensure(verify_certificate(c).empty(), "fresh certificate failed verification");
    return c;
}

enum class SchurMode { certified, provisional };

struct SchurResult {
    IntPoly polynomial;
    std::string family; // "exponential" (n = 0 mod 4) or "odd"
    bool discriminant_square = false;
    std::uint64_t irreducibility_prime = 0;
    std::uint64_t sampled_primes = 0;
    bool all_types_even = false;
};

/// n! * sum_{k<=n} x^k / k!, monic with integer coefficients.
inline IntPoly truncated_exponential(int n)
{
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    BigInt acc = 1;
    for (int k = n; k >= 0; --k) {
        c[static_cast<std::size_t>(k)] = acc;
        acc *= k;
    }
    return IntPoly(std::move(c));
}

/// sum_k (-1)^k C(n,k) x^k / (k+1)!, cleared of denominators and made monic.
inline IntPoly schur_odd_family(int n)
{
    std::vector<BigRat> c(static_cast<std::size_t>(n) + 1);
    BigInt binom = 1;
    BigInt fact = 1;
    for (int k = 0; k <= n; ++k) {
        fact *= k + 1;
        BigRat term(binom, fact);
        c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? term : BigRat(-term);
        binom = binom * (n - k) / (k + 1);
    }
    return primitive_part(RatPoly(std::move(c)));
}

inline bool is_even_permutation(const CycleType& t)
{
    return (t.size() - static_cast<int>(t.parts.size())) % 2 == 0;
}

/// Schur's polynomials with alternating Galois group. The n = 0 mod 4
/// family is issued in certified mode; the odd family only in provisional
/// mode, and only after every sampled Frobenius type is found to be even.
inline SchurResult schur_alternating(int n, SchurMode mode = SchurMode::certified, std::uint64_t prime_bound = 2000)
{
    require(n >= 2, "schur_alternating needs n >= 2");
    SchurResult res;
    if (n % 4 == 0) {
        res.polynomial = truncated_exponential(n);
        res.family = "exponential";
    } else if (n % 2 == 1 && mode == SchurMode::provisional) {
        res.polynomial = schur_odd_family(n);
        res.family = "odd";
    } else if (n % 2 == 1) {
        throw precondition_error("odd n is only available in provisional mode");
    } else {
        throw precondition_error("no alternating family for n = " + std::to_string(n));
    }
    const IntPoly& f = res.polynomial;
    res.discriminant_square = exact_sqrt(discriminant(f)).has_value();
    SampleReport rep = sample_cycle_types_below(f, prime_bound);
    res.sampled_primes = rep.unramified();
    res.all_types_even = true;
    for (const auto& r : rep.records) {
        if (r.status != PrimeStatus::unramified)
            continue;
        if (!is_even_permutation(r.type))
            res.all_types_even = false;
        if (res.irreducibility_prime == 0 && r.type.parts.size() == 1)
            res.irreducibility_prime = r.p;
    }
    if (res.family == "exponential") {
        ensure(res.discriminant_square, "exponential family discriminant is not a square");
    } else if (!res.discriminant_square || !res.all_types_even || res.irreducibility_prime == 0) {
        throw precondition_error("verification gate failed for the odd family at n = " + std::to_string(n));
    }
    return res;
}

/// Least primitive root of an odd prime.
inline std::uint64_t least_primitive_root(std::uint64_t p)
{
    require(is_prime(p) && p > 2, "primitive root needs an odd prime");
    const auto factors = prime_divisors(p - 1);
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (auto q : factors)
            ok = ok && detail::powmod(g, (p - 1) / q, p) != 1;
        if (ok)
            return g;
    }
}

namespace detail {

/// Fraction-free Gaussian elimination; T must hold every intermediate minor.
template <class T>
T bareiss_det(std::vector<std::vector<T>> m)
{
    const std::size_t n = m.size();
    T sign = 1;
    T prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Row i is e shifted cyclically i places to the right.
template <class T>
std::vector<std::vector<T>> circulant(const std::vector<long>& e)
{
    const std::size_t n = e.size();
    std::vector<std::vector<T>> m(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = T(e[(j + n - i) % n]);
    return m;
}

} // namespace detail

inline BigInt circulant_determinant(const std::vector<long>& e)
{
    require(!e.empty(), "empty circulant");
    return detail::bareiss_det(detail::circulant<BigInt>(e));
}

struct FurtwaenglerResult {
    std::uint64_t p = 0;
    std::uint64_t g = 0;
    long bound = 0;
    std::vector<std::vector<long>> solutions;
};

/// True when the circulant of e has determinant +-p and sum e_i g^i = 0 mod p.
inline bool furtwaengler_check(std::uint64_t p, std::uint64_t g, const std::vector<long>& e)
{
    if (e.size() + 1 != p)
        return false;
    BigInt s = 0;
    BigInt gi = 1;
    for (long v : e) {
        s += v * gi;
        gi *= static_cast<unsigned long>(g);
    }
    if (mod_u64(s, p) != 0)
        return false;
    BigInt d = circulant_determinant(e);
    return d == from_u64(p) || d == -from_u64(p);
}

/// Exhaustive search over |e_i| <= bound in lexicographic order.
inline FurtwaenglerResult furtwaengler_search(std::uint64_t p, long bound, unsigned workers = 1)
{
    require(is_prime(p), std::to_string(p) + " is not prime");
    require(p != 2, "Furtwaengler search needs an odd prime");
    require(bound >= 0, "bound must be nonnegative");
    const std::size_t len = static_cast<std::size_t>(p - 1);
    require(len <= 16, "p is too large for exhaustive search");
    FurtwaenglerResult res;
    res.p = p;
    res.g = least_primitive_root(p);
    res.bound = bound;
    std::vector<std::uint64_t> gpow(len);
    gpow[0] = 1;
    for (std::size_t i = 1; i < len; ++i)
        gpow[i] = gpow[i - 1] * res.g % p;

    // Small entries allow an __int128 determinant when Hadamard's bound fits.
    const double hadamard = std::pow(std::sqrt(static_cast<double>(len)) * static_cast<double>(std::max(bound, 1L)),
                                     static_cast<double>(len));
    const bool narrow = hadamard < 1e30;

    const long width = 2 * bound + 1;
    std::vector<std::vector<std::vector<long>>> per_first(static_cast<std::size_t>(width));
    auto scan = [&](long first) {
        std::vector<long> e(len, -bound);
        e[0] = first;
        auto& out = per_first[static_cast<std::size_t>(first + bound)];
        for (;;) {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < len; ++i) {
                const long r = e[i] % static_cast<long>(p);
                s = (s + (static_cast<std::uint64_t>(r + static_cast<long>(p)) % p) * gpow[i]) % p;
            }
            if (s == 0) {
                bool hit;
                if (narrow) {
                    __int128 d = detail::bareiss_det(detail::circulant<__int128>(e));
                    hit = d == static_cast<__int128>(p) || d == -static_cast<__int128>(p);
                } else {
                    BigInt d = circulant_determinant(e);
                    hit = d == from_u64(p) || d == -from_u64(p);
                }
                if (hit)
                    out.push_back(e);
            }
            std::size_t i = len;
            while (i-- > 1) {
                if (e[i] < bound) {
                    ++e[i];
                    break;
                }
                e[i] = -bound;
            }
            if (i == 0 || i == static_cast<std::size_t>(-1))
                break;
        }
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(width)));
    if (workers == 1) {
        for (long first = -bound; first <= bound; ++first)
            scan(first);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (long first = -bound + static_cast<long>(w); first <= bound; first += static_cast<long>(workers))
                    scan(first);
            });
        for (auto& t : pool)
            t.join();
    }
    for (auto& block : per_first)
        for (auto& e : block)
            res.solutions.push_back(std::move(e));
    return res;
}

} // namespace galois
