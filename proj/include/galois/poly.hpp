#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "galois/bigint.hpp"

namespace galois {

/// Dense univariate polynomial, coefficients ascending by exponent.
///
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero. Every constructor and operation restores that form.
template <class T>
class Poly {
public:
    using value_type = T;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }

    static Poly monomial(const T& a, std::size_t k)
    {
        std::vector<T> c(k + 1, T(0));
        c[k] = a;
        return Poly(std::move(c));
    }

    static Poly x() { return monomial(T(1), 1); }

    /// Degree, with -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t size() const { return c_.size(); }

    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficient of x^i; zero beyond the degree.
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    T lead() const { return c_.empty() ? T(0) : c_.back(); }

    template <class U>
    U eval(const U& at) const
    {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * at + U(*it);
        return acc;
    }

    T operator()(const T& at) const { return eval<T>(at); }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& a : r.c_)
            a = -a;
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const T& s)
    {
        for (auto& a : c_)
            a *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<T> c_;
};

using RatPoly = Poly<BigRat>;
using IntPoly = Poly<BigInt>;

template <class T>
Poly<T> derivative(const Poly<T>& f)
{
    if (f.degree() < 1)
        return {};
    std::vector<T> d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        d[i - 1] = f[i] * T(static_cast<long>(i));
    return Poly<T>(std::move(d));
}

/// f(g(x)), by Horner's rule.
template <class T>
Poly<T> compose(const Poly<T>& f, const Poly<T>& g)
{
    Poly<T> acc;
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * g + Poly<T>::constant(f[i]);
    return acc;
}

template <class T>
Poly<T> pow(const Poly<T>& f, unsigned e)
{
    Poly<T> r = Poly<T>::constant(T(1));
    Poly<T> b = f;
    while (e) {
        if (e & 1U)
            r *= b;
        e >>= 1U;
        if (e)
            b *= b;
    }
    return r;
}

inline RatPoly to_rat(const IntPoly& f)
{
    std::vector<BigRat> c(f.coeffs().begin(), f.coeffs().end());
    return RatPoly(std::move(c));
}

/// Lowest common denominator of the coefficients (1 for the zero polynomial).
inline BigInt common_denominator(const RatPoly& f)
{
    BigInt d = 1;
    for (const auto& a : f.coeffs())
        d = lcm(d, a.get_den());
    return d;
}

inline BigInt content(const IntPoly& f)
{
    BigInt g = 0;
    for (const auto& a : f.coeffs())
        g = gcd(g, a);
    return g;
}

/// Primitive integer polynomial with positive leading coefficient, a rational
/// multiple of f.
inline IntPoly primitive_part(const RatPoly& f)
{
    if (f.is_zero())
        return {};
    BigInt d = common_denominator(f);
    std::vector<BigInt> c;
    c.reserve(f.size());
    for (const auto& a : f.coeffs()) {
        BigRat s = a * d;
        c.push_back(s.get_num());
    }
    IntPoly p(std::move(c));
    BigInt g = content(p);
    if (p.lead() < 0)
        g = -g;
    std::vector<BigInt> q;
    q.reserve(p.size());
    for (const auto& a : p.coeffs())
        q.push_back(a / g);
    return IntPoly(std::move(q));
}

/// Converts an integral rational polynomial back to IntPoly.
inline IntPoly to_int(const RatPoly& f)
{
    std::vector<BigInt> c;
    c.reserve(f.size());
    for (const auto& a : f.coeffs()) {
        require(a.get_den() == 1, "polynomial has non-integer coefficients");
        c.push_back(a.get_num());
    }
    return IntPoly(std::move(c));
}

/// Quotient and remainder with deg(remainder) < deg(divisor).
template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b)
{
    require(!b.is_zero(), "division by the zero polynomial");
    if (a.degree() < b.degree())
        return {Poly<T>{}, a};
    std::vector<T> r = a.coeffs();
    const int db = b.degree();
    std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
    const T lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        T t = r[i] / lb;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= t * b[j];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b)
{
    return divrem(a, b).second;
}

template <class T>
Poly<T> monic(const Poly<T>& f)
{
    if (f.is_zero())
        return f;
    return f * (T(1) / f.lead());
}

/// Monic greatest common divisor over a field.
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b)
{
    require(!(a.is_zero() && b.is_zero()), "gcd of two zero polynomials");
    while (!b.is_zero()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Resultant over a field, by the Euclidean remainder sequence.
inline BigRat resultant(RatPoly a, RatPoly b)
{
    if (a.is_zero() || b.is_zero())
        return 0;
    BigRat acc = 1;
    for (;;) {
        const int m = a.degree();
        const int n = b.degree();
        if (n == 0)
            return acc * pow(b.lead(), static_cast<unsigned long>(m));
        if (m == 0)
            return acc * pow(a.lead(), static_cast<unsigned long>(n));
        RatPoly r = divrem(a, b).second;
        if (r.is_zero())
            return 0;
        if ((m % 2 == 1) && (n % 2 == 1))
            acc = -acc;
        acc *= pow(b.lead(), static_cast<unsigned long>(m - r.degree()));
        a = std::move(b);
        b = std::move(r);
    }
}

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f).
inline BigRat discriminant(const RatPoly& f)
{
    require(f.degree() >= 1, "discriminant of a constant polynomial");
    const long n = f.degree();
    BigRat r = resultant(f, derivative(f)) / f.lead();
    if ((n * (n - 1) / 2) % 2 == 1)
        r = -r;
    return r;
}

inline BigInt discriminant(const IntPoly& f)
{
    BigRat d = discriminant(to_rat(f));
    ensure(d.get_den() == 1, "integer polynomial with non-integral discriminant");
    return d.get_num();
}

/// Chinese remaindering of (value, modulus) pairs; result in (-M/2, M/2].
inline BigInt crt_combine(const std::vector<std::pair<BigInt, BigInt>>& residues)
{
    require(!residues.empty(), "crt_combine needs at least one residue");
    BigInt x = 0;
    BigInt m = 1;
    for (const auto& [v, mod] : residues) {
        require(mod > 0, "crt_combine moduli must be positive");
        require(gcd(m, mod) == 1, "crt_combine moduli are not pairwise coprime");
        // x' = x + m * ((v - x) * m^{-1} mod mod)
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), mod.get_mpz_t());
        BigInt t = (v - x) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t());
        x += m * t;
        m *= mod;
    }
    return symmetric_mod(x, m);
}

/// Coefficientwise CRT of integer polynomials given modulo coprime moduli.
inline IntPoly crt_combine(const std::vector<std::pair<IntPoly, BigInt>>& residues)
{
    require(!residues.empty(), "crt_combine needs at least one residue");
    std::size_t len = 0;
    for (const auto& r : residues)
        len = std::max(len, r.first.size());
    std::vector<BigInt> c(len);
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::pair<BigInt, BigInt>> coeff;
        coeff.reserve(residues.size());
        for (const auto& [f, mod] : residues)
            coeff.emplace_back(f[i], mod);
        c[i] = crt_combine(coeff);
    }
    return IntPoly(std::move(c));
}

namespace detail {

inline bool is_small_prime(unsigned p)
{
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline BigInt eval_mod(const IntPoly& f, const BigInt& x, const BigInt& m)
{
    BigInt acc = 0;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * x + f[static_cast<std::size_t>(i)];
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

inline std::vector<long> reduce_small(const IntPoly& f, long p)
{
    std::vector<long> out;
    out.reserve(f.size());
    for (const auto& a : f.coeffs())
        out.push_back(static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p))));
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

inline long inverse_small(long v, long p)
{
    long r = 1;
    long e = p - 2;
    while (e > 0) {
        if (e & 1)
            r = r * v % p;
        v = v * v % p;
        e >>= 1;
    }
    return r;
}

/// True if f mod p keeps its degree and has no repeated factor.
inline bool squarefree_mod(const IntPoly& f, long p)
{
    auto a = reduce_small(f, p);
    auto b = reduce_small(derivative(f), p);
    if (static_cast<int>(a.size()) - 1 != f.degree())
        return false;
    while (!b.empty()) {
        const long il = inverse_small(b.back(), p);
        while (a.size() >= b.size()) {
            const long t = a.back() * il % p;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = ((a[shift + j] - t * b[j]) % p + p) % p;
            while (!a.empty() && a.back() == 0)
                a.pop_back();
        }
        std::swap(a, b);
    }
    return a.size() == 1;
}

} // namespace detail

/// All rational roots of f, ascending.
///
/// Candidates come from p-adic lifting of the simple roots of the squarefree
/// part modulo a small prime; each is kept only if it is a quotient of a
/// divisor of the trailing coefficient by a divisor of the leading one and
/// evaluates exactly to zero.
inline std::vector<BigRat> rational_roots(const RatPoly& f)
{
    require(!f.is_zero(), "rational_roots of the zero polynomial");
    std::set<BigRat> roots;
    IntPoly g = primitive_part(f);
    // Strip x^k.
    std::size_t low = 0;
    while (g[low] == 0)
        ++low;
    if (low > 0) {
        roots.insert(BigRat(0));
        g = IntPoly(std::vector<BigInt>(g.coeffs().begin() + static_cast<long>(low), g.coeffs().end()));
    }
    if (g.degree() >= 1) {
        RatPoly gr = to_rat(g);
        RatPoly sq = divrem(gr, poly_gcd(gr, derivative(gr))).first;
        g = primitive_part(sq);
    }
    if (g.degree() >= 1) {
        const int n = g.degree();
        const BigInt lc = g.lead();
        // h(y) = lc^{n-1} g(y / lc) is monic; its integer roots are lc * r.
        std::vector<BigInt> hc(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i)
            hc[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)] * pow(lc, static_cast<unsigned long>(std::max(0, n - 1 - i)));
        hc[static_cast<std::size_t>(n)] = 1;
        IntPoly h(std::move(hc));
        BigInt bound = 0;
        for (const auto& a : h.coeffs())
            bound = std::max(bound, BigInt(abs(a)));
        bound += 1;
        unsigned p = 3;
        while (!detail::is_small_prime(p) || !detail::squarefree_mod(h, p))
            ++p;
        const BigInt P = p;
        IntPoly dh = derivative(h);
        for (unsigned r0 = 0; r0 < p; ++r0) {
            if (detail::eval_mod(h, r0, P) != 0)
                continue;
            BigInt r = r0;
            BigInt mod = P;
            while (mod <= 2 * bound) {
                mod *= mod;
                BigInt num = detail::eval_mod(h, r, mod);
                BigInt den = detail::eval_mod(dh, r, mod);
                BigInt inv;
                ensure(mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) != 0,
                       "Hensel lift hit a non-invertible derivative");
                r = r - num * inv;
                mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
            }
            BigInt y = symmetric_mod(r, mod);
            if (h.eval<BigInt>(y) != 0)
                continue;
            BigRat root = make_rat(y, lc);
            // Divisor test on the primitive g.
            if (root != 0) {
                BigInt num = root.get_num();
                BigInt den = root.get_den();
                if (!mpz_divisible_p(g[0].get_mpz_t(), num.get_mpz_t())
                    || !mpz_divisible_p(lc.get_mpz_t(), den.get_mpz_t()))
                    continue;
            }
            ensure(f(root) == 0, "rational root failed exact verification");
            roots.insert(root);
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace galois
