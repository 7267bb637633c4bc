#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois/bigint.hpp"
#include "galois/elliptic.hpp"
#include "galois/poly.hpp"

namespace galois {

/// Default cap on continued-fraction steps: max(64, 6 * torsion cap 16).
inline constexpr int default_cf_cap = 96;

inline void require_pell_radicand(const IntPoly& R)
{
    require(R.degree() >= 2 && R.degree() % 2 == 0, "radicand must have even positive degree");
    require(exact_sqrt(BigRat(R.lead())).has_value(), "place at infinity not rational: leading coefficient is not a square");
    RatPoly r = to_rat(R);
    require(poly_gcd(r, derivative(r)).degree() == 0, "radicand is not squarefree");
}

/// The polynomial A with deg(R - A^2) < deg A and positive leading
/// coefficient.
inline RatPoly poly_sqrt_part(const IntPoly& R)
{
    require_pell_radicand(R);
    const int m = R.degree() / 2;
    std::vector<BigRat> a(static_cast<std::size_t>(m) + 1, BigRat(0));
    a[static_cast<std::size_t>(m)] = *exact_sqrt(BigRat(R.lead()));
    // Coefficient of x^(m+j) in A^2 fixes a[j], top down.
    for (int j = m - 1; j >= 0; --j) {
        BigRat s = 0;
        const int e = m + j;
        for (int i = j + 1; i <= m; ++i) {
            const int k = e - i;
            if (k > j && k <= m)
                s += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k)];
        }
        a[static_cast<std::size_t>(j)] = (BigRat(R[static_cast<std::size_t>(e)]) - s) / (2 * a[static_cast<std::size_t>(m)]);
    }
    RatPoly A(std::move(a));
    ensure((to_rat(R) - A * A).degree() < m, "square-root part failed its degree bound");
    return A;
}

/// p + q sqrt(R) with p^2 - R q^2 = norm, a nonzero constant.
struct FunctionalUnit {
    RatPoly p;
    RatPoly q;
    BigRat norm;
};

inline bool is_unit(const IntPoly& R, const FunctionalUnit& u)
{
    if (u.q.is_zero() || u.norm == 0)
        return false;
    RatPoly n = u.p * u.p - to_rat(R) * u.q * u.q;
    return n == RatPoly::constant(u.norm);
}

/// (p, q)^2 = (p^2 + R q^2, 2 p q), of norm norm^2.
inline FunctionalUnit square(const IntPoly& R, const FunctionalUnit& u)
{
    return FunctionalUnit{u.p * u.p + to_rat(R) * u.q * u.q, u.q * u.p * BigRat(2), u.norm * u.norm};
}

inline std::size_t height_bits(const RatPoly& f)
{
    std::size_t h = 0;
    for (const auto& c : f.coeffs())
        h = std::max(h, height_bits(c));
    return h;
}

namespace detail {

/// num / den with one positive common denominator, kept in lowest terms.
struct ScaledPoly {
    IntPoly num;
    BigInt den = 1;

    static ScaledPoly from(const RatPoly& f)
    {
        BigInt d = common_denominator(f);
        return ScaledPoly{to_int(f * BigRat(d)), d};
    }

    RatPoly to_rat() const
    {
        std::vector<BigRat> c;
        c.reserve(num.size());
        for (const auto& a : num.coeffs())
            c.push_back(make_rat(a, den));
        return RatPoly(std::move(c));
    }

    void reduce()
    {
        BigInt g = den;
        for (const auto& a : num.coeffs()) {
            if (g == 1)
                return;
            g = gcd(g, a);
        }
        if (g == 1)
            return;
        std::vector<BigInt> c;
        c.reserve(num.size());
        for (const auto& a : num.coeffs())
            c.push_back(a / g);
        num = IntPoly(std::move(c));
        den /= g;
    }

    std::size_t height() const
    {
        std::size_t h = mpz_sizeinbase(den.get_mpz_t(), 2);
        for (const auto& a : num.coeffs())
            h = std::max(h, mpz_sizeinbase(a.get_mpz_t(), 2));
        return h;
    }
};

inline IntPoly int_scaled(const IntPoly& f, const BigInt& s)
{
    std::vector<BigInt> c;
    c.reserve(f.size());
    for (const auto& a : f.coeffs())
        c.push_back(a * s);
    return IntPoly(std::move(c));
}

inline BigInt l1_norm(const IntPoly& f)
{
    BigInt s = 0;
    for (const auto& a : f.coeffs())
        s += abs(a);
    return s;
}

/// f(2^w), by Horner's rule on shifts.
inline BigInt eval_pow2(const IntPoly& f, std::size_t w)
{
    BigInt acc = 0;
    for (int i = f.degree(); i >= 0; --i) {
        mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), w);
        acc += f[static_cast<std::size_t>(i)];
    }
    return acc;
}

/// Exact test that sum_t c_t prod_j f_(t,j) is the zero polynomial. The
/// coefficients of the sum are bounded by B = sum_t |c_t| prod_j |f_(t,j)|_1,
/// and an integer polynomial with coefficients below 2^(w-1) in absolute
/// value vanishes iff its value at 2^w does.
struct ProductTerm {
    BigInt c;
    std::vector<const IntPoly*> factors;
};

inline bool sum_of_products_is_zero(const std::vector<ProductTerm>& terms)
{
    BigInt bound = 0;
    for (const auto& t : terms) {
        BigInt b = abs(t.c);
        for (const IntPoly* f : t.factors)
            b *= l1_norm(*f);
        bound += b;
    }
    const std::size_t w = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;
    BigInt total = 0;
    for (const auto& t : terms) {
        BigInt v = t.c;
        for (const IntPoly* f : t.factors)
            v *= eval_pow2(*f, w);
        total += v;
    }
    return total == 0;
}

} // namespace detail

/// One entry of the growth trace.
struct GrowthEntry {
    int k = 0;
    int degree_Q = 0;
    /// Heights in bits of Q_k, of monic Q_k, and of the primitive integer
    /// multiple of the convergent denominator q_(k-1).
    std::size_t height_Q = 0;
    std::size_t height_Q_monic = 0;
    std::size_t height_q = 0;
};

/// State k of the expansion: xi_k = (sqrt(R) + P_k) / Q_k with
/// Q_k = scale * Q_monic.
struct SurdState {
    int k = 0;
    RatPoly P;
    RatPoly Q_monic;
    BigRat scale;

    RatPoly Q() const { return Q_monic * scale; }
};

struct CFReport {
    IntPoly R;
    RatPoly sqrt_part;
    /// a_k = partial_monic[k] / states[k].scale.
    std::vector<RatPoly> partial_monic;
    std::vector<SurdState> states;
    bool periodic = false;
    int preperiod = 0;
    int quasi_period = 0;
    std::optional<FunctionalUnit> unit;
    /// Index k of the convergent carrying the unit.
    int unit_index = -1;
    std::vector<GrowthEntry> growth;
    int steps = 0;
    int max_steps = 0;

    RatPoly partial_quotient(std::size_t k) const
    {
        return partial_monic.at(k) * BigRat(1 / states.at(k).scale);
    }
};

namespace detail {

/// scale * poly with poly a primitive integer polynomial (or zero).
struct Convergent {
    IntPoly poly;
    BigRat scale = 1;

    RatPoly value() const { return to_rat(poly) * scale; }
};

/// Two consecutive convergents c_(k-2), c_(k-1) and
/// ratio = scale(c_(k-1)) / (lambda_k scale(c_(k-2))), which stays of
/// moderate height while the scales themselves grow quickly.
struct ConvergentPair {
    Convergent prev;
    Convergent cur;
    BigRat ratio = 1;
    /// Content factor of the last step: scale(c_k) = factor scale(c_(k-2)).
    BigRat factor = 1;
};

/// c_k = a_k c_(k-1) + c_(k-2) with a_k = am / lambda_k, and mu = lambda_k
/// lambda_(k+1).
inline void advance(ConvergentPair& s, const RatPoly& am, const BigRat& mu)
{
    // t du = U cur + du prev with U / du = am ratio, in integers.
    const ScaledPoly u = ScaledPoly::from(am * s.ratio);
    IntPoly t = u.num * s.cur.poly + int_scaled(s.prev.poly, u.den);
    ensure(!t.is_zero(), "vanishing convergent");
    BigInt g = content(t);
    if (t.lead() < 0)
        g = -g;
    std::vector<BigInt> c;
    c.reserve(t.size());
    for (const auto& a : t.coeffs())
        c.push_back(a / g);
    const BigRat factor = make_rat(g, u.den);
    Convergent next{IntPoly(std::move(c)), BigRat(factor * s.prev.scale)};
    s.ratio = factor / (mu * s.ratio);
    s.factor = factor;
    s.prev = std::move(s.cur);
    s.cur = std::move(next);
}

inline BigRat eval_int(const IntPoly& f, const BigInt& x)
{
    BigInt acc = 0;
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * x + f[static_cast<std::size_t>(i)];
    return BigRat(acc);
}

/// a * b * c == target, by cross-multiplication without gcds.
inline bool product_equals(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& target)
{
    BigInt lhs = a.get_num() * b.get_num();
    lhs *= c.get_num();
    lhs *= target.get_den();
    BigInt rhs = a.get_den() * b.get_den();
    rhs *= c.get_den();
    rhs *= target.get_num();
    return lhs == rhs;
}

/// Exact test that sum_t c_t prod_j f_(t,j) vanishes, for rational c_t and
/// integer polynomials f_(t,j).
inline bool rational_identity_holds(const std::vector<std::pair<BigRat, std::vector<const IntPoly*>>>& terms)
{
    BigInt L = 1;
    for (const auto& t : terms)
        L = lcm(L, t.first.get_den());
    std::vector<ProductTerm> ints;
    for (const auto& t : terms) {
        BigRat c = t.first * L;
        ints.push_back(ProductTerm{c.get_num(), t.second});
    }
    return sum_of_products_is_zero(ints);
}

} // namespace detail

/// Continued fraction of sqrt(R) over Q(x). Each step is checked exactly:
/// Q_k divides R - P_(k+1)^2, deg a_k >= 1 for k >= 1, the convergents
/// satisfy p_k q_(k-1) - p_(k-1) q_k = (-1)^(k+1), and
/// p_k^2 - R q_k^2 = (-1)^(k+1) Q_(k+1).
inline CFReport cf_expand(const IntPoly& R, int max_steps = default_cf_cap)
{
    require(max_steps >= 1, "max_steps must be positive");
    CFReport rep;
    rep.R = R;
    rep.max_steps = max_steps;
    rep.sqrt_part = poly_sqrt_part(R);
    const RatPoly Rr = to_rat(R);
    const RatPoly& A = rep.sqrt_part;
    const IntPoly one_int{BigInt(1)};

    using Key = std::pair<std::vector<BigRat>, std::vector<BigRat>>;
    std::map<Key, int> seen;

    RatPoly P, Qm = RatPoly::constant(BigRat(1));
    BigRat lambda = 1;
    // Convergents k-2 and k-1, starting from p_(-2) = 0, q_(-2) = 1,
    // p_(-1) = 1, q_(-1) = 0.
    detail::ConvergentPair pc{detail::Convergent{}, detail::Convergent{one_int, 1}};
    detail::ConvergentPair qc{detail::Convergent{one_int, 1}, detail::Convergent{}};
    // tau_k / sigma_k for k-2 and k-1, the scales of q and p.
    BigRat phi_prev = 1, phi_cur = 1;
    for (int k = 0;; ++k) {
        rep.states.push_back(SurdState{k, P, Qm, lambda});
        if (k >= 1) {
            auto [it, fresh] = seen.emplace(Key{P.coeffs(), Qm.coeffs()}, k);
            if (!fresh && !rep.periodic) {
                rep.periodic = true;
                rep.preperiod = it->second;
                rep.quasi_period = k - it->second;
            }
        }
        if ((rep.periodic && rep.unit) || k == max_steps)
            break;

        RatPoly am = divrem(A + P, Qm).first;
        ensure(k == 0 || am.degree() >= 1, "partial quotient of degree 0");
        rep.partial_monic.push_back(am);
        RatPoly P_next = am * Qm - P;
        auto [T, rem] = divrem(Rr - P_next * P_next, Qm);
        ensure(rem.is_zero(), "Q_k does not divide R - P_(k+1)^2");
        ensure(!T.is_zero(), "R is a perfect square");
        const BigRat mu = T.lead();
        RatPoly Qm_next = T * BigRat(1 / mu);
        BigRat lambda_next = mu / lambda;

        detail::advance(pc, am, mu);
        detail::advance(qc, am, mu);
        const BigRat phi = qc.factor / pc.factor * phi_prev;
        phi_prev = std::move(phi_cur);
        phi_cur = phi;
        const IntPoly& pk = pc.cur.poly;
        const IntPoly& qk = qc.cur.poly;
        const int sign = (k % 2 == 0) ? -1 : 1;
        if (k >= 1) {
            // Scaled by 1 / (sigma_k tau_(k-1)): pk q(k-1) - kappa p(k-1) qk
            // is a constant C with C sigma_k tau_(k-1) = (-1)^(k+1).
            const BigRat kappa = qc.ratio / pc.ratio;
            const IntPoly& p1 = pc.prev.poly;
            const IntPoly& q1 = qc.prev.poly;
            const BigRat C = detail::eval_int(pk, 0) * detail::eval_int(q1, 0)
                             - kappa * detail::eval_int(p1, 0) * detail::eval_int(qk, 0);
            bool ok = detail::rational_identity_holds({
                {BigRat(1), {&pk, &q1}},
                {BigRat(-kappa), {&p1, &qk}},
                {BigRat(-C), {&one_int}},
            });
            ok = ok && detail::product_equals(C, pc.cur.scale, qc.prev.scale, BigRat(sign));
            ensure(ok, "convergents are not unimodular");
        }
        {
            // Scaled by 1 / sigma_k^2: pk^2 - phi^2 R qk^2 = c Qm_next with
            // c sigma_k^2 = (-1)^(k+1) lambda_(k+1).
            const auto Qs = detail::ScaledPoly::from(Qm_next);
            BigInt x0 = 0;
            while (detail::eval_int(Qs.num, x0) == 0)
                ++x0;
            const BigRat pv = detail::eval_int(pk, x0), qv = detail::eval_int(qk, x0);
            const BigRat c = (pv * pv - phi * phi * detail::eval_int(R, x0) * qv * qv) / detail::eval_int(Qs.num, x0);
            bool ok = detail::rational_identity_holds({
                {BigRat(1), {&pk, &pk}},
                {BigRat(-phi * phi), {&R, &qk, &qk}},
                {BigRat(-c), {&Qs.num}},
            });
            ok = ok && detail::product_equals(c, pc.cur.scale, pc.cur.scale, BigRat(sign * lambda_next / Qs.den));
            ensure(ok, "norm relation failed");
        }

        if (!rep.unit && Qm_next.degree() == 0) {
            rep.unit = FunctionalUnit{pc.cur.value(), qc.cur.value(), BigRat(sign * lambda_next)};
            rep.unit_index = k;
        }
        P = std::move(P_next);
        Qm = std::move(Qm_next);
        lambda = std::move(lambda_next);
        rep.steps = k + 1;
        std::size_t hq = 0;
        for (const auto& c : qc.cur.poly.coeffs())
            hq = std::max(hq, mpz_sizeinbase(c.get_mpz_t(), 2));
        rep.growth.push_back(GrowthEntry{k + 1, Qm.degree(), height_bits(Qm * lambda), height_bits(Qm), hq});
    }
    return rep;
}

inline FunctionalUnit unit_from_period(const CFReport& report)
{
    require(report.periodic && report.unit.has_value(), "continued fraction has no period within its cap");
    ensure(is_unit(report.R, *report.unit), "unit norm is not a nonzero constant");
    return *report.unit;
}

/// a + b sqrt(d) over Q, for checking the quartic model on points whose
/// ordinate is irrational. Operands built from a rational carry d = 0 and
/// adopt the other operand's d.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(BigRat a) : a_(std::move(a)) {}
    QuadraticNumber(long a) : a_(a) {}
    QuadraticNumber(BigRat a, BigRat b, BigRat d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    const BigRat& rational() const { return a_; }
    const BigRat& irrational() const { return b_; }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        return {x.a_ + y.a_, x.b_ + y.b_, radicand(x, y)};
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        return {x.a_ - y.a_, x.b_ - y.b_, radicand(x, y)};
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x) { return {-x.a_, -x.b_, x.d_}; }
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        BigRat d = radicand(x, y);
        return {x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d};
    }
    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        BigRat n = y.a_ * y.a_ - y.d_ * y.b_ * y.b_;
        require(n != 0, "division by a zero divisor");
        QuadraticNumber inv{y.a_ / n, -y.b_ / n, y.d_};
        return x * inv;
    }
    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

private:
    static BigRat radicand(const QuadraticNumber& x, const QuadraticNumber& y) { return x.d_ != 0 ? x.d_ : y.d_; }

    BigRat a_ = 0;
    BigRat b_ = 0;
    BigRat d_ = 0;
};

/// Birational model of y^2 = R(x), R = s^2 x^4 + r3 x^3 + r2 x^2 + r1 x + r0,
/// as the cubic Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 with q = -s.
/// The place at infinity where y ~ s x^2 goes to the marked point T; the
/// other goes to the origin O. The short model y^2 = x^3 + A x + B follows
/// by completing the square and removing the X^2 term.
struct QuarticModel {
    IntPoly R;
    BigRat s, q, r0, r1, r2, r3;
    BigRat a1, a2, a3, a4, a6;
    BigRat b2, b4, b6;
    WeierstrassCurve curve{BigRat(0), BigRat(1)};
    CurvePoint marked;

    template <class K>
    std::pair<K, K> to_long(const K& x, const K& y) const
    {
        K X = K(2 * q) * y + K(2 * q * q) * x * x + K(r3) * x;
        K Y = K(4 * q * q) * (x * y + K(q) * x * x * x) + K(2 * q * r3) * x * x + K(2 * q * r2) * x
              - K(r3 * r3 / (2 * q)) * x;
        return {X, Y};
    }

    template <class K>
    std::pair<K, K> from_long(const K& X, const K& Y) const
    {
        K x = Y / (K(2 * q) * (X + K(r2)) - K(r3 * r3 / (2 * q)));
        K y = (X - K(r3) * x) / K(2 * q) - K(q) * x * x;
        return {x, y};
    }

    template <class K>
    std::pair<K, K> long_to_short(const K& X, const K& Y) const
    {
        return {X + K(b2 / 12), Y + (K(a1) * X + K(a3)) / K(2)};
    }

    template <class K>
    std::pair<K, K> short_to_long(const K& X, const K& Y) const
    {
        K Xl = X - K(b2 / 12);
        return {Xl, Y - (K(a1) * Xl + K(a3)) / K(2)};
    }

    template <class K>
    std::pair<K, K> forward(const K& x, const K& y) const
    {
        auto [X, Y] = to_long(x, y);
        return long_to_short(X, Y);
    }

    template <class K>
    std::pair<K, K> backward(const K& X, const K& Y) const
    {
        auto [Xl, Yl] = short_to_long(X, Y);
        return from_long(Xl, Yl);
    }

    template <class K>
    bool on_short_curve(const K& X, const K& Y) const
    {
        return Y * Y == X * X * X + K(curve.a) * X + K(curve.b);
    }
};

/// Both points over x0 pushed through the model and back. Returns false on
/// any mismatch; points where the inverse is undefined are skipped.
inline bool round_trip_at(const QuarticModel& M, const BigRat& x0)
{
    const BigRat d = to_rat(M.R)(x0);
    auto check = [&](auto x, auto y) {
        using K = decltype(x);
        auto [X, Y] = M.forward(x, y);
        if (!M.on_short_curve(X, Y))
            return false;
        auto [Xl, Yl] = M.short_to_long(X, Y);
        if (K(2 * M.q) * (Xl + K(M.r2)) - K(M.r3 * M.r3 / (2 * M.q)) == K(0))
            return true;
        auto [xb, yb] = M.backward(X, Y);
        return xb == x && yb == y;
    };
    if (auto r = exact_sqrt(d)) {
        return check(x0, *r) && check(x0, BigRat(-*r));
    }
    QuadraticNumber x(x0), y(BigRat(0), BigRat(1), d);
    return check(x, y) && check(x, -y);
}

inline QuarticModel quartic_to_weierstrass(const IntPoly& R)
{
    require(R.degree() == 4, "radicand must be a quartic");
    require_pell_radicand(R);
    QuarticModel M;
    M.R = R;
    M.s = *exact_sqrt(BigRat(R.lead()));
    M.q = -M.s;
    M.r0 = R[0];
    M.r1 = R[1];
    M.r2 = R[2];
    M.r3 = R[3];
    const BigRat& q = M.q;
    M.a1 = M.r3 / q;
    M.a2 = M.r2 - M.r3 * M.r3 / (4 * q * q);
    M.a3 = 2 * q * M.r1;
    M.a4 = -4 * q * q * M.r0;
    M.a6 = M.a2 * M.a4;
    M.b2 = M.a1 * M.a1 + 4 * M.a2;
    M.b4 = 2 * M.a4 + M.a1 * M.a3;
    M.b6 = M.a3 * M.a3 + 4 * M.a6;
    const BigRat c4 = M.b2 * M.b2 - 24 * M.b4;
    const BigRat c6 = -M.b2 * M.b2 * M.b2 + 36 * M.b2 * M.b4 - 216 * M.b6;
    M.curve = WeierstrassCurve(-c4 / 48, -c6 / 864);
    auto [Tx, Ty] = M.long_to_short(BigRat(-M.a2), BigRat(M.a1 * M.a2 - M.a3));
    M.marked = CurvePoint{Tx, Ty, false};
    ensure(on_curve(M.curve, M.marked), "marked point is off the curve");
    for (long x0 : {0L, 1L, 2L, 3L, 5L})
        ensure(round_trip_at(M, BigRat(x0)), "quartic model round trip failed at x = " + std::to_string(x0));
    return M;
}

/// A quartic whose model carries the point P as its marked point (up to
/// sign): R(x) = x^4 - 6 X x^2 - 8 Y x - (3 X^2 + 4A), scaled to integer
/// coefficients by the square of a common denominator.
inline IntPoly quartic_from_point(const WeierstrassCurve& E, const CurvePoint& P)
{
    require(!P.infinity && on_curve(E, P), "point must be an affine point of the curve");
    RatPoly R(std::vector<BigRat>{-(3 * P.x * P.x + 4 * E.a), -8 * P.y, -6 * P.x, BigRat(0), BigRat(1)});
    BigInt d = common_denominator(R);
    return to_int(R * BigRat(d * d));
}

struct CommensurabilityResult {
    bool commensurable = false;
    QuarticModel model;
    TorsionReport torsion;
    std::optional<CFReport> cf;
};

/// Torsion of the marked point decides; a torsion verdict is confirmed by a
/// periodic continued fraction with a unit.
inline CommensurabilityResult is_commensurable(const IntPoly& R, bool expand_nontorsion = false)
{
    CommensurabilityResult res;
    res.model = quartic_to_weierstrass(R);
    res.torsion = torsion_order(res.model.curve, res.model.marked, 16);
    if (res.torsion.order) {
        res.commensurable = true;
        res.cf = cf_expand(R, std::max(64, 6 * *res.torsion.order));
        ensure(res.cf->periodic && res.cf->unit.has_value(), "torsion point without a periodic expansion");
        unit_from_period(*res.cf);
    } else if (expand_nontorsion) {
        res.cf = cf_expand(R, default_cf_cap);
        ensure(!res.cf->periodic, "non-torsion point with a periodic expansion");
    }
    return res;
}

} // namespace galois
