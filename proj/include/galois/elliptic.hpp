#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galois/bigint.hpp"
#include "galois/poly.hpp"

namespace galois {

/// y^2 = x^3 + a x + b over Q.
struct WeierstrassCurve {
    BigRat a;
    BigRat b;

    WeierstrassCurve(BigRat a_, BigRat b_) : a(std::move(a_)), b(std::move(b_))
    {
        require(4 * a * a * a + 27 * b * b != 0, "singular curve: 4a^3 + 27b^2 = 0");
    }

    BigRat discriminant() const { return -16 * (4 * a * a * a + 27 * b * b); }

    /// x^3 + a x + b.
    RatPoly cubic() const { return RatPoly(std::vector<BigRat>{b, a, BigRat(0), BigRat(1)}); }
};

struct CurvePoint {
    BigRat x;
    BigRat y;
    bool infinity = false;

    static CurvePoint at_infinity() { return CurvePoint{BigRat(0), BigRat(0), true}; }

    friend bool operator==(const CurvePoint& p, const CurvePoint& q)
    {
        if (p.infinity || q.infinity)
            return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
    friend bool operator!=(const CurvePoint& p, const CurvePoint& q) { return !(p == q); }
};

inline bool on_curve(const WeierstrassCurve& E, const CurvePoint& P)
{
    return P.infinity || P.y * P.y == P.x * P.x * P.x + E.a * P.x + E.b;
}

inline CurvePoint negate(const CurvePoint& P)
{
    if (P.infinity)
        return P;
    return CurvePoint{P.x, -P.y, false};
}

inline CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q)
{
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;
    BigRat m;
    if (P.x == Q.x) {
        if (P.y != Q.y || P.y == 0)
            return CurvePoint::at_infinity();
        m = (3 * P.x * P.x + E.a) / (2 * P.y);
    } else {
        m = (Q.y - P.y) / (Q.x - P.x);
    }
    BigRat x3 = m * m - P.x - Q.x;
    BigRat y3 = m * (P.x - x3) - P.y;
    return CurvePoint{x3, y3, false};
}

/// n P by double-and-add; negative n negates.
inline CurvePoint multiply(const WeierstrassCurve& E, CurvePoint P, long n)
{
    if (n < 0) {
        P = negate(P);
        n = -n;
    }
    CurvePoint R = CurvePoint::at_infinity();
    while (n) {
        if (n & 1)
            R = add(E, R, P);
        n >>= 1;
        if (n)
            P = add(E, P, P);
    }
    return R;
}

/// Logarithmic height of a rational: max bit length of numerator and denominator.
inline std::size_t height_bits(const BigRat& v)
{
    return std::max(mpz_sizeinbase(v.get_num_mpz_t(), 2), mpz_sizeinbase(v.get_den_mpz_t(), 2));
}

/// psi_n written as f_n(x) for odd n and y f_n(x) for even n.
struct DivisionPolynomial {
    int n = 0;
    RatPoly f;
    bool times_y = false;

    BigRat at(const CurvePoint& P) const
    {
        BigRat v = f(P.x);
        return times_y ? BigRat(v * P.y) : v;
    }
};

/// Division polynomials psi_0 .. psi_n by the standard recursion.
inline std::vector<DivisionPolynomial> division_polynomials(const WeierstrassCurve& E, int n)
{
    require(n >= 1, "division polynomial index must be at least 1");
    const BigRat& a = E.a;
    const BigRat& b = E.b;
    const RatPoly F = E.cubic();
    const RatPoly F2 = F * F;
    std::vector<RatPoly> f(static_cast<std::size_t>(std::max(n, 4)) + 1);
    f[0] = RatPoly();
    f[1] = RatPoly::constant(BigRat(1));
    f[2] = RatPoly::constant(BigRat(2));
    f[3] = RatPoly(std::vector<BigRat>{-a * a, 12 * b, 6 * a, BigRat(0), BigRat(3)});
    f[4] = RatPoly(std::vector<BigRat>{-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, BigRat(0),
                                       BigRat(1)})
           * BigRat(4);
    for (int k = 5; k <= n; ++k) {
        const int m = k / 2;
        auto at = [&](int i) -> const RatPoly& { return f[static_cast<std::size_t>(i)]; };
        if (k % 2 == 1) {
            RatPoly t1 = at(m + 2) * pow(at(m), 3);
            RatPoly t2 = at(m - 1) * pow(at(m + 1), 3);
            f[static_cast<std::size_t>(k)] = (m % 2 == 0) ? t1 * F2 - t2 : t1 - t2 * F2;
        } else {
            RatPoly inner = at(m + 2) * at(m - 1) * at(m - 1) - at(m - 2) * at(m + 1) * at(m + 1);
            f[static_cast<std::size_t>(k)] = at(m) * inner * BigRat(1, 2);
        }
    }
    std::vector<DivisionPolynomial> out;
    for (int k = 0; k <= n; ++k)
        out.push_back(DivisionPolynomial{k, f[static_cast<std::size_t>(k)], k % 2 == 0});
    return out;
}

inline DivisionPolynomial division_polynomial(const WeierstrassCurve& E, int n)
{
    return division_polynomials(E, n).back();
}

/// Repeated-addition order of a point, cross-checked against psi_m.
struct TorsionReport {
    std::optional<int> order;
    int cap = 16;
    /// Heights (bits of x) of P, 2P, ..., up to the order or the cap.
    std::vector<std::size_t> heights;
};

/// Order of P if it is at most cap. Over Q no rational torsion point has
/// order above 12, so a cap of at least 12 makes a negative answer final.
inline TorsionReport torsion_order(const WeierstrassCurve& E, const CurvePoint& P, int cap = 16)
{
    require(cap >= 1, "torsion cap must be positive");
    require(on_curve(E, P), "point is not on the curve");
    TorsionReport rep;
    rep.cap = cap;
    CurvePoint Q = P;
    for (int k = 1; k <= cap; ++k) {
        if (Q.infinity) {
            rep.order = k;
            break;
        }
        rep.heights.push_back(height_bits(Q.x));
        Q = add(E, Q, P);
    }
    if (P.infinity)
        return rep;
    const int top = rep.order ? *rep.order : cap;
    auto psi = division_polynomials(E, top);
    for (int k = 1; k <= top; ++k) {
        const bool vanishes = psi[static_cast<std::size_t>(k)].at(P) == 0;
        const bool killed = multiply(E, P, k).infinity;
        ensure(vanishes == killed, "division polynomial disagrees with the group law at n = " + std::to_string(k));
    }
    return rep;
}

} // namespace galois
