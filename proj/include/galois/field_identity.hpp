#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galois/poly.hpp"
#include "galois/splitting_algebra.hpp"

namespace galois {

/// y = alpha_0 + alpha_1 x + ... + alpha_{n-1} x^{n-1}.
struct TschirnhausMap {
    std::vector<BigRat> alpha;

    RatPoly as_poly() const { return RatPoly(alpha); }
};

/// True when g(map(x)) = 0 mod f, checked by exact substitution.
inline bool certifies(const RatPoly& f, const RatPoly& g, const TschirnhausMap& m)
{
    return (compose(g, m.as_poly()) % f).is_zero();
}

/// Power sums s_0 .. s_{count-1} of the roots of a monic polynomial.
inline std::vector<BigRat> power_sums(const RatPoly& f, std::size_t count)
{
    const int n = f.degree();
    require(n >= 1 && f.lead() == 1, "power sums need a monic nonconstant polynomial");
    std::vector<BigRat> s(count);
    auto c = [&](int i) { return f[static_cast<std::size_t>(i)]; }; // coefficient of x^i
    for (std::size_t k = 0; k < count; ++k) {
        if (k == 0) {
            s[0] = n;
            continue;
        }
        const int kk = static_cast<int>(k);
        BigRat acc = 0;
        for (int i = 1; i <= std::min(kk - 1, n); ++i)
            acc -= c(n - i) * s[k - static_cast<std::size_t>(i)];
        if (kk <= n)
            acc -= kk * c(n - kk);
        s[k] = acc;
    }
    return s;
}

/// Monic polynomial of degree N from the power sums P_1..P_N of its roots.
inline RatPoly from_power_sums(const std::vector<BigRat>& P)
{
    const std::size_t N = P.size();
    std::vector<BigRat> e(N + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= N; ++k) {
        BigRat acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            BigRat term = e[k - i] * P[i - 1];
            acc += (i % 2 == 1) ? term : BigRat(-term);
        }
        e[k] = acc / static_cast<long>(k);
    }
    std::vector<BigRat> c(N + 1);
    for (std::size_t k = 0; k <= N; ++k)
        c[N - k] = (k % 2 == 0) ? e[k] : BigRat(-e[k]);
    return RatPoly(std::move(c));
}

/// Solves A x = b over the rationals; nullopt when A is singular.
inline std::optional<std::vector<BigRat>> solve_linear(std::vector<std::vector<BigRat>> A, std::vector<BigRat> b)
{
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0)
                continue;
            const BigRat f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c)
                A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= A[i][i];
    return b;
}

/// Coefficients of the map with sum_i x_i^m y_{s(i)} = w_m for m < n, from
/// the Hankel system sum_j alpha_j s_{m+j} = w_m.
inline std::optional<TschirnhausMap> map_from_moments(const RatPoly& f, const std::vector<BigRat>& w)
{
    const auto n = static_cast<std::size_t>(f.degree());
    const auto s = power_sums(f, 2 * n - 1);
    std::vector<std::vector<BigRat>> H(n, std::vector<BigRat>(n));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < n; ++j)
            H[m][j] = s[m + j];
    auto a = solve_linear(std::move(H), w);
    if (!a)
        return std::nullopt;
    return TschirnhausMap{*a};
}

struct ScaledPoly {
    IntPoly F;   // F(X) = d^n f(X / d), monic with integer coefficients
    BigInt d;
};

inline ScaledPoly scale_to_integral(const RatPoly& f)
{
    require(f.lead() == 1, "scaling needs a monic polynomial");
    const BigInt d = common_denominator(f);
    const int n = f.degree();
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        BigRat v = f[static_cast<std::size_t>(i)] * BigRat(pow(d, static_cast<unsigned long>(n - i)));
        ensure(v.get_den() == 1, "scaling left a denominator");
        c[static_cast<std::size_t>(i)] = v.get_num();
    }
    return {IntPoly(std::move(c)), d};
}

/// Trace data for s = sum_i H(X_i) Y_i on A_F (x) A_G: its degree-n! mixed
/// equation and the moments Q[m][e] = sum over relative permutations of
/// (sum_i X_i^m Y_i) * s^e.
struct MixedTrace {
    RatPoly equation;
    std::vector<std::vector<BigRat>> moments;
};

inline MixedTrace mixed_trace(const SplittingAlgebra<BigInt>& A, const SplittingAlgebra<BigInt>& B, const IntPoly& H)
{
    using Alg = SplittingAlgebra<BigInt>;
    require(A.degree() == B.degree(), "mixed equation needs equal degrees");
    const int n = A.degree();
    const std::size_t dim = A.dim();
    const std::size_t N = dim;
    const BigInt nfact = static_cast<unsigned long>(dim);

    std::vector<Alg::Operator> left, right;
    std::vector<std::vector<std::vector<BigInt>>> lvec(static_cast<std::size_t>(n)); // [m][i] -> vector
    std::vector<std::vector<BigInt>> rvec;
    for (int i = 0; i < n; ++i) {
        left.push_back(A.multiplication_operator(A.eval_at_var(H, i)));
        const auto yi = B.var(i);
        right.push_back(B.multiplication_operator(yi));
        std::vector<BigInt> r(dim);
        for (std::size_t b = 0; b < dim; ++b) {
            auto basis = B.zero();
            basis[b] = 1;
            r[b] = B.trace(B.mul(yi, basis));
        }
        rvec.push_back(std::move(r));
    }
    for (int m = 0; m < n; ++m) {
        for (int i = 0; i < n; ++i) {
            const auto xm = A.pow(A.var(i), static_cast<unsigned>(m));
            std::vector<BigInt> l(dim);
            for (std::size_t a = 0; a < dim; ++a) {
                auto basis = A.zero();
                basis[a] = 1;
                l[a] = A.trace(A.mul(xm, basis));
            }
            lvec[static_cast<std::size_t>(m)].push_back(std::move(l));
        }
    }
    const auto& tf = A.trace_form();
    const auto& tg = B.trace_form();
    auto bilinear = [&](const std::vector<BigInt>& l, const std::vector<BigInt>& V, const std::vector<BigInt>& r) {
        BigInt acc = 0;
        for (std::size_t a = 0; a < dim; ++a) {
            if (l[a] == 0)
                continue;
            BigInt row = 0;
            for (std::size_t b = 0; b < dim; ++b)
                row += V[a * dim + b] * r[b];
            acc += l[a] * row;
        }
        return acc;
    };

    MixedTrace out;
    out.moments.assign(static_cast<std::size_t>(n), std::vector<BigRat>(N));
    std::vector<BigRat> P;
    std::vector<BigInt> V(dim * dim, BigInt(0));
    V[0] = 1;
    for (std::size_t e = 0; e <= N; ++e) {
        if (e > 0)
            P.push_back(BigRat(bilinear(tf, V, tg), nfact));
        if (e == N)
            break;
        for (int m = 0; m < n; ++m) {
            BigInt acc = 0;
            for (int i = 0; i < n; ++i)
                acc += bilinear(lvec[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)], V, rvec[static_cast<std::size_t>(i)]);
            out.moments[static_cast<std::size_t>(m)][e] = BigRat(acc, nfact);
            out.moments[static_cast<std::size_t>(m)][e].canonicalize();
        }
        std::vector<BigInt> W(dim * dim, BigInt(0));
        for (int i = 0; i < n; ++i) {
            std::vector<BigInt> T(dim * dim, BigInt(0));
            detail::apply_left<BigInt>(left[static_cast<std::size_t>(i)], V, T, dim);
            detail::apply_right<BigInt>(right[static_cast<std::size_t>(i)], T, W, dim, dim);
        }
        V = std::move(W);
    }
    for (auto& p : P)
        p.canonicalize();
    out.equation = from_power_sums(P);
    return out;
}

/// Values w_m = sum_i X_i^m Y_{s(i)} for the relative permutation s whose
/// mixed value is the simple root z; nullopt when z is a multiple root.
inline std::optional<std::vector<BigRat>> moments_at(const MixedTrace& t, const BigRat& z)
{
    const RatPoly& M = t.equation;
    const BigRat dM = derivative(M)(z);
    if (dM == 0)
        return std::nullopt;
    const int N = M.degree();
    std::vector<BigRat> zpow(static_cast<std::size_t>(N) + 1);
    zpow[0] = 1;
    for (int i = 1; i <= N; ++i)
        zpow[static_cast<std::size_t>(i)] = zpow[static_cast<std::size_t>(i - 1)] * z;
    std::vector<BigRat> w;
    for (const auto& Q : t.moments) {
        // G(z) = sum_l c_l sum_{i<l} z^i Q_{l-1-i}
        BigRat G = 0;
        for (int l = 1; l <= N; ++l) {
            const BigRat& c = M[static_cast<std::size_t>(l)];
            if (c == 0)
                continue;
            BigRat inner = 0;
            for (int i = 0; i < l; ++i)
                inner += zpow[static_cast<std::size_t>(i)] * Q[static_cast<std::size_t>(l - 1 - i)];
            G += c * inner;
        }
        w.push_back(G / dM);
    }
    return w;
}

namespace detail {

inline void check_identity_degrees(const RatPoly& f, const RatPoly& g)
{
    require(f.degree() == g.degree(), "degree mismatch: " + std::to_string(f.degree()) + " vs " + std::to_string(g.degree()));
    require(f.degree() == 3 || f.degree() == 4, "field identity supports degrees 3 and 4");
}

/// Rescales a mixed equation in X = d_f x, Y = d_g y back to x, y.
inline RatPoly unscale_equation(const RatPoly& M, const BigRat& lambda)
{
    const int N = M.degree();
    std::vector<BigRat> c(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j)
        c[static_cast<std::size_t>(j)] = M[static_cast<std::size_t>(j)] * pow(lambda, static_cast<unsigned long>(j))
                                         / pow(lambda, static_cast<unsigned long>(N));
    return RatPoly(std::move(c));
}

} // namespace detail

/// Degree-n! equation satisfied by the values sum_i x_i^k y_{s(i)}, s in S_n,
/// with multiplicity; computed as a characteristic polynomial on the tensor
/// of the two splitting algebras.
inline RatPoly mixed_equation(const RatPoly& f, const RatPoly& g, int k)
{
    detail::check_identity_degrees(f, g);
    require(k >= 1 && k < f.degree(), "k must lie in 1..n-1");
    const auto sf = scale_to_integral(monic(f));
    const auto sg = scale_to_integral(monic(g));
    SplittingAlgebra<BigInt> A(sf.F), B(sg.F);
    auto t = mixed_trace(A, B, IntPoly::monomial(BigInt(1), static_cast<std::size_t>(k)));
    const BigRat lambda(pow(sf.d, static_cast<unsigned long>(k)) * sg.d);
    RatPoly M = detail::unscale_equation(t.equation, lambda);
    ensure(M.degree() == static_cast<int>(A.dim()) && M.lead() == 1, "mixed equation is not monic of degree n!");
    return M;
}

/// Shift making the x^{n-1} coefficient vanish: returns (a, h) with
/// h(x) = f(x - a), a = c_{n-1} / n.
inline std::pair<BigRat, RatPoly> depress(const RatPoly& f)
{
    const RatPoly m = monic(f);
    const int n = m.degree();
    const BigRat a = m[static_cast<std::size_t>(n - 1)] / n;
    return {a, compose(m, RatPoly(std::vector<BigRat>{-a, 1}))};
}

struct CosetCubics {
    RatPoly plus;  // product of root differences equal to +sqrt(D Dbar)
    RatPoly minus; // ... equal to -sqrt(D Dbar)
    BigRat root;   // nonnegative sqrt(D Dbar)
};

/// The two cubics z^3 - 3 p pb z - (27 q qb + d)/2, d = +-sqrt(D Dbar), whose
/// roots are the values x_1 y_{s1} + x_2 y_{s2} + x_3 y_{s3} on the two
/// cosets of A_3. nullopt when D Dbar is not a rational square.
inline std::optional<CosetCubics> cubic_mixed_resolvent(const BigRat& p, const BigRat& q, const BigRat& pb, const BigRat& qb)
{
    const BigRat D = -4 * p * p * p - 27 * q * q;
    const BigRat Db = -4 * pb * pb * pb - 27 * qb * qb;
    auto r = exact_sqrt(BigRat(D * Db));
    if (!r)
        return std::nullopt;
    auto cubic = [&](const BigRat& d) {
        return RatPoly(std::vector<BigRat>{BigRat(-(27 * q * qb + d) / 2), BigRat(-3 * p * pb), BigRat(0), BigRat(1)});
    };
    return CosetCubics{cubic(*r), cubic(-*r), *r};
}

/// Cubic satisfied by x_1 x_2 + x_3 x_4 for x^4 + p2 x^2 + p3 x + p4.
inline RatPoly quartic_resolvent_cubic(const BigRat& p2, const BigRat& p3, const BigRat& p4)
{
    return RatPoly(std::vector<BigRat>{BigRat(4 * p2 * p4 - p3 * p3), BigRat(-4 * p4), BigRat(-p2), BigRat(1)});
}

/// Quartic F(T) whose roots are the four values sum_i x_i xb_{s(i)} over the
/// pairings compatible with a fixed matching of the resolvent roots.
inline RatPoly quartic_t_resolvent(const BigRat& p2, const BigRat& p3, const BigRat& p4, const BigRat& pb2,
                                   const BigRat& pb3, const BigRat& pb4, const BigRat& zeta, const BigRat& u,
                                   const BigRat& ub)
{
    const BigRat third(1, 3);
    BigRat c0 = -third * zeta * zeta - BigRat(8, 3) * p2 * ub - BigRat(8, 3) * pb2 * u
                + BigRat(14, 3) * p2 * pb2 * zeta + p2 * p2 * pb2 * pb2 + 16 * p2 * p2 * pb4
                + 16 * pb2 * pb2 * p4 + BigRat(64, 3) * p4 * pb4;
    return RatPoly(std::vector<BigRat>{c0, BigRat(-8 * p3 * pb3), BigRat(-(2 * p2 * pb2 + 2 * zeta)), BigRat(0), BigRat(1)});
}

/// Irreducibility over Q for degrees 1..4: no rational root, and for
/// quartics no factorization into two rational quadratics.
inline bool irreducible_over_q(const RatPoly& f)
{
    const int n = f.degree();
    require(n >= 1 && n <= 4, "irreducible_over_q supports degrees 1..4");
    if (n == 1)
        return true;
    if (!rational_roots(f).empty())
        return false;
    if (n <= 3)
        return true;
    // x^4 + p x^2 + q x + r = (x^2 + a x + b)(x^2 - a x + c) needs
    // u = a^2 to be a root of u^3 + 2p u^2 + (p^2 - 4r) u - q^2.
    const auto [shift, h] = depress(f);
    const BigRat p = h[2], q = h[1], r = h[0];
    RatPoly cubic(std::vector<BigRat>{BigRat(-q * q), BigRat(p * p - 4 * r), BigRat(2 * p), BigRat(1)});
    for (const auto& u : rational_roots(cubic)) {
        if (u == 0) {
            if (q == 0 && exact_sqrt(BigRat(p * p - 4 * r)))
                return false;
            continue;
        }
        auto a = exact_sqrt(u);
        if (!a)
            continue;
        const BigRat b = (p + u - q / *a) / 2;
        const BigRat c = (p + u + q / *a) / 2;
        if (b * c == r)
            return false;
    }
    return true;
}

/// Symmetric-function data of the identification, in depressed
/// coordinates, evaluated along a certified map.
struct MixedResolventSet {
    int degree = 0;
    std::map<std::string, BigRat> values; // cubic: p q pb qb z u; quartic: p2.. zeta u ubar T theta Z
    std::vector<std::string> checks;      // identities verified exactly
};

inline MixedResolventSet mixed_resolvents(const RatPoly& f, const RatPoly& g, const TschirnhausMap& map)
{
    detail::check_identity_degrees(f, g);
    require(certifies(monic(f), monic(g), map), "mixed_resolvents needs a certified map");
    const int n = f.degree();
    const auto [af, F] = depress(f);
    const auto [ag, G] = depress(g);
    // eta = y + ag with y = map(x), x = xi - af.
    const RatPoly shift_back(std::vector<BigRat>{-af, 1});
    const RatPoly eta = compose(map.as_poly(), shift_back) + RatPoly::constant(ag);
    const RatPoly A = eta % F;
    ensure((compose(G, A) % F).is_zero(), "depressed map does not certify");

    const auto s = power_sums(F, 2 * static_cast<std::size_t>(n) + 2);
    // Tr(xi^m eta(xi)) from the power sums of F.
    auto moment = [&](int m) {
        BigRat acc = 0;
        for (int j = 0; j <= A.degree(); ++j)
            acc += A[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(m + j)];
        return acc;
    };

    MixedResolventSet out;
    out.degree = n;
    auto& v = out.values;
    if (n == 3) {
        const BigRat p = F[1], q = F[0], pb = G[1], qb = G[0];
        v["p"] = p;
        v["q"] = q;
        v["pb"] = pb;
        v["qb"] = qb;
        const BigRat z = moment(1), u = moment(2);
        v["z"] = z;
        v["u"] = u;
        auto cubics = cubic_mixed_resolvent(p, q, pb, qb);
        ensure(cubics.has_value(), "identical cubic fields with non-square D Dbar");
        ensure(cubics->plus(z) == 0 || cubics->minus(z) == 0, "z is not a root of the coset cubics");
        out.checks.push_back("coset cubic vanishes at z");
        if (z * z != p * pb) {
            ensure(u == 3 * (q * pb * z - p * p * qb) / (z * z - p * pb), "u formula disagrees");
            out.checks.push_back("u = 3(q pb z - p^2 qb)/(z^2 - p pb)");
        }
        return out;
    }

    const BigRat p2 = F[2], p3 = F[1], p4 = F[0], pb2 = G[2], pb3 = G[1], pb4 = G[0];
    v["p2"] = p2;
    v["p3"] = p3;
    v["p4"] = p4;
    v["pb2"] = pb2;
    v["pb3"] = pb3;
    v["pb4"] = pb4;
    SplittingAlgebra<BigRat> alg(F);
    std::vector<SplittingAlgebra<BigRat>::Element> x, y;
    for (int i = 0; i < 4; ++i) {
        x.push_back(alg.var(i));
        y.push_back(alg.eval_at_var(A, i));
    }
    const int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    std::vector<SplittingAlgebra<BigRat>::Element> z, zb;
    for (const auto& pr : pairing) {
        z.push_back(alg.add(alg.mul(x[pr[0]], x[pr[1]]), alg.mul(x[pr[2]], x[pr[3]])));
        zb.push_back(alg.add(alg.mul(y[pr[0]], y[pr[1]]), alg.mul(y[pr[2]], y[pr[3]])));
    }
    auto constant_of = [&](const SplittingAlgebra<BigRat>::Element& e, const char* name) {
        ensure(alg.is_constant(e), std::string(name) + " is not rational");
        return e[0];
    };
    auto rc = quartic_resolvent_cubic(p2, p3, p4);
    auto rcb = quartic_resolvent_cubic(pb2, pb3, pb4);
    auto on_alg = [&](const RatPoly& h, const SplittingAlgebra<BigRat>::Element& e) {
        auto r = alg.zero();
        for (int k = h.degree(); k >= 0; --k) {
            r = alg.mul(r, e);
            r[0] += h[static_cast<std::size_t>(k)];
        }
        return r;
    };
    for (int j = 0; j < 3; ++j) {
        ensure(alg.is_constant(on_alg(rc, z[static_cast<std::size_t>(j)])) && on_alg(rc, z[static_cast<std::size_t>(j)])[0] == 0,
               "resolvent cubic does not annihilate z");
        auto rz = on_alg(rcb, zb[static_cast<std::size_t>(j)]);
        ensure(alg.is_constant(rz) && rz[0] == 0, "resolvent cubic does not annihilate zbar");
    }
    out.checks.push_back("resolvent cubics annihilate z_i and zbar_i");
    auto zeta = alg.zero(), u = alg.zero(), ub = alg.zero();
    for (std::size_t j = 0; j < 3; ++j) {
        zeta = alg.add(zeta, alg.mul(z[j], zb[j]));
        u = alg.add(u, alg.mul(alg.mul(z[j], z[j]), zb[j]));
        ub = alg.add(ub, alg.mul(alg.mul(z[j], zb[j]), zb[j]));
    }
    v["zeta"] = constant_of(zeta, "zeta");
    v["u"] = constant_of(u, "u");
    v["ubar"] = constant_of(ub, "ubar");
    v["T"] = moment(1);
    v["theta"] = moment(2);
    v["Z"] = moment(3);
    RatPoly FT = quartic_t_resolvent(p2, p3, p4, pb2, pb3, pb4, v["zeta"], v["u"], v["ubar"]);
    ensure(FT(v["T"]) == 0, "F(T) does not vanish at T");
    out.checks.push_back("F(T) = 0");
    // Row m of the 4x4 system: sum_j alpha_j s_{m+j} = (0, T, theta, Z)_m.
    const BigRat rhs[4] = {0, v["T"], v["theta"], v["Z"]};
    for (int m = 0; m < 4; ++m) {
        BigRat lhs = 0;
        for (int j = 0; j <= A.degree(); ++j)
            lhs += A[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(m + j)];
        ensure(lhs == rhs[m], "4x4 map system fails");
    }
    out.checks.push_back("4x4 map system");
    return out;
}

struct CandidateOutcome {
    int k = 0;         // power of x in the mixed element; 0 for shifted runs
    BigInt shift = 0;  // c of the shifted element (x + c)^{n-1}, else 0
    BigRat z;          // root of the mixed equation in the original coordinates
    std::string outcome; // certified | degenerate | rejected
};

struct SameFieldResult {
    bool identical = false;
    TschirnhausMap map;
    std::string route; // cubic-u-formula | moments
    int k = 0;
    BigInt shift = 0;
    BigRat z;
    std::optional<BigRat> u;
    std::vector<CandidateOutcome> candidates;
    std::optional<MixedResolventSet> resolvents;
};

/// Decides whether the fields generated by roots of f and g coincide; on
/// success returns a map y = map(x) with g(map(x)) = 0 mod f.
inline SameFieldResult same_field(const RatPoly& f_in, const RatPoly& g_in)
{
    detail::check_identity_degrees(f_in, g_in);
    const RatPoly f = monic(f_in);
    const RatPoly g = monic(g_in);
    require(irreducible_over_q(f), "first polynomial is reducible over Q");
    require(irreducible_over_q(g), "second polynomial is reducible over Q");
    const int n = f.degree();
    const auto sf = scale_to_integral(f);
    const auto sg = scale_to_integral(g);
    SplittingAlgebra<BigInt> A(sf.F), B(sg.F);
    const RatPoly Fr = to_rat(sf.F);

    // Map Y = sum beta_j X^j in scaled coordinates to y = sum alpha_j x^j.
    auto unscale_map = [&](const TschirnhausMap& beta) {
        TschirnhausMap m;
        for (std::size_t j = 0; j < beta.alpha.size(); ++j)
            m.alpha.push_back(beta.alpha[j] * BigRat(pow(sf.d, static_cast<unsigned long>(j))) / BigRat(sg.d));
        while (m.alpha.size() < static_cast<std::size_t>(n))
            m.alpha.emplace_back(0);
        return m;
    };

    SameFieldResult res;
    bool degenerate_seen = false;
    auto try_element = [&](const IntPoly& H, int k, const BigInt& shift, const BigRat& lambda) -> bool {
        const MixedTrace t = mixed_trace(A, B, H);
        for (const auto& Z : rational_roots(t.equation)) {
            CandidateOutcome c{k, shift, Z / lambda, ""};
            auto w = moments_at(t, Z);
            if (!w) {
                c.outcome = "degenerate";
                degenerate_seen = true;
                res.candidates.push_back(c);
                continue;
            }
            std::optional<TschirnhausMap> m;
            std::string route = "moments";
            std::optional<BigRat> u;
            if (n == 3 && k == 1) {
                const auto [af, Fd] = depress(f);
                const auto [ag, Gd] = depress(g);
                const BigRat p = Fd[1], q = Fd[0], pb = Gd[1], qb = Gd[0];
                const BigRat zd = c.z - 3 * af * ag;
                if (zd * zd != p * pb) {
                    const BigRat uu = 3 * (q * pb * zd - p * p * qb) / (zd * zd - p * pb);
                    auto alpha = solve_linear({{3, 0, -2 * p}, {0, -2 * p, -3 * q}, {-2 * p, -3 * q, 2 * p * p}}, {0, zd, uu});
                    if (alpha) {
                        // eta = a0 + a1 xi + a2 xi^2, xi = x + af, y = eta - ag.
                        RatPoly eta((*alpha));
                        RatPoly y = compose(eta, RatPoly(std::vector<BigRat>{af, 1})) - RatPoly::constant(ag);
                        TschirnhausMap mm{y.coeffs()};
                        mm.alpha.resize(3, BigRat(0));
                        m = mm;
                        route = "cubic-u-formula";
                        u = uu;
                    }
                }
            }
            if (!m) {
                auto beta = map_from_moments(Fr, *w);
                if (beta)
                    m = unscale_map(*beta);
            }
            if (m && certifies(f, g, *m)) {
                c.outcome = "certified";
                res.candidates.push_back(c);
                res.identical = true;
                res.map = *m;
                res.route = route;
                res.k = k;
                res.shift = shift;
                res.z = c.z;
                res.u = u;
                return true;
            }
            ensure(!m || route != "cubic-u-formula", "u-formula map failed to certify at a simple root");
            c.outcome = "rejected";
            res.candidates.push_back(c);
        }
        return false;
    };

    bool found = false;
    for (int k = 1; k < n && !found; ++k) {
        const BigRat lambda(pow(sf.d, static_cast<unsigned long>(k)) * sg.d);
        found = try_element(IntPoly::monomial(BigInt(1), static_cast<std::size_t>(k)), k, 0, lambda);
    }
    // Multiple roots hide the relative permutation; separate them with
    // shifted elements sum (X_i + c)^{n-1} Y_i.
    for (long c = 1; c <= 8 && !found && degenerate_seen; ++c) {
        degenerate_seen = false;
        const IntPoly H = pow(IntPoly({BigInt(c), BigInt(1)}), static_cast<unsigned>(n - 1));
        found = try_element(H, 0, c, BigRat(1));
        if (!degenerate_seen)
            break;
    }
    if (!found && degenerate_seen)
        throw undecided_error("every rational candidate stayed a multiple root after shifting");
    if (found)
        res.resolvents = mixed_resolvents(f, g, res.map);
    return res;
}

} // namespace galois
