#pragma once

#include <complex>
#include <random>
#include <vector>

#include "galois/field_identity.hpp"
#include "galois/frobenius.hpp"
#include "support/oracles.hpp"

namespace oracle {

/// Product of (z - sum_i x_i^k y_{s(i)}) over all permutations s, evaluated
/// from numerical roots.
inline std::vector<std::complex<long double>> numeric_mixed_equation(const RatPoly& f, const RatPoly& g, int k)
{
    using C = std::complex<long double>;
    auto xs = complex_roots(f);
    auto ys = complex_roots(g);
    std::vector<std::size_t> perm(ys.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<C> poly{C(1)};
    do {
        C v = 0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            v += std::pow(xs[i], k) * ys[perm[i]];
        std::vector<C> next(poly.size() + 1, C(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= v * poly[i];
        }
        poly = std::move(next);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return poly;
}

/// Characteristic polynomial of multiplication by a(x) on Q[x]/f, by the
/// Faddeev-LeVerrier recursion.
inline RatPoly charpoly_of_element(const RatPoly& f, const RatPoly& a)
{
    const int n = f.degree();
    std::vector<std::vector<BigRat>> M(n, std::vector<BigRat>(n, BigRat(0)));
    for (int j = 0; j < n; ++j) {
        RatPoly col = (a * RatPoly::monomial(BigRat(1), static_cast<std::size_t>(j))) % f;
        for (int i = 0; i < n; ++i)
            M[i][j] = col[static_cast<std::size_t>(i)];
    }
    auto matmul = [&](const std::vector<std::vector<BigRat>>& X, const std::vector<std::vector<BigRat>>& Y) {
        std::vector<std::vector<BigRat>> Z(n, std::vector<BigRat>(n, BigRat(0)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    Z[i][j] += X[i][k] * Y[k][j];
        return Z;
    };
    std::vector<BigRat> c(n + 1);
    c[n] = 1;
    std::vector<std::vector<BigRat>> Mk(n, std::vector<BigRat>(n, BigRat(0)));
    for (int k = 1; k <= n; ++k) {
        auto AM = matmul(M, Mk);
        for (int i = 0; i < n; ++i)
            AM[i][i] += c[n - k + 1];
        Mk = AM;
        auto MM = matmul(M, Mk);
        BigRat tr = 0;
        for (int i = 0; i < n; ++i)
            tr += MM[i][i];
        c[n - k] = -tr / k;
    }
    return RatPoly(std::move(c));
}

/// Random monic polynomial of degree n, irreducible over Q by a mod-p
/// irreducibility witness.
inline RatPoly random_irreducible_over_q(std::mt19937_64& rng, int n, long range)
{
    for (;;) {
        std::vector<BigRat> c(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i < n; ++i)
            c[static_cast<std::size_t>(i)] = static_cast<long>(rng() % (2 * range + 1)) - range;
        c[static_cast<std::size_t>(n)] = 1;
        RatPoly f(c);
        IntPoly fi = galois::to_int(f);
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
            if (galois::discriminant(fi) % static_cast<unsigned long>(p) == 0)
                continue;
            if (galois::is_irreducible(galois::ModPoly::from_int(fi, galois::PrimeModulus(p))))
                return f;
        }
    }
}

/// Random invertible Tschirnhaus image of a root of f: returns (a, g) with g
/// the minimal polynomial of a(x).
inline std::pair<RatPoly, RatPoly> random_image(std::mt19937_64& rng, const RatPoly& f, long range)
{
    const int n = f.degree();
    for (;;) {
        std::vector<BigRat> c(static_cast<std::size_t>(n));
        for (auto& v : c) {
            v = BigRat(static_cast<long>(rng() % (2 * range + 1)) - range, static_cast<long>(rng() % 2) + 1);
            v.canonicalize();
        }
        RatPoly a(c);
        if (a.degree() < 1)
            continue;
        RatPoly g = charpoly_of_element(f, a);
        if (galois::discriminant(g) != 0)
            return {a, g};
    }
}

} // namespace oracle
