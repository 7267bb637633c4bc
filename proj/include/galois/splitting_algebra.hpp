#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "galois/poly.hpp"

namespace galois {

/// Universal splitting algebra of a monic polynomial f of degree n: the
/// quotient of T[x_1..x_n] by the Cauchy modules f_1 = f(x_1),
/// f_{i+1} = (f_i(.., x_i) - f_i(.., x_{i+1})) / (x_i - x_{i+1}).
///
/// Elements are coordinate vectors over the monomials x_1^{e_1}..x_n^{e_n}
/// with e_i <= n - i, so the dimension is n!. The Cauchy modules are a
/// Groebner basis for the lex order x_n > .. > x_1 (their leading terms
/// x_i^{n-i+1} are pairwise coprime), which makes reduction confluent.
template <class T>
class SplittingAlgebra {
public:
    using Element = std::vector<T>;
    using Exponents = std::vector<int>;

    /// Column-compressed multiplication operator: entries (row, col, value).
    struct Operator {
        std::vector<std::tuple<std::size_t, std::size_t, T>> entries;
    };

    explicit SplittingAlgebra(const Poly<T>& f) : f_(f), n_(f.degree())
    {
        require(n_ >= 1 && n_ <= 5, "splitting algebra supports degrees 1..5");
        require(f.lead() == 1, "splitting algebra needs a monic polynomial");
        dim_ = 1;
        for (int i = 2; i <= n_; ++i)
            dim_ *= static_cast<std::size_t>(i);
        build_rules();
        table_.resize(dim_ * dim_);
        for (std::size_t a = 0; a < dim_; ++a) {
            for (std::size_t b = a; b < dim_; ++b) {
                Exponents e = exponents(a);
                Exponents eb = exponents(b);
                for (int i = 0; i < n_; ++i)
                    e[static_cast<std::size_t>(i)] += eb[static_cast<std::size_t>(i)];
                table_[a * dim_ + b] = normal_form(e);
                table_[b * dim_ + a] = table_[a * dim_ + b];
            }
        }
        trace_.assign(dim_, T(0));
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t a = 0; a < dim_; ++a)
                trace_[b] += table_[b * dim_ + a][a];
    }

    const Poly<T>& polynomial() const { return f_; }
    int degree() const { return n_; }
    std::size_t dim() const { return dim_; }

    Exponents exponents(std::size_t index) const
    {
        Exponents e(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            const auto radix = static_cast<std::size_t>(n_ - i);
            e[static_cast<std::size_t>(i)] = static_cast<int>(index % radix);
            index /= radix;
        }
        return e;
    }

    std::size_t index(const Exponents& e) const
    {
        std::size_t idx = 0;
        for (int i = n_ - 1; i >= 0; --i)
            idx = idx * static_cast<std::size_t>(n_ - i) + static_cast<std::size_t>(e[static_cast<std::size_t>(i)]);
        return idx;
    }

    Element zero() const { return Element(dim_, T(0)); }

    Element constant(const T& c) const
    {
        Element e = zero();
        e[0] = c;
        return e;
    }

    Element one() const { return constant(T(1)); }

    /// The root x_i, 0-based.
    Element var(int i) const
    {
        require(i >= 0 && i < n_, "variable index out of range");
        Exponents e(static_cast<std::size_t>(n_), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return normal_form(e);
    }

    Element monomial(const Exponents& e) const { return normal_form(e); }

    Element add(const Element& a, const Element& b) const
    {
        Element r = a;
        for (std::size_t i = 0; i < dim_; ++i)
            r[i] += b[i];
        return r;
    }

    Element sub(const Element& a, const Element& b) const
    {
        Element r = a;
        for (std::size_t i = 0; i < dim_; ++i)
            r[i] -= b[i];
        return r;
    }

    Element scale(const Element& a, const T& s) const
    {
        Element r = a;
        for (auto& v : r)
            v *= s;
        return r;
    }

    Element mul(const Element& a, const Element& b) const
    {
        require(a.size() == dim_ && b.size() == dim_, "element does not belong to this algebra");
        Element r = zero();
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j] == 0)
                    continue;
                const T c = a[i] * b[j];
                const Element& t = table_[i * dim_ + j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (t[k] != 0)
                        r[k] += c * t[k];
            }
        }
        return r;
    }

    Element pow(Element a, unsigned e) const
    {
        Element r = one();
        while (e) {
            if (e & 1U)
                r = mul(r, a);
            e >>= 1U;
            if (e)
                a = mul(a, a);
        }
        return r;
    }

    /// h(x_i) for a univariate polynomial h.
    Element eval_at_var(const Poly<T>& h, int i) const
    {
        Element r = zero();
        const Element x = var(i);
        for (int k = h.degree(); k >= 0; --k) {
            r = mul(r, x);
            r[0] += h[static_cast<std::size_t>(k)];
        }
        return r;
    }

    /// Trace of multiplication by a.
    T trace(const Element& a) const
    {
        T t(0);
        for (std::size_t i = 0; i < dim_; ++i)
            t += a[i] * trace_[i];
        return t;
    }

    const std::vector<T>& trace_form() const { return trace_; }

    bool is_constant(const Element& a) const
    {
        for (std::size_t i = 1; i < dim_; ++i)
            if (a[i] != 0)
                return false;
        return true;
    }

    Operator multiplication_operator(const Element& u) const
    {
        Operator op;
        for (std::size_t col = 0; col < dim_; ++col) {
            Element basis = zero();
            basis[col] = T(1);
            Element img = mul(u, basis);
            for (std::size_t row = 0; row < dim_; ++row)
                if (img[row] != 0)
                    op.entries.emplace_back(row, col, img[row]);
        }
        return op;
    }

private:
    void build_rules()
    {
        const auto n = static_cast<std::size_t>(n_);
        rules_.resize(n);
        for (int i = 0; i < n_; ++i) {
            // f_{i+1} = sum_k c_k h_{k-i}(x_0..x_i); the rule rewrites its
            // leading term x_i^{n-i} as minus the remaining terms.
            auto& rule = rules_[static_cast<std::size_t>(i)];
            for (int k = i; k <= n_; ++k) {
                const T& c = f_[static_cast<std::size_t>(k)];
                if (c == 0)
                    continue;
                for (Exponents e : complete_homogeneous(k - i, i + 1)) {
                    e.resize(n, 0);
                    if (k == n_ && e[static_cast<std::size_t>(i)] == n_ - i)
                        continue;
                    rule.emplace_back(T(-c), e);
                }
            }
        }
    }

    /// Exponent vectors of all monomials of degree d in the first `vars`
    /// variables.
    static std::vector<Exponents> complete_homogeneous(int d, int vars)
    {
        std::vector<Exponents> out;
        Exponents cur(static_cast<std::size_t>(vars), 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == vars - 1) {
                cur[static_cast<std::size_t>(pos)] = left;
                out.push_back(cur);
                return;
            }
            for (int a = left; a >= 0; --a) {
                cur[static_cast<std::size_t>(pos)] = a;
                self(self, pos + 1, left - a);
            }
        };
        rec(rec, 0, d);
        return out;
    }

    Element normal_form(const Exponents& e) const
    {
        int top = -1;
        for (int i = n_ - 1; i >= 0; --i)
            if (e[static_cast<std::size_t>(i)] > n_ - 1 - i) {
                top = i;
                break;
            }
        if (top < 0) {
            Element r = zero();
            r[index(e)] = T(1);
            return r;
        }
        auto it = memo_.find(e);
        if (it != memo_.end())
            return it->second;
        Exponents rest = e;
        rest[static_cast<std::size_t>(top)] -= n_ - top;
        Element r = zero();
        for (const auto& [c, t] : rules_[static_cast<std::size_t>(top)]) {
            Exponents m = rest;
            for (int i = 0; i < n_; ++i)
                m[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i)];
            const Element sub = normal_form(m);
            for (std::size_t k = 0; k < dim_; ++k)
                if (sub[k] != 0)
                    r[k] += c * sub[k];
        }
        memo_.emplace(e, r);
        return r;
    }

    Poly<T> f_;
    int n_;
    std::size_t dim_ = 1;
    std::vector<std::vector<std::pair<T, Exponents>>> rules_;
    std::vector<Element> table_;
    std::vector<T> trace_;
    mutable std::map<Exponents, Element> memo_;
};

/// Element of A_f (x) A_g as a dim_f x dim_g coordinate matrix, row-major.
template <class T>
struct SplitTensor {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> c;

    T& at(std::size_t a, std::size_t b) { return c[a * cols + b]; }
    const T& at(std::size_t a, std::size_t b) const { return c[a * cols + b]; }
    friend bool operator==(const SplitTensor&, const SplitTensor&) = default;
};

template <class T>
SplitTensor<T> tensor_of(const SplittingAlgebra<T>& A, const SplittingAlgebra<T>& B,
                         const typename SplittingAlgebra<T>::Element& a, const typename SplittingAlgebra<T>::Element& b)
{
    SplitTensor<T> t{A.dim(), B.dim(), std::vector<T>(A.dim() * B.dim(), T(0))};
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < B.dim(); ++j)
            t.at(i, j) = a[i] * b[j];
    return t;
}

/// Generic product in the tensor algebra (quartic cost is dim^4; meant for
/// checking the structured routines).
template <class T>
SplitTensor<T> tensor_mul(const SplittingAlgebra<T>& A, const SplittingAlgebra<T>& B, const SplitTensor<T>& x, const SplitTensor<T>& y)
{
    require(x.rows == A.dim() && x.cols == B.dim() && y.rows == A.dim() && y.cols == B.dim(),
            "tensor factors do not match the algebras");
    SplitTensor<T> r{A.dim(), B.dim(), std::vector<T>(A.dim() * B.dim(), T(0))};
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t k = 0; k < A.dim(); ++k) {
            typename SplittingAlgebra<T>::Element ea = A.zero(), eb = A.zero();
            ea[i] = 1;
            eb[k] = 1;
            const auto left = A.mul(ea, eb);
            for (std::size_t j = 0; j < B.dim(); ++j) {
                if (x.at(i, j) == 0)
                    continue;
                for (std::size_t l = 0; l < B.dim(); ++l) {
                    if (y.at(k, l) == 0)
                        continue;
                    typename SplittingAlgebra<T>::Element fa = B.zero(), fb = B.zero();
                    fa[j] = 1;
                    fb[l] = 1;
                    const auto right = B.mul(fa, fb);
                    const T c = x.at(i, j) * y.at(k, l);
                    for (std::size_t p = 0; p < A.dim(); ++p)
                        if (left[p] != 0)
                            for (std::size_t q = 0; q < B.dim(); ++q)
                                if (right[q] != 0)
                                    r.at(p, q) += c * left[p] * right[q];
                }
            }
        }
    return r;
}

namespace detail {

/// W += L V (left factor acts on rows).
template <class T>
void apply_left(const typename SplittingAlgebra<T>::Operator& L, const std::vector<T>& V, std::vector<T>& W, std::size_t cols)
{
    for (const auto& [row, col, val] : L.entries)
        for (std::size_t b = 0; b < cols; ++b)
            if (V[col * cols + b] != 0)
                W[row * cols + b] += val * V[col * cols + b];
}

/// W += V L^T (right factor acts on columns).
template <class T>
void apply_right(const typename SplittingAlgebra<T>::Operator& L, const std::vector<T>& V, std::vector<T>& W, std::size_t rows, std::size_t cols)
{
    for (const auto& [row, col, val] : L.entries)
        for (std::size_t a = 0; a < rows; ++a)
            if (V[a * cols + col] != 0)
                W[a * cols + row] += V[a * cols + col] * val;
}

} // namespace detail

} // namespace galois
