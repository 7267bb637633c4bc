#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "galois/modpoly.hpp"
#include "galois/poly.hpp"

namespace galois {

/// Partition of n, parts descending.
struct CycleType {
    std::vector<int> parts;

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts[i]);
        return s + "]";
    }

    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

inline CycleType make_cycle_type(std::vector<int> parts)
{
    for (int k : parts)
        require(k >= 1, "cycle type parts must be positive");
    std::sort(parts.rbegin(), parts.rend());
    return CycleType{std::move(parts)};
}

enum class PrimeStatus { unramified, ramified, divides_leading };

inline const char* to_string(PrimeStatus s)
{
    switch (s) {
    case PrimeStatus::unramified:
        return "unramified";
    case PrimeStatus::ramified:
        return "ramified";
    case PrimeStatus::divides_leading:
        return "divides_leading";
    }
    return "?";
}

struct PrimeRecord {
    std::uint64_t p = 0;
    PrimeStatus status = PrimeStatus::unramified;
    CycleType type; // empty unless unramified

    friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

namespace detail {

inline PrimeRecord cycle_type_with_disc(const IntPoly& f, const BigInt& disc, std::uint64_t p)
{
    PrimeRecord rec;
    rec.p = p;
    if (mod_u64(f.lead(), p) == 0) {
        rec.status = PrimeStatus::divides_leading;
        return rec;
    }
    if (mod_u64(disc, p) == 0) {
        rec.status = PrimeStatus::ramified;
        return rec;
    }
    FactorPattern pat = distinct_degree_pattern(ModPoly::from_int(f, PrimeModulus::unchecked(p)));
    std::vector<int> parts;
    for (auto [d, m] : pat.factors) {
        ensure(m == 1, "unramified prime produced a repeated factor");
        parts.push_back(d);
    }
    rec.type = make_cycle_type(std::move(parts));
    return rec;
}

} // namespace detail

/// Frobenius cycle type of f at p, read off the factorization of f mod p.
inline PrimeRecord cycle_type_at(const IntPoly& f, std::uint64_t p)
{
    require(f.degree() >= 1, "cycle_type_at needs a nonconstant polynomial");
    require(is_prime(p), "cycle_type_at needs a prime");
    return detail::cycle_type_with_disc(f, discriminant(f), p);
}

struct SampleReport {
    IntPoly f;
    std::vector<PrimeRecord> records; // ascending by prime
    std::map<CycleType, std::uint64_t> frequencies;

    std::uint64_t unramified() const
    {
        std::uint64_t n = 0;
        for (const auto& [t, c] : frequencies)
            n += c;
        return n;
    }

    std::vector<std::uint64_t> excluded() const
    {
        std::vector<std::uint64_t> out;
        for (const auto& r : records)
            if (r.status != PrimeStatus::unramified)
                out.push_back(r.p);
        return out;
    }

    double density(const CycleType& t) const
    {
        auto it = frequencies.find(t);
        const auto n = unramified();
        return it == frequencies.end() || n == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n);
    }
};

/// Cycle types of f at each prime. Work is split into contiguous blocks, one
/// per worker; the merged report is ordered by prime and does not depend on
/// the worker count.
inline SampleReport sample_cycle_types(const IntPoly& f, std::vector<std::uint64_t> primes, unsigned workers = 1)
{
    require(f.degree() >= 2, "sampling needs degree >= 2");
    require(!primes.empty(), "empty prime set");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto p : primes)
        require(is_prime(p) && p < PrimeModulus::max_prime, std::to_string(p) + " is not a usable prime");

    const BigInt disc = discriminant(f);
    SampleReport rep;
    rep.f = f;
    rep.records.resize(primes.size());
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(primes.size())));
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            rep.records[i] = detail::cycle_type_with_disc(f, disc, primes[i]);
    };
    if (workers == 1) {
        work(0, primes.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (primes.size() + workers - 1) / workers;
        for (std::size_t lo = 0; lo < primes.size(); lo += chunk)
            pool.emplace_back(work, lo, std::min(primes.size(), lo + chunk));
        for (auto& t : pool)
            t.join();
    }
    for (const auto& r : rep.records)
        if (r.status == PrimeStatus::unramified)
            ++rep.frequencies[r.type];
    return rep;
}

inline SampleReport sample_cycle_types_below(const IntPoly& f, std::uint64_t bound, unsigned workers = 1)
{
    return sample_cycle_types(f, primes_below(bound), workers);
}

using Permutation = std::vector<int>;

inline CycleType cycle_type_of(const Permutation& g)
{
    std::vector<bool> seen(g.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(g[j])) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return make_cycle_type(std::move(parts));
}

struct TransitiveGroup {
    std::string name;
    int degree = 0;
    std::uint64_t order = 0;
    std::map<CycleType, std::uint64_t> class_counts;

    double density(const CycleType& t) const
    {
        auto it = class_counts.find(t);
        return it == class_counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(order);
    }

    bool contains(const CycleType& t) const { return class_counts.count(t) != 0; }
};

/// Closure of the generators under composition.
inline std::set<Permutation> generate_group(const std::vector<Permutation>& gens)
{
    const std::size_t n = gens.front().size();
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> group{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                Permutation c(n);
                for (std::size_t i = 0; i < n; ++i)
                    c[i] = g[static_cast<std::size_t>(a[i])];
                if (group.insert(c).second)
                    next.push_back(std::move(c));
            }
        frontier = std::move(next);
    }
    return group;
}

class GroupTable {
public:
    GroupTable()
    {
        add("S2", {{1, 0}});
        add("C3", {{1, 2, 0}});
        add("S3", {{1, 2, 0}, {1, 0, 2}});
        add("C4", {{1, 2, 3, 0}});
        add("V4", {{1, 0, 3, 2}, {2, 3, 0, 1}});
        add("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}});
        add("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}});
        add("S4", {{1, 2, 3, 0}, {1, 0, 2, 3}});
        add("C5", {{1, 2, 3, 4, 0}});
        add("D5", {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
        add("F20", {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}});
        add("A5", {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
        add("S5", {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}});
        for (int n = 2; n <= 5; ++n) {
            auto gs = of_degree(n);
            for (std::size_t i = 0; i < gs.size(); ++i)
                for (std::size_t j = i + 1; j < gs.size(); ++j)
                    ensure(type_set(*gs[i]) != type_set(*gs[j]),
                           "groups " + gs[i]->name + " and " + gs[j]->name + " share a cycle-type set");
        }
    }

    const std::vector<TransitiveGroup>& groups() const { return groups_; }

    std::vector<const TransitiveGroup*> of_degree(int n) const
    {
        std::vector<const TransitiveGroup*> out;
        for (const auto& g : groups_)
            if (g.degree == n)
                out.push_back(&g);
        return out;
    }

    const TransitiveGroup& by_name(const std::string& name) const
    {
        for (const auto& g : groups_)
            if (g.name == name)
                return g;
        throw precondition_error("unknown group " + name);
    }

    static std::set<CycleType> type_set(const TransitiveGroup& g)
    {
        std::set<CycleType> s;
        for (const auto& [t, c] : g.class_counts)
            s.insert(t);
        return s;
    }

private:
    void add(std::string name, const std::vector<Permutation>& gens)
    {
        TransitiveGroup g;
        g.name = std::move(name);
        g.degree = static_cast<int>(gens.front().size());
        auto elems = generate_group(gens);
        g.order = elems.size();
        std::set<int> orbit{0};
        for (const auto& e : elems) {
            ++g.class_counts[cycle_type_of(e)];
            orbit.insert(e[0]);
        }
        ensure(static_cast<int>(orbit.size()) == g.degree, g.name + " is not transitive");
        std::uint64_t total = 0;
        for (const auto& [t, c] : g.class_counts)
            total += c;
        ensure(total == g.order, "class counts do not sum to the group order");
        groups_.push_back(std::move(g));
    }

    std::vector<TransitiveGroup> groups_;
};

inline const GroupTable& group_table()
{
    static const GroupTable table;
    return table;
}

struct GroupFit {
    const TransitiveGroup* group = nullptr;
    double chi_square = 0;
    /// Probability, under the group's exact densities, that none of its
    /// unobserved cycle types would appear in the sample.
    double absence_probability = 1;
};

struct Identification {
    std::uint64_t samples = 0;
    double alpha = 0;
    std::vector<GroupFit> consistent; // contain every observed type
    std::vector<GroupFit> candidates; // consistent and not rejected at alpha

    bool unique() const { return candidates.size() == 1; }
};

/// Groups of the table compatible with the sampled Frobenius data.
///
/// A group is consistent when its cycle-type set contains every observed
/// type. A consistent group is dropped from the candidates when the chance of
/// never seeing any of its missing types in the sample falls below alpha.
/// Both lists are ranked by chi-square distance to the exact densities.
inline Identification identify_group(const SampleReport& report, const GroupTable& table = group_table(), double alpha = 0.01)
{
    const int n = report.f.degree();
    require(n >= 2 && n <= 5, "group identification supports degrees 2..5, got " + std::to_string(n));
    const std::uint64_t samples = report.unramified();
    require(samples > 0, "no unramified primes in the sample");
    Identification out;
    out.samples = samples;
    out.alpha = alpha;
    const double N = static_cast<double>(samples);
    for (const TransitiveGroup* g : table.of_degree(n)) {
        bool ok = true;
        for (const auto& [t, c] : report.frequencies)
            ok = ok && g->contains(t);
        if (!ok)
            continue;
        GroupFit fit;
        fit.group = g;
        double missing = 0;
        for (const auto& [t, cnt] : g->class_counts) {
            const double expected = N * g->density(t);
            auto it = report.frequencies.find(t);
            const double obs = it == report.frequencies.end() ? 0.0 : static_cast<double>(it->second);
            fit.chi_square += (obs - expected) * (obs - expected) / expected;
            if (obs == 0)
                missing += g->density(t);
        }
        fit.absence_probability = std::pow(1.0 - missing, N);
        out.consistent.push_back(fit);
    }
    auto by_fit = [](const GroupFit& a, const GroupFit& b) {
        if (a.chi_square != b.chi_square)
            return a.chi_square < b.chi_square;
        return a.group->name < b.group->name;
    };
    std::sort(out.consistent.begin(), out.consistent.end(), by_fit);
    for (const auto& fit : out.consistent)
        if (fit.absence_probability >= alpha)
            out.candidates.push_back(fit);
    return out;
}

struct SpeiserResult {
    std::uint64_t p = 0;
    std::uint64_t period = 0;          // u
    std::uint64_t frobenius_order = 0; // multiplicative order of p mod u
    std::uint64_t pattern_lcm = 0;
    std::vector<std::uint64_t> prefix; // y(1), y(2), ...
};

/// Multiplicative order of a modulo m (gcd(a, m) = 1); 1 when m = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m)
{
    if (m == 1)
        return 1;
    require(std::gcd(a, m) == 1, "multiplicative order needs coprime arguments");
    std::uint64_t x = a % m;
    std::uint64_t k = 1;
    while (x != 1) {
        x = detail::mulmod(x, a, m);
        ++k;
    }
    return k;
}

/// Period of the linear recurrence attached to f mod p, started from the
/// window 0, ..., 0, 1, and the Frobenius order derived from it.
inline SpeiserResult speiser_order(const IntPoly& f, std::uint64_t p, std::uint64_t max_steps = 100000000)
{
    const int n = f.degree();
    require(n >= 1, "speiser_order needs a nonconstant polynomial");
    require(is_prime(p) && p < PrimeModulus::max_prime, std::to_string(p) + " is not a usable prime");
    require(mod_u64(f.lead(), p) != 0, "leading coefficient vanishes mod p");
    require(mod_u64(f[0], p) != 0, "constant term vanishes mod p");
    require(mod_u64(discriminant(f), p) != 0, "p divides the discriminant (ramified)");

    ModPoly g = monic(ModPoly::from_int(f, PrimeModulus::unchecked(p)));
    // y(m+n) = -(a_1 y(m+n-1) + ... + a_n y(m)) with a_i the coefficient of x^{n-i}.
    std::vector<std::uint64_t> neg(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        neg[static_cast<std::size_t>(i - 1)] = (p - g[static_cast<std::size_t>(n - i)]) % p;

    std::vector<std::uint64_t> window(static_cast<std::size_t>(n), 0); // ring buffer
    window[static_cast<std::size_t>(n - 1)] = 1;
    std::size_t head = 0; // index of y(m)
    SpeiserResult res;
    res.p = p;
    for (int i = 0; i < n; ++i)
        res.prefix.push_back(window[static_cast<std::size_t>(i)]);

    // zero_run counts the zeros immediately preceding the newest term.
    int zero_run = n - 1;
    std::uint64_t steps = 0;
    for (;;) {
        std::uint64_t next = 0;
        for (int i = 1; i <= n; ++i) {
            const std::uint64_t y = window[(head + static_cast<std::size_t>(n - i)) % static_cast<std::size_t>(n)];
            next = (next + detail::mulmod(neg[static_cast<std::size_t>(i - 1)], y, p)) % p;
        }
        const std::uint64_t newest = window[(head + static_cast<std::size_t>(n - 1)) % static_cast<std::size_t>(n)];
        zero_run = newest == 0 ? zero_run + 1 : 0;
        window[head] = next;
        head = (head + 1) % static_cast<std::size_t>(n);
        ++steps;
        if (res.prefix.size() < 32)
            res.prefix.push_back(next);
        if (next == 1 && zero_run >= n - 1)
            break;
        if (steps >= max_steps)
            throw undecided_error("recurrence period exceeds " + std::to_string(max_steps) + " steps");
    }
    res.period = steps;
    res.frobenius_order = multiplicative_order(p % res.period, res.period);

    std::uint64_t l = 1;
    for (auto [d, m] : distinct_degree_pattern(g).factors)
        l = std::lcm(l, static_cast<std::uint64_t>(d));
    res.pattern_lcm = l;
    ensure(res.frobenius_order == l, "recurrence order disagrees with the factorization pattern");
    return res;
}

} // namespace galois
