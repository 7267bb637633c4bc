#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "galois/constructor.hpp"
#include "galois/elliptic.hpp"
#include "galois/field_identity.hpp"
#include "galois/frobenius.hpp"
#include "galois/parse.hpp"
#include "galois/pell.hpp"

namespace galois::cli {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum exit_code : int { definite = 0, usage = 1, precondition = 2, undecided = 3, internal = 4 };

/// Malformed command line or argument text.
class usage_error : public error {
public:
    using error::error;
};

enum class Format { human, structured };

struct RunConfig {
    /// "pattern", "sample", "identify", "speiser", "construct sn", "construct an",
    /// "construct bauer", "furtwaengler", "same-field", "pell", "torsion",
    /// "commensurable" or "verify".
    std::string command;
    std::vector<std::string> args;
    std::optional<std::string> primes;
    std::optional<std::uint64_t> seed;
    Format format = Format::structured;
    unsigned workers = 1;
    int max_steps = default_cf_cap;
    long bound = 2;
    std::string spec_file;
    bool provisional = false;
    bool expand = false;
};

struct Outcome {
    int code = definite;
    std::vector<json> reports;
    std::string diagnostic;
};

inline bool is_randomized(const std::string& command)
{
    return command == "construct sn" || command == "construct bauer";
}

namespace detail {

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A polynomial argument, or "@path" for one read from a file.
inline PolyExpr poly_arg(const std::string& text)
{
    if (!text.empty() && text[0] == '@') {
        std::string body = read_text_file(text.substr(1));
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
            body.pop_back();
        return parse_poly(body);
    }
    return parse_poly(text);
}

inline IntPoly int_poly_arg(const std::string& text)
{
    PolyExpr e = poly_arg(text);
    require(e.integral(), "polynomial must have integer coefficients: " + text);
    return e.as_int();
}

inline std::uint64_t u64_arg(const std::string& text, const std::string& what)
{
    if (text.empty() || text.size() > 19 || !std::all_of(text.begin(), text.end(), ::isdigit))
        throw usage_error(what + " must be a nonnegative integer, got '" + text + "'");
    return std::stoull(text);
}

inline long long_arg(const std::string& text, const std::string& what)
{
    const bool neg = !text.empty() && text[0] == '-';
    const std::uint64_t v = u64_arg(neg ? text.substr(1) : text, what);
    if (v > 1000000000ULL)
        throw usage_error(what + " is out of range");
    return neg ? -static_cast<long>(v) : static_cast<long>(v);
}

inline BigRat rat_arg(const std::string& text, const std::string& what)
{
    std::string t = text;
    const bool neg = !t.empty() && t[0] == '-';
    if (neg)
        t = t.substr(1);
    const auto slash = t.find('/');
    auto digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), ::isdigit);
    };
    if (slash == std::string::npos ? !digits(t) : !(digits(t.substr(0, slash)) && digits(t.substr(slash + 1))))
        throw usage_error(what + " must be a rational a or a/b, got '" + text + "'");
    BigInt num(t.substr(0, slash));
    BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(t.substr(slash + 1));
    if (den == 0)
        throw usage_error(what + " has a zero denominator");
    BigRat v = make_rat(num, den);
    return neg ? BigRat(-v) : v;
}

/// "<B" for every prime below B, or a comma list of primes.
inline std::vector<std::uint64_t> primes_arg(const std::string& text)
{
    if (!text.empty() && text[0] == '<') {
        const std::uint64_t bound = u64_arg(text.substr(1), "prime bound");
        require(bound <= 100000000ULL, "prime bound above 10^8 is not supported");
        return primes_below(bound);
    }
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(u64_arg(item, "prime"));
    if (out.empty())
        throw usage_error("empty prime list");
    for (auto p : out)
        require(is_prime(p), std::to_string(p) + " is not prime");
    return out;
}

inline std::string str(const BigInt& v) { return v.get_str(); }
inline std::string str(const BigRat& v) { return v.get_str(); }

template <class T>
json poly_json(const Poly<T>& f)
{
    json c = json::array();
    for (std::size_t i = 0; i < f.size(); ++i)
        c.push_back(str(f[i]));
    return json{{"text", format_poly(f)}, {"coefficients", c}};
}

inline json pattern_json(const FactorPattern& pat)
{
    json out = json::array();
    for (auto [d, m] : pat.factors)
        out.push_back(json::array({d, m}));
    return out;
}

inline FactorPattern pattern_from_json(const json& j)
{
    FactorPattern pat;
    for (const auto& e : j)
        pat.factors.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::sort(pat.factors.begin(), pat.factors.end());
    return pat;
}

inline json record_json(const PrimeRecord& r)
{
    json j{{"p", r.p}, {"status", to_string(r.status)}};
    if (r.status == PrimeStatus::unramified)
        j["type"] = r.type.str();
    return j;
}

inline json unit_json(const FunctionalUnit& u)
{
    return json{{"p", format_poly(u.p)}, {"q", format_poly(u.q)}, {"norm", str(u.norm)}};
}

inline RatPoly rat_poly_from_text(const std::string& text) { return parse_poly(text).poly; }

inline FunctionalUnit unit_from_json(const json& j)
{
    return FunctionalUnit{rat_poly_from_text(j.at("p").get<std::string>()),
                          rat_poly_from_text(j.at("q").get<std::string>()),
                          BigRat(j.at("norm").get<std::string>())};
}

inline json header(const std::string& command)
{
    return json{{"schema_version", schema_version}, {"command", command}};
}

inline void need_args(const RunConfig& c, std::size_t n, const std::string& shape)
{
    if (c.args.size() != n)
        throw usage_error("usage: " + shape);
}

inline json sample_json(const SampleReport& rep, const std::string& primes)
{
    json j;
    j["primes"] = primes;
    j["sampled"] = rep.records.size();
    j["unramified"] = rep.unramified();
    j["excluded"] = rep.excluded();
    json freq = json::array();
    for (const auto& [t, c] : rep.frequencies) {
        BigRat d(static_cast<unsigned long>(c), static_cast<unsigned long>(rep.unramified()));
        d.canonicalize();
        freq.push_back(json{{"type", t.str()}, {"count", c}, {"density", str(d)}, {"density_approx", rep.density(t)}});
    }
    j["frequencies"] = freq;
    return j;
}

inline json cmd_pattern(const RunConfig& c)
{
    need_args(c, 2, "pattern <f> <p>");
    const IntPoly f = int_poly_arg(c.args[0]);
    const std::uint64_t p = u64_arg(c.args[1], "p");
    require(f.degree() >= 1, "pattern needs a nonconstant polynomial");
    require(is_prime(p) && p < PrimeModulus::max_prime, std::to_string(p) + " is not a usable prime");
    json j = header("pattern");
    j["f"] = poly_json(f);
    j["p"] = p;
    const ModPoly fp = ModPoly::from_int(f, PrimeModulus(p));
    const PrimeRecord rec = cycle_type_at(f, p);
    j["status"] = to_string(rec.status);
    j["pattern"] = fp.degree() >= 1 ? pattern_json(distinct_degree_pattern(fp)) : json::array();
    if (rec.status == PrimeStatus::unramified)
        j["cycle_type"] = rec.type.str();
    return j;
}

inline std::string primes_or_throw(const RunConfig& c)
{
    if (!c.primes)
        throw usage_error("--primes is required");
    return *c.primes;
}

inline json cmd_sample(const RunConfig& c)
{
    need_args(c, 1, "sample <f> --primes <B|list>");
    const IntPoly f = int_poly_arg(c.args[0]);
    const std::string spec = primes_or_throw(c);
    const SampleReport rep = sample_cycle_types(f, primes_arg(spec), c.workers);
    json j = header("sample");
    j["f"] = poly_json(f);
    j.update(sample_json(rep, spec));
    return j;
}

inline json cmd_identify(const RunConfig& c, int& code)
{
    need_args(c, 1, "identify <f> --primes <B|list>");
    const IntPoly f = int_poly_arg(c.args[0]);
    const std::string spec = primes_or_throw(c);
    const SampleReport rep = sample_cycle_types(f, primes_arg(spec), c.workers);
    const Identification id = identify_group(rep);
    json j = header("identify");
    j["f"] = poly_json(f);
    j.update(sample_json(rep, spec));
    j["alpha"] = id.alpha;
    auto fits = [](const std::vector<GroupFit>& v) {
        json out = json::array();
        for (const auto& g : v)
            out.push_back(json{{"group", g.group->name},
                               {"order", g.group->order},
                               {"chi_square", g.chi_square},
                               {"absence_probability", g.absence_probability}});
        return out;
    };
    j["consistent"] = fits(id.consistent);
    j["candidates"] = fits(id.candidates);
    if (id.unique()) {
        j["verdict"] = "identified";
        j["group"] = id.candidates.front().group->name;
    } else {
        j["verdict"] = "undecided";
        code = undecided;
    }
    return j;
}

inline json cmd_speiser(const RunConfig& c)
{
    need_args(c, 2, "speiser <f> <p>");
    const IntPoly f = int_poly_arg(c.args[0]);
    const std::uint64_t p = u64_arg(c.args[1], "p");
    const SpeiserResult r = speiser_order(f, p);
    json j = header("speiser");
    j["f"] = poly_json(f);
    j["p"] = p;
    j["u"] = r.period;
    j["order"] = r.frobenius_order;
    j["pattern_lcm"] = r.pattern_lcm;
    j["agrees"] = r.frobenius_order == r.pattern_lcm;
    return j;
}

inline json certificate_json(const ConstructionCertificate& cert)
{
    json pats = json::array();
    for (const auto& [p, pat] : cert.patterns)
        pats.push_back(json{{"p", p}, {"pattern", pattern_json(pat)}});
    json ev = json::array();
    for (const auto& r : cert.evidence)
        ev.push_back(record_json(r));
    return json{{"group", cert.group},
                {"polynomial", poly_json(cert.polynomial)},
                {"patterns", pats},
                {"irreducibility_prime", cert.irreducibility_prime},
                {"evidence", ev}};
}

inline ConstructionCertificate certificate_from_json(const json& j)
{
    ConstructionCertificate cert;
    cert.group = j.at("group").get<std::string>();
    cert.polynomial = to_int(rat_poly_from_text(j.at("polynomial").at("text").get<std::string>()));
    for (const auto& e : j.at("patterns"))
        cert.patterns.emplace_back(e.at("p").get<std::uint64_t>(), pattern_from_json(e.at("pattern")));
    cert.irreducibility_prime = j.at("irreducibility_prime").get<std::uint64_t>();
    for (const auto& e : j.at("evidence")) {
        PrimeRecord r;
        r.p = e.at("p").get<std::uint64_t>();
        const std::string s = e.at("status").get<std::string>();
        r.status = s == "unramified" ? PrimeStatus::unramified
                   : s == "ramified" ? PrimeStatus::ramified
                                     : PrimeStatus::divides_leading;
        if (e.contains("type")) {
            std::string t = e.at("type").get<std::string>();
            std::vector<int> parts;
            std::stringstream ss(t.substr(1, t.size() - 2));
            std::string item;
            while (std::getline(ss, item, ','))
                parts.push_back(std::stoi(item));
            r.type = make_cycle_type(parts);
        }
        cert.evidence.push_back(r);
    }
    return cert;
}

inline std::uint64_t seed_or_throw(const RunConfig& c)
{
    if (!c.seed)
        throw usage_error(c.command + " is randomized and needs --seed");
    return *c.seed;
}

inline json cmd_construct_sn(const RunConfig& c)
{
    need_args(c, 1, "construct sn <n> --primes p,q,r --seed s");
    const int n = static_cast<int>(long_arg(c.args[0], "n"));
    const std::uint64_t seed = seed_or_throw(c);
    const auto ps = primes_arg(primes_or_throw(c));
    if (ps.size() != 3)
        throw usage_error("construct sn needs exactly three primes p,q,r");
    const ConstructionCertificate cert = construct_symmetric(n, ps[0], ps[1], ps[2], seed);
    json j = header("construct sn");
    j["n"] = n;
    j["seed"] = seed;
    j["certificate"] = certificate_json(cert);
    return j;
}

inline json cmd_construct_an(const RunConfig& c)
{
    need_args(c, 1, "construct an <n>");
    const int n = static_cast<int>(long_arg(c.args[0], "n"));
    const SchurResult r = schur_alternating(n, c.provisional ? SchurMode::provisional : SchurMode::certified);
    json j = header("construct an");
    j["n"] = n;
    j["mode"] = c.provisional ? "provisional" : "certified";
    j["family"] = r.family;
    j["polynomial"] = poly_json(r.polynomial);
    j["discriminant"] = str(discriminant(r.polynomial));
    j["discriminant_square"] = r.discriminant_square;
    j["irreducibility_prime"] = r.irreducibility_prime ? json(r.irreducibility_prime) : json(nullptr);
    j["sampled_primes"] = r.sampled_primes;
    j["all_types_even"] = r.all_types_even;
    return j;
}

/// Spec file: {"degree": n, "patterns": [{"p": 7, "degrees": [2, 1]}, ...]}.
inline PatternPrescription prescription_from_file(const std::string& path, std::uint64_t seed)
{
    json spec;
    try {
        spec = json::parse(read_text_file(path));
        PatternPrescription pr;
        pr.degree = spec.at("degree").get<int>();
        pr.seed = seed;
        for (const auto& e : spec.at("patterns"))
            pr.patterns.emplace_back(e.at("p").get<std::uint64_t>(),
                                     pattern_of(e.at("degrees").get<std::vector<int>>()));
        return pr;
    } catch (const json::exception& e) {
        throw usage_error("bad spec file " + path + ": " + e.what());
    }
}

inline json cmd_construct_bauer(const RunConfig& c)
{
    need_args(c, 0, "construct bauer --spec <file> --seed s");
    if (c.spec_file.empty())
        throw usage_error("construct bauer needs --spec");
    const std::uint64_t seed = seed_or_throw(c);
    const PatternPrescription pr = prescription_from_file(c.spec_file, seed);
    const IntPoly f = bauer_combine(pr);
    json pats = json::array();
    for (const auto& [p, pat] : pr.patterns)
        pats.push_back(json{{"p", p}, {"pattern", pattern_json(pat)}});
    json j = header("construct bauer");
    j["degree"] = pr.degree;
    j["seed"] = seed;
    j["polynomial"] = poly_json(f);
    j["patterns"] = pats;
    return j;
}

inline json cmd_furtwaengler(const RunConfig& c)
{
    need_args(c, 1, "furtwaengler <p> --bound b");
    const std::uint64_t p = u64_arg(c.args[0], "p");
    const FurtwaenglerResult r = furtwaengler_search(p, c.bound, c.workers);
    json j = header("furtwaengler");
    j["p"] = p;
    j["g"] = r.g;
    j["bound"] = r.bound;
    j["count"] = r.solutions.size();
    j["solutions"] = r.solutions;
    return j;
}

inline json cmd_same_field(const RunConfig& c)
{
    need_args(c, 2, "same-field <f> <g>");
    const RatPoly f = poly_arg(c.args[0]).poly;
    const RatPoly g = poly_arg(c.args[1]).poly;
    const SameFieldResult r = same_field(f, g);
    json j = header("same-field");
    j["f"] = poly_json(f);
    j["g"] = poly_json(g);
    j["verdict"] = r.identical ? "identical" : "not_identical";
    if (r.identical) {
        json m = json::array();
        for (const auto& a : r.map.alpha)
            m.push_back(str(a));
        j["map"] = m;
        j["route"] = r.route;
        j["k"] = r.k;
        j["shift"] = str(r.shift);
        j["z"] = str(r.z);
        if (r.u)
            j["u"] = str(*r.u);
    }
    json cands = json::array();
    for (const auto& o : r.candidates)
        cands.push_back(json{{"k", o.k}, {"shift", str(o.shift)}, {"z", str(o.z)}, {"outcome", o.outcome}});
    j["candidates"] = cands;
    if (r.resolvents) {
        json vals = json::object();
        for (const auto& [name, v] : r.resolvents->values)
            vals[name] = str(v);
        j["resolvents"] = json{{"degree", r.resolvents->degree}, {"values", vals}, {"checks", r.resolvents->checks}};
    }
    return j;
}

inline json growth_json(const std::vector<GrowthEntry>& growth)
{
    json out = json::array();
    for (const auto& g : growth)
        out.push_back(json::array({g.k, g.degree_Q, g.height_Q, g.height_Q_monic, g.height_q}));
    return out;
}

inline json cmd_pell(const RunConfig& c, int& code)
{
    need_args(c, 1, "pell <R> --max-steps m");
    const IntPoly R = int_poly_arg(c.args[0]);
    require(c.max_steps >= 1, "--max-steps must be positive");
    const CFReport rep = cf_expand(R, c.max_steps);
    json j = header("pell");
    j["R"] = poly_json(R);
    j["sqrt_part"] = format_poly(rep.sqrt_part);
    j["max_steps"] = rep.max_steps;
    j["steps"] = rep.steps;
    j["periodic"] = rep.periodic;
    if (rep.periodic) {
        j["preperiod"] = rep.preperiod;
        j["quasi_period"] = rep.quasi_period;
        json a = json::array();
        for (std::size_t k = 0; k < rep.partial_monic.size(); ++k)
            a.push_back(format_poly(rep.partial_quotient(k)));
        j["partial_quotients"] = a;
        j["unit_index"] = rep.unit_index;
        j["unit"] = unit_json(unit_from_period(rep));
    } else {
        j["verdict"] = "no_period_within_cap";
        code = undecided;
    }
    j["growth_columns"] = json::array({"k", "degree_Q", "height_Q", "height_Q_monic", "height_q"});
    j["growth"] = growth_json(rep.growth);
    return j;
}

inline json point_json(const CurvePoint& P)
{
    if (P.infinity)
        return json{{"infinity", true}};
    return json{{"x", str(P.x)}, {"y", str(P.y)}};
}

inline json cmd_torsion(const RunConfig& c)
{
    need_args(c, 4, "torsion <a> <b> <x> <y>");
    const WeierstrassCurve E(rat_arg(c.args[0], "a"), rat_arg(c.args[1], "b"));
    const CurvePoint P{rat_arg(c.args[2], "x"), rat_arg(c.args[3], "y"), false};
    const TorsionReport t = torsion_order(E, P);
    json j = header("torsion");
    j["curve"] = json{{"a", str(E.a)}, {"b", str(E.b)}};
    j["point"] = point_json(P);
    j["cap"] = t.cap;
    j["torsion"] = t.order.has_value();
    j["order"] = t.order ? json(*t.order) : json(nullptr);
    j["heights"] = t.heights;
    return j;
}

inline json cmd_commensurable(const RunConfig& c)
{
    need_args(c, 1, "commensurable <R>");
    const IntPoly R = int_poly_arg(c.args[0]);
    const CommensurabilityResult r = is_commensurable(R, c.expand);
    json j = header("commensurable");
    j["R"] = poly_json(R);
    j["commensurable"] = r.commensurable;
    j["curve"] = json{{"a", str(r.model.curve.a)}, {"b", str(r.model.curve.b)}};
    j["marked_point"] = point_json(r.model.marked);
    j["torsion_order"] = r.torsion.order ? json(*r.torsion.order) : json(nullptr);
    j["torsion_cap"] = r.torsion.cap;
    if (r.cf) {
        j["periodic"] = r.cf->periodic;
        j["steps"] = r.cf->steps;
        if (r.cf->periodic) {
            j["quasi_period"] = r.cf->quasi_period;
            j["unit"] = unit_json(*r.cf->unit);
        }
    }
    return j;
}

inline json dispatch(const RunConfig& c, int& code);

/// Rebuilds the command line a report came from.
inline RunConfig config_of(const json& r)
{
    RunConfig c;
    c.command = r.at("command").get<std::string>();
    auto text = [&](const char* key) { return r.at(key).at("text").get<std::string>(); };
    if (c.command == "pattern" || c.command == "speiser") {
        c.args = {text("f"), std::to_string(r.at("p").get<std::uint64_t>())};
    } else if (c.command == "sample" || c.command == "identify") {
        c.args = {text("f")};
        c.primes = r.at("primes").get<std::string>();
    } else if (c.command == "construct an") {
        c.args = {std::to_string(r.at("n").get<int>())};
        c.provisional = r.at("mode").get<std::string>() == "provisional";
    } else if (c.command == "furtwaengler") {
        c.args = {std::to_string(r.at("p").get<std::uint64_t>())};
        c.bound = r.at("bound").get<long>();
    } else if (c.command == "same-field") {
        c.args = {text("f"), text("g")};
    } else if (c.command == "pell") {
        c.args = {text("R")};
        c.max_steps = r.at("max_steps").get<int>();
    } else if (c.command == "torsion") {
        const auto& P = r.at("point");
        c.args = {r.at("curve").at("a").get<std::string>(), r.at("curve").at("b").get<std::string>(),
                  P.at("x").get<std::string>(), P.at("y").get<std::string>()};
    } else if (c.command == "commensurable") {
        c.args = {text("R")};
        c.expand = r.contains("periodic") && !r.at("commensurable").get<bool>();
    } else {
        throw usage_error("cannot rerun a '" + c.command + "' report");
    }
    return c;
}

inline bool rerun_matches(const json& report, std::vector<std::string>& checks)
{
    int code = definite;
    const json again = dispatch(config_of(report), code);
    checks.push_back("recomputed report is identical");
    return again == report;
}

/// Independent checks of one report. Returns the first failure, or "".
inline std::string verify_report(const json& r, std::vector<std::string>& checks)
{
    if (!r.contains("schema_version") || r.at("schema_version") != schema_version)
        return "unsupported schema_version";
    const std::string cmd = r.at("command").get<std::string>();
    if (cmd == "construct sn") {
        std::string why = verify_certificate(certificate_from_json(r.at("certificate")));
        checks.push_back("certificate re-verified from scratch");
        return why;
    }
    if (cmd == "construct bauer") {
        const IntPoly f = to_int(rat_poly_from_text(r.at("polynomial").at("text").get<std::string>()));
        if (f.degree() != r.at("degree").get<int>() || f.lead() != 1)
            return "polynomial is not monic of the stated degree";
        for (const auto& e : r.at("patterns")) {
            const auto p = e.at("p").get<std::uint64_t>();
            if (!is_prime(p)
                || distinct_degree_pattern(ModPoly::from_int(f, PrimeModulus(p))) != pattern_from_json(e.at("pattern")))
                return "pattern mismatch at " + std::to_string(p);
        }
        checks.push_back("factorization pattern at every listed prime");
        return {};
    }
    if (cmd == "furtwaengler") {
        const auto p = r.at("p").get<std::uint64_t>();
        const auto g = r.at("g").get<std::uint64_t>();
        for (const auto& e : r.at("solutions"))
            if (!furtwaengler_check(p, g, e.get<std::vector<long>>()))
                return "a listed vector fails the determinant or congruence condition";
        checks.push_back("determinant and congruence of every vector");
        return rerun_matches(r, checks) ? "" : "exhaustive search disagrees";
    }
    if (cmd == "same-field" && r.at("verdict") == "identical") {
        const RatPoly f = rat_poly_from_text(r.at("f").at("text").get<std::string>());
        const RatPoly g = rat_poly_from_text(r.at("g").at("text").get<std::string>());
        TschirnhausMap m;
        for (const auto& a : r.at("map"))
            m.alpha.emplace_back(a.get<std::string>());
        checks.push_back("g(map(x)) = 0 mod f by exact substitution");
        return certifies(monic(f), monic(g), m) ? "" : "map does not certify";
    }
    if ((cmd == "pell" && r.at("periodic").get<bool>())
        || (cmd == "commensurable" && r.at("commensurable").get<bool>())) {
        const IntPoly R = to_int(rat_poly_from_text(r.at("R").at("text").get<std::string>()));
        checks.push_back("p^2 - R q^2 equals the stated constant norm");
        if (!is_unit(R, unit_from_json(r.at("unit"))))
            return "unit does not have constant norm";
        return rerun_matches(r, checks) ? "" : "recomputation disagrees";
    }
    if (cmd == "torsion" && r.at("torsion").get<bool>()) {
        const WeierstrassCurve E(BigRat(r.at("curve").at("a").get<std::string>()),
                                 BigRat(r.at("curve").at("b").get<std::string>()));
        const CurvePoint P{BigRat(r.at("point").at("x").get<std::string>()),
                           BigRat(r.at("point").at("y").get<std::string>()), false};
        const int n = r.at("order").get<int>();
        if (!on_curve(E, P) || !multiply(E, P, n).infinity)
            return "n P is not the identity";
        for (int d = 1; d < n; ++d)
            if (n % d == 0 && multiply(E, P, d).infinity)
                return "order is not minimal";
        checks.push_back("n P = O with no smaller multiple vanishing");
        return {};
    }
    return rerun_matches(r, checks) ? "" : "recomputation disagrees";
}

inline json cmd_verify(const RunConfig& c, int& code)
{
    need_args(c, 1, "verify <report>");
    const std::string body = c.args[0] == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                              : read_text_file(c.args[0]);
    std::vector<json> reports;
    std::stringstream ss(body);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            reports.push_back(json::parse(line));
        } catch (const json::exception& e) {
            throw usage_error(std::string("report is not JSON: ") + e.what());
        }
    }
    if (reports.empty())
        throw usage_error("no report to verify");
    json out = header("verify");
    json results = json::array();
    bool all = true;
    for (const auto& r : reports) {
        std::vector<std::string> checks;
        std::string why;
        try {
            why = verify_report(r, checks);
        } catch (const json::exception& e) {
            why = std::string("malformed report: ") + e.what();
        } catch (const usage_error&) {
            throw;
        } catch (const error& e) {
            why = e.what();
        }
        json item{{"command", r.value("command", std::string())}, {"verified", why.empty()}, {"checks", checks}};
        if (!why.empty())
            item["reason"] = why;
        all = all && why.empty();
        results.push_back(item);
    }
    out["verified"] = all;
    out["reports"] = results;
    if (!all)
        code = precondition;
    return out;
}

inline json dispatch(const RunConfig& c, int& code)
{
    const std::string& cmd = c.command;
    if (cmd == "pattern")
        return cmd_pattern(c);
    if (cmd == "sample")
        return cmd_sample(c);
    if (cmd == "identify")
        return cmd_identify(c, code);
    if (cmd == "speiser")
        return cmd_speiser(c);
    if (cmd == "construct sn")
        return cmd_construct_sn(c);
    if (cmd == "construct an")
        return cmd_construct_an(c);
    if (cmd == "construct bauer")
        return cmd_construct_bauer(c);
    if (cmd == "furtwaengler")
        return cmd_furtwaengler(c);
    if (cmd == "same-field")
        return cmd_same_field(c);
    if (cmd == "pell")
        return cmd_pell(c, code);
    if (cmd == "torsion")
        return cmd_torsion(c);
    if (cmd == "commensurable")
        return cmd_commensurable(c);
    if (cmd == "verify")
        return cmd_verify(c, code);
    throw usage_error("unknown command '" + cmd + "'");
}

} // namespace detail

/// Executes one command. Reports go to Outcome::reports, error text to
/// Outcome::diagnostic; the exit code follows 0/1/2/3 (4 for a failed
/// internal cross-check).
inline Outcome run(const RunConfig& config)
{
    Outcome out;
    try {
        if (config.workers == 0)
            throw usage_error("--workers must be positive");
        int code = definite;
        out.reports.push_back(detail::dispatch(config, code));
        out.code = code;
    } catch (const parse_error& e) {
        out.code = usage;
        out.diagnostic = std::string("parse error: ") + e.what();
    } catch (const usage_error& e) {
        out.code = usage;
        out.diagnostic = e.what();
    } catch (const precondition_error& e) {
        out.code = precondition;
        out.diagnostic = e.what();
    } catch (const undecided_error& e) {
        out.code = undecided;
        out.diagnostic = e.what();
    } catch (const internal_error& e) {
        out.code = internal;
        out.diagnostic = std::string("internal error: ") + e.what();
    }
    return out;
}

/// Structured: one compact JSON object per line. Human: "key: value" lines.
inline std::string render(const json& report, Format format)
{
    if (format == Format::structured)
        return report.dump() + "\n";
    std::string s;
    for (const auto& [key, value] : report.items()) {
        if (key == "schema_version")
            continue;
        if (key == "growth") {
            s += "growth: " + std::to_string(value.size()) + " entries\n";
            continue;
        }
        s += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    return s;
}

} // namespace galois::cli
