#include <iostream>

#include <CLI11.hpp>

#include "galois/cli.hpp"

namespace {

using galois::cli::Format;
using galois::cli::RunConfig;

struct Options {
    RunConfig config;
    std::string format = "structured";
};

CLI::App* positional(CLI::App& parent, const std::string& name, const std::string& about,
                     std::vector<std::string>& args, std::size_t count, const std::string& operands)
{
    auto* sub = parent.add_subcommand(name, about);
    sub->add_option("operands", args, operands)->expected(static_cast<int>(count))->required();
    return sub;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    RunConfig& c = o.config;
    CLI::App app{"Exact computational Galois theory workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "structured", "json"}));
    app.add_option("--workers", c.workers, "worker threads for sampling and search")->check(CLI::PositiveNumber);

    auto primes = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("--primes", c.primes, "\"<B\" for all primes below B, or p1,p2,...");
        if (required)
            opt->required();
    };
    auto seed = [&](CLI::App* s) { s->add_option("--seed", c.seed, "random seed (required)")->required(); };

    positional(app, "pattern", "factorization pattern of f mod p", c.args, 2, "f p");
    primes(positional(app, "sample", "Frobenius cycle types over a prime set", c.args, 1, "f"), true);
    primes(positional(app, "identify", "Galois group from sampled cycle types", c.args, 1, "f"), true);
    positional(app, "speiser", "recurrence period u and Frobenius order", c.args, 2, "f p");

    auto* construct = app.add_subcommand("construct", "polynomials with prescribed Galois group");
    construct->require_subcommand(1);
    construct->fallthrough();
    auto* sn = positional(*construct, "sn", "symmetric group S_n by CRT", c.args, 1, "n");
    primes(sn, true);
    seed(sn);
    auto* an = positional(*construct, "an", "alternating group A_n from truncated exponentials", c.args, 1, "n");
    an->add_flag("--provisional", c.provisional, "allow the odd family behind its sampling gate");
    auto* bauer = construct->add_subcommand("bauer", "arbitrary prescribed patterns");
    bauer->add_option("--spec", c.spec_file, "JSON prescription file")->required();
    seed(bauer);

    positional(app, "furtwaengler", "circulant unit search", c.args, 1, "n")
        ->add_option("--bound", c.bound, "entry bound")
        ->required();
    positional(app, "same-field", "decide whether f and g define the same field", c.args, 2, "f g");
    positional(app, "pell", "continued fraction of sqrt(R)", c.args, 1, "R")
        ->add_option("--max-steps", c.max_steps, "step cap")
        ->capture_default_str();
    positional(app, "torsion", "order of (x, y) on y^2 = x^3 + a x + b", c.args, 4, "a b x y");
    positional(app, "commensurable", "torsion of the marked point of y^2 = R(x)", c.args, 1, "R")
        ->add_flag("--expand", c.expand, "also expand the continued fraction when not torsion");
    positional(app, "verify", "re-verify a structured report (file or -)", c.args, 1, "report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : galois::cli::usage;
    }

    for (auto* sub : app.get_subcommands()) {
        c.command = sub->get_name();
        for (auto* inner : sub->get_subcommands())
            c.command += " " + inner->get_name();
    }
    c.format = o.format == "human" ? Format::human : Format::structured;

    const auto out = galois::cli::run(c);
    for (const auto& r : out.reports)
        std::cout << galois::cli::render(r, c.format);
    if (!out.diagnostic.empty())
        std::cerr << "error: " << out.diagnostic << "\n";
    return out.code;
}
