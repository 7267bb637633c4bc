// Frobenius cycle types of a cubic or quartic over the primes below a bound,
// then the group table match.
//
//   frobenius_density "x^3-x-1" 5000

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "galois/frobenius.hpp"
#include "galois/parse.hpp"

int main(int argc, char** argv)
{
    const char* text = argc > 1 ? argv[1] : "x^3-x-1";
    const std::uint64_t bound = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 5000;
    try {
        const auto f = galois::parse_poly(text).as_int();
        const auto report = galois::sample_cycle_types_below(f, bound);
        std::cout << galois::format_poly(f) << ", " << report.unramified() << " unramified primes below " << bound << "\n";
        for (const auto& [t, c] : report.frequencies)
            std::cout << "  " << std::setw(10) << t.str() << "  " << std::setw(6) << c << "  " << std::fixed
                      << std::setprecision(4) << report.density(t) << "\n";
        const auto id = galois::identify_group(report);
        std::cout << "candidates:";
        for (const auto& g : id.candidates)
            std::cout << " " << g.group->name;
        std::cout << "\n";
    } catch (const galois::error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
