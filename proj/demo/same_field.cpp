// Two defining polynomials of the same cubic field, and the map between them.

#include <iostream>

#include "galois/field_identity.hpp"
#include "galois/parse.hpp"

int main(int argc, char** argv)
{
    const char* a = argc > 2 ? argv[1] : "x^3-x-1";
    const char* b = argc > 2 ? argv[2] : "x^3-2x^2+x-1";
    try {
        const auto f = galois::parse_poly(a).poly;
        const auto g = galois::parse_poly(b).poly;
        const auto res = galois::same_field(f, g);
        std::cout << "f = " << galois::format_poly(f) << "\ng = " << galois::format_poly(g) << "\n";
        for (const auto& c : res.candidates)
            std::cout << "  k=" << c.k << " z=" << c.z.get_str() << " " << c.outcome << "\n";
        if (!res.identical) {
            std::cout << "different fields\n";
            return 0;
        }
        std::cout << "same field via " << res.route << ": y = " << galois::format_poly(res.map.as_poly()) << "\n";
        std::cout << "g(y) mod f = 0: " << (galois::certifies(f, g, res.map) ? "yes" : "no") << "\n";
    } catch (const galois::error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
