// Polynomial Pell equations p^2 - R q^2 = const for a few quartics R, with
// the torsion of the marked point on the attached curve.

#include <iostream>

#include "galois/parse.hpp"
#include "galois/pell.hpp"

namespace {

void show(const char* text)
{
    const auto R = galois::parse_poly(text).as_int();
    const auto res = galois::is_commensurable(R, true);
    std::cout << "R = " << galois::format_poly(R) << "\n";
    std::cout << "  curve y^2 = x^3 + (" << res.model.curve.a.get_str() << ")x + (" << res.model.curve.b.get_str()
              << ")\n";
    if (!res.commensurable) {
        std::cout << "  marked point has infinite order; no period in " << res.cf->steps << " steps\n";
        return;
    }
    const auto& cf = *res.cf;
    const auto& u = *cf.unit;
    std::cout << "  marked point of order " << *res.torsion.order << ", quasi-period " << cf.quasi_period << "\n";
    std::cout << "  p = " << galois::format_poly(u.p) << "\n  q = " << galois::format_poly(u.q) << "\n  p^2 - R q^2 = "
              << u.norm.get_str() << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    try {
        if (argc > 1) {
            for (int i = 1; i < argc; ++i)
                show(argv[i]);
        } else {
            show("x^4+1");
            show("x^4-12x^2-24x-12");
            show("x^4+x+1");
        }
    } catch (const galois::error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
