// Verifies a degeneration from a parametrized basis and checks a closed-set
// certificate against its source and target.

#include <iostream>

#include "nassoc/geometry.hpp"

using namespace nassoc;

int main()
{
    auto& cat = Catalog::instance();

    // A13 -> A12 with E1 = t e1, E2 = e2 + e3, E3 = -t e3
    Algebra src = cat.get("A13"), tgt = cat.get("A12");
    std::vector<Vector> rows = {parse_vector("t*e1", 3), parse_vector("e2 + e3", 3), parse_vector("-t*e3", 3)};
    std::cout << "A13 -> A12: " << verify_degeneration(src, tgt, rows).str() << "\n";
    std::cout << "Der: " << derivation_algebra(src).dim << " -> " << derivation_algebra(tgt).dim << "\n";

    // without t the limit is A13 itself
    std::vector<Vector> id = {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)};
    std::cout << "identity basis: " << verify_degeneration(src, tgt, id).str() << "\n";

    for (auto& c : cat.certificates()) {
        std::cout << "\n" << c.id << "\n";
        for (auto& m : c.members)
            std::cout << "  " << m.id << (closed_set_member(member_presentation(m), c).member ? " in" : " not in")
                      << " the set\n";
        for (auto& r : c.non_members)
            std::cout << "  " << r.str() << (closed_set_member(cat.get(r), c).member ? " in" : " not in")
                      << " the set\n";
    }
}
