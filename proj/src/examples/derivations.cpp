// Derivation dimensions and invariant fingerprints for a few catalog algebras,
// plus an algebra built by hand.

#include <iostream>

#include "nassoc/analysis.hpp"
#include "nassoc/catalog.hpp"

using namespace nassoc;

int main()
{
    auto& cat = Catalog::instance();
    for (const char* id : {"A07", "A12", "R02", "S11"}) {
        Algebra A = cat.get(id);
        std::cout << id << ": dim Der = " << derivation_algebra(A).dim << "\n";
    }

    // e1 e1 = e2, e1 e2 = e3 in dimension 3
    Algebra N(3);
    N.at(0, 0, 1) = 1;
    N.at(0, 1, 2) = 1;
    N.label = "nilpotent";
    std::cout << "\n" << product_table_str(N) << fingerprint(N).str() << "\n";

    auto s = separate(cat.get("S06"), cat.get("S09"));
    std::cout << "S06 vs S09: " << s.str() << "\n";
}
