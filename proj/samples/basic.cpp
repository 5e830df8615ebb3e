// Builds the Fibonacci cobweb on five levels and prints a few of its
// incidence-algebra elements.

#include <iostream>

#include "cobweb/formats.hpp"

int main() {
    using namespace cobweb;
    FSequence F = FSequence::fibonacci();
    GradedPoset P = cobweb_poset(F, 5);

    std::cout << "poset: " << poset_to_json(P) << "\n\n";
    std::cout << "zeta (La Scala):\n" << la_scala(P).to_string() << '\n';

    IntMatrix mu = mobius(P, MobiusMethod::closed_form);
    std::cout << "mobius:\n";
    write_matrix_csv(std::cout, mu);

    std::cout << "\ncoding matrix: ";
    write_coding_json(std::cout, coding_matrix(F, 5));

    std::cout << "maximal chains of levels 3..5: " << count_layer_chains(P, 3, 5).get_str() << '\n';
    std::cout << "fnomial(fib, 6, 3) = " << to_string(fnomial(F, 6, 3)) << '\n';

    RootedPoset R = root(F, 4);
    std::cout << "charpoly of the rooted cobweb: " << char_poly(R).to_string() << '\n';
}
