// Prints the maximal mesa sets of order 3k-1 next to their Dyck paths and
// writes one SVG per path into the current directory.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "mesa/mesa.hpp"

int main(int argc, char** argv) {
    const int k = argc > 1 ? std::atoi(argv[1]) : 3;
    int index = 0;
    for (const auto& m : mesa::enumerate_maximal(k)) {
        const auto path = mesa::delta(m);
        std::cout << m.to_string() << "\t" << path.to_string() << "\tarea " << mesa::area(path) << '\n';
        std::ofstream("dyck_" + std::to_string(k) + "_" + std::to_string(index++) + ".svg")
            << mesa::render_dyck(path);
    }
    std::cout << "C_{" << 2 * k - 1 << ',' << k << "} = "
              << mesa::rational_catalan(2 * k - 1, k).str() << '\n';
}
