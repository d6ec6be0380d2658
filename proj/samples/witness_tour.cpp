// Walks the admissible mesa sets of a small order and prints each one with its
// canonical witness.

#include <cstdlib>
#include <iostream>

#include "mesa/mesa.hpp"

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 6;
    std::size_t count = 0;
    mesa::for_each_admissible(n, [&](const std::vector<int>& elements) {
        const mesa::MesaSet m(elements, n);
        std::cout << m.to_string() << "\t" << mesa::canonical_witness(m).to_string() << '\n';
        ++count;
    });
    std::cout << count << " admissible mesa sets of order " << n << '\n';
}
