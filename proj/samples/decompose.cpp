// Decomposes B(2,1) (x) B(3) for n = 3 three ways and prints the table.
#include <iostream>

#include "qcrystal/qcrystal.hpp"

int main() {
    using namespace qcrystal;
    const int n = 3;
    StrictPartition lambda{2, 1}, mu{3};

    auto by_words = lr_words(lambda, mu, n);
    auto by_insertion = lr_insertion(lambda, mu, n);
    auto by_graph = lr_graph(lambda, mu, n);

    for (const auto& [nu, c] : by_graph.coefficients) {
        std::cout << "nu=" << format_partition(nu) << "  graph " << c << "  words " << by_words.coefficients[nu]
                  << "  insertion " << by_insertion.coefficients[nu] << "\n";
    }
    for (const auto& w : by_insertion.witnesses) {
        std::cout << format_tableau(*w.tableau) << " <- L^mu = L^" << format_partition(w.shape) << "\n";
    }
    return by_words.coefficients == by_graph.coefficients && by_insertion.coefficients == by_graph.coefficients ? 0 : 1;
}
