// Inserts a word into a decomposition tableau and prints every step.
#include <iostream>

#include "qcrystal/qcrystal.hpp"

int main(int argc, char** argv) {
    using namespace qcrystal;
    const int n = argc > 3 ? std::stoi(argv[3]) : 6;
    try {
        auto t = parse_tableau(n, argc > 1 ? argv[1] : "66135/324");
        auto letters = parse_word(n, argc > 2 ? argv[2] : "2");
        if (auto bad = check_ssdt(t)) {
            std::cerr << describe(*bad) << "\n";
            return 2;
        }
        std::cout << format_tableau(t) << "\n";
        for (const auto& step : insertion_trace(t, letters)) std::cout << "  -> " << format_tableau(step) << "\n";
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
