// Walks through a handful of classic divergent series and prints their
// hyperreal values, principal values and partial-sum formulas.

#include <iostream>
#include <string>

#include "hyperseries/hyperseries.hpp"

int main() {
    using namespace hyperseries;

    const char* series[] = {
        "sum(i=1..omega, 1)",
        "sum(i=0..omega, 1)",
        "sum(i=1..omega, i)",
        "sum(i=1..omega, 2*i - 1)",
        "sum(i=1..omega, 2^(i-1))",
        "sum(i=1..omega, (1/2)^(i-1))",
        "sum(i=1..omega, (-1)^(i+1))",
        "sum(i=1..omega, i*(-1)^(i-1))",
        "sum(i=1..omega, i*((-1)^i + 1)/2)",
    };

    for (const char* text : series) {
        const SeriesExpr s = parse_series(text);
        const Hyperreal v = sum_series(s);
        std::cout << text << "\n"
                  << "  S(n)      = " << format_formula(partial_sum_formula(s)) << "\n"
                  << "  value     = " << format_hyperreal(v) << "\n"
                  << "  principal = " << format_hyperreal(principal_value(v)) << "\n";
        if (const auto finite = standard_part(v)) {
            std::cout << "  standard  = " << *finite << "\n";
        }
    }

    // Moving the first term out of 1 + 2 + 3 + ... changes nothing when it is
    // replaced by a zero, but shifting the sequence does change the value.
    const SeriesExpr naturals = parse_series("sum(i=1..omega, i)");
    const auto [patched, removed] = remove_term_to_zero(naturals, 1);
    const Hyperreal shifted = sum_series(parse_series("sum(i=1..omega, i + 1)"));
    std::cout << "\n1 + (0 + 2 + 3 + ...) = " << format_hyperreal(Hyperreal(removed) + sum_series(patched)) << "\n"
              << "1 + (2 + 3 + 4 + ...) = " << format_hyperreal(Hyperreal(1) + shifted) << "\n"
              << "same halo as 1 + 2 + 3 + ...: " << std::boolalpha
              << same_halo(Hyperreal(1) + shifted, sum_series(naturals)) << "\n";
    return 0;
}
