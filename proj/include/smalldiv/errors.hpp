#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace smalldiv {

// Violated precondition or out-of-domain argument.  CLI maps this to exit code 2.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A small divisor (or a family denominator) fell below the working threshold,
// or an interval frequency straddles a resonance.  Carries the offending index.
struct resonance_error : domain_error {
    resonance_error(const std::string& what, std::array<long, 2> k_offending, int dim)
        : domain_error(what), k(k_offending), n(dim) {}
    std::array<long, 2> k;
    int n;
};

// A configured cap (grid memory, ensemble size) was exceeded.  CLI exit code 3.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace smalldiv
