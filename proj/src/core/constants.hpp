#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/branching.hpp"

namespace maxpi {

// The tuple (alpha, beta, gamma, delta, epsilon, L) steering the structured
// solver, with the derived component bound C = L/gamma, forbidden-subgraph
// bound ell = 3C^2+1, and zeta = 2 alpha + 2 beta + 2 delta + epsilon.
struct ConstantSchedule {
    double alpha;
    double beta;
    double gamma;
    double delta;
    double epsilon;
    double big_l;

    double component_cap() const { return big_l / gamma; }
    double ell() const { return 3.0 * component_cap() * component_cap() + 1.0; }
    double zeta() const { return 2 * alpha + 2 * beta + 2 * delta + epsilon; }

    static ConstantSchedule defaults();
    // key=value lines (alpha, beta, gamma, delta, epsilon, L); '#' comments.
    // Missing keys keep their default values.
    static ConstantSchedule parse(std::string_view text);
};

// Empty iff every schedule constraint holds; each violation names the failed
// inequality.
std::vector<std::string> validate_constants(const ConstantSchedule& c, int n);

}  // namespace maxpi
