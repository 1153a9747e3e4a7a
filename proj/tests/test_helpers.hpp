#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"

namespace maxpi::test {

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph star(int leaves) {  // center is vertex 0
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

// center 0; legs 1-4, 2-5, 3-6
inline Graph bipartite_claw() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

// apex 0 over induced path 1-2-3-4-5, pendant 6 on the middle vertex 3
inline Graph umbrella() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
}

// triangle row {1,2} + hub 0, pendants: 3 on 0, 4 on 1, 5 on 2  (the net)
inline Graph net2() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

// wings 0,1 + apex 2; row 3-4-5 with 3~0, 4~0, 4~1, 5~1  (the 3-tent)
inline Graph tent3() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 4}, {4, 0}, {4, 1}, {4, 5}, {5, 1}});
}

inline Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace maxpi::test
