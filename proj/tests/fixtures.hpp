#pragma once

#include "ybx/solution.hpp"

namespace fx {

using ybx::Solution;

inline Solution table(int n, auto f) {
    std::vector<std::pair<int, int>> t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.push_back(f(x, y));
    return Solution(n, t);
}

// lambda_x = (1 2) for every x, rho_0 = const 0, rho_1 = (0,0,1), rho_2 = (0,2,0)
inline Solution abex() {
    return Solution::from_maps({{0, 2, 1}, {0, 2, 1}, {0, 2, 1}}, {{0, 0, 0}, {0, 0, 1}, {0, 2, 0}});
}
inline Solution r2ex() { return table(2, [](int, int y) { return std::pair{y, 1}; }); }
inline Solution idem(int n) { return table(n, [](int, int y) { return std::pair{y, y}; }); }
inline Solution triv(int n) { return table(n, [](int x, int y) { return std::pair{y, x}; }); }
// r(g,h) = (g+h, 0) on Z/2
inline Solution group2() { return table(2, [](int g, int h) { return std::pair{(g + h) % 2, 0}; }); }

}  // namespace fx
