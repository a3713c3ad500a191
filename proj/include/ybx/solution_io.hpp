#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "ybx/solution.hpp"

namespace ybx {

// Accepts {"n":N,"r":[[[u,v],...],...]} and/or {"n":N,"lambda":[[...]],"rho":[[...]]}
// with lambda[x][y] = lambda_x(y) and rho[y][x] = rho_y(x). "one_based": true shifts
// every label down by one. Both forms together must agree.
Solution solution_from_json(const nlohmann::json& j);
Solution load_solution(const std::filesystem::path& path);
Solution parse_solution(const std::string& text);

nlohmann::ordered_json solution_to_json(const Solution& s);

}  // namespace ybx
