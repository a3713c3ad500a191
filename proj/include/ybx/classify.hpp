#pragma once

#include <array>
#include <optional>
#include <utility>

#include "json.hpp"
#include "ybx/closure.hpp"
#include "ybx/solution.hpp"

namespace ybx {

struct PropertyFlags {
    bool is_solution = false;
    std::optional<std::array<int, 3>> braid_witness;
    bool left_nondegenerate = false;
    bool right_nondegenerate = false;
    bool bijective = false;
    bool involutive = false;
    bool idempotent = false;
    bool fixed_rho = false;
    // commutation of all class pairs with total length <= abelian_bound
    int abelian_bound = 0;
    std::optional<bool> abelian_M;
    std::optional<bool> abelian_A;
    std::optional<std::pair<Word, Word>> abelian_M_witness;
    std::optional<std::pair<Word, Word>> abelian_A_witness;
};

PropertyFlags classify(const Solution& s, int abelian_bound = 6, const EngineConfig& cfg = {});
// Structural flags only; no closure work.
PropertyFlags basic_flags(const Solution& s);

nlohmann::ordered_json to_json(const PropertyFlags& f);
bool flag_by_name(const PropertyFlags& f, const std::string& name);

}  // namespace ybx
