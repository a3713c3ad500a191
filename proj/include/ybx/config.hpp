#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "ybx/closure.hpp"
#include "ybx/ideal.hpp"

namespace ybx {

struct RunConfig {
    int max_length = 8;
    std::size_t node_budget = 5'000'000;
    int length_budget = 128;
    int d_bound = 4;
    int power_bound = 4;
    int t_max = 3;
    int congruence_length = 4;
    int abelian_bound = 6;
    std::string cache_dir;  // YBX_CACHE overrides
    std::string format = "text";
    std::string flavor = "M";
    std::uint64_t seed = 0;

    EngineConfig engine() const;
    ProbeBounds probe() const;
    Flavor flavor_enum() const;
    nlohmann::ordered_json to_json() const;
};

// Applies the YBX_CACHE environment variable.
void apply_environment(RunConfig& cfg);

}  // namespace ybx
