#include "ybx/config.hpp"

#include <cstdlib>

#include "ybx/error.hpp"

namespace ybx {

EngineConfig RunConfig::engine() const {
    EngineConfig e;
    e.node_budget = node_budget;
    e.length_budget = length_budget;
    e.cache_dir = cache_dir;
    return e;
}

ProbeBounds RunConfig::probe() const {
    ProbeBounds b;
    b.L = max_length;
    b.D = d_bound;
    b.N = power_bound;
    return b;
}

Flavor RunConfig::flavor_enum() const {
    if (flavor == "M") return Flavor::M;
    if (flavor == "A") return Flavor::A;
    throw InvalidInput("flavor must be M or A");
}

nlohmann::ordered_json RunConfig::to_json() const {
    return {{"max_length", max_length},   {"node_budget", node_budget},
            {"length_budget", length_budget}, {"d_bound", d_bound},
            {"power_bound", power_bound}, {"t_max", t_max},
            {"congruence_length", congruence_length}, {"abelian_bound", abelian_bound},
            {"cache_dir", cache_dir},     {"format", format},
            {"flavor", flavor},           {"seed", seed}};
}

void apply_environment(RunConfig& cfg) {
    if (const char* env = std::getenv("YBX_CACHE"); env && *env) cfg.cache_dir = env;
}

}  // namespace ybx
