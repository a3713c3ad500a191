#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybx/classify.hpp"
#include "ybx/config.hpp"
#include "ybx/solution.hpp"

namespace ybx {

enum class AtlasClass { General, LeftNondegenerate, FixedRho };

struct AtlasSpec {
    int n = 2;
    AtlasClass cls = AtlasClass::LeftNondegenerate;
    std::vector<std::string> filters;  // property names, "!" negates
    bool dedup = false;
    nlohmann::ordered_json to_json() const;
};
// "n=3", "n=2,class=general", "n=3,class=fixed-rho,filter=involutive,dedup"
AtlasSpec parse_atlas_spec(const std::string& text);

// Solutions in lexicographic order of their r-tables.
std::vector<Solution> enumerate(const AtlasSpec& spec);
std::size_t candidate_count(const AtlasSpec& spec);
// Lexicographically least relabelling under Sym(X).
Solution canonical_relabel(const Solution& s);

struct CheckOutcome {
    std::string status;  // pass, fail, skip, limit, noteworthy
    std::string value;
};

struct CensusRow {
    int index = 0;
    Solution solution;
    PropertyFlags flags;
    int gk = -1;
    std::map<std::string, CheckOutcome> checks;
};

struct Census {
    AtlasSpec spec;
    RunConfig config;
    std::vector<std::string> checks;
    std::vector<CensusRow> rows;
    std::vector<std::filesystem::path> replays;
    int failures() const;
    std::string csv() const;
    nlohmann::ordered_json json() const;
};

const std::vector<std::string>& known_checks();
CheckOutcome run_check(const std::string& name, const Solution& s, const RunConfig& cfg);

// Runs the checks on every enumerated solution. Each failing check writes one replay
// file into replay_dir (when set); theorem-backed failures abort with CrossCheckFailure.
Census census(const AtlasSpec& spec, const std::vector<std::string>& checks, const RunConfig& cfg,
              const std::filesystem::path& replay_dir = {}, unsigned threads = 1);

}  // namespace ybx
