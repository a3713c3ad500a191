#include "ybx/solution_io.hpp"

#include <fstream>
#include <sstream>

#include "ybx/error.hpp"

namespace ybx {

using nlohmann::json;

namespace {

int label(const json& v, int n, int shift, const std::string& where) {
    if (!v.is_number_integer()) throw InvalidInput(where + ": expected an integer");
    int x = v.get<int>() - shift;
    if (x < 0 || x >= n) throw InvalidInput(where + ": label " + v.dump() + " out of range");
    return x;
}

std::vector<Map> maps_field(const json& j, const char* key, int n, int shift) {
    const json& rows = j.at(key);
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw InvalidInput(std::string(key) + ": expected " + std::to_string(n) + " rows");
    std::vector<Map> out(n, Map(n));
    for (int a = 0; a < n; ++a) {
        if (!rows[a].is_array() || static_cast<int>(rows[a].size()) != n)
            throw InvalidInput(std::string(key) + "[" + std::to_string(a) + "]: expected " + std::to_string(n) +
                               " entries");
        for (int b = 0; b < n; ++b)
            out[a][b] = label(rows[a][b], n, shift,
                              std::string(key) + "[" + std::to_string(a) + "][" + std::to_string(b) + "]");
    }
    return out;
}

}  // namespace

Solution solution_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("solution must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw InvalidInput("n: missing or not an integer");
    const int n = j["n"].get<int>();
    if (n < 1 || n > kMaxGenerators) throw InvalidInput("n: out of range");
    const int shift = j.value("one_based", false) ? 1 : 0;
    std::optional<Solution> from_r, from_maps;
    if (j.contains("r")) {
        const json& r = j["r"];
        if (!r.is_array() || static_cast<int>(r.size()) != n) throw InvalidInput("r: expected n rows");
        std::vector<std::pair<int, int>> t;
        for (int x = 0; x < n; ++x) {
            if (!r[x].is_array() || static_cast<int>(r[x].size()) != n)
                throw InvalidInput("r[" + std::to_string(x) + "]: expected n entries");
            for (int y = 0; y < n; ++y) {
                std::string where = "r[" + std::to_string(x) + "][" + std::to_string(y) + "]";
                const json& e = r[x][y];
                if (!e.is_array() || e.size() != 2) throw InvalidInput(where + ": expected a pair");
                t.emplace_back(label(e[0], n, shift, where), label(e[1], n, shift, where));
            }
        }
        from_r = Solution(n, std::move(t));
    }
    if (j.contains("lambda") || j.contains("rho")) {
        if (!j.contains("lambda") || !j.contains("rho")) throw InvalidInput("lambda and rho must be given together");
        from_maps = Solution::from_maps(maps_field(j, "lambda", n, shift), maps_field(j, "rho", n, shift));
    }
    if (from_r && from_maps) {
        if (*from_r != *from_maps) throw InvalidInput("r disagrees with lambda/rho");
        return *from_r;
    }
    if (from_r) return *from_r;
    if (from_maps) return *from_maps;
    throw InvalidInput("need either r or lambda/rho");
}

Solution parse_solution(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("JSON parse error: ") + e.what());
    }
    return solution_from_json(j);
}

Solution load_solution(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_solution(ss.str());
}

nlohmann::ordered_json solution_to_json(const Solution& s) {
    nlohmann::ordered_json j;
    j["n"] = s.size();
    auto r = nlohmann::ordered_json::array();
    for (int x = 0; x < s.size(); ++x) {
        auto row = nlohmann::ordered_json::array();
        for (int y = 0; y < s.size(); ++y) row.push_back({s(x, y).first, s(x, y).second});
        r.push_back(row);
    }
    j["r"] = r;
    return j;
}

}  // namespace ybx
