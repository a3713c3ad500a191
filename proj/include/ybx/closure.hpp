#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "ybx/maps.hpp"
#include "ybx/solution.hpp"

namespace ybx {

// M is presented by x y = lambda_x(y) rho_y(x); A by x y = y sigma_y(x).
enum class Flavor { M, A };
const char* flavor_name(Flavor f);

struct ClassRef {
    Flavor flavor = Flavor::M;
    int length = 0;
    int id = 0;
    auto operator<=>(const ClassRef&) const = default;
};

struct EngineConfig {
    std::size_t node_budget = 5'000'000;  // nodes per degree
    int length_budget = 128;
    std::filesystem::path cache_dir;      // empty: memory only
};

// Degree L of the closure. Words u x of length L are grouped into nodes (class(u), x);
// trans maps node c*n+x to the class of u x. Class ids follow the lexicographic order
// of canonical forms, and canonical(id) = canonical(parent[id]) letter[id].
struct Level {
    int count = 0;
    std::vector<int> trans;
    std::vector<int> parent;
    std::vector<int> letter;
    std::vector<Subset> first;  // letters that start some word of the class
};

class GradedMonoid {
public:
    GradedMonoid(Solution relations, Flavor flavor, EngineConfig cfg = {});
    GradedMonoid(const GradedMonoid&) = delete;
    GradedMonoid& operator=(const GradedMonoid&) = delete;

    int generators() const noexcept { return n_; }
    Flavor flavor() const noexcept { return flavor_; }
    const Solution& relations() const noexcept { return rel_; }
    const EngineConfig& config() const noexcept { return cfg_; }

    // Computes degrees up to L on demand; throws ResourceLimit.
    const Level& level(int L);
    int class_count(int L) { return level(L).count; }
    int computed_length() const;

    int append(int L, int c, int x) { return level(L + 1).trans[static_cast<std::size_t>(c) * n_ + x]; }
    int fold(int L, int c, std::span<const int> suffix);
    int class_of(std::span<const int> word) { return fold(0, 0, word); }
    ClassRef ref_of(std::span<const int> word) {
        return {flavor_, static_cast<int>(word.size()), class_of(word)};
    }
    ClassRef concat(ClassRef a, ClassRef b);
    Word canonical(int L, int id);
    Word canonical(ClassRef c) { return canonical(c.length, c.id); }
    Subset first_letters(int L, int id) { return level(L).first[id]; }
    bool equal(std::span<const int> u, std::span<const int> v);

    // Class ids of all of X^L in lexicographic word order; ResourceLimit if n^L exceeds the node budget.
    std::vector<int> partition(int L);

    std::size_t loaded_from_cache() const noexcept { return cache_hits_; }

private:
    void build_next();
    bool try_load(int L, Level& lv) const;
    void store(int L, const Level& lv) const;
    void finish(Level& lv, const Level& prev, int L) const;
    std::filesystem::path cache_file(int L) const;

    Solution rel_;
    Flavor flavor_;
    EngineConfig cfg_;
    int n_;
    std::deque<Level> levels_;
    mutable std::mutex mu_;
    std::size_t cache_hits_ = 0;
};

// On-disk cache maintenance.
struct CacheInfo {
    std::size_t files = 0;
    std::uintmax_t bytes = 0;
};
CacheInfo cache_info(const std::filesystem::path& dir);
std::size_t cache_clear(const std::filesystem::path& dir);

}  // namespace ybx
