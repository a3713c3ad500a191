#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "ybx/atlas.hpp"
#include "ybx/error.hpp"
#include "ybx/structure.hpp"
#include "ybx/words.hpp"

using namespace ybx;

namespace {

void same_partition(GradedMonoid& g, const oracle::Rel& rel, int L) {
    const int n = g.generators();
    auto ref = oracle::naive_partition(n, L, rel);
    auto got = g.partition(L);
    REQUIRE(got.size() == ref.id.size());
    CHECK(got == ref.id);
    CHECK(g.class_count(L) == ref.count);
    for (int c = 0; c < ref.count; ++c) CHECK(g.canonical(L, c) == ref.canonical[c]);
}

}  // namespace

TEST_CASE("closure matches word-level union-find on the whole n=2 table space") {
    for (const Solution& s : enumerate(AtlasSpec{2, AtlasClass::General, {}, false})) {
        GradedMonoid m(s, Flavor::M);
        for (int L = 0; L <= 6; ++L) same_partition(m, oracle::m_rel(s), L);
        if (is_left_nondegenerate(s)) {
            GradedMonoid a(derived_solution(s), Flavor::A);
            for (int L = 0; L <= 6; ++L) same_partition(a, oracle::a_rel(s), L);
        }
    }
}

TEST_CASE("closure matches union-find on n=3 samples") {
    auto all = enumerate(AtlasSpec{3, AtlasClass::LeftNondegenerate, {}, false});
    std::vector<Solution> pick{fx::abex(), fx::triv(3), fx::idem(3)};
    for (std::size_t i = 0; i < all.size(); i += 7) pick.push_back(all[i]);
    for (const Solution& s : pick) {
        GradedMonoid m(s, Flavor::M);
        GradedMonoid a(derived_solution(s), Flavor::A);
        for (int L = 0; L <= 5; ++L) {
            same_partition(m, oracle::m_rel(s), L);
            same_partition(a, oracle::a_rel(s), L);
        }
    }
}

TEST_CASE("ABEX growth and canonical forms") {
    Structure s(fx::abex());
    auto gm = growth(s, Flavor::M, 8), ga = growth(s, Flavor::A, 8);
    std::vector<long long> expect{1, 3, 3, 3, 3, 3, 3, 3, 3};
    CHECK(gm.h == expect);
    CHECK(ga.h == expect);
    CHECK(s.M().canonical(2, 0) == Word{0, 0});
    CHECK(s.M().canonical(2, 1) == Word{1, 2});
    CHECK(s.M().canonical(2, 2) == Word{2, 1});
    CHECK(canonical_form(s, Flavor::M, Word{2, 2}) == Word{0, 0});
    CHECK(canonical_form(s, Flavor::M, Word{1, 2}) == Word{1, 2});
}

TEST_CASE("trivial solutions give free commutative monoids") {
    for (int n = 2; n <= 4; ++n) {
        Structure s(fx::triv(n));
        auto g = growth(s, Flavor::M, 6);
        for (int L = 0; L <= 6; ++L) CHECK(g.h[L] == oracle::free_abelian(n, L));
    }
}

TEST_CASE("growth reports the budget instead of throwing") {
    EngineConfig cfg;
    cfg.node_budget = 100;
    Structure s(Solution(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), cfg);
    auto g = growth(s, Flavor::M, 12);
    REQUIRE(g.limited_at);
    CHECK(g.h.size() == static_cast<std::size_t>(*g.limited_at));
    for (std::size_t L = 0; L < g.h.size(); ++L) CHECK(g.h[L] == (1LL << L));
    GradedMonoid m(fx::triv(3), Flavor::M, cfg);
    CHECK_THROWS_AS(m.partition(6), ResourceLimit);
    EngineConfig short_cfg;
    short_cfg.length_budget = 4;
    GradedMonoid t(fx::triv(2), Flavor::M, short_cfg);
    CHECK_THROWS_AS(t.level(5), ResourceLimit);
}

TEST_CASE("disk cache reproduces levels") {
    auto dir = std::filesystem::temp_directory_path() / "ybx-test-cache";
    std::filesystem::remove_all(dir);
    EngineConfig cfg;
    cfg.cache_dir = dir;
    std::vector<int> cold;
    {
        GradedMonoid m(fx::abex(), Flavor::M, cfg);
        cold = m.partition(6);
        CHECK(m.loaded_from_cache() == 0);
    }
    CHECK(cache_info(dir).files > 0);
    {
        GradedMonoid m(fx::abex(), Flavor::M, cfg);
        CHECK(m.partition(6) == cold);
        CHECK(m.loaded_from_cache() > 0);
    }
    // a corrupted file is ignored and rebuilt
    for (auto& e : std::filesystem::directory_iterator(dir)) std::ofstream(e.path()) << "garbage";
    {
        GradedMonoid m(fx::abex(), Flavor::M, cfg);
        CHECK(m.partition(6) == cold);
    }
    CHECK(cache_clear(dir) > 0);
    CHECK(cache_info(dir).files == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("concat and equality") {
    GradedMonoid m(fx::abex(), Flavor::M);
    Word u{2, 2}, v{0, 1}, w{1, 2};
    CHECK(m.equal(u, v));
    CHECK_FALSE(m.equal(u, w));
    auto c = m.concat(m.ref_of(Word{2}), m.ref_of(Word{2}));
    CHECK(c == m.ref_of(Word{0, 0}));
    CHECK(m.first_letters(2, m.class_of(Word{0, 0})) == 0b111);
    CHECK(m.first_letters(2, m.class_of(Word{1, 2})) == 0b010);
}
