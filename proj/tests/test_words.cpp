#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "ybx/atlas.hpp"
#include "ybx/error.hpp"
#include "ybx/structure.hpp"
#include "ybx/words.hpp"

using namespace ybx;

namespace {

// pi sends M-classes to A-classes bijectively, computed on raw words.
bool naive_cocycle_bijective(const Solution& s, int L) {
    const int n = s.size();
    auto pm = oracle::naive_partition(n, L, oracle::m_rel(s));
    auto pa = oracle::naive_partition(n, L, oracle::a_rel(s));
    if (pm.count != pa.count) return false;
    std::vector<int> image(pm.count, -1);
    for (long long w = 0; w < static_cast<long long>(pm.id.size()); ++w) {
        auto pw = oracle::pi_word(s, oracle::digits(w, n, L));
        int a = pa.id[oracle::number(pw, n)];
        int& slot = image[pm.id[w]];
        if (slot >= 0 && slot != a) return false;
        slot = a;
    }
    std::sort(image.begin(), image.end());
    return std::adjacent_find(image.begin(), image.end()) == image.end();
}

}  // namespace

TEST_CASE("cocycle is a bijection on every n=2 solution") {
    for (const Solution& sol : enumerate(AtlasSpec{2, AtlasClass::LeftNondegenerate, {}, false})) {
        Structure s(sol);
        for (int L = 0; L <= 6; ++L) {
            auto c = check_cocycle(s, L);
            CHECK(c.bijective);
            CHECK(c.m_classes == c.a_classes);
            CHECK(naive_cocycle_bijective(sol, L));
        }
    }
}

TEST_CASE("pi and its inverse on words") {
    Structure s(fx::abex());
    for (long long w = 0; w < 81; ++w) {
        auto word = oracle::digits(w, 3, 4);
        auto p = s.pi_word(word);
        CHECK(p == oracle::pi_word(fx::abex(), word));
        CHECK(s.pi_inverse_word(p) == word);
    }
    auto c = s.M().ref_of(Word{1, 2});
    auto a = cocycle_pi(s, Word{1, 2});
    CHECK(cocycle_pi_inverse(s, a) == c);
}

TEST_CASE("lambda is constant on M-classes") {
    for (const Solution& sol : {fx::abex(), fx::r2ex(), fx::idem(3), fx::group2()}) {
        Structure s(sol);
        const int n = sol.size();
        for (int L = 1; L <= 5; ++L) {
            auto p = oracle::naive_partition(n, L, oracle::m_rel(sol));
            for (long long w = 0; w < static_cast<long long>(p.id.size()); ++w) {
                auto word = oracle::digits(w, n, L);
                const Map& lam = s.class_lambda(L, p.id[w]);
                for (int t = 0; t < n; ++t) CHECK(lam[t] == oracle::lambda_word(sol, word, t));
                CHECK(lambda_of(s, word) == lam);
            }
        }
    }
}

TEST_CASE("left divisors") {
    Structure s(fx::triv(3));
    auto c = s.A().ref_of(Word{0, 2});
    CHECK(left_divisors(s, c) == 0b101);
    Structure i(fx::idem(2));
    // x y = y y in M, so only the last letter survives
    auto m = i.M().ref_of(Word{0, 1});
    CHECK(left_divisors(i, m) == 0b11);
}

TEST_CASE("automorphisms of A") {
    Structure t(fx::triv(3));
    auto c = t.A().ref_of(Word{0, 0, 1});
    CHECK(apply_automorphism(t, Map{2, 0, 1}, c) == t.A().ref_of(Word{2, 2, 0}));
    Structure a(fx::abex());
    for (int x = 0; x < 3; ++x) {
        Map g = fx::abex().lambda_map(x);
        for (int id = 0; id < a.A().class_count(3); ++id) {
            ClassRef r{Flavor::A, 3, id};
            auto img = apply_automorphism(a, g, r);
            CHECK(img == a.A().ref_of(ybx::apply(g, a.A().canonical(r))));
        }
    }
    Structure t2(fx::triv(2));
    CHECK_NOTHROW(apply_automorphism(t2, Map{1, 0}, t2.A().ref_of(Word{0, 1})));
}

TEST_CASE("letter maps: well defined on A exactly when they respect the partition") {
    int ill = 0;
    for (const Solution& sol : enumerate(AtlasSpec{2, AtlasClass::LeftNondegenerate, {}, false})) {
        for (const Map& g : {Map{1, 0}, Map{0, 0}, Map{1, 1}}) {
            bool respects = true;
            for (int L = 1; L <= 3; ++L) {
                auto p = oracle::naive_partition(2, L, oracle::a_rel(sol));
                for (long long u = 0; u < static_cast<long long>(p.id.size()); ++u)
                    for (long long v = u + 1; v < static_cast<long long>(p.id.size()); ++v) {
                        if (p.id[u] != p.id[v]) continue;
                        auto gu = ybx::apply(g, oracle::digits(u, 2, L)), gv = ybx::apply(g, oracle::digits(v, 2, L));
                        respects = respects && p.id[oracle::number(gu, 2)] == p.id[oracle::number(gv, 2)];
                    }
            }
            Structure s(sol);
            bool threw = false;
            try {
                for (int id = 0; id < s.A().class_count(3); ++id) apply_automorphism(s, g, ClassRef{Flavor::A, 3, id});
            } catch (const IllDefined&) {
                threw = true;
            }
            CHECK(threw == !respects);
            ill += threw;
        }
    }
    CHECK(ill > 0);
}
