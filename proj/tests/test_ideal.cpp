#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "ybx/atlas.hpp"
#include "ybx/error.hpp"
#include "ybx/ideal.hpp"
#include "ybx/maps.hpp"

using namespace ybx;

TEST_CASE("exact Noetherian verdicts for idempotent solutions") {
    Structure i2(fx::idem(2));
    auto r = noetherian_diagnosis(i2, ProbeBounds{});
    CHECK(r.front().verdict == Verdict::RefutedWithWitness);
    CHECK(replay_cancellation_witness(fx::idem(2), r.front().witness));
    Structure g(fx::group2());
    CHECK(noetherian_diagnosis(g, ProbeBounds{}).front().verdict == Verdict::Proved);
    Structure i3(fx::idem(3));
    CHECK(noetherian_diagnosis(i3, ProbeBounds{}).front().verdict == Verdict::RefutedWithWitness);
}

TEST_CASE("d A_XX is not cancellative for IDEM_2 and the witness replays") {
    Structure s(fx::idem(2));
    auto res = cancellativity_probe(s, cell::AYYSum{full_set(2), 1}, ProbeBounds{});
    REQUIRE(res.report.verdict == Verdict::RefutedWithWitness);
    CHECK(replay_cancellation_witness(fx::idem(2), res.report.witness));
    auto forged = res.report.witness;
    forged["b"] = forged["a"];
    CHECK_FALSE(replay_cancellation_witness(fx::idem(2), forged));
}

TEST_CASE("divisor-set cells against raw words") {
    for (const Solution& sol : {fx::abex(), fx::triv(3), fx::idem(2)}) {
        Structure s(sol);
        const int n = sol.size(), L = 4;
        for (Subset Y = 1; Y <= full_set(n); ++Y) {
            std::set<ClassRef> want;
            for (int l = 1; l <= L; ++l) {
                auto p = oracle::naive_partition(n, l, oracle::a_rel(sol));
                std::vector<Subset> firsts(p.count, 0);
                for (long long w = 0; w < static_cast<long long>(p.id.size()); ++w)
                    firsts[p.id[w]] |= Subset{1} << oracle::digits(w, n, l)[0];
                for (int c = 0; c < p.count; ++c)
                    if (firsts[c] == Y) want.insert(ClassRef{Flavor::A, l, c});
            }
            auto got = ayy_members(s, Y, L);
            CHECK(std::set<ClassRef>(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("ideal chain has the ideal property") {
    for (const Solution& sol : enumerate(AtlasSpec{2, AtlasClass::LeftNondegenerate, {}, false})) {
        Structure s(sol);
        CHECK(ideal_chain(s, Flavor::A, 5).ideal_property);
        CHECK(ideal_chain(s, Flavor::M, 5).ideal_property);
    }
    Structure a(fx::abex());
    CHECK(ideal_chain(a, Flavor::A, 5).ideal_property);
}

TEST_CASE("ABEX w_Y") {
    Structure s(fx::abex());
    auto w = w_y_element(s, 0b010, 4, 6);
    CHECK(word_string(s.M().canonical(w)) == "12");
    CHECK(word_string(s.pi_word(s.M().canonical(w))) == "11");
}

TEST_CASE("idempotent powers agree with the diagonal image") {
    for (const Solution& sol : {fx::idem(2), fx::idem(3), fx::group2()}) {
        Structure s(sol);
        auto r = check_idempotent_powers(s, 5, 4);
        CHECK(r.consistent);
        CHECK(r.lambda_singleton == (sol == fx::group2()));
    }
}

TEST_CASE("product lemmas hold on small solutions") {
    for (const Solution& sol : enumerate(AtlasSpec{2, AtlasClass::LeftNondegenerate, {}, false})) {
        Structure s(sol);
        for (int i = 0; i <= 2; ++i) CHECK_FALSE(check_cross_cell_products(s, i, 4, 50, 7));
        CHECK_FALSE(check_cell_symmetry(s, 4, 3));
    }
    Structure a(fx::abex());
    CHECK_FALSE(check_cross_cell_products(a, 1, 4, 100, 1));
    CHECK_FALSE(check_cell_symmetry(a, 4, 3));
}

TEST_CASE("L_u membership for IDEM_2") {
    // x y = y y: 0 + 0 is divisible by both letters, so {0} is nil; X itself is not
    Structure s(fx::idem(2));
    auto single = lu_membership(s, 0b01, 3, 5);
    CHECK(is_nil_report(single));
    CHECK(single.witness["d"] == 2);
    auto top = lu_membership(s, 0b11, 3, 5);
    CHECK_FALSE(is_nil_report(top));
    CHECK_THROWS_AS(w_y_element(s, 0b01, 3, 5), PreconditionUnmet);
}
