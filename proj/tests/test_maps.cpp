#include "doctest.h"
#include "ybx/error.hpp"
#include "ybx/maps.hpp"

using namespace ybx;

TEST_CASE("compose is f after g") {
    Map f{1, 2, 0}, g{0, 0, 2};
    CHECK(compose(f, g) == Map{1, 1, 0});
    CHECK(compose(g, f) == Map{0, 2, 0});
}

TEST_CASE("inverse and order of permutations") {
    Map p{1, 2, 0, 4, 3};
    CHECK(is_permutation(p));
    CHECK(compose(p, inverse(p)) == identity_map(5));
    CHECK(permutation_order(p) == 6);
    CHECK(power(p, 6) == identity_map(5));
    CHECK(power(p, 0) == identity_map(5));
    CHECK_FALSE(is_permutation(Map{0, 0}));
}

TEST_CASE("idempotent index") {
    CHECK(idempotent_index(identity_map(3)) == 1);
    CHECK(idempotent_index(Map{0, 0, 1}) == 2);       // chain of length 2 into a fixed point
    CHECK(idempotent_index(Map{1, 0, 2}) == 2);       // transposition: f^2 = id
    CHECK(idempotent_index(Map{1, 2, 0}) == 3);
    // tail 1 then a 2-cycle: f^2 is not idempotent, f^4 is? least k with f^2k = f^k is 2
    Map f{1, 2, 1};
    CHECK(compose(power(f, 2), power(f, 2)) == power(f, 2));
    CHECK(idempotent_index(f) == 2);
}

TEST_CASE("monoid closure includes the identity and is sorted") {
    auto m = monoid_closure({Map{1, 0, 2}}, 3, 100);
    CHECK(m.size() == 2);
    CHECK(m.front() == identity_map(3));
    auto s3 = monoid_closure({Map{1, 0, 2}, Map{1, 2, 0}}, 3, 100);
    CHECK(s3.size() == 6);
    CHECK(std::is_sorted(s3.begin(), s3.end()));
    CHECK_THROWS_AS(monoid_closure({Map{1, 0, 2}, Map{1, 2, 0}}, 3, 3), ResourceLimit);
}

TEST_CASE("words round trip") {
    CHECK(word_string({}) == "e");
    CHECK(word_string({1, 2, 0}) == "120");
    CHECK(word_string({1, 11}) == "1.11");
    CHECK(parse_word("120", 3) == Word{1, 2, 0});
    CHECK(parse_word("1.11", 12) == Word{1, 11});
    CHECK_THROWS(parse_word("3", 3));
}

TEST_CASE("subsets") {
    Subset s = 0b101;
    CHECK(popcount(s) == 2);
    CHECK(contains(s, 2));
    CHECK_FALSE(contains(s, 1));
    CHECK(full_set(3) == 0b111);
    CHECK(elements(s) == std::vector<int>{0, 2});
    CHECK(image(Map{1, 1, 0}, s) == 0b011);
    CHECK(subset_string(s) == "{0,2}");
    CHECK(binomial(5, 2) == 10);
    CHECK(lcm(4, 6) == 12);
}
