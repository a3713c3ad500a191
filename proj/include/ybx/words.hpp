#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ybx/structure.hpp"

namespace ybx {

Word canonical_form(Structure& s, Flavor f, std::span<const int> word);
bool equal(Structure& s, Flavor f, std::span<const int> u, std::span<const int> v);

struct Growth {
    Flavor flavor = Flavor::M;
    std::vector<long long> h;       // h[L] for L = 0..reached
    std::optional<int> limited_at;  // first length that hit the budget
    std::string limit_message;
};
Growth growth(Structure& s, Flavor f, int max_length);

Map lambda_of(const Structure& s, std::span<const int> word);
// A-class of pi(word) for an M-word.
ClassRef cocycle_pi(Structure& s, std::span<const int> m_word);
// The M-class with pi-image c.
ClassRef cocycle_pi_inverse(Structure& s, ClassRef a_class);
// Generators x with c in x + A (flavor A) or x M (flavor M).
Subset left_divisors(Structure& s, ClassRef c);

// Letterwise image of an A-class under g; IllDefined (with witness in the message) if g
// does not respect the relations of A up to the class length.
ClassRef apply_automorphism(Structure& s, const Map& g, ClassRef c);

// pi is well defined and a bijection on length-L classes.
struct CocycleCheck {
    int length = 0;
    long long m_classes = 0;
    long long a_classes = 0;
    bool bijective = false;
};
CocycleCheck check_cocycle(Structure& s, int L);

}  // namespace ybx
