#include <map>

#include "ybx/error.hpp"
#include "ybx/invariants.hpp"
#include "ybx/socle.hpp"

namespace ybx {

namespace {

using Blocks = std::vector<std::vector<int>>;

// blocks[l][a] groups A-classes of length l by the class of a + t z.
Blocks eta_blocks(GradedMonoid& a, const Word& z, int t, int L) {
    Word tz;
    for (int i = 0; i < t; ++i) tz.insert(tz.end(), z.begin(), z.end());
    Blocks b(L + 1);
    for (int l = 0; l <= L; ++l) {
        std::map<int, int> ids;
        for (int id = 0; id < a.class_count(l); ++id) {
            auto [it, fresh] = ids.try_emplace(a.fold(l, id, tz), static_cast<int>(ids.size()));
            b[l].push_back(it->second);
        }
    }
    return b;
}

int count_blocks(const std::vector<int>& row) {
    int m = -1;
    for (int v : row) m = std::max(m, v);
    return m + 1;
}

void fill_common(GradedMonoid& g, CongruenceResult& r, const std::vector<int>& class_counts) {
    const int L = r.length;
    const int n = g.generators();
    r.block_count = count_blocks(r.blocks[L]);
    r.is_equality = true;
    for (int l = 0; l <= L && r.witness.is_null(); ++l) {
        if (count_blocks(r.blocks[l]) == class_counts[l]) continue;
        r.is_equality = false;
        std::map<int, int> first;
        for (int id = 0; id < class_counts[l]; ++id) {
            auto [it, fresh] = first.try_emplace(r.blocks[l][id], id);
            if (!fresh) {
                r.witness = {{"kind", "identified"},
                             {"a", word_string(g.canonical(l, it->second))},
                             {"b", word_string(g.canonical(l, id))}};
                break;
            }
        }
    }
    // right cancellation by generators in the quotient
    for (int l = 0; l < L && r.right_cancellative; ++l)
        for (int x = 0; x < n && r.right_cancellative; ++x) {
            std::map<int, int> seen;  // block of a x -> block of a
            for (int id = 0; id < class_counts[l] && r.right_cancellative; ++id) {
                const int up = r.blocks[l + 1][g.append(l, id, x)];
                auto [it, fresh] = seen.try_emplace(up, r.blocks[l][id]);
                if (!fresh && it->second != r.blocks[l][id]) {
                    r.right_cancellative = false;
                    r.witness = {{"kind", "right-cancellation"}, {"x", x}, {"length", l}};
                }
            }
        }
}

}  // namespace

CongruenceResult cancellative_congruence_A(Structure& s, int L, int t_max) {
    CongruenceResult r;
    r.flavor = Flavor::A;
    r.length = L;
    GradedMonoid& a = s.A();
    const Word z = z_kappa_word(s, identity_map(s.size()));
    std::vector<Blocks> eta;
    eta.push_back(eta_blocks(a, z, 1, L));
    for (int t = 1; t <= t_max; ++t) {
        eta.push_back(eta_blocks(a, z, t + 1, L));
        if (eta[t - 1] == eta[t]) {
            r.t = t;
            r.stabilized = true;
            break;
        }
    }
    if (!r.stabilized) {
        r.blocks = eta.back();
    } else {
        r.blocks = eta[r.t - 1];
        r.stable_after = eta_blocks(a, z, r.t + 2, L) == r.blocks;
    }
    std::vector<int> counts;
    for (int l = 0; l <= L; ++l) counts.push_back(a.class_count(l));
    fill_common(a, r, counts);
    return r;
}

CongruenceResult cancellative_congruence_M(Structure& s, int L, int t_max) {
    CongruenceResult ra = cancellative_congruence_A(s, L, t_max);
    CongruenceResult r;
    r.flavor = Flavor::M;
    r.length = L;
    r.t = ra.t;
    r.stabilized = ra.stabilized;
    r.stable_after = ra.stable_after;
    r.lambda_check_applies = is_bijective(s.solution());
    GradedMonoid& m = s.M();
    std::vector<int> counts;
    for (int l = 0; l <= L; ++l) {
        counts.push_back(m.class_count(l));
        std::map<std::pair<int, Map>, int> ids;
        std::map<int, Map> lambda_of_block;
        std::vector<int> row;
        for (int id = 0; id < counts[l]; ++id) {
            const int ablock = ra.blocks[l][s.class_pi(l, id)];
            const Map& lam = s.class_lambda(l, id);
            auto [it, fresh] = ids.try_emplace({ablock, lam}, static_cast<int>(ids.size()));
            row.push_back(it->second);
            auto [jt, first] = lambda_of_block.try_emplace(ablock, lam);
            if (!first && jt->second != lam) r.lambda_check_holds = false;
        }
        r.blocks.push_back(std::move(row));
    }
    fill_common(m, r, counts);
    return r;
}

}  // namespace ybx
