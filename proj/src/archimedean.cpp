#include "ybx/archimedean.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ybx/error.hpp"
#include "ybx/ideal.hpp"

namespace ybx {

namespace {

class Divisibility {
public:
    Divisibility(GradedMonoid& g) : g_(g) {}

    // c in a + A
    bool divides(ClassRef a, ClassRef c) {
        if (c.length < a.length) return false;
        auto& reach = reach_[a];
        if (reach.empty()) reach.push_back({a.id});
        while (static_cast<int>(reach.size()) <= c.length - a.length) {
            const int l = a.length + static_cast<int>(reach.size()) - 1;
            std::vector<char> next(g_.class_count(l + 1), 0);
            const auto& cur = reach.back();
            std::vector<int> ids;
            for (int id : cur)
                for (int x = 0; x < g_.generators(); ++x) next[g_.append(l, id, x)] = 1;
            for (int id = 0; id < static_cast<int>(next.size()); ++id)
                if (next[id]) ids.push_back(id);
            reach.push_back(std::move(ids));
        }
        const auto& row = reach[c.length - a.length];
        return std::binary_search(row.begin(), row.end(), c.id);
    }

    ClassRef multiple(ClassRef b, int k) {
        ClassRef p{g_.flavor(), 0, 0};
        for (int i = 0; i < k; ++i) p = g_.concat(p, b);
        return p;
    }

    bool archimedean(ClassRef a, ClassRef b, int bound) { return half(a, b, bound) && half(b, a, bound); }

private:
    // a | k b for some 1 <= k <= bound
    bool half(ClassRef a, ClassRef b, int bound) {
        if (b.length == 0) return a.length == 0;
        for (int k = std::max(1, (a.length + b.length - 1) / b.length); k <= std::max(bound, 1); ++k)
            if (divides(a, multiple(b, k))) return true;
        return false;
    }

    GradedMonoid& g_;
    std::map<ClassRef, std::vector<std::vector<int>>> reach_;
};

}  // namespace

ArchimedeanResult archimedean_components(const Solution& derived, int L, const EngineConfig& cfg) {
    const int n = derived.size();
    for (int x = 0; x < n; ++x) {
        if (!is_identity(derived.lambda_map(x))) throw PreconditionUnmet("expected a left derived solution (lambda = id)");
        if (!is_permutation(derived.rho_map(x))) throw PreconditionUnmet("sigma maps are not bijective");
    }
    Structure st(derived, cfg);
    GradedMonoid& g = st.M();
    Divisibility dv(g);
    ArchimedeanResult res;
    res.length = L;
    std::vector<ClassRef> all;
    for (int l = 0; l <= L; ++l)
        for (int id = 0; id < g.class_count(l); ++id) all.push_back({Flavor::M, l, id});
    const int k = static_cast<int>(all.size());
    std::vector<std::vector<char>> rel(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) rel[i][j] = rel[j][i] = dv.archimedean(all[i], all[j], L);
    std::vector<int> comp(k, -1);
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        const int c = static_cast<int>(res.components.size());
        res.components.push_back({});
        for (int j = i; j < k; ++j)
            if (rel[i][j] && comp[j] < 0) {
                comp[j] = c;
                res.components.back().push_back(all[j]);
            }
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (rel[i][j] != (comp[i] == comp[j])) res.relation_transitive = false;
    std::map<ClassRef, int> index;
    for (int i = 0; i < k; ++i) index[all[i]] = comp[i];
    for (const auto& members : res.components) {
        const Subset d = g.first_letters(members.front().length, members.front().id);
        res.divisors.push_back(d);
        for (const ClassRef& m : members)
            if (g.first_letters(m.length, m.id) != d) {
                if (res.refines_divisor_partition) res.mixed_pair.emplace_back(members.front(), m);
                res.refines_divisor_partition = false;
            }
    }
    std::map<Subset, int> block_component;
    for (int i = 0; i < k; ++i) {
        auto [it, fresh] = block_component.try_emplace(g.first_letters(all[i].length, all[i].id), comp[i]);
        if (!fresh && it->second != comp[i]) res.divisor_blocks_within_components = false;
    }
    const int c = static_cast<int>(res.components.size());
    auto component_of = [&](ClassRef p) {
        if (p.length <= L) return index.at(p);
        for (int t = 0; t < c; ++t)
            if (dv.archimedean(p, res.components[t].front(), std::max(L, p.length))) return t;
        return -1;
    };
    res.table.assign(c, std::vector<int>(c, -1));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) res.table[i][j] = component_of(g.concat(res.components[i].front(), res.components[j].front()));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (all[i].length + all[j].length <= L && index.at(g.concat(all[i], all[j])) != res.table[comp[i]][comp[j]])
                res.product_well_defined = false;
    for (int i = 0; i < c; ++i) {
        if (res.table[i][i] != i) res.idempotent = false;
        for (int j = 0; j < c; ++j) {
            if (res.table[i][j] != res.table[j][i]) res.commutative = false;
            for (int t = 0; t < c; ++t) {
                const int ij = res.table[i][j], jt = res.table[j][t];
                if (ij < 0 || jt < 0 || res.table[ij][t] != res.table[i][jt]) res.associative = false;
            }
        }
    }
    for (int i = 0; i < c; ++i) {
        DiagnosisReport r;
        r.question = "component " + std::to_string(i) + " cancellative";
        r.depth = {L, 0, 0};
        if (auto w = find_cancellation_witness(g, res.components[i])) {
            r.verdict = Verdict::RefutedWithWitness;
            r.witness = *w;
            res.semiprime_evidence = false;
        } else {
            r.verdict = Verdict::EvidenceAtDepth;
            r.detail = std::to_string(res.components[i].size()) + " members";
        }
        res.cancellativity.push_back(r);
    }
    return res;
}

}  // namespace ybx
