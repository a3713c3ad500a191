#include "ybx/invariants.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "ybx/error.hpp"
#include "ybx/socle.hpp"

namespace ybx {

std::vector<Subset> invariant_subsets(const Solution& s) {
    const int n = s.size();
    const auto sigma = sigma_maps(s);
    const Subset X = full_set(n);
    std::vector<Subset> out;
    for (Subset Z = 0; Z < X; ++Z) {
        const Subset rest = X & ~Z;
        bool ok = true;
        for (int x : elements(rest)) {
            if ((image(sigma[x], Z) & ~Z) || (image(sigma[x], rest) & Z)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(Z);
    }
    return out;
}

int orbit_count(const Solution& s, Subset Z) {
    const int n = s.size();
    const auto sigma = sigma_maps(s);
    const Subset rest = full_set(n) & ~Z;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x : elements(rest))
        for (int y : elements(rest)) {
            const int t = sigma[x][y];
            if (contains(rest, t)) parent[find(y)] = find(t);
        }
    int count = 0;
    for (int y : elements(rest))
        if (find(y) == y) ++count;
    return count;
}

GkResult gk_dimension(const Solution& s) {
    GkResult r;
    for (Subset Z : invariant_subsets(s)) {
        const int t = orbit_count(s, Z);
        r.table.emplace_back(Z, t);
        r.gk = std::max(r.gk, t);
    }
    return r;
}

bool prime_at_depth(Structure& s, Subset Z, int L) {
    GradedMonoid& a = s.A();
    const int n = s.size();
    auto in_p = [&](int l, int id) { return (a.first_letters(l, id) & Z) != 0; };
    for (int l = 0; l < L; ++l)
        for (int id = 0; id < a.class_count(l); ++id) {
            const bool p = in_p(l, id);
            const Word w = a.canonical(l, id);
            for (int x = 0; x < n; ++x) {
                Word xw{x};
                xw.insert(xw.end(), w.begin(), w.end());
                if (p && (!in_p(l + 1, a.append(l, id, x)) || !in_p(l + 1, a.class_of(xw)))) return false;
            }
        }
    for (int la = 1; la < L; ++la)
        for (int lb = 1; la + lb <= L; ++lb)
            for (int i = 0; i < a.class_count(la); ++i) {
                if (in_p(la, i)) continue;
                for (int j = 0; j < a.class_count(lb); ++j) {
                    if (in_p(lb, j)) continue;
                    ClassRef p = a.concat({Flavor::A, la, i}, {Flavor::A, lb, j});
                    if (in_p(p.length, p.id)) return false;
                }
            }
    return true;
}

PrimeSpectrum spec_A(Structure& s, int L) {
    PrimeSpectrum sp;
    sp.probed_length = L;
    GradedMonoid& a = s.A();
    for (Subset Z : invariant_subsets(s.solution())) {
        if (Z == 0) continue;
        sp.primes.push_back(Z);
        Subset back = 0;
        for (int x = 0; x < s.size(); ++x)
            if (a.first_letters(1, a.class_of(Word{x})) & Z) back |= Subset{1} << x;
        if (back != Z) sp.round_trip = false;
        if (!prime_at_depth(s, Z, L)) sp.prime_at_depth = false;
    }
    const int k = static_cast<int>(sp.primes.size());
    auto below = [&](int i, int j) { return sp.primes[i] != sp.primes[j] && (sp.primes[i] & ~sp.primes[j]) == 0; };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (!below(i, j)) continue;
            bool cover = true;
            for (int m = 0; m < k && cover; ++m)
                if (below(i, m) && below(m, j)) cover = false;
            if (cover) sp.hasse.emplace_back(i, j);
        }
    return sp;
}

std::string PrimeSpectrum::dot() const {
    std::ostringstream os;
    os << "digraph spec_A {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < primes.size(); ++i)
        os << "  p" << i << " [label=\"P(" << subset_string(primes[i]) << ")\"];\n";
    for (auto [i, j] : hasse) os << "  p" << i << " -> p" << j << ";\n";
    os << "}\n";
    return os.str();
}

BijectiveRetract bijective_retract(Structure& s) {
    const int n = s.size();
    const auto& sigma = s.sigma();
    const Word z = z_kappa_word(s, identity_map(n));
    BijectiveRetract r;
    r.sigma_z = s.sigma_of(z);
    r.projection.assign(n, -1);
    std::map<int, int> label;
    for (int x = 0; x < n; ++x) {
        auto [it, fresh] = label.try_emplace(r.sigma_z[x], static_cast<int>(label.size()));
        r.projection[x] = it->second;
    }
    const int k = static_cast<int>(label.size());
    std::vector<Map> bar(k, Map(k, -1));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            int& slot = bar[r.projection[y]][r.projection[x]];
            const int img = r.projection[sigma[y][x]];
            if (slot >= 0 && slot != img) throw IllDefined("sigma does not descend to the retract");
            slot = img;
        }
    std::vector<std::pair<int, int>> t;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) t.emplace_back(y, bar[y][x]);
    for (int y = 0; y < k; ++y)
        if (!is_permutation(bar[y])) throw InconsistentSolution("induced sigma on the retract is not bijective");
    r.quotient = Solution(k, std::move(t));
    return r;
}

}  // namespace ybx
