#pragma once

// Brute-force reference computations. Nothing here calls into the closure engine, so
// the tests can compare the engine against them.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ybx/solution.hpp"

namespace oracle {

using Rel = std::function<std::pair<int, int>(int, int)>;

inline long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::vector<int> digits(long long w, int n, int L) {
    std::vector<int> d(L);
    for (int i = L - 1; i >= 0; --i, w /= n) d[i] = static_cast<int>(w % n);
    return d;
}

inline long long number(const std::vector<int>& d, int n) {
    long long w = 0;
    for (int x : d) w = w * n + x;
    return w;
}

struct Partition {
    std::vector<int> id;  // per word, words in lexicographic (numeric) order
    int count = 0;
    std::vector<std::vector<int>> canonical;  // lex-least word per class
};

// Union-find over every word of length L, one edge per position per word.
inline Partition naive_partition(int n, int L, const Rel& rel) {
    const long long N = ipow(n, L);
    std::vector<long long> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long long(long long)> find = [&](long long a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (long long w = 0; w < N; ++w) {
        auto d = digits(w, n, L);
        for (int i = 0; i + 1 < L; ++i) {
            auto e = d;
            auto [a, b] = rel(d[i], d[i + 1]);
            e[i] = a;
            e[i + 1] = b;
            long long u = find(w), v = find(number(e, n));
            if (u != v) parent[std::max(u, v)] = std::min(u, v);
        }
    }
    Partition p;
    p.id.assign(N, -1);
    std::map<long long, int> root_id;
    for (long long w = 0; w < N; ++w) {
        long long r = find(w);
        auto [it, fresh] = root_id.try_emplace(r, p.count);
        if (fresh) {
            ++p.count;
            p.canonical.push_back(digits(w, n, L));
        }
        p.id[w] = it->second;
    }
    return p;
}

inline Rel m_rel(const ybx::Solution& s) {
    return [s](int x, int y) { return s(x, y); };
}

// sigma_y(x) straight from the formula, with lambda inverses found by search.
inline std::vector<std::vector<int>> naive_sigma(const ybx::Solution& s) {
    const int n = s.size();
    std::vector<std::vector<int>> sg(n, std::vector<int>(n));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            int t = 0;
            while (s.lambda(x, t) != y) ++t;
            sg[y][x] = s.lambda(y, s.rho(t, x));
        }
    return sg;
}

inline Rel a_rel(const ybx::Solution& s) {
    auto sg = naive_sigma(s);
    return [sg](int x, int y) { return std::pair{y, sg[y][x]}; };
}

inline bool naive_braid(const ybx::Solution& s) {
    const int n = s.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // r12 r23 r12 versus r23 r12 r23
                std::array<int, 3> a{x, y, z}, b{x, y, z};
                auto r12 = [&](std::array<int, 3>& t) { std::tie(t[0], t[1]) = s(t[0], t[1]); };
                auto r23 = [&](std::array<int, 3>& t) { std::tie(t[1], t[2]) = s(t[1], t[2]); };
                r12(a), r23(a), r12(a);
                r23(b), r12(b), r23(b);
                if (a != b) return false;
            }
    return true;
}

// Subsets Z != X with sigma_x(Z) in Z and sigma_x(X\Z) in X\Z for all x outside Z.
inline std::vector<unsigned> naive_invariant_subsets(const ybx::Solution& s) {
    const int n = s.size();
    auto sg = naive_sigma(s);
    std::vector<unsigned> out;
    for (unsigned Z = 0; Z + 1 < (1u << n); ++Z) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (Z >> x & 1) continue;
            for (int y = 0; y < n && ok; ++y)
                ok = ((Z >> y) & 1) == ((Z >> sg[x][y]) & 1);
        }
        if (ok) out.push_back(Z);
    }
    return out;
}

inline int naive_orbit_count(const ybx::Solution& s, unsigned Z) {
    const int n = s.size();
    auto sg = naive_sigma(s);
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if ((Z >> start & 1) || comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = count;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            for (int x = 0; x < n; ++x) {
                if (Z >> x & 1) continue;
                for (int t = 0; t < n; ++t) {
                    if (Z >> t & 1) continue;
                    // undirected edge y -- sigma_x(y)
                    int nb = -1;
                    if (sg[x][y] == t) nb = t;
                    if (sg[x][t] == y) nb = t;
                    if (nb >= 0 && comp[nb] < 0) {
                        comp[nb] = count;
                        stack.push_back(nb);
                    }
                }
            }
        }
        ++count;
    }
    return count;
}

inline int naive_gk(const ybx::Solution& s) {
    int best = 0;
    for (unsigned Z : naive_invariant_subsets(s)) best = std::max(best, naive_orbit_count(s, Z));
    return best;
}

// lambda_{x1} o ... o lambda_{xk} applied to t
inline int lambda_word(const ybx::Solution& s, const std::vector<int>& w, int t) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = s.lambda(*it, t);
    return t;
}

inline std::vector<int> pi_word(const ybx::Solution& s, const std::vector<int>& w) {
    std::vector<int> out;
    std::vector<int> prefix;
    for (int x : w) {
        out.push_back(lambda_word(s, prefix, x));
        prefix.push_back(x);
    }
    return out;
}

// number of monomials of degree L in n commuting variables
inline long long free_abelian(int n, int L) {
    long long r = 1;
    for (int i = 1; i <= n - 1; ++i) r = r * (L + i) / i;
    return r;
}

}  // namespace oracle
