#include "ybx/maps.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "ybx/error.hpp"

namespace ybx {

Map identity_map(int n) {
    Map m(n);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

Map compose(const Map& f, const Map& g) {
    Map h(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
    return h;
}

bool is_permutation(const Map& f) {
    std::vector<char> seen(f.size(), 0);
    for (int y : f) {
        if (y < 0 || y >= static_cast<int>(f.size()) || seen[y]) return false;
        seen[y] = 1;
    }
    return true;
}

bool is_identity(const Map& f) {
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f[x] != static_cast<int>(x)) return false;
    return true;
}

Map inverse(const Map& f) {
    if (!is_permutation(f)) throw InvalidInput("map " + to_string(f) + " is not a permutation");
    Map g(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) g[f[x]] = static_cast<int>(x);
    return g;
}

Map power(const Map& f, long long k) {
    Map result = identity_map(static_cast<int>(f.size()));
    Map base = f;
    while (k > 0) {
        if (k & 1) result = compose(base, result);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

int permutation_order(const Map& f) {
    if (!is_permutation(f)) throw InvalidInput("order of a non-permutation");
    long long ord = 1;
    std::vector<char> seen(f.size(), 0);
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (seen[x]) continue;
        long long len = 0;
        for (int y = static_cast<int>(x); !seen[y]; y = f[y]) {
            seen[y] = 1;
            ++len;
        }
        ord = lcm(ord, len);
    }
    return static_cast<int>(ord);
}

int idempotent_index(const Map& f) {
    Map fk = f;
    for (int k = 1;; ++k) {
        if (compose(fk, fk) == fk) return k;
        fk = compose(f, fk);
    }
}

std::vector<Map> monoid_closure(const std::vector<Map>& gens, int n, std::size_t limit) {
    std::set<Map> seen{identity_map(n)};
    std::vector<Map> frontier{identity_map(n)};
    while (!frontier.empty()) {
        std::vector<Map> next;
        for (const Map& m : frontier) {
            for (const Map& g : gens) {
                Map h = compose(g, m);
                if (seen.insert(h).second) {
                    if (seen.size() > limit)
                        throw ResourceLimit("map monoid exceeds " + std::to_string(limit) + " elements", 0,
                                            seen.size(), limit);
                    next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Map apply(const Map& f, const Word& w) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = f[w[i]];
    return out;
}

std::string to_string(const Map& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ']';
    return os.str();
}

std::string word_string(const Word& w) {
    if (w.empty()) return "e";
    std::ostringstream os;
    bool wide = std::any_of(w.begin(), w.end(), [](int x) { return x > 9; });
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i) os << '.';
        os << w[i];
    }
    return os.str();
}

Word parse_word(const std::string& s, int n) {
    Word w;
    if (s == "e" || s.empty()) return w;
    bool dotted = s.find_first_of(".,") != std::string::npos;
    if (dotted) {
        std::string tok;
        std::istringstream is(s);
        while (std::getline(is, tok, s.find('.') != std::string::npos ? '.' : ','))
            w.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') throw InvalidInput("bad letter '" + std::string(1, c) + "' in word " + s);
            w.push_back(c - '0');
        }
    }
    for (int x : w)
        if (x < 0 || x >= n) throw InvalidInput("letter " + std::to_string(x) + " out of range in word " + s);
    return w;
}

int popcount(Subset s) { return std::popcount(s); }
bool contains(Subset s, int x) { return (s >> x) & 1u; }
Subset full_set(int n) { return n >= 32 ? ~Subset{0} : ((Subset{1} << n) - 1); }

std::vector<int> elements(Subset s) {
    std::vector<int> out;
    for (int x = 0; s; ++x, s >>= 1)
        if (s & 1u) out.push_back(x);
    return out;
}

Subset image(const Map& f, Subset s) {
    Subset out = 0;
    for (int x : elements(s)) out |= Subset{1} << f[x];
    return out;
}

std::string subset_string(Subset s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int x : elements(s)) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << '}';
    return os.str();
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long lcm(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace ybx
