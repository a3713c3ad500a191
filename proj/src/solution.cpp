#include "ybx/solution.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "ybx/error.hpp"

namespace ybx {

Solution::Solution(int n, std::vector<std::pair<int, int>> table) : n_(n), table_(std::move(table)) {
    if (n < 1 || n > kMaxGenerators)
        throw InvalidInput("n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGenerators));
    if (table_.size() != static_cast<std::size_t>(n) * n)
        throw InvalidInput("r-table has " + std::to_string(table_.size()) + " entries, expected " +
                           std::to_string(n * n));
    for (std::size_t i = 0; i < table_.size(); ++i) {
        auto [u, v] = table_[i];
        if (u < 0 || u >= n || v < 0 || v >= n) {
            std::ostringstream os;
            os << "r(" << i / n << "," << i % n << ") = (" << u << "," << v << ") out of range";
            throw InvalidInput(os.str());
        }
    }
}

Solution Solution::from_maps(const std::vector<Map>& lambda, const std::vector<Map>& rho) {
    const int n = static_cast<int>(lambda.size());
    if (rho.size() != lambda.size()) throw InvalidInput("lambda and rho families differ in size");
    for (const auto& m : lambda)
        if (static_cast<int>(m.size()) != n) throw InvalidInput("lambda map of wrong length");
    for (const auto& m : rho)
        if (static_cast<int>(m.size()) != n) throw InvalidInput("rho map of wrong length");
    std::vector<std::pair<int, int>> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x * n + y] = {lambda[x][y], rho[y][x]};
    return Solution(n, std::move(t));
}

Map Solution::lambda_map(int x) const {
    Map m(n_);
    for (int y = 0; y < n_; ++y) m[y] = lambda(x, y);
    return m;
}

Map Solution::rho_map(int y) const {
    Map m(n_);
    for (int x = 0; x < n_; ++x) m[x] = rho(y, x);
    return m;
}

std::uint64_t Solution::hash() const {
    // FNV-1a over n and the table
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (auto [u, v] : table_) mix(static_cast<std::uint64_t>(u * n_ + v));
    return h;
}

std::string Solution::hash_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
}

std::string Solution::compact() const {
    std::ostringstream os;
    os << n_ << '|';
    for (std::size_t i = 0; i < table_.size(); ++i)
        os << (i ? " " : "") << table_[i].first << table_[i].second;
    return os.str();
}

std::optional<std::array<int, 3>> braid_violation(const Solution& s) {
    const int n = s.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [a, b] = s(x, y);
            for (int z = 0; z < n; ++z) {
                auto [c, d] = s(b, z);
                auto [e, f] = s(a, c);
                auto [p, q] = s(y, z);
                auto [g, t] = s(x, p);
                auto [u, w] = s(t, q);
                if (e != g || f != u || d != w) return std::array<int, 3>{x, y, z};
            }
        }
    return std::nullopt;
}

bool validate_yang_baxter(const Solution& s) { return !braid_violation(s); }

bool is_left_nondegenerate(const Solution& s) {
    for (int x = 0; x < s.size(); ++x)
        if (!is_permutation(s.lambda_map(x))) return false;
    return true;
}

bool is_right_nondegenerate(const Solution& s) {
    for (int y = 0; y < s.size(); ++y)
        if (!is_permutation(s.rho_map(y))) return false;
    return true;
}

bool is_bijective(const Solution& s) {
    std::set<std::pair<int, int>> img(s.table().begin(), s.table().end());
    return img.size() == s.table().size();
}

bool is_involutive(const Solution& s) {
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            auto [u, v] = s(x, y);
            if (s(u, v) != std::pair{x, y}) return false;
        }
    return true;
}

bool is_idempotent(const Solution& s) {
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            auto uv = s(x, y);
            if (s(uv.first, uv.second) != uv) return false;
        }
    return true;
}

bool has_fixed_rho(const Solution& s) {
    for (int y = 1; y < s.size(); ++y)
        if (s.rho_map(y) != s.rho_map(0)) return false;
    return true;
}

std::vector<Map> sigma_maps(const Solution& s) {
    const int n = s.size();
    std::vector<Map> lam_inv(n);
    for (int x = 0; x < n; ++x) {
        Map l = s.lambda_map(x);
        if (!is_permutation(l)) throw PreconditionUnmet("solution is not left non-degenerate");
        lam_inv[x] = inverse(l);
    }
    std::vector<Map> sigma(n, Map(n));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) sigma[y][x] = s.lambda(y, s.rho(lam_inv[x][y], x));
    return sigma;
}

Solution derived_solution(const Solution& s) {
    const int n = s.size();
    auto sigma = sigma_maps(s);
    std::vector<std::pair<int, int>> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x * n + y] = {y, sigma[y][x]};
    return Solution(n, std::move(t));
}

DiagonalData diagonal_data(const Solution& s) {
    DiagonalData d;
    const int n = s.size();
    d.q.resize(n);
    for (int x = 0; x < n; ++x) {
        Map l = s.lambda_map(x);
        if (!is_permutation(l)) throw PreconditionUnmet("solution is not left non-degenerate");
        d.q[x] = inverse(l)[x];
        d.image |= Subset{1} << d.q[x];
    }
    d.k = idempotent_index(d.q);
    d.bijective = is_permutation(d.q);
    return d;
}

ActionClosures action_closures(const Solution& s, std::size_t limit) {
    ActionClosures a;
    const int n = s.size();
    std::vector<Map> lam;
    for (int x = 0; x < n; ++x) lam.push_back(s.lambda_map(x));
    auto sigma = sigma_maps(s);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (compose(sigma[x], sigma[y]) != compose(sigma[sigma[x][y]], sigma[x]))
                throw InconsistentSolution("sigma_" + std::to_string(x) + " sigma_" + std::to_string(y) +
                                           " != sigma_{sigma_x(y)} sigma_x");
    a.g_lambda = monoid_closure(lam, n, limit);
    long long e = 1;
    for (const Map& g : a.g_lambda) e = lcm(e, permutation_order(g));
    a.e = static_cast<int>(e);
    a.sigma = monoid_closure(sigma, n, limit);
    for (int es = 1;; ++es) {
        bool ok = true;
        for (const Map& sx : sigma)
            if (power(sx, 2 * es) != power(sx, es)) {
                ok = false;
                break;
            }
        if (ok) {
            a.e_sigma = es;
            break;
        }
    }
    a.k = diagonal_data(s).k;
    a.v = static_cast<long long>(a.k) * a.e * a.e_sigma;
    return a;
}

}  // namespace ybx
