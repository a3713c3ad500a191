#include <algorithm>
#include <map>
#include <set>

#include "ybx/error.hpp"
#include "ybx/solution.hpp"

namespace ybx {

namespace {

void check_map(const Map& m, int n, const char* what) {
    if (static_cast<int>(m.size()) != n) throw InvalidInput(std::string(what) + " has wrong length");
    for (int y : m)
        if (y < 0 || y >= n) throw InvalidInput(std::string(what) + " has an entry out of range");
}

Solution checked(Solution s, const char* family) {
    if (auto w = braid_violation(s))
        throw InconsistentSolution(std::string(family) + " construction broke the braid relation at (" +
                                   std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                                   std::to_string((*w)[2]) + ")");
    return s;
}

Solution build(const gen::Trivial& g) {
    std::vector<std::pair<int, int>> t;
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) t.emplace_back(y, x);
    return Solution(g.n, std::move(t));
}

Solution build(const gen::IdempotentYY& g) {
    std::vector<std::pair<int, int>> t;
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) t.emplace_back(y, y);
    return Solution(g.n, std::move(t));
}

Solution build(const gen::Lyubashenko& g) {
    const int n = static_cast<int>(g.lambda.size());
    check_map(g.lambda, n, "lambda");
    check_map(g.rho, n, "rho");
    for (int x = 0; x < n; ++x)
        if (g.lambda[g.rho[x]] != g.rho[g.lambda[x]])
            throw AxiomViolation("lambda and rho do not commute", {x});
    std::vector<std::pair<int, int>> t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.emplace_back(g.lambda[y], g.rho[x]);
    return checked(Solution(n, std::move(t)), "Lyubashenko");
}

Solution build(const gen::TwistedRack& g) {
    const int n = static_cast<int>(g.star.size());
    check_map(g.star, n, "star");
    if (static_cast<int>(g.triangle.size()) != n) throw InvalidInput("triangle table has wrong size");
    for (int x = 0; x < n; ++x) {
        check_map(g.triangle[x], n, "triangle row");
        if (!is_permutation(g.triangle[x]))
            throw AxiomViolation("y -> x |> y is not a permutation", {x});
    }
    auto tri = [&](int x, int y) { return g.triangle[x][y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (g.star[tri(x, y)] != tri(g.star[x], g.star[y]))
                throw AxiomViolation("(x |> y)* != x* |> y*", {x, y});
            for (int z = 0; z < n; ++z)
                if (tri(x, tri(y, z)) != tri(tri(x, y), tri(g.star[x], z)))
                    throw AxiomViolation("x |> (y |> z) != (x |> y) |> (x* |> z)", {x, y, z});
        }
    std::vector<std::pair<int, int>> t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.emplace_back(tri(x, y), g.star[x]);
    return checked(Solution(n, std::move(t)), "twisted rack");
}

Solution build(const gen::Metahomomorphism& g) {
    const int n = static_cast<int>(g.group.size());
    for (const auto& row : g.group) check_map(row, n, "group table row");
    check_map(g.f, n, "f");
    auto mul = [&](int a, int b) { return g.group[a][b]; };
    int unit = -1;
    for (int e = 0; e < n && unit < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) unit = e;
    }
    if (unit < 0) throw AxiomViolation("group table has no identity", {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw AxiomViolation("group table is not associative", {a, b, c});
    Map inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == unit) inv[a] = b;
        if (inv[a] < 0) throw AxiomViolation("element has no inverse", {a});
    }
    const Map& f = g.f;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int lhs = f[mul(mul(x, y), inv[f[x]])];
            int rhs = mul(mul(f[x], f[y]), inv[f[f[x]]]);
            if (lhs != rhs) throw AxiomViolation("f(x y f(x)^-1) != f(x) f(y) f(f(x))^-1", {x, y});
        }
    std::vector<std::pair<int, int>> t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.emplace_back(mul(mul(x, y), inv[f[x]]), f[x]);
    return checked(Solution(n, std::move(t)), "metahomomorphism");
}

}  // namespace

Solution make_solution(const GeneratorSpec& spec) {
    return std::visit([](const auto& g) { return build(g); }, spec);
}

gen::TwistedRack twisted_rack_of(const Solution& s) {
    if (!has_fixed_rho(s)) throw PreconditionUnmet("rho_y depends on y");
    if (!is_left_nondegenerate(s)) throw PreconditionUnmet("solution is not left non-degenerate");
    gen::TwistedRack g;
    for (int x = 0; x < s.size(); ++x) g.triangle.push_back(s.lambda_map(x));
    g.star = s.rho_map(0);
    return g;
}

namespace {

int image_size(const Map& m) { return static_cast<int>(std::set<int>(m.begin(), m.end()).size()); }

}  // namespace

Retraction retract_fixed_rho(const Solution& s) {
    if (!has_fixed_rho(s)) throw PreconditionUnmet("rho_y depends on y");
    if (!is_left_nondegenerate(s)) throw PreconditionUnmet("solution is not left non-degenerate");
    const int n = s.size();
    const Map rho = s.rho_map(0);
    // kernels of rho^m increase; they stop exactly when the image sizes stop shrinking
    int m = 1;
    Map rm = rho;
    while (image_size(rm) != image_size(compose(rho, rm))) {
        rm = compose(rho, rm);
        ++m;
    }
    Retraction out;
    out.stabilization = m;
    out.projection.assign(n, -1);
    std::map<std::pair<Map, int>, int> label;
    for (int x = 0; x < n; ++x) {
        auto key = std::pair{s.lambda_map(x), rm[x]};
        auto [it, fresh] = label.try_emplace(key, static_cast<int>(label.size()));
        out.projection[x] = it->second;
    }
    const int k = static_cast<int>(label.size());
    std::vector<std::pair<int, int>> t(static_cast<std::size_t>(k) * k, {-1, -1});
    const auto& p = out.projection;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::pair<int, int> img{p[s.lambda(x, y)], p[rho[x]]};
            auto& slot = t[p[x] * k + p[y]];
            if (slot.first >= 0 && slot != img)
                throw IllDefined("retraction is not compatible with r at (" + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
            slot = img;
        }
    out.quotient = Solution(k, std::move(t));
    return out;
}

std::vector<int> stable_rho_image(const Solution& s) {
    if (!has_fixed_rho(s)) throw PreconditionUnmet("rho_y depends on y");
    const Map rho = s.rho_map(0);
    Map rm = rho;
    while (image_size(rm) != image_size(compose(rho, rm))) rm = compose(rho, rm);
    std::set<int> img(rm.begin(), rm.end());
    return {img.begin(), img.end()};
}

Solution restrict_solution(const Solution& s, std::span<const int> subset) {
    const int n = s.size();
    std::vector<int> index(n, -1);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        int y = subset[i];
        if (y < 0 || y >= n) throw InvalidInput("subset element out of range");
        if (i && subset[i - 1] >= y) throw InvalidInput("subset must be sorted and duplicate free");
        index[y] = static_cast<int>(i);
    }
    const int k = static_cast<int>(subset.size());
    if (k == 0) throw InvalidInput("empty subset");
    std::vector<std::pair<int, int>> t;
    for (int x : subset)
        for (int y : subset) {
            auto [u, v] = s(x, y);
            if (index[u] < 0 || index[v] < 0)
                throw NotClosed("r(" + std::to_string(x) + "," + std::to_string(y) + ") leaves the subset", x, y);
            t.emplace_back(index[u], index[v]);
        }
    return Solution(k, std::move(t));
}

}  // namespace ybx
