#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ybx/maps.hpp"

namespace ybx {

// r(x,y) = (lambda_x(y), rho_y(x)) on X = {0,...,n-1}.
class Solution {
public:
    Solution() = default;
    Solution(int n, std::vector<std::pair<int, int>> table);
    // lambda[x][y] = lambda_x(y), rho[y][x] = rho_y(x)
    static Solution from_maps(const std::vector<Map>& lambda, const std::vector<Map>& rho);

    int size() const noexcept { return n_; }
    std::pair<int, int> operator()(int x, int y) const { return table_[x * n_ + y]; }
    int lambda(int x, int y) const { return table_[x * n_ + y].first; }
    int rho(int y, int x) const { return table_[x * n_ + y].second; }
    Map lambda_map(int x) const;
    Map rho_map(int y) const;
    const std::vector<std::pair<int, int>>& table() const noexcept { return table_; }

    std::uint64_t hash() const;
    std::string hash_hex() const;
    // "n|u v u v ..." in row-major order, used in census rows
    std::string compact() const;

    auto operator<=>(const Solution&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> table_;
};

std::optional<std::array<int, 3>> braid_violation(const Solution& s);
bool validate_yang_baxter(const Solution& s);

bool is_left_nondegenerate(const Solution& s);
bool is_right_nondegenerate(const Solution& s);
bool is_bijective(const Solution& s);
bool is_involutive(const Solution& s);
bool is_idempotent(const Solution& s);
bool has_fixed_rho(const Solution& s);

// sigma_y(x) = lambda_y(rho_{lambda_x^{-1}(y)}(x)); requires left non-degeneracy.
std::vector<Map> sigma_maps(const Solution& s);
// s(x,y) = (y, sigma_y(x))
Solution derived_solution(const Solution& s);

// q(x) = lambda_x^{-1}(x)
struct DiagonalData {
    Map q;
    Subset image = 0;  // Lambda = q(X)
    int k = 1;         // least k with q^(2k) = q^k
    bool bijective = false;
};
DiagonalData diagonal_data(const Solution& s);

struct ActionClosures {
    std::vector<Map> g_lambda;  // group generated by the lambda_x
    std::vector<Map> sigma;     // monoid generated by the sigma_x, identity included
    int e = 1;                  // exponent of g_lambda
    int e_sigma = 1;            // least e with sigma_x^(2e) = sigma_x^e for all x
    int k = 1;
    long long v = 1;            // k * e * e_sigma
};
// Throws InconsistentSolution if sigma_x sigma_y != sigma_{sigma_x(y)} sigma_x somewhere.
ActionClosures action_closures(const Solution& s, std::size_t limit = 1'000'000);

namespace gen {
struct Trivial {
    int n;
};
struct IdempotentYY {
    int n;
};
// r(x,y) = (lambda(y), rho(x))
struct Lyubashenko {
    Map lambda;
    Map rho;
};
// triangle[x][y] = x |> y, star[x] = x*
struct TwistedRack {
    std::vector<Map> triangle;
    Map star;
};
// r(x,y) = (x y f(x)^{-1}, f(x)) on a group given by its multiplication table
struct Metahomomorphism {
    std::vector<std::vector<int>> group;
    Map f;
};
}  // namespace gen

using GeneratorSpec =
    std::variant<gen::Trivial, gen::IdempotentYY, gen::Lyubashenko, gen::TwistedRack, gen::Metahomomorphism>;

Solution make_solution(const GeneratorSpec& spec);
// Inverse of the twisted-rack construction; requires fixed rho and left non-degeneracy.
gen::TwistedRack twisted_rack_of(const Solution& s);

struct Retraction {
    Solution quotient;
    Map projection;     // X -> quotient labels
    int stabilization;  // least m with Ker rho^m = Ker rho^(m+1)
};
Retraction retract_fixed_rho(const Solution& s);
// Im rho^m for the stabilization index of the image chain; fixed-rho solutions only.
std::vector<int> stable_rho_image(const Solution& s);

// Restriction to a sorted subset, relabelled 0..|Y|-1 in increasing order.
Solution restrict_solution(const Solution& s, std::span<const int> subset);

}  // namespace ybx
