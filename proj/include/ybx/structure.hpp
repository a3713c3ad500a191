#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "ybx/closure.hpp"
#include "ybx/solution.hpp"

namespace ybx {

// A solution together with its structure monoid M, derived monoid A and the lazily
// computed per-class data that ties them together (lambda of M-classes, the cocycle pi).
class Structure {
public:
    explicit Structure(Solution sol, EngineConfig cfg = {});

    const Solution& solution() const noexcept { return sol_; }
    int size() const noexcept { return sol_.size(); }
    bool left_nondegenerate() const noexcept { return lnd_; }
    const EngineConfig& config() const noexcept { return cfg_; }

    // Throw PreconditionUnmet for degenerate solutions.
    const Solution& derived() const;
    const std::vector<Map>& sigma() const;
    const ActionClosures& actions();
    const DiagonalData& diagonal() const;

    GradedMonoid& monoid(Flavor f);
    GradedMonoid& M() { return monoid(Flavor::M); }
    GradedMonoid& A() { return monoid(Flavor::A); }

    // lambda_{x1} ... lambda_{xk}
    Map lambda_of(std::span<const int> word) const;
    // sigma of an A-word a1 ... ak is sigma_{ak} ... sigma_{a1}
    Map sigma_of(std::span<const int> word) const;
    // pi(x1...xk) = x1 + lambda_{x1}(x2) + lambda_{x1 x2}(x3) + ...
    Word pi_word(std::span<const int> m_word) const;
    Word pi_inverse_word(std::span<const int> a_word) const;

    // lambda of the M-class (L, id); verified constant on the class when the level is built.
    const Map& class_lambda(int L, int id);
    // A-class id of pi applied to the M-class (L, id); verified constant on the class.
    int class_pi(int L, int id);

private:
    void extend_tables(int L);

    Solution sol_;
    EngineConfig cfg_;
    bool lnd_;
    std::optional<Solution> derived_;
    std::vector<Map> sigma_;
    std::vector<Map> lambda_, lambda_inv_;
    std::optional<DiagonalData> diag_;
    std::optional<ActionClosures> actions_;
    std::unique_ptr<GradedMonoid> m_, a_;
    // per M-level tables
    std::vector<std::vector<Map>> class_lambda_;
    std::vector<std::vector<int>> class_pi_;
    std::recursive_mutex mu_;
};

}  // namespace ybx
