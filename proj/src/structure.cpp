#include "ybx/structure.hpp"

#include "ybx/error.hpp"

namespace ybx {

Structure::Structure(Solution sol, EngineConfig cfg)
    : sol_(std::move(sol)), cfg_(std::move(cfg)), lnd_(is_left_nondegenerate(sol_)) {
    for (int x = 0; x < sol_.size(); ++x) lambda_.push_back(sol_.lambda_map(x));
    if (lnd_) {
        for (const Map& l : lambda_) lambda_inv_.push_back(inverse(l));
        sigma_ = sigma_maps(sol_);
        derived_ = derived_solution(sol_);
        diag_ = diagonal_data(sol_);
    }
}

const Solution& Structure::derived() const {
    if (!lnd_) throw PreconditionUnmet("solution is not left non-degenerate");
    return *derived_;
}

const std::vector<Map>& Structure::sigma() const {
    if (!lnd_) throw PreconditionUnmet("solution is not left non-degenerate");
    return sigma_;
}

const DiagonalData& Structure::diagonal() const {
    if (!lnd_) throw PreconditionUnmet("solution is not left non-degenerate");
    return *diag_;
}

const ActionClosures& Structure::actions() {
    std::lock_guard lock(mu_);
    if (!actions_) actions_ = action_closures(sol_);
    return *actions_;
}

GradedMonoid& Structure::monoid(Flavor f) {
    std::lock_guard lock(mu_);
    if (f == Flavor::M) {
        if (!m_) m_ = std::make_unique<GradedMonoid>(sol_, Flavor::M, cfg_);
        return *m_;
    }
    if (!a_) a_ = std::make_unique<GradedMonoid>(derived(), Flavor::A, cfg_);
    return *a_;
}

Map Structure::lambda_of(std::span<const int> word) const {
    Map acc = identity_map(sol_.size());
    for (int x : word) acc = compose(acc, lambda_[x]);
    return acc;
}

Map Structure::sigma_of(std::span<const int> word) const {
    const auto& sg = sigma();
    Map acc = identity_map(sol_.size());
    for (int x : word) acc = compose(sg[x], acc);
    return acc;
}

Word Structure::pi_word(std::span<const int> m_word) const {
    Word out;
    Map acc = identity_map(sol_.size());
    for (int x : m_word) {
        out.push_back(acc[x]);
        acc = compose(acc, lambda_[x]);
    }
    return out;
}

Word Structure::pi_inverse_word(std::span<const int> a_word) const {
    if (!lnd_) throw PreconditionUnmet("solution is not left non-degenerate");
    Word out;
    Map acc_inv = identity_map(sol_.size());  // inverse of lambda of the prefix
    for (int a : a_word) {
        int m = acc_inv[a];
        out.push_back(m);
        acc_inv = compose(lambda_inv_[m], acc_inv);
    }
    return out;
}

void Structure::extend_tables(int L) {
    GradedMonoid& mm = M();
    if (class_lambda_.empty()) {
        class_lambda_.push_back({identity_map(sol_.size())});
        class_pi_.push_back({0});
    }
    const int n = sol_.size();
    while (static_cast<int>(class_lambda_.size()) <= L) {
        const int l = static_cast<int>(class_lambda_.size());
        const Level& lv = mm.level(l);
        const auto& prev_lam = class_lambda_[l - 1];
        std::vector<Map> lam(lv.count);
        for (int id = 0; id < lv.count; ++id) lam[id] = compose(prev_lam[lv.parent[id]], lambda_[lv.letter[id]]);
        for (std::size_t node = 0; node < lv.trans.size(); ++node) {
            const int c = static_cast<int>(node / n), x = static_cast<int>(node % n);
            if (compose(prev_lam[c], lambda_[x]) != lam[lv.trans[node]])
                throw InconsistentSolution("lambda is not constant on an M-class of length " + std::to_string(l));
        }
        std::vector<int> pi;
        if (lnd_) {
            GradedMonoid& aa = A();
            const auto& prev_pi = class_pi_[l - 1];
            pi.resize(lv.count);
            for (int id = 0; id < lv.count; ++id) {
                int p = lv.parent[id];
                pi[id] = aa.append(l - 1, prev_pi[p], prev_lam[p][lv.letter[id]]);
            }
            for (std::size_t node = 0; node < lv.trans.size(); ++node) {
                const int c = static_cast<int>(node / n), x = static_cast<int>(node % n);
                if (aa.append(l - 1, prev_pi[c], prev_lam[c][x]) != pi[lv.trans[node]])
                    throw InconsistentSolution("pi is not constant on an M-class of length " + std::to_string(l));
            }
        }
        class_lambda_.push_back(std::move(lam));
        class_pi_.push_back(std::move(pi));
    }
}

const Map& Structure::class_lambda(int L, int id) {
    std::lock_guard lock(mu_);
    extend_tables(L);
    return class_lambda_[L].at(id);
}

int Structure::class_pi(int L, int id) {
    std::lock_guard lock(mu_);
    if (!lnd_) throw PreconditionUnmet("solution is not left non-degenerate");
    extend_tables(L);
    return class_pi_[L].at(id);
}

}  // namespace ybx
