#include <cmath>
#include <sstream>

#include "ybx/error.hpp"
#include "ybx/invariants.hpp"
#include "ybx/words.hpp"

namespace ybx {

std::vector<CrossCheck> theorem_cross_checks(Structure& s, int L) {
    const Solution& sol = s.solution();
    if (!s.left_nondegenerate()) throw PreconditionUnmet("solution is not left non-degenerate");
    const int n = s.size();
    std::vector<CrossCheck> out;
    auto fail = [](const std::string& what) { throw CrossCheckFailure(what); };

    const bool inv = is_involutive(sol);
    const GkResult gk = gk_dimension(sol);
    {
        CrossCheck c{"involutive-gk", true, true, "GK=" + std::to_string(gk.gk)};
        if (inv != (gk.gk == n)) fail("involutive=" + std::to_string(inv) + " but GK=" + std::to_string(gk.gk));
        out.push_back(c);
    }
    {
        CrossCheck c{"r1", true, true, ""};
        if (is_bijective(sol) != is_right_nondegenerate(sol)) fail("bijective and right non-degenerate disagree");
        out.push_back(c);
    }
    {
        CrossCheck c{"growth", true, true, ""};
        Growth g = growth(s, Flavor::A, L);
        std::ostringstream os;
        if (gk.gk == n) {
            for (std::size_t l = 0; l < g.h.size(); ++l)
                if (g.h[l] != binomial(static_cast<int>(l) + n - 1, n - 1))
                    fail("GK=n but h(" + std::to_string(l) + ")=" + std::to_string(g.h[l]));
            os << "free abelian counts up to L=" << g.h.size() - 1;
        } else {
            double cmax = 0;
            for (std::size_t l = 1; l < g.h.size(); ++l)
                cmax = std::max(cmax, g.h[l] / std::pow(static_cast<double>(l), gk.gk - 1));
            os << "h(L) <= " << cmax << " L^" << gk.gk - 1 << " up to L=" << g.h.size() - 1;
        }
        c.detail = os.str();
        out.push_back(c);
    }
    {
        CrossCheck c{"involutive-cancellative", true, inv, ""};
        if (inv) {
            auto ev = cancellativity_evidence(s, Flavor::M, L);
            if (ev.verdict == Verdict::RefutedWithWitness) fail("involutive but M not cancellative: " + ev.witness.dump());
            c.detail = ev.detail;
        }
        out.push_back(c);
    }
    {
        const bool qbij = s.diagonal().bijective;
        CrossCheck c{"bijective-q", true, qbij && !inv, ""};
        if (c.applies) {
            auto ev = cancellativity_evidence(s, Flavor::M, L);
            c.detail = ev.verdict == Verdict::RefutedWithWitness ? "non-involutive, M not cancellative (witness found)"
                                                                 : "non-involutive, no witness up to depth";
        }
        out.push_back(c);
    }
    {
        CrossCheck c{"omega", true, inv, ""};
        if (inv) {
            try {
                OmegaData o = omega_lambda(s, L);
                if (o.order() != 1) fail("involutive but |Omega|=" + std::to_string(o.order()));
                c.detail = "|Omega|=1";
            } catch (const ResourceLimit& e) {
                c.applies = false;
                c.detail = e.what();
            }
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace ybx
