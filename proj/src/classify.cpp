#include "ybx/classify.hpp"

#include "ybx/error.hpp"
#include "ybx/structure.hpp"

namespace ybx {

namespace {

// First non-commuting pair (a,b) with |a| + |b| <= bound, or none.
std::optional<std::pair<Word, Word>> commutation_witness(GradedMonoid& g, int bound) {
    for (int total = 2; total <= bound; ++total)
        for (int la = 1; la < total; ++la) {
            const int lb = total - la;
            for (int a = 0; a < g.class_count(la); ++a)
                for (int b = 0; b < g.class_count(lb); ++b) {
                    ClassRef ca{g.flavor(), la, a}, cb{g.flavor(), lb, b};
                    if (g.concat(ca, cb) != g.concat(cb, ca)) return std::pair{g.canonical(ca), g.canonical(cb)};
                }
        }
    return std::nullopt;
}

}  // namespace

PropertyFlags basic_flags(const Solution& s) {
    PropertyFlags f;
    f.braid_witness = braid_violation(s);
    f.is_solution = !f.braid_witness;
    f.left_nondegenerate = is_left_nondegenerate(s);
    f.right_nondegenerate = is_right_nondegenerate(s);
    f.bijective = is_bijective(s);
    f.involutive = is_involutive(s);
    f.idempotent = is_idempotent(s);
    f.fixed_rho = has_fixed_rho(s);
    return f;
}

PropertyFlags classify(const Solution& s, int abelian_bound, const EngineConfig& cfg) {
    if (abelian_bound < 2) throw InvalidInput("abelian bound must be at least 2");
    PropertyFlags f = basic_flags(s);
    f.abelian_bound = abelian_bound;
    if (!f.is_solution) return f;
    Structure st(s, cfg);
    try {
        f.abelian_M_witness = commutation_witness(st.M(), abelian_bound);
        f.abelian_M = !f.abelian_M_witness;
    } catch (const ResourceLimit&) {
    }
    if (f.left_nondegenerate) {
        try {
            f.abelian_A_witness = commutation_witness(st.A(), abelian_bound);
            f.abelian_A = !f.abelian_A_witness;
        } catch (const ResourceLimit&) {
        }
    }
    return f;
}

nlohmann::ordered_json to_json(const PropertyFlags& f) {
    nlohmann::ordered_json j;
    j["solution"] = f.is_solution;
    if (f.braid_witness) j["braid_witness"] = *f.braid_witness;
    j["left_nondegenerate"] = f.left_nondegenerate;
    j["right_nondegenerate"] = f.right_nondegenerate;
    j["bijective"] = f.bijective;
    j["involutive"] = f.involutive;
    j["idempotent"] = f.idempotent;
    j["fixed_rho"] = f.fixed_rho;
    j["abelian_bound"] = f.abelian_bound;
    auto opt = [](const std::optional<bool>& b) { return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(); };
    j["abelian_M"] = opt(f.abelian_M);
    j["abelian_A"] = opt(f.abelian_A);
    if (f.abelian_M_witness)
        j["abelian_M_witness"] = {word_string(f.abelian_M_witness->first), word_string(f.abelian_M_witness->second)};
    if (f.abelian_A_witness)
        j["abelian_A_witness"] = {word_string(f.abelian_A_witness->first), word_string(f.abelian_A_witness->second)};
    return j;
}

bool flag_by_name(const PropertyFlags& f, const std::string& name) {
    if (name == "solution") return f.is_solution;
    if (name == "left-nondegenerate") return f.left_nondegenerate;
    if (name == "right-nondegenerate") return f.right_nondegenerate;
    if (name == "nondegenerate") return f.left_nondegenerate && f.right_nondegenerate;
    if (name == "bijective") return f.bijective;
    if (name == "involutive") return f.involutive;
    if (name == "idempotent") return f.idempotent;
    if (name == "fixed-rho") return f.fixed_rho;
    throw InvalidInput("unknown property '" + name + "'");
}

}  // namespace ybx
