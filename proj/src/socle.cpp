#include "ybx/socle.hpp"

#include <set>

#include "ybx/error.hpp"
#include "ybx/words.hpp"

namespace ybx {

bool is_socle(Structure& s, ClassRef m) {
    if (m.flavor != Flavor::M) throw InvalidInput("socle membership is defined on M-classes");
    return is_identity(s.class_lambda(m.length, m.id));
}

Word z_kappa_word(Structure& s, const Map& kappa) {
    const long long v = s.actions().v;
    Word w;
    for (int i = 0; i < s.size(); ++i)
        for (long long j = 0; j < v; ++j) w.push_back(kappa[i]);
    return w;
}

ClassRef z_kappa(Structure& s, const Map& kappa) { return s.A().ref_of(z_kappa_word(s, kappa)); }

namespace {

// Classes of length L of the form c w with w in W.
std::set<int> right_multiples(Structure& s, const SocleData& d, int L) {
    GradedMonoid& m = s.M();
    std::set<int> out;
    for (const ClassRef& w : d.W) {
        if (w.length > L) continue;
        const Word ww = m.canonical(w);
        for (int c = 0; c < m.class_count(L - w.length); ++c) out.insert(m.fold(L - w.length, c, ww));
    }
    return out;
}

}  // namespace

namespace {

void build_w(Structure& s, SocleData& d) {
    const auto& q = s.diagonal().q;
    GradedMonoid& m = s.M();
    d.w_letters.clear();
    d.W.clear();
    for (int x = 0; x < s.size(); ++x) {
        Word w;
        for (int i = 0, y = x; i < d.w_multiplier; ++i, y = q[y]) w.push_back(y);
        if (s.pi_word(w) != Word(d.w_multiplier, x))
            throw InconsistentSolution("pi(x q(x) ... ) is not a multiple of x");
        if (is_identity(s.lambda_of(w))) {
            d.w_letters.push_back(x);
            d.W.push_back(m.ref_of(w));
        }
    }
}

bool decomposes(Structure& s, SocleData& d, int sample_lengths) {
    GradedMonoid& m = s.M();
    d.verified_lengths.clear();
    for (int L = d.transversal_bound; L < d.transversal_bound + sample_lengths; ++L) {
        try {
            if (static_cast<int>(right_multiples(s, d, L).size()) != m.class_count(L)) return false;
        } catch (const ResourceLimit&) {
            break;
        }
        d.verified_lengths.push_back(L);
    }
    return true;
}

}  // namespace

SocleData socle_data(Structure& s, int sample_lengths) {
    SocleData d;
    const auto& act = s.actions();
    const int n = s.size();
    d.k = act.k;
    d.e = act.e;
    d.e_sigma = act.e_sigma;
    d.v = act.v;
    d.w_multiplier = d.k * d.e;
    GradedMonoid& m = s.M();
    build_w(s, d);
    d.z_word = z_kappa_word(s, identity_map(n));
    d.z = s.A().ref_of(d.z_word);
    d.transversal_bound = n * d.k * (d.e + 1);
    for (int L = 0; L < d.transversal_bound; ++L)
        for (int id = 0; id < m.class_count(L); ++id) {
            ClassRef c{Flavor::M, L, id};
            d.F.push_back(c);
            if (is_socle(s, c)) d.F_soc.push_back(c);
        }
    // every class at or beyond the bound must be right divisible by some member of W
    d.decomposition_holds = decomposes(s, d, sample_lengths);
    if (!d.decomposition_holds) {
        d.doubled = true;
        d.w_multiplier *= 2;
        build_w(s, d);
        d.decomposition_holds = decomposes(s, d, sample_lengths);
    }
    if (!d.verified_lengths.empty() && d.decomposition_holds) {
        int L0 = d.transversal_bound;
        while (L0 > 1 && static_cast<int>(right_multiples(s, d, L0 - 1).size()) == m.class_count(L0 - 1)) --L0;
        d.observed_transversal_length = L0;
    }
    return d;
}

namespace {

// First pair (x, y) with m x + m y + z != m y + m x + z, z built with multiplier m.
std::optional<std::pair<int, int>> zcomm_failure(Structure& s, long long mult) {
    const int n = s.size();
    GradedMonoid& a = s.A();
    Word z;
    for (int i = 0; i < n; ++i) z.insert(z.end(), mult, i);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Word lhs(mult, x), rhs(mult, y);
            lhs.insert(lhs.end(), mult, y);
            rhs.insert(rhs.end(), mult, x);
            lhs.insert(lhs.end(), z.begin(), z.end());
            rhs.insert(rhs.end(), z.begin(), z.end());
            if (!a.equal(lhs, rhs)) return std::pair{x, y};
        }
    return std::nullopt;
}

long long zcomm_length(long long mult, int n) { return 2 * mult + mult * n; }

}  // namespace

DiagnosisReport check_zcomm(Structure& s) {
    const int n = s.size();
    const long long v = s.actions().v;
    const int budget = s.A().config().length_budget;
    const long long len = zcomm_length(v, n);
    if (len > budget)
        throw ResourceLimit("zcomm needs words of length " + std::to_string(len) + ", length budget " +
                                std::to_string(budget),
                            static_cast<int>(len), static_cast<std::size_t>(len), static_cast<std::size_t>(budget));
    DiagnosisReport r;
    r.question = "vx+vy+z = vy+vx+z for all x,y";
    r.verdict = Verdict::Proved;
    r.depth.L = static_cast<int>(len);
    r.detail = "v=" + std::to_string(v) + ", exhaustive over X^2";
    if (auto bad = zcomm_failure(s, v)) {
        const std::string at = "x=" + std::to_string(bad->first) + ", y=" + std::to_string(bad->second);
        if (zcomm_length(2 * v, n) > budget)
            throw InconsistentSolution("zcomm fails at v for " + at + " and 2v is beyond the length budget");
        if (auto again = zcomm_failure(s, 2 * v))
            throw InconsistentSolution("zcomm fails at v and 2v for " + at);
        r.depth.L = static_cast<int>(zcomm_length(2 * v, n));
        r.detail = "fails at v=" + std::to_string(v) + " (" + at + "), holds at 2v, exhaustive over X^2";
    }
    return r;
}

}  // namespace ybx
