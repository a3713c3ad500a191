#include "ybx/ideal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ybx/classify.hpp"
#include "ybx/error.hpp"
#include "ybx/socle.hpp"
#include "ybx/words.hpp"

namespace ybx {

using nlohmann::ordered_json;

ChainAssignment ideal_chain(Structure& s, Flavor f, int L) {
    ChainAssignment ch;
    ch.flavor = f;
    ch.max_length = L;
    GradedMonoid& g = s.monoid(f);
    const int n = s.size();
    for (int l = 0; l <= L; ++l) {
        std::vector<ChainEntry> row(g.class_count(l));
        for (int id = 0; id < static_cast<int>(row.size()); ++id) {
            row[id].divisors = g.first_letters(l, id);
            row[id].level = popcount(row[id].divisors);
        }
        ch.by_length.push_back(std::move(row));
    }
    for (int l = 0; l < L; ++l)
        for (int id = 0; id < g.class_count(l); ++id) {
            const int lev = ch.by_length[l][id].level;
            Word w = g.canonical(l, id);
            for (int x = 0; x < n; ++x) {
                int right = g.append(l, id, x);
                Word xw{x};
                xw.insert(xw.end(), w.begin(), w.end());
                int left = g.class_of(xw);
                if (ch.by_length[l + 1][right].level < lev || ch.by_length[l + 1][left].level < lev)
                    ch.ideal_property = false;
            }
        }
    return ch;
}

std::vector<ClassRef> myz_members(Structure& s, Subset Y, Subset Z, int L) {
    std::vector<ClassRef> out;
    GradedMonoid& m = s.M();
    for (int l = 1; l <= L; ++l)
        for (int id = 0; id < m.class_count(l); ++id) {
            if (m.first_letters(l, id) != Y) continue;
            if (image(s.class_lambda(l, id), Z) != Y) continue;
            out.push_back({Flavor::M, l, id});
        }
    return out;
}

std::vector<ClassRef> ayy_members(Structure& s, Subset Y, int L) {
    std::vector<ClassRef> out;
    GradedMonoid& a = s.A();
    for (int l = 1; l <= L; ++l)
        for (int id = 0; id < a.class_count(l); ++id)
            if (a.first_letters(l, id) == Y) out.push_back({Flavor::A, l, id});
    return out;
}

namespace {

std::string y_name(Subset Y) { return "Y=" + subset_string(Y); }

ordered_json class_json(GradedMonoid& g, ClassRef c) { return word_string(g.canonical(c)); }

}  // namespace

DiagnosisReport lu_membership(Structure& s, Subset Y, int D, int L) {
    if (Y == 0 || Y > full_set(s.size())) throw InvalidInput("Y must be a non-empty subset of X");
    std::vector<int> ys = elements(Y);
    if (ys.size() > 8) throw InvalidInput("|Y| > 8: Sym(Y) search not supported");
    DiagnosisReport r;
    r.question = y_name(Y) + " in L_u";
    r.depth = {L, D, 0};
    GradedMonoid& a = s.A();
    for (int d = 1; d <= D; ++d) {
        std::vector<int> perm = ys;
        do {
            Word w;
            for (int j = 0; j < d; ++j) w.insert(w.end(), perm.begin(), perm.end());
            ClassRef c = a.ref_of(w);
            Subset div = a.first_letters(c.length, c.id);
            if (div != Y) {
                r.verdict = Verdict::RefutedWithWitness;
                r.witness = {{"kind", "nil"},
                             {"d", d},
                             {"a_fY", word_string(perm)},
                             {"divisors", subset_string(div)}};
                r.detail = "d a_{f,Y} lies in A_" + std::to_string(ys.size() + 1);
                return r;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    auto members = myz_members(s, Y, Y, L);
    GradedMonoid& m = s.M();
    for (const ClassRef& x : members)
        for (const ClassRef& y : members) {
            if (x.length + y.length > L) continue;
            ClassRef p = m.concat(x, y);
            if (m.first_letters(p.length, p.id) != Y) {
                r.verdict = Verdict::RefutedWithWitness;
                r.witness = {{"kind", "not-closed"}, {"a", class_json(m, x)}, {"b", class_json(m, y)}};
                r.detail = "M_YY is not closed under multiplication";
                return r;
            }
        }
    r.verdict = Verdict::EvidenceAtDepth;
    r.detail = std::to_string(members.size()) + " members of M_YY up to length " + std::to_string(L) +
               ", closed under products";
    return r;
}

bool is_nil_report(const DiagnosisReport& r) { return r.verdict == Verdict::RefutedWithWitness; }

ClassRef w_y_element(Structure& s, Subset Y, int D, int L) {
    if (is_nil_report(lu_membership(s, Y, D, L)))
        throw PreconditionUnmet(y_name(Y) + " is nil; w_Y is undefined");
    auto members = myz_members(s, Y, Y, L);
    if (members.empty()) throw PreconditionUnmet("M_YY has no member of length <= " + std::to_string(L));
    const ClassRef a = members.front();
    const int k = permutation_order(s.class_lambda(a.length, a.id));
    GradedMonoid& m = s.M();
    ClassRef w = a;
    for (int i = 1; i < k; ++i) w = m.concat(w, a);
    return w;
}

std::string cell_name(const Cell& c) {
    struct V {
        std::string operator()(const cell::ShiftedMYY& x) const {
            return "(" + std::to_string(x.d) + "w_Y)M_YY[" + y_name(x.Y) + "]";
        }
        std::string operator()(const cell::SoclePower& x) const {
            return "S_YY^" + std::to_string(x.d) + "[" + y_name(x.Y) + "]";
        }
        std::string operator()(const cell::MXXPower& x) const { return "M_XX^" + std::to_string(x.d); }
        std::string operator()(const cell::AYYSum& x) const {
            return std::to_string(x.d) + "A_YY[" + y_name(x.Y) + "]";
        }
    };
    return std::visit(V{}, c);
}

namespace {

// d-fold products of members, keeping total length <= L.
std::vector<ClassRef> power_set(GradedMonoid& g, const std::vector<ClassRef>& base, int d, int L) {
    std::set<ClassRef> cur(base.begin(), base.end());
    for (int k = 1; k < d; ++k) {
        std::set<ClassRef> next;
        for (const ClassRef& p : cur)
            for (const ClassRef& b : base)
                if (p.length + b.length <= L) next.insert(g.concat(p, b));
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

Flavor cell_flavor(const Cell& c) { return std::holds_alternative<cell::AYYSum>(c) ? Flavor::A : Flavor::M; }

}  // namespace

std::vector<ClassRef> cell_members(Structure& s, const Cell& c, int L) {
    GradedMonoid& m = s.M();
    const Subset X = full_set(s.size());
    if (auto* x = std::get_if<cell::ShiftedMYY>(&c)) {
        ClassRef w = w_y_element(s, x->Y, 4, L);
        ClassRef dw = w;
        for (int i = 1; i < x->d; ++i) dw = m.concat(dw, w);
        std::set<ClassRef> out;
        for (const ClassRef& a : myz_members(s, x->Y, x->Y, L)) out.insert(m.concat(dw, a));
        return {out.begin(), out.end()};
    }
    if (auto* x = std::get_if<cell::SoclePower>(&c)) {
        std::vector<ClassRef> base;
        for (const ClassRef& a : myz_members(s, x->Y, x->Y, L))
            if (is_socle(s, a)) base.push_back(a);
        return power_set(m, base, x->d, L);
    }
    if (auto* x = std::get_if<cell::MXXPower>(&c)) return power_set(m, myz_members(s, X, X, L), x->d, L);
    const auto& x = std::get<cell::AYYSum>(c);
    return power_set(s.A(), ayy_members(s, x.Y, L), x.d, L);
}

namespace {

}  // namespace

std::optional<ordered_json> find_cancellation_witness(GradedMonoid& g, const std::vector<ClassRef>& t) {
    const std::size_t k = t.size();
    std::vector<Word> canon(k);
    for (std::size_t i = 0; i < k; ++i) canon[i] = g.canonical(t[i]);
    for (std::size_t c = 0; c < k; ++c) {
        std::map<std::pair<int, int>, std::size_t> right, left;  // (length, product class) -> first factor
        for (std::size_t a = 0; a < k; ++a) {
            const int len = t[a].length + t[c].length;
            int pr = g.fold(t[a].length, t[a].id, canon[c]);
            int pl = g.fold(t[c].length, t[c].id, canon[a]);
            auto [ir, fresh_r] = right.try_emplace({len, pr}, a);
            if (!fresh_r)
                return ordered_json{{"flavor", flavor_name(g.flavor())}, {"side", "right"},
                                    {"a", word_string(canon[ir->second])}, {"b", word_string(canon[a])},
                                    {"c", word_string(canon[c])}};
            auto [il, fresh_l] = left.try_emplace({len, pl}, a);
            if (!fresh_l)
                return ordered_json{{"flavor", flavor_name(g.flavor())}, {"side", "left"},
                                    {"a", word_string(canon[il->second])}, {"b", word_string(canon[a])},
                                    {"c", word_string(canon[c])}};
        }
    }
    return std::nullopt;
}

namespace {

ClassRef power(GradedMonoid& g, ClassRef a, int k) {
    ClassRef p = a;
    for (int i = 1; i < k; ++i) p = g.concat(p, a);
    return p;
}

}  // namespace

CancellativityResult cancellativity_probe(Structure& s, const Cell& c, const ProbeBounds& b) {
    CancellativityResult out;
    DiagnosisReport& r = out.report;
    r.question = cell_name(c) + " cancellative";
    r.depth = {b.L, b.D, b.N};
    GradedMonoid& g = s.monoid(cell_flavor(c));
    auto members = cell_members(s, c, b.L);
    std::sort(members.begin(), members.end(),
              [](const ClassRef& x, const ClassRef& y) { return std::pair{x.length, x.id} < std::pair{y.length, y.id}; });
    if (static_cast<int>(members.size()) > b.max_members) members.resize(b.max_members);
    out.members = static_cast<int>(members.size());
    if (auto w = find_cancellation_witness(g, members)) {
        r.verdict = Verdict::RefutedWithWitness;
        r.witness = *w;
        r.detail = (*w)["side"] == "right" ? "a c = b c with a != b" : "c a = c b with a != b";
        return out;
    }
    const std::size_t probe = std::min<std::size_t>(members.size(), 6);
    try {
        for (int N = 1; N <= b.N && !out.commuting_power; ++N) {
            bool ok = true;
            for (std::size_t i = 0; i < probe && ok; ++i)
                for (std::size_t j = i + 1; j < probe && ok; ++j) {
                    ClassRef an = power(g, members[i], N), bn = power(g, members[j], N);
                    ok = g.concat(an, bn) == g.concat(bn, an);
                }
            if (ok) out.commuting_power = N;
        }
    } catch (const ResourceLimit&) {
    }
    r.verdict = Verdict::EvidenceAtDepth;
    r.detail = members.empty() ? "no members within the probed length"
                               : std::to_string(members.size()) + " members, no cancellation failure";
    if (out.commuting_power) r.detail += ", powers commute at N=" + std::to_string(*out.commuting_power);
    return out;
}

bool replay_cancellation_witness(const Solution& sol, const ordered_json& w, const EngineConfig& cfg) {
    Structure s(sol, cfg);
    GradedMonoid& g = s.monoid(w.at("flavor").get<std::string>() == "A" ? Flavor::A : Flavor::M);
    const int n = sol.size();
    Word a = parse_word(w.at("a").get<std::string>(), n);
    Word b = parse_word(w.at("b").get<std::string>(), n);
    Word c = parse_word(w.at("c").get<std::string>(), n);
    if (a.size() != b.size() || g.equal(a, b)) return false;
    Word ac, bc;
    if (w.at("side").get<std::string>() == "right") {
        ac = a, bc = b;
        ac.insert(ac.end(), c.begin(), c.end());
        bc.insert(bc.end(), c.begin(), c.end());
    } else {
        ac = c, bc = c;
        ac.insert(ac.end(), a.begin(), a.end());
        bc.insert(bc.end(), b.begin(), b.end());
    }
    return g.equal(ac, bc);
}

std::vector<DiagnosisReport> noetherian_diagnosis(Structure& s, const ProbeBounds& b, int abelian_bound) {
    if (!s.left_nondegenerate()) throw PreconditionUnmet("solution is not left non-degenerate");
    const int n = s.size();
    std::vector<DiagnosisReport> out;
    DiagnosisReport summary;
    summary.question = "K[M] right Noetherian";
    summary.depth = {b.L, b.D, b.N};

    if (is_idempotent(s.solution())) {
        const auto& dg = s.diagonal();
        const int e = s.actions().e;
        if (popcount(dg.image) == 1) {
            summary.verdict = Verdict::Proved;
            summary.detail = "exact, Lambda-criterion: Lambda=" + subset_string(dg.image);
        } else {
            int x = 0, y = 0;
            for (x = 0; x < n; ++x) {
                for (y = 0; y < n; ++y)
                    if (dg.q[x] != dg.q[y]) break;
                if (y < n) break;
            }
            Word xd(e, x), yd(e, y);
            summary.verdict = Verdict::RefutedWithWitness;
            summary.witness = {{"flavor", "M"},    {"side", "right"},           {"a", word_string(xd)},
                               {"b", word_string(yd)}, {"c", word_string(yd)}, {"Lambda", subset_string(dg.image)}};
            summary.detail = "exact, Lambda-criterion: |Lambda|=" + std::to_string(popcount(dg.image)) +
                             ", M_XX^d not cancellative";
        }
        out.push_back(summary);
        return out;
    }

    PropertyFlags flags = classify(s.solution(), abelian_bound, s.config());
    if (flags.abelian_A.value_or(false)) {
        summary.verdict = Verdict::Proved;
        summary.detail = "generators of A commute, so A is abelian";
        out.push_back(summary);
        return out;
    }

    bool support = true;
    std::vector<DiagnosisReport> probes;
    int needed_d = 1;
    for (Subset Y = 1; Y <= full_set(n); ++Y) {
        if (popcount(Y) > 8) continue;
        DiagnosisReport lu = lu_membership(s, Y, b.D, b.L);
        probes.push_back(lu);
        if (is_nil_report(lu)) continue;
        std::optional<int> good;
        DiagnosisReport last;
        for (int d = 1; d <= b.D; ++d) {
            auto res = cancellativity_probe(s, cell::SoclePower{Y, d}, b);
            last = res.report;
            if (res.report.verdict != Verdict::RefutedWithWitness) {
                good = d;
                break;
            }
        }
        if (good) {
            last.detail += "; d=" + std::to_string(*good);
            needed_d = std::max(needed_d, *good);
        } else {
            support = false;
        }
        probes.push_back(last);
        try {
            probes.push_back(cancellativity_probe(s, cell::ShiftedMYY{Y, 1}, b).report);
        } catch (const PreconditionUnmet&) {
        }
    }
    for (int d = 1; d <= b.D; ++d) {
        auto res = cancellativity_probe(s, cell::MXXPower{d}, b);
        if (res.report.verdict != Verdict::RefutedWithWitness || d == b.D) {
            if (res.report.verdict == Verdict::RefutedWithWitness) support = false;
            probes.push_back(res.report);
            break;
        }
    }
    summary.verdict = Verdict::EvidenceAtDepth;
    summary.detail = support ? "supports YES: S_YY^d shows no cancellation failure for d=" + std::to_string(needed_d)
                             : "supports NO: some S_YY^d or M_XX^d fails cancellation for every d <= D";
    out.push_back(summary);
    out.insert(out.end(), probes.begin(), probes.end());
    return out;
}

IdempotentPowers check_idempotent_powers(Structure& s, int L, int D) {
    IdempotentPowers r;
    r.lambda_singleton = popcount(s.diagonal().image) == 1;
    GradedMonoid& m = s.M();
    std::vector<ClassRef> elems;
    for (int l = 1; l <= L; ++l)
        for (int id = 0; id < m.class_count(l); ++id) elems.push_back({Flavor::M, l, id});
    if (elems.size() > 24) elems.resize(24);
    for (int d = 1; d <= D && !r.commuting_d; ++d) {
        bool ok = true;
        for (std::size_t i = 0; i < elems.size() && ok; ++i)
            for (std::size_t j = i + 1; j < elems.size() && ok; ++j) {
                ClassRef a = power(m, elems[i], d), b = power(m, elems[j], d);
                ok = m.concat(a, b) == m.concat(b, a);
            }
        if (ok) r.commuting_d = d;
    }
    r.consistent = r.lambda_singleton == r.commuting_d.has_value();
    return r;
}

std::optional<std::array<Subset, 4>> check_cross_cell_products(Structure& s, int i, int L, int samples, std::uint64_t seed) {
    const int n = s.size();
    std::vector<Subset> layer;
    for (Subset Y = 1; Y <= full_set(n); ++Y)
        if (popcount(Y) == i) layer.push_back(Y);
    std::vector<std::array<Subset, 4>> quads;
    for (Subset Y : layer)
        for (Subset Z : layer)
            for (Subset U : layer)
                if (Z != U)
                    for (Subset V : layer) quads.push_back({Y, Z, U, V});
    if (static_cast<int>(quads.size()) > samples) {
        std::mt19937_64 rng(seed);
        std::shuffle(quads.begin(), quads.end(), rng);
        quads.resize(samples);
    }
    GradedMonoid& m = s.M();
    for (const auto& q : quads) {
        auto left = myz_members(s, q[0], q[1], L);
        auto right = myz_members(s, q[2], q[3], L);
        for (const ClassRef& a : left)
            for (const ClassRef& b : right) {
                ClassRef p = m.concat(a, b);
                if (popcount(m.first_letters(p.length, p.id)) <= i) return q;
            }
    }
    return std::nullopt;
}

std::optional<std::pair<Subset, Subset>> check_cell_symmetry(Structure& s, int L, int D) {
    const int n = s.size();
    std::vector<Subset> lu;
    for (Subset Y = 1; Y <= full_set(n); ++Y)
        if (!is_nil_report(lu_membership(s, Y, D, L))) lu.push_back(Y);
    for (Subset Y : lu)
        for (Subset Z : lu)
            if (Y < Z && popcount(Y) == popcount(Z)) {
                bool yz = !myz_members(s, Y, Z, L).empty();
                bool zy = !myz_members(s, Z, Y, L).empty();
                if (yz != zy) return std::pair{Y, Z};
            }
    return std::nullopt;
}

}  // namespace ybx
