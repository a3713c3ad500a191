#include "ybx/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "ybx/archimedean.hpp"
#include "ybx/error.hpp"
#include "ybx/ideal.hpp"
#include "ybx/invariants.hpp"
#include "ybx/socle.hpp"
#include "ybx/solution_io.hpp"
#include "ybx/words.hpp"

namespace ybx {

namespace {

const char* class_name(AtlasClass c) {
    switch (c) {
        case AtlasClass::General: return "general";
        case AtlasClass::LeftNondegenerate: return "lnd";
        case AtlasClass::FixedRho: return "fixed-rho";
    }
    return "?";
}

std::vector<Map> all_maps(int n) {
    std::vector<Map> out;
    Map m(n, 0);
    while (true) {
        out.push_back(m);
        int i = n - 1;
        while (i >= 0 && m[i] == n - 1) m[i--] = 0;
        if (i < 0) break;
        ++m[i];
    }
    return out;
}

std::vector<Map> all_perms(int n) {
    std::vector<Map> out;
    Map p = identity_map(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Braid check on a flat table; cheaper than building a Solution per candidate.
bool braids(int n, const std::vector<int>& u, const std::vector<int>& v) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int a = u[x * n + y], b = v[x * n + y];
            for (int z = 0; z < n; ++z) {
                const int c = u[b * n + z], d = v[b * n + z];
                const int p = u[y * n + z], q = v[y * n + z];
                const int g = u[x * n + p], t = v[x * n + p];
                if (u[a * n + c] != g) return false;
                if (v[a * n + c] != u[t * n + q] || d != v[t * n + q]) return false;
            }
        }
    return true;
}

Solution from_flat(int n, const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<std::pair<int, int>> t(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = {u[i], v[i]};
    return Solution(n, std::move(t));
}

bool passes_filters(const Solution& s, const std::vector<std::string>& filters) {
    if (filters.empty()) return true;
    PropertyFlags f = basic_flags(s);
    for (const std::string& raw : filters) {
        const bool neg = !raw.empty() && raw[0] == '!';
        if (flag_by_name(f, neg ? raw.substr(1) : raw) == neg) return false;
    }
    return true;
}

}  // namespace

nlohmann::ordered_json AtlasSpec::to_json() const {
    return {{"n", n}, {"class", class_name(cls)}, {"filters", filters}, {"dedup", dedup}};
}

AtlasSpec parse_atlas_spec(const std::string& text) {
    AtlasSpec spec;
    std::istringstream is(text);
    std::string tok;
    bool have_n = false;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        std::string key = tok.substr(0, eq), val = eq == std::string::npos ? "" : tok.substr(eq + 1);
        if (key == "n") {
            spec.n = std::stoi(val);
            have_n = true;
        } else if (key == "class") {
            if (val == "general") spec.cls = AtlasClass::General;
            else if (val == "lnd" || val == "left-nondegenerate") spec.cls = AtlasClass::LeftNondegenerate;
            else if (val == "fixed-rho") spec.cls = AtlasClass::FixedRho;
            else throw InvalidInput("unknown atlas class '" + val + "'");
        } else if (key == "filter") {
            spec.filters.push_back(val);
        } else if (key == "dedup") {
            spec.dedup = true;
        } else {
            throw InvalidInput("unknown atlas spec key '" + key + "'");
        }
    }
    if (!have_n) throw InvalidInput("atlas spec needs n=<size>");
    return spec;
}

std::size_t candidate_count(const AtlasSpec& spec) {
    const int n = spec.n;
    std::size_t nn = 1, fact = 1;
    for (int i = 0; i < n; ++i) nn *= n;
    for (int i = 2; i <= n; ++i) fact *= i;
    auto pw = [](std::size_t b, int e) {
        std::size_t r = 1;
        while (e--) r *= b;
        return r;
    };
    switch (spec.cls) {
        case AtlasClass::General: return pw(static_cast<std::size_t>(n) * n, n * n);
        case AtlasClass::LeftNondegenerate: return pw(fact, n) * pw(nn, n);
        case AtlasClass::FixedRho: return pw(nn, n) * nn;
    }
    return 0;
}

std::vector<Solution> enumerate(const AtlasSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw InvalidInput("atlas size must be positive");
    if (spec.cls == AtlasClass::General && n > 2) throw InvalidInput("general sweep supports n <= 2");
    if (n > 3) throw InvalidInput("atlas sweeps support n <= 3");
    const int cells = n * n;
    std::vector<int> u(cells), v(cells);
    std::vector<Solution> out;
    auto emit = [&] {
        if (!braids(n, u, v)) return;
        Solution s = from_flat(n, u, v);
        if (passes_filters(s, spec.filters)) out.push_back(std::move(s));
    };
    if (spec.cls == AtlasClass::General) {
        std::vector<int> code(cells, 0);
        while (true) {
            for (int i = 0; i < cells; ++i) u[i] = code[i] / n, v[i] = code[i] % n;
            emit();
            int i = cells - 1;
            while (i >= 0 && code[i] == cells - 1) code[i--] = 0;
            if (i < 0) break;
            ++code[i];
        }
    } else {
        const auto maps = all_maps(n);
        const auto lams = spec.cls == AtlasClass::LeftNondegenerate ? all_perms(n) : maps;
        const std::size_t rho_count = spec.cls == AtlasClass::LeftNondegenerate ? maps.size() : 1;
        std::size_t lam_total = 1, rho_total = 1;
        for (int i = 0; i < n; ++i) lam_total *= lams.size(), rho_total *= rho_count == 1 ? 1 : maps.size();
        if (spec.cls == AtlasClass::FixedRho) rho_total = maps.size();
        for (std::size_t li = 0; li < lam_total; ++li) {
            std::size_t c = li;
            for (int x = n - 1; x >= 0; --x) {
                const Map& l = lams[c % lams.size()];
                c /= lams.size();
                for (int y = 0; y < n; ++y) u[x * n + y] = l[y];
            }
            for (std::size_t ri = 0; ri < rho_total; ++ri) {
                if (spec.cls == AtlasClass::FixedRho) {
                    const Map& r = maps[ri];
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y) v[x * n + y] = r[x];
                } else {
                    std::size_t d = ri;
                    for (int y = n - 1; y >= 0; --y) {
                        const Map& r = maps[d % maps.size()];
                        d /= maps.size();
                        for (int x = 0; x < n; ++x) v[x * n + y] = r[x];
                    }
                }
                emit();
            }
        }
    }
    if (spec.dedup) {
        std::set<Solution> reps;
        for (const Solution& s : out) reps.insert(canonical_relabel(s));
        out.assign(reps.begin(), reps.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Solution canonical_relabel(const Solution& s) {
    const int n = s.size();
    Solution best = s;
    for (const Map& p : all_perms(n)) {
        std::vector<std::pair<int, int>> t(static_cast<std::size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto [a, b] = s(x, y);
                t[p[x] * n + p[y]] = {p[a], p[b]};
            }
        Solution c(n, std::move(t));
        if (c < best) best = std::move(c);
    }
    return best;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{
        "r1",     "involutive-gk", "derived-ybe", "lambda-invariance", "cocycle",    "zcomm", "eta",
        "omega",  "archimedean",   "noetherian",  "crosscheck",        "spec",       "socle"};
    return names;
}

namespace {

CheckOutcome pass(std::string v = "") { return {"pass", std::move(v)}; }
CheckOutcome fail(std::string v) { return {"fail", std::move(v)}; }
CheckOutcome skip(std::string v) { return {"skip", std::move(v)}; }

}  // namespace

CheckOutcome run_check(const std::string& name, const Solution& sol, const RunConfig& cfg) {
    const bool lnd = is_left_nondegenerate(sol);
    try {
        if (name == "r1") {
            if (!lnd) return skip("degenerate");
            return is_bijective(sol) == is_right_nondegenerate(sol) ? pass() : fail("bijective != right nd");
        }
        if (name == "involutive-gk") {
            if (!lnd) return skip("degenerate");
            const int gk = gk_dimension(sol).gk;
            return is_involutive(sol) == (gk == sol.size()) ? pass("GK=" + std::to_string(gk))
                                                            : fail("GK=" + std::to_string(gk));
        }
        if (name == "derived-ybe") {
            if (!lnd) return skip("degenerate");
            return validate_yang_baxter(derived_solution(sol)) ? pass() : fail("derived solution breaks YBE");
        }
        Structure s(sol, cfg.engine());
        if (name == "lambda-invariance") {
            s.class_lambda(cfg.max_length, 0);
            return pass("L=" + std::to_string(cfg.max_length));
        }
        if (!lnd) return skip("degenerate");
        if (name == "cocycle") {
            for (int L = 0; L <= cfg.max_length; ++L) {
                auto c = check_cocycle(s, L);
                if (!c.bijective) return fail("pi not bijective at L=" + std::to_string(L));
            }
            return pass("L<=" + std::to_string(cfg.max_length));
        }
        if (name == "zcomm") {
            const long long v = s.actions().v;
            if (v * (sol.size() + 2) > cfg.length_budget) return {"limit", "v=" + std::to_string(v)};
            return pass(check_zcomm(s).detail);
        }
        if (name == "eta") {
            auto r = cancellative_congruence_A(s, cfg.congruence_length, cfg.t_max);
            std::string v = "t=" + std::to_string(r.t) + " blocks=" + std::to_string(r.block_count);
            if (!r.stabilized) return fail("not stabilized within t_max");
            if (!r.right_cancellative) return fail("quotient not right cancellative, " + v);
            if (!r.stable_after) return fail("eta grows after stabilizing, " + v);
            if (is_involutive(sol) && !r.is_equality) return fail("involutive but eta_A identifies classes");
            return pass(v);
        }
        if (name == "omega") {
            try {
                OmegaData o = omega_lambda(s, cfg.max_length);
                if (!o.certified) return skip("group table not certified, |O|=" + std::to_string(o.order()));
                if (o.order() == 1) return pass("1");
                if (is_involutive(sol)) return fail("involutive with |Omega|=" + std::to_string(o.order()));
                return {"noteworthy", std::to_string(o.order())};
            } catch (const PreconditionUnmet&) {
                return skip("M not cancellative");
            }
        }
        if (name == "archimedean") {
            if (!is_bijective(sol) || !is_right_nondegenerate(sol)) return skip("not bijective non-degenerate");
            auto r = archimedean_components(derived_solution(sol), std::min(cfg.max_length, 6), cfg.engine());
            const std::string v = std::to_string(r.components.size()) + " components";
            if (!r.refines_divisor_partition) {
                const auto& [a, b] = r.mixed_pair.front();
                return fail("components mix divisor sets: " + std::to_string(a.length) + ":" + std::to_string(a.id) +
                            " ~ " + std::to_string(b.length) + ":" + std::to_string(b.id) +
                            (r.divisor_blocks_within_components ? "; divisor sets lie within components"
                                                                : "; divisor sets also split"));
            }
            if (!r.semilattice() || !r.product_well_defined) return fail("component product is not a semilattice");
            return pass(v);
        }
        if (name == "noetherian") {
            auto reps = noetherian_diagnosis(s, cfg.probe(), cfg.abelian_bound);
            const auto& r = reps.front();
            return pass(std::string(verdict_name(r.verdict)) +
                        (r.verdict == Verdict::EvidenceAtDepth ? (r.detail.rfind("supports YES", 0) == 0 ? ":yes" : ":no")
                                                               : ""));
        }
        if (name == "crosscheck") {
            auto cs = theorem_cross_checks(s, std::min(cfg.max_length, 6));
            return pass(std::to_string(cs.size()) + " checks");
        }
        if (name == "spec") {
            auto sp = spec_A(s, std::min(cfg.max_length, 4));
            if (!sp.round_trip || !sp.prime_at_depth) return fail("prime check failed");
            return pass(std::to_string(sp.primes.size()) + " primes");
        }
        if (name == "socle") {
            auto d = socle_data(s, 2);
            const std::string v = "|W|=" + std::to_string(d.W.size()) + (d.doubled ? " at 2ke" : "");
            return d.decomposition_holds ? pass(v) : fail("M != F W*");
        }
    } catch (const ResourceLimit& e) {
        return {"limit", e.what()};
    }
    throw InvalidInput("unknown check '" + name + "'");
}

int Census::failures() const {
    int f = 0;
    for (const auto& r : rows)
        for (const auto& [k, c] : r.checks) f += c.status == "fail";
    return f;
}

std::string Census::csv() const {
    std::ostringstream os;
    os << "index,table,solution,left_nd,right_nd,bijective,involutive,idempotent,fixed_rho,gk";
    for (const auto& c : checks) os << ',' << c << ',' << c << "_value";
    os << '\n';
    for (const auto& r : rows) {
        const auto& f = r.flags;
        os << r.index << ',' << r.solution.compact() << ',' << f.is_solution << ',' << f.left_nondegenerate << ','
           << f.right_nondegenerate << ',' << f.bijective << ',' << f.involutive << ',' << f.idempotent << ','
           << f.fixed_rho << ',' << r.gk;
        for (const auto& c : checks) {
            const auto& o = r.checks.at(c);
            std::string v = o.value;
            std::replace(v.begin(), v.end(), ',', ';');
            os << ',' << o.status << ",\"" << v << '"';
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::ordered_json Census::json() const {
    nlohmann::ordered_json j;
    j["spec"] = spec.to_json();
    j["config"] = config.to_json();
    j["checks"] = checks;
    j["count"] = rows.size();
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& c : checks) {
        std::map<std::string, int> tally;
        for (const auto& r : rows) ++tally[r.checks.at(c).status];
        summary[c] = tally;
    }
    j["summary"] = summary;
    auto rows_json = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["index"] = r.index;
        row["table"] = r.solution.compact();
        row["flags"] = to_json(r.flags);
        row["gk"] = r.gk;
        nlohmann::ordered_json cj = nlohmann::ordered_json::object();
        for (const auto& c : checks) cj[c] = {{"status", r.checks.at(c).status}, {"value", r.checks.at(c).value}};
        row["checks"] = cj;
        rows_json.push_back(row);
    }
    j["rows"] = rows_json;
    return j;
}

Census census(const AtlasSpec& spec, const std::vector<std::string>& checks, const RunConfig& cfg,
              const std::filesystem::path& replay_dir, unsigned threads) {
    for (const auto& c : checks)
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
            throw InvalidInput("unknown check '" + c + "'");
    Census out;
    out.spec = spec;
    out.config = cfg;
    out.checks = checks;
    const auto sols = enumerate(spec);
    out.rows.resize(sols.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    std::size_t error_row = 0;
    std::string error_check;
    auto worker = [&] {
        for (std::size_t i = next++; i < sols.size(); i = next++) {
            CensusRow& row = out.rows[i];
            row.index = static_cast<int>(i);
            row.solution = sols[i];
            row.flags = basic_flags(sols[i]);
            if (row.flags.left_nondegenerate) row.gk = gk_dimension(sols[i]).gk;
            for (const auto& c : checks) {
                try {
                    row.checks[c] = run_check(c, sols[i], cfg);
                } catch (const Error& e) {
                    std::lock_guard lock(err_mu);
                    if (!first_error || i < error_row) {
                        first_error = std::current_exception();
                        error_row = i;
                        error_check = c;
                    }
                    row.checks[c] = fail(e.what());
                }
            }
        }
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    if (!replay_dir.empty()) {
        std::filesystem::create_directories(replay_dir);
        for (const auto& r : out.rows)
            for (const auto& c : checks) {
                const auto& o = r.checks.at(c);
                if (o.status != "fail") continue;
                auto path = replay_dir / ("replay-" + std::to_string(r.index) + "-" + c + ".json");
                nlohmann::ordered_json j;
                j["check"] = c;
                j["message"] = o.value;
                j["solution"] = solution_to_json(r.solution);
                j["config"] = cfg.to_json();
                std::ofstream(path) << j.dump(2) << '\n';
                out.replays.push_back(path);
            }
    }
    if (first_error) {
        try {
            std::rethrow_exception(first_error);
        } catch (const CrossCheckFailure& e) {
            throw CrossCheckFailure("row " + std::to_string(error_row) + " (" + error_check + "): " + e.what());
        } catch (const InconsistentSolution& e) {
            throw CrossCheckFailure("row " + std::to_string(error_row) + " (" + error_check + "): " + e.what());
        } catch (...) {
            // other errors are recorded as failing checks
        }
    }
    return out;
}

}  // namespace ybx
