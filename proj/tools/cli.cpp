#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ybx/atlas.hpp"
#include "ybx/classify.hpp"
#include "ybx/config.hpp"
#include "ybx/error.hpp"
#include "ybx/ideal.hpp"
#include "ybx/invariants.hpp"
#include "ybx/solution_io.hpp"
#include "ybx/words.hpp"

namespace ybx {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0, kUsage = 1, kRefuted = 2, kLimit = 3, kPrecondition = 4, kInternal = 5;

const char* yn(bool b) { return b ? "yes" : "no"; }

struct Report {
    std::string command;
    ojson result = ojson::object();
    std::string text;
    int code = kOk;
};

ojson envelope(const Report& r, const RunConfig& cfg, const Solution* s) {
    ojson j;
    j["command"] = r.command;
    j["config"] = cfg.to_json();
    if (s)
        j["solution"] = {{"n", s->size()}, {"hash", s->hash_hex()}};
    else
        j["solution"] = nullptr;
    j["result"] = r.result;
    j["exit_code"] = r.code;
    return j;
}

void require_lnd(const Solution& s) {
    if (!is_left_nondegenerate(s)) throw PreconditionUnmet("solution is not left non-degenerate");
}

std::string flavor_letter(Flavor f) { return f == Flavor::M ? "M" : "A"; }

Report do_validate(const Solution& s) {
    Report r;
    r.command = "validate";
    PropertyFlags f = basic_flags(s);
    r.result = to_json(f);
    std::ostringstream os;
    os << "solution: " << yn(f.is_solution);
    if (f.braid_witness) {
        const auto& w = *f.braid_witness;
        os << "; braid relation fails at (" << w[0] << "," << w[1] << "," << w[2] << ")\n";
        r.text = os.str();
        r.code = kRefuted;
        return r;
    }
    os << "; left non-degenerate: " << yn(f.left_nondegenerate) << "; bijective: " << yn(f.bijective) << '\n';
    r.text = os.str();
    return r;
}

Report do_classify(const Solution& s, const RunConfig& cfg) {
    Report r;
    r.command = "classify";
    PropertyFlags f = classify(s, cfg.abelian_bound, cfg.engine());
    r.result = to_json(f);
    std::ostringstream os;
    os << "solution: " << yn(f.is_solution) << '\n';
    if (f.braid_witness) {
        const auto& w = *f.braid_witness;
        os << "braid witness: (" << w[0] << "," << w[1] << "," << w[2] << ")\n";
        r.code = kRefuted;
    }
    os << "left non-degenerate: " << yn(f.left_nondegenerate) << '\n'
       << "right non-degenerate: " << yn(f.right_nondegenerate) << '\n'
       << "bijective: " << yn(f.bijective) << '\n'
       << "involutive: " << yn(f.involutive) << '\n'
       << "idempotent: " << yn(f.idempotent) << '\n'
       << "fixed rho: " << yn(f.fixed_rho) << '\n';
    auto ab = [&](const char* name, const std::optional<bool>& v, const std::optional<std::pair<Word, Word>>& w) {
        os << name << " abelian (length " << f.abelian_bound << "): ";
        if (!v) {
            os << "unknown\n";
            return;
        }
        os << yn(*v);
        if (w) os << ", " << word_string(w->first) << "*" << word_string(w->second) << " != "
                  << word_string(w->second) << "*" << word_string(w->first);
        os << '\n';
    };
    ab("M", f.abelian_M, f.abelian_M_witness);
    ab("A", f.abelian_A, f.abelian_A_witness);
    r.text = os.str();
    return r;
}

Report do_growth(Structure& s, const RunConfig& cfg) {
    Report r;
    r.command = "growth";
    const Flavor fl = cfg.flavor_enum();
    Growth g = growth(s, fl, cfg.max_length);
    r.result["flavor"] = flavor_letter(fl);
    r.result["h"] = g.h;
    std::ostringstream os;
    os << "h_" << flavor_letter(fl) << ":";
    for (auto v : g.h) os << ' ' << v;
    os << '\n';
    if (g.limited_at) {
        r.result["limited_at"] = *g.limited_at;
        r.result["limit"] = g.limit_message;
        os << "resource limit at length " << *g.limited_at << ": " << g.limit_message << '\n';
        r.code = kLimit;
    } else {
        r.result["limited_at"] = nullptr;
    }
    r.text = os.str();
    return r;
}

Report do_gk(const Solution& s) {
    require_lnd(s);
    Report r;
    r.command = "gk";
    GkResult g = gk_dimension(s);
    r.result["gk"] = g.gk;
    ojson table = ojson::array();
    std::ostringstream os;
    os << "GK = " << g.gk << '\n';
    for (auto [Z, t] : g.table) {
        table.push_back({{"Z", elements(Z)}, {"t", t}});
        os << "  Z=" << subset_string(Z) << " t=" << t << '\n';
    }
    r.result["table"] = table;
    r.text = os.str();
    return r;
}

Report do_spec(Structure& s, const RunConfig& cfg) {
    require_lnd(s.solution());
    Report r;
    r.command = "spec";
    PrimeSpectrum p = spec_A(s, std::min(cfg.max_length, 6));
    ojson primes = ojson::array();
    for (Subset Z : p.primes) primes.push_back(elements(Z));
    r.result["primes"] = primes;
    r.result["hasse"] = p.hasse;
    r.result["round_trip"] = p.round_trip;
    r.result["prime_at_depth"] = p.prime_at_depth;
    r.result["probed_length"] = p.probed_length;
    r.result["dot"] = p.dot();
    r.text = p.dot();
    return r;
}

Report do_congruence(Structure& s, const RunConfig& cfg) {
    require_lnd(s.solution());
    Report r;
    r.command = "congruence";
    const Flavor fl = cfg.flavor_enum();
    CongruenceResult c = fl == Flavor::A ? cancellative_congruence_A(s, cfg.congruence_length, cfg.t_max)
                                         : cancellative_congruence_M(s, cfg.congruence_length, cfg.t_max);
    const std::string name = "η_" + flavor_letter(fl);
    r.result["flavor"] = flavor_letter(fl);
    r.result["length"] = c.length;
    r.result["t"] = c.t;
    r.result["stabilized"] = c.stabilized;
    r.result["stable_after"] = c.stable_after;
    r.result["block_count"] = c.block_count;
    r.result["is_equality"] = c.is_equality;
    r.result["right_cancellative"] = c.right_cancellative;
    r.result["blocks"] = c.blocks;
    r.result["witness"] = c.witness;
    if (c.lambda_check_applies) r.result["lambda_check_holds"] = c.lambda_check_holds;
    std::ostringstream os;
    if (!c.stabilized) {
        os << name << ": not stabilized within t_max=" << cfg.t_max << " at L=" << c.length << '\n';
        r.code = kLimit;
    } else if (c.is_equality) {
        os << name << " = equality, t=" << c.t << '\n';
    } else {
        os << name << ": " << c.block_count << " blocks at L=" << c.length << ", t=" << c.t << '\n';
    }
    os << "right cancellative quotient: " << yn(c.right_cancellative) << '\n';
    if (!c.witness.is_null()) os << "witness: " << c.witness.dump() << '\n';
    r.text = os.str();
    return r;
}

std::string summary_line(const DiagnosisReport& s) {
    const bool exact = s.detail.rfind("exact, Lambda-criterion", 0) == 0;
    switch (s.verdict) {
        case Verdict::Proved:
            return exact ? "right Noetherian: YES (exact, Λ-criterion)" : "right Noetherian: YES (proved, A abelian)";
        case Verdict::RefutedWithWitness:
            return exact ? "right Noetherian: NO (exact, Λ-criterion)" : "right Noetherian: NO (witness)";
        case Verdict::EvidenceAtDepth:
            break;
    }
    const bool yes = s.detail.rfind("supports YES", 0) == 0;
    return std::string("right Noetherian: evidence supports ") + (yes ? "YES" : "NO") + " at depth L=" +
           std::to_string(s.depth.L) + ", D=" + std::to_string(s.depth.D) + ", N=" + std::to_string(s.depth.N);
}

Report do_diagnose(Structure& s, const RunConfig& cfg) {
    Report r;
    r.command = "diagnose";
    auto reps = noetherian_diagnosis(s, cfg.probe(), cfg.abelian_bound);
    ojson arr = ojson::array();
    for (const auto& d : reps) arr.push_back(to_json(d));
    r.result["summary"] = to_json(reps.front());
    r.result["reports"] = arr;
    std::ostringstream os;
    os << summary_line(reps.front()) << '\n';
    for (const auto& d : reps) os << "  " << to_text(d) << '\n';
    r.text = os.str();
    if (reps.front().verdict == Verdict::RefutedWithWitness) r.code = kRefuted;
    return r;
}

Report do_omega(Structure& s, const RunConfig& cfg) {
    require_lnd(s.solution());
    Report r;
    r.command = "omega";
    OmegaData o = omega_lambda(s, cfg.max_length);
    r.result["order"] = o.order();
    ojson words = ojson::array();
    for (const auto& w : o.words) words.push_back(word_string(w));
    r.result["elements"] = words;
    r.result["table"] = o.bullet;
    r.result["identity"] = o.identity;
    r.result["inverse"] = o.inverse;
    r.result["certified"] = o.certified;
    r.result["cancellativity"] = to_json(o.cancellativity);
    r.result["noteworthy"] = o.order() > 1 && o.certified;
    std::ostringstream os;
    os << "|Ω_λ| = " << o.order() << (o.certified ? " (group table certified)" : " (table not certified)") << '\n';
    for (std::size_t i = 0; i < o.words.size(); ++i) os << "  " << i << ": " << word_string(o.words[i]) << '\n';
    os << "M cancellativity: " << verdict_name(o.cancellativity.verdict) << '\n';
    if (o.order() > 1 && o.certified) os << "noteworthy: |Ω_λ| > 1\n";
    r.text = os.str();
    return r;
}

Report do_canon(Structure& s, const RunConfig& cfg, const std::vector<std::string>& words) {
    Report r;
    r.command = "canon";
    const Flavor fl = cfg.flavor_enum();
    r.result["flavor"] = flavor_letter(fl);
    ojson arr = ojson::array();
    std::ostringstream os;
    for (const auto& w : words) {
        Word word = w == "e" ? Word{} : parse_word(w, s.size());
        for (int x : word)
            if (x < 0 || x >= s.size()) throw InvalidInput("letter out of range in '" + w + "'");
        Word c = canonical_form(s, fl, word);
        arr.push_back({{"word", w}, {"canonical", word_string(c)}});
        os << w << " -> " << word_string(c) << '\n';
    }
    r.result["words"] = arr;
    r.text = os.str();
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write " + path);
    f << text;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Computations with finite set-theoretic solutions of the Yang-Baxter equation", "ybx"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-length,-L", cfg.max_length, "word length bound")->check(CLI::PositiveNumber);
        sub->add_option("--node-budget", cfg.node_budget, "closure node budget per degree")->check(CLI::PositiveNumber);
        sub->add_option("--length-budget", cfg.length_budget, "longest degree the engine will build")
            ->check(CLI::PositiveNumber);
        sub->add_option("--d-bound,-D", cfg.d_bound, "multiplier bound")->check(CLI::PositiveNumber);
        sub->add_option("--power-bound,-N", cfg.power_bound, "power bound")->check(CLI::PositiveNumber);
        sub->add_option("--t-max", cfg.t_max, "stabilization bound for eta")->check(CLI::PositiveNumber);
        sub->add_option("--congruence-length", cfg.congruence_length, "length for eta")->check(CLI::PositiveNumber);
        sub->add_option("--abelian-bound", cfg.abelian_bound, "length for abelian checks")->check(CLI::PositiveNumber);
        sub->add_option("--cache-dir", cfg.cache_dir, "closure cache directory");
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--flavor,-f", cfg.flavor, "M or A")->check(CLI::IsMember({"M", "A"}));
        sub->add_option("--seed", cfg.seed, "seed for sampled probes");
    };

    std::string file;
    auto file_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "solution JSON")->required();
        add_common(sub);
        return sub;
    };
    auto* validate = file_cmd("validate", "check the braid relation and basic properties");
    auto* classify_cmd = file_cmd("classify", "full property flags");
    auto* growth_cmd = file_cmd("growth", "h(L) for M or A");
    auto* gk_cmd = file_cmd("gk", "Gelfand-Kirillov dimension by orbit counting");
    auto* spec_cmd = file_cmd("spec", "prime spectrum of A as DOT");
    auto* cong_cmd = file_cmd("congruence", "least cancellative congruence");
    auto* diag_cmd = file_cmd("diagnose", "right Noetherian diagnosis");
    auto* omega_cmd = file_cmd("omega", "the group Omega_lambda");
    std::vector<std::string> words;
    auto* canon_cmd = file_cmd("canon", "canonical forms of words");
    canon_cmd->add_option("words", words, "words as digits or dot-separated letters")->required();

    std::string atlas_spec, csv_path, json_path, replay_dir;
    std::vector<std::string> checks;
    unsigned threads = 1;
    auto* atlas_cmd = app.add_subcommand("atlas", "enumerate small solutions and run checks");
    atlas_cmd->add_option("spec", atlas_spec, "n=<size>[,class=general|lnd|fixed-rho][,filter=<flag>][,dedup]")
        ->required();
    atlas_cmd->add_option("--check,-c", checks, "check to run (repeatable)");
    atlas_cmd->add_option("--csv", csv_path, "write the census as CSV");
    atlas_cmd->add_option("--json-out", json_path, "write the census as JSON");
    atlas_cmd->add_option("--replay-dir", replay_dir, "one solution file per failing check");
    atlas_cmd->add_option("--threads,-j", threads, "worker threads")->check(CLI::PositiveNumber);
    add_common(atlas_cmd);

    std::string cache_action;
    auto* cache_cmd = app.add_subcommand("cache", "closure cache maintenance");
    cache_cmd->add_option("action", cache_action, "info or clear")->required()->check(CLI::IsMember({"info", "clear"}));
    add_common(cache_cmd);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    apply_environment(cfg);
    const bool json = cfg.format == "json";

    std::optional<Solution> sol;
    Report rep;
    auto emit = [&](Report& r) {
        if (r.command.empty()) r.command = app.get_subcommands().front()->get_name();
        if (json)
            out << envelope(r, cfg, sol ? &*sol : nullptr).dump(2) << '\n';
        else if (r.result.contains("error"))
            err << r.text;
        else
            out << r.text;
        return r.code;
    };
    try {
        if (cache_cmd->parsed()) {
            rep.command = "cache";
            if (cfg.cache_dir.empty()) throw InvalidInput("no cache directory (use --cache-dir or YBX_CACHE)");
            std::ostringstream os;
            if (cache_action == "info") {
                CacheInfo ci = cache_info(cfg.cache_dir);
                rep.result = {{"action", "info"}, {"files", ci.files}, {"bytes", ci.bytes}};
                os << cfg.cache_dir << ": " << ci.files << " files, " << ci.bytes << " bytes\n";
            } else {
                std::size_t removed = cache_clear(cfg.cache_dir);
                rep.result = {{"action", "clear"}, {"removed", removed}};
                os << "removed " << removed << " files from " << cfg.cache_dir << '\n';
            }
            rep.text = os.str();
        } else if (atlas_cmd->parsed()) {
            rep.command = "atlas";
            AtlasSpec spec = parse_atlas_spec(atlas_spec);
            Census c = census(spec, checks, cfg, replay_dir, threads);
            if (!csv_path.empty()) write_file(csv_path, c.csv());
            if (!json_path.empty()) write_file(json_path, c.json().dump(2) + "\n");
            ojson j = c.json();
            rep.result["spec"] = j["spec"];
            rep.result["count"] = j["count"];
            rep.result["summary"] = j["summary"];
            rep.result["failures"] = c.failures();
            std::ostringstream os;
            os << "atlas " << atlas_spec << ": " << c.rows.size() << " solutions\n";
            for (const auto& name : checks) {
                os << "  " << name << ":";
                for (auto& [status, count] : j["summary"][name].items()) os << ' ' << status << '=' << count.get<int>();
                os << '\n';
            }
            for (const auto& r : c.rows)
                for (const auto& name : checks) {
                    const auto& o = r.checks.at(name);
                    if (o.status == "fail" || o.status == "noteworthy")
                        os << "  " << o.status << ": row " << r.index << " " << r.solution.compact() << " " << name
                           << " " << o.value << '\n';
                }
            if (checks.empty())
                for (const auto& r : c.rows) os << "  " << r.index << ": " << r.solution.compact() << '\n';
            os << (c.failures() == 0 ? "summary: pass\n" : "summary: " + std::to_string(c.failures()) + " failures\n");
            rep.text = os.str();
            if (c.failures() > 0) rep.code = kRefuted;
        } else {
            sol = load_solution(file);
            if (validate->parsed()) {
                rep = do_validate(*sol);
            } else if (classify_cmd->parsed()) {
                rep = do_classify(*sol, cfg);
            } else {
                if (!validate_yang_baxter(*sol)) throw PreconditionUnmet("input is not a solution (run validate)");
                if (gk_cmd->parsed()) {
                    rep = do_gk(*sol);
                    return emit(rep);
                }
                Structure s(*sol, cfg.engine());
                if (growth_cmd->parsed()) rep = do_growth(s, cfg);
                else if (spec_cmd->parsed()) rep = do_spec(s, cfg);
                else if (cong_cmd->parsed()) rep = do_congruence(s, cfg);
                else if (diag_cmd->parsed()) rep = do_diagnose(s, cfg);
                else if (omega_cmd->parsed()) rep = do_omega(s, cfg);
                else if (canon_cmd->parsed()) rep = do_canon(s, cfg, words);
            }
        }
    } catch (const ResourceLimit& e) {
        rep.code = kLimit;
        rep.result = {{"error", "resource-limit"}, {"message", e.what()}};
        rep.text = std::string("resource limit: ") + e.what() + '\n';
    } catch (const PreconditionUnmet& e) {
        rep.code = kPrecondition;
        rep.result = {{"error", "precondition"}, {"message", e.what()}};
        rep.text = std::string("precondition unmet: ") + e.what() + '\n';
    } catch (const CrossCheckFailure& e) {
        rep.code = kInternal;
        rep.result = {{"error", "cross-check"}, {"message", e.what()}};
        rep.text = std::string("cross-check failure: ") + e.what() + '\n';
    } catch (const InconsistentSolution& e) {
        rep.code = kInternal;
        rep.result = {{"error", "inconsistent"}, {"message", e.what()}};
        rep.text = std::string("internal inconsistency: ") + e.what() + '\n';
    } catch (const std::exception& e) {
        // parse and input errors: no report, message on stderr
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return emit(rep);
}

}  // namespace ybx
