#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ybx::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(YBX_TEST_DATA) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("validate") {
    auto r = run({"validate", data("r2ex.json")});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "solution: yes; left non-degenerate: yes; bijective: no");
    auto b = run({"validate", data("broken.json")});
    CHECK(b.code == 2);
    CHECK(b.out.find("braid relation fails at (") != std::string::npos);
}

TEST_CASE("classify") {
    auto r = run({"classify", data("triv3.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("involutive: yes") != std::string::npos);
    auto a = run({"classify", data("abex.json")});
    CHECK(a.out.find("M abelian (length 6): no, 1*2 != 2*1") != std::string::npos);
    CHECK(a.out.find("A abelian (length 6): yes") != std::string::npos);
}

TEST_CASE("analysis commands") {
    CHECK(first_line(run({"gk", data("idem2.json")}).out) == "GK = 1");
    auto d = run({"diagnose", data("idem2.json")});
    CHECK(first_line(d.out) == "right Noetherian: NO (exact, Λ-criterion)");
    CHECK(d.code == 2);
    auto g = run({"diagnose", data("group2.json")});
    CHECK(first_line(g.out) == "right Noetherian: YES (exact, Λ-criterion)");
    CHECK(g.code == 0);
    CHECK(first_line(run({"congruence", "-f", "A", data("triv2.json")}).out) == "η_A = equality, t=1");
    CHECK(first_line(run({"growth", data("abex.json"), "--max-length", "4"}).out) == "h_M: 1 3 3 3 3");
    CHECK(first_line(run({"growth", data("abex.json"), "-L", "4", "--flavor", "A"}).out) == "h_A: 1 3 3 3 3");
    CHECK(run({"spec", data("abex.json")}).out.find("digraph") != std::string::npos);
    CHECK(first_line(run({"canon", data("abex.json"), "22", "12"}).out) == "22 -> 00");
}

TEST_CASE("exit codes") {
    CHECK(run({"omega", data("idem2.json")}).code == 4);
    CHECK(run({"growth", data("free2.json"), "--max-length", "12", "--node-budget", "100"}).code == 3);
    CHECK(run({}).code == 1);
    CHECK(run({"gk"}).code == 1);
    CHECK(run({"gk", data("missing.json")}).code == 1);
    CHECK(run({"growth", data("abex.json"), "--flavor", "B"}).code == 1);
    CHECK(run({"gk", data("free2.json")}).code == 4);
}

TEST_CASE("atlas command") {
    auto one = run({"atlas", "n=1"});
    CHECK(one.code == 0);
    CHECK(one.out.find("1 solutions") != std::string::npos);
    auto gk = run({"atlas", "n=2", "--check", "involutive-gk"});
    CHECK(gk.code == 0);
    CHECK(gk.out.find("summary: pass") != std::string::npos);
    auto r1 = run({"atlas", "n=2", "--check", "r1"});
    CHECK(r1.out.find("summary: pass") != std::string::npos);
}

TEST_CASE("json reports are deterministic and carry the config") {
    for (const char* cmd : {"classify", "growth", "gk", "diagnose", "congruence", "omega"}) {
        auto a = run({cmd, data("abex.json"), "--format", "json"});
        auto b = run({cmd, data("abex.json"), "--format", "json"});
        CHECK(a.out == b.out);
        auto j = nlohmann::json::parse(a.out);
        CHECK(j["command"] == cmd);
        CHECK(j["config"]["max_length"] == 8);
        CHECK(j["exit_code"] == a.code);
    }
    auto t = run({"diagnose", data("idem2.json"), "--format", "json"});
    auto j = nlohmann::json::parse(t.out);
    CHECK(j["result"]["summary"]["verdict"] == "RefutedWithWitness");
}
