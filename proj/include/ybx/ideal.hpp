#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ybx/diagnosis.hpp"
#include "ybx/structure.hpp"

namespace ybx {

// M_i: elements left divisible by at least i generators.
struct ChainEntry {
    Subset divisors = 0;
    int level = 0;
};
struct ChainAssignment {
    Flavor flavor = Flavor::A;
    int max_length = 0;
    std::vector<std::vector<ChainEntry>> by_length;  // [L][class id]
    bool ideal_property = true;                       // level(x c), level(c x) >= level(c)
};
ChainAssignment ideal_chain(Structure& s, Flavor f, int L);

// M-classes of length 1..L with divisor set exactly Y and lambda(Z) = Y.
std::vector<ClassRef> myz_members(Structure& s, Subset Y, Subset Z, int L);
// A-classes of length 1..L with divisor set exactly Y.
std::vector<ClassRef> ayy_members(Structure& s, Subset Y, int L);

// Is M_YY non-nil modulo M_{|Y|+1}? Searches d <= D and f in Sym(Y) for d a_{f,Y} in A_{|Y|+1}.
DiagnosisReport lu_membership(Structure& s, Subset Y, int D, int L);
bool is_nil_report(const DiagnosisReport& r);

// (a, lambda_a)^k for the first member a of M_YY, k the order of lambda_a.
ClassRef w_y_element(Structure& s, Subset Y, int D, int L);

namespace cell {
struct ShiftedMYY {  // (d w_Y) o M_YY
    Subset Y;
    int d;
};
struct SoclePower {  // S_YY^d
    Subset Y;
    int d;
};
struct MXXPower {  // M_XX^d
    int d;
};
struct AYYSum {  // d A_YY, the d-fold sum set
    Subset Y;
    int d;
};
}  // namespace cell
using Cell = std::variant<cell::ShiftedMYY, cell::SoclePower, cell::MXXPower, cell::AYYSum>;
std::string cell_name(const Cell& c);

struct ProbeBounds {
    int L = 8;
    int D = 4;
    int N = 4;
    int max_members = 40;
};

struct CancellativityResult {
    DiagnosisReport report;
    int members = 0;
    std::optional<int> commuting_power;  // least N' <= N with a^N' b^N' = b^N' a^N' on probed pairs
};
CancellativityResult cancellativity_probe(Structure& s, const Cell& c, const ProbeBounds& b);
std::vector<ClassRef> cell_members(Structure& s, const Cell& c, int L);

// First a != b in t (equal length) with a c = b c or c a = c b for some c in t.
std::optional<nlohmann::ordered_json> find_cancellation_witness(GradedMonoid& g, const std::vector<ClassRef>& t);

// Re-checks a cancellation witness {"flavor","a","b","c","side"} with fresh closures.
bool replay_cancellation_witness(const Solution& sol, const nlohmann::ordered_json& witness,
                                 const EngineConfig& cfg = {});

// One summary report ("K[M] right Noetherian") followed by the per-subset probes.
std::vector<DiagnosisReport> noetherian_diagnosis(Structure& s, const ProbeBounds& b, int abelian_bound = 6);

// Idempotent solutions: |Lambda| = 1 iff d-th powers of probed elements commute for some d <= D.
struct IdempotentPowers {
    bool lambda_singleton = false;
    std::optional<int> commuting_d;
    bool consistent = false;
};
IdempotentPowers check_idempotent_powers(Structure& s, int L, int D);

// M_YZ o M_UV lands in M_{i+1} whenever Z != U; returns a violating quadruple if found.
std::optional<std::array<Subset, 4>> check_cross_cell_products(Structure& s, int i, int L, int samples, std::uint64_t seed);
// For Y, Z with non-nil M_YY, M_ZZ: M_YZ and M_ZY are both empty or both non-empty.
std::optional<std::pair<Subset, Subset>> check_cell_symmetry(Structure& s, int L, int D);

}  // namespace ybx
