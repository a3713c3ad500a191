#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybx/diagnosis.hpp"
#include "ybx/structure.hpp"

namespace ybx {

// Z != X with sigma_x(Z) in Z and sigma_x(X\Z) in X\Z for all x outside Z; empty set included.
std::vector<Subset> invariant_subsets(const Solution& s);
// Components of the graph on X\Z with edges {y, sigma_x(y)}, x, y outside Z.
int orbit_count(const Solution& s, Subset Z);

struct GkResult {
    int gk = 0;
    std::vector<std::pair<Subset, int>> table;  // (Z, t(Z)) over invariant_subsets
};
GkResult gk_dimension(const Solution& s);

struct PrimeSpectrum {
    std::vector<Subset> primes;                // non-empty members of the invariant family
    std::vector<std::pair<int, int>> hasse;    // covering pairs (i below j)
    bool round_trip = true;                    // X n P(Z) = Z
    bool prime_at_depth = true;                // P(Z) ideal with multiplicatively closed complement
    int probed_length = 0;
    std::string dot() const;
};
PrimeSpectrum spec_A(Structure& s, int L);
// P(Z) is a two-sided ideal whose complement is closed under + at lengths <= L.
bool prime_at_depth(Structure& s, Subset Z, int L);

struct CongruenceResult {
    Flavor flavor = Flavor::A;
    int length = 0;
    int t = 0;                     // stabilization witness, 0 if none within t_max
    bool stabilized = false;
    bool stable_after = true;      // eta_{t+2} adds nothing beyond eta_t
    std::vector<std::vector<int>> blocks;  // block id per class, lengths 0..length
    int block_count = 0;           // at the top length
    bool is_equality = false;
    bool right_cancellative = true;
    nlohmann::ordered_json witness;  // identified pair or cancellation failure
    // flavor M: eta_A-related pi-images must carry equal lambda for bijective non-degenerate input
    bool lambda_check_applies = false;
    bool lambda_check_holds = true;
};
CongruenceResult cancellative_congruence_A(Structure& s, int L, int t_max);
CongruenceResult cancellative_congruence_M(Structure& s, int L, int t_max);

struct BijectiveRetract {
    Solution quotient;   // s(x,y) = (y, sigma_y(x)) on the classes
    Map projection;
    Map sigma_z;
};
BijectiveRetract bijective_retract(Structure& s);

// Orbit of e q(z_id) under G_lambda with z . t = lambda_z(t); needs cancellativity evidence for M.
struct OmegaData {
    DiagnosisReport cancellativity;
    std::vector<ClassRef> orbit;           // A-classes
    std::vector<Word> words;
    std::vector<std::vector<int>> bullet;  // indices into orbit, -1 if outside
    int identity = -1;
    std::vector<int> inverse;
    bool certified = false;
    int order() const { return static_cast<int>(orbit.size()); }
};
// Left and right multiplication by generators injective on classes of length < L.
DiagnosisReport cancellativity_evidence(Structure& s, Flavor f, int L);
OmegaData omega_lambda(Structure& s, int L);

struct CrossCheck {
    std::string name;
    bool passed = true;
    bool applies = true;
    std::string detail;
};
// Throws CrossCheckFailure on a theorem-backed disagreement.
std::vector<CrossCheck> theorem_cross_checks(Structure& s, int L);

}  // namespace ybx
