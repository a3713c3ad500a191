#pragma once

#include <vector>

#include "ybx/diagnosis.hpp"
#include "ybx/structure.hpp"

namespace ybx {

// a ~ b iff a | n b and b | m a; multiples up to n, m <= L are probed.
struct ArchimedeanResult {
    int length = 0;
    std::vector<std::vector<ClassRef>> components;  // members of length <= L, by first member
    std::vector<Subset> divisors;                   // shared divisor set per component
    std::vector<std::vector<int>> table;            // component product, -1 if unresolved
    bool relation_transitive = true;
    bool refines_divisor_partition = true;          // each component has a single divisor set
    bool divisor_blocks_within_components = true;   // each divisor set lies in a single component
    std::vector<std::pair<ClassRef, ClassRef>> mixed_pair;  // same component, different divisor sets
    bool product_well_defined = true;
    bool commutative = true, associative = true, idempotent = true;
    std::vector<DiagnosisReport> cancellativity;    // one per component
    bool semiprime_evidence = true;                 // every component passed its probe
    bool semilattice() const { return commutative && associative && idempotent; }
};

// derived: lambda = id and every rho_y bijective (left derived of a bijective non-degenerate solution).
ArchimedeanResult archimedean_components(const Solution& derived, int L, const EngineConfig& cfg = {});

}  // namespace ybx
