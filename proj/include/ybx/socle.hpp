#pragma once

#include <optional>
#include <vector>

#include "ybx/diagnosis.hpp"
#include "ybx/structure.hpp"

namespace ybx {

struct SocleData {
    int k = 1, e = 1, e_sigma = 1;
    long long v = 1;
    // W holds the M-classes whose pi-image is m*x (m = k*e) and whose lambda is trivial.
    int w_multiplier = 1;
    std::vector<int> w_letters;
    std::vector<ClassRef> W;
    Word z_word;  // v x_0 + ... + v x_{n-1} as an A-word
    ClassRef z;
    int transversal_bound = 0;  // n k (e+1)
    std::vector<ClassRef> F;    // all M-classes shorter than the bound
    std::vector<ClassRef> F_soc;
    std::vector<int> verified_lengths;
    bool decomposition_holds = true;
    bool doubled = false;  // the check failed at k*e and was rerun with W at 2*k*e
    std::optional<int> observed_transversal_length;
};

// sample_lengths degrees starting at the transversal bound are checked for M = F W*.
SocleData socle_data(Structure& s, int sample_lengths = 2);
bool is_socle(Structure& s, ClassRef m);
Word z_kappa_word(Structure& s, const Map& kappa);
ClassRef z_kappa(Structure& s, const Map& kappa);
// Checks v x + v y + z = v y + v x + z in A for all x, y; a failure is retried once with
// 2v before it is reported. ResourceLimit propagates.
DiagnosisReport check_zcomm(Structure& s);

}  // namespace ybx
