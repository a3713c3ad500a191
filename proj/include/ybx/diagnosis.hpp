#pragma once

#include <string>

#include "json.hpp"

namespace ybx {

enum class Verdict { Proved, RefutedWithWitness, EvidenceAtDepth };
const char* verdict_name(Verdict v);

struct Depth {
    int L = 0;  // word length probed
    int D = 0;  // multiplier bound
    int N = 0;  // power bound
};

struct DiagnosisReport {
    std::string question;
    Verdict verdict = Verdict::EvidenceAtDepth;
    nlohmann::ordered_json witness;  // null when absent
    Depth depth;
    std::string detail;
};

nlohmann::ordered_json to_json(const DiagnosisReport& r);
std::string to_text(const DiagnosisReport& r);

}  // namespace ybx
