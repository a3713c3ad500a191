#include "ybx/diagnosis.hpp"

#include <sstream>

namespace ybx {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Proved: return "Proved";
        case Verdict::RefutedWithWitness: return "RefutedWithWitness";
        case Verdict::EvidenceAtDepth: return "EvidenceAtDepth";
    }
    return "?";
}

nlohmann::ordered_json to_json(const DiagnosisReport& r) {
    nlohmann::ordered_json j;
    j["question"] = r.question;
    j["verdict"] = verdict_name(r.verdict);
    if (!r.witness.is_null()) j["witness"] = r.witness;
    j["depth"] = {{"L", r.depth.L}, {"D", r.depth.D}, {"N", r.depth.N}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

std::string to_text(const DiagnosisReport& r) {
    std::ostringstream os;
    os << r.question << ": " << verdict_name(r.verdict) << " (L=" << r.depth.L << ", D=" << r.depth.D
       << ", N=" << r.depth.N << ")";
    if (!r.witness.is_null()) os << " witness " << r.witness.dump();
    if (!r.detail.empty()) os << " - " << r.detail;
    return os.str();
}

}  // namespace ybx
