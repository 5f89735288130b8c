#include "nicecurves/report.hpp"

#include <sstream>

namespace nicecurves {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Partial: return "PARTIAL";
        case Status::TrustedInput: return "TRUSTED-INPUT";
    }
    return "?";
}

nlohmann::json report_json(const VerificationReport& r, bool with_timing) {
    nlohmann::json j{{"version", kReportVersion},
                     {"claim", r.claim},
                     {"status", status_name(r.status)},
                     {"witnesses", r.witnesses},
                     {"parameters", r.parameters}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (with_timing) j["timing_seconds"] = r.seconds;
    return j;
}

nlohmann::json reports_json(const std::vector<VerificationReport>& rs, bool with_timing) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& r : rs) arr.push_back(report_json(r, with_timing));
    return nlohmann::json{{"version", kReportVersion}, {"reports", arr}};
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "[" << status_name(r.status) << "] " << r.claim;
    if (r.seconds > 0) {
        os.precision(2);
        os << "  (" << std::fixed << r.seconds << "s)";
    }
    for (auto& n : r.notes) os << "\n    note: " << n;
    if (!r.witnesses.empty()) os << "\n    " << r.witnesses.dump();
    return os.str();
}

int reports_exit_code(const std::vector<VerificationReport>& rs) {
    bool any_fail = false, any_partial = false;
    for (auto& r : rs) {
        if (r.status == Status::Fail) any_fail = true;
        if (r.status == Status::Partial) any_partial = true;
    }
    if (any_fail) return 2;
    if (any_partial) return 3;
    return 0;
}

nlohmann::json js(const Rational& q) { return q.str(); }

nlohmann::json js(const QuadExt& q) {
    return nlohmann::json{{"a", q.a().str()}, {"b", q.b().str()}, {"d", q.d().get_si()}};
}

nlohmann::json js(const WPPoint& P) { return nlohmann::json::array({P.X.str(), P.Y.str(), P.Z.str()}); }

nlohmann::json js(const EllipticPoint<Rational>& P) {
    if (P.infinity) return "inf";
    return nlohmann::json::array({P.x.str(), P.y.str()});
}

nlohmann::json js(const EllipticPoint<QuadExt>& P) {
    if (P.infinity) return "inf";
    return nlohmann::json::array({js(P.x), js(P.y)});
}

} // namespace nicecurves
