#pragma once

#include "nicecurves/elliptic.hpp"
#include "nicecurves/hyperelliptic.hpp"
#include "nicecurves/quadext.hpp"
#include "nicecurves/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nicecurves {

enum class Status { Pass, Fail, Partial, TrustedInput };

std::string status_name(Status s);

/// Machine-readable outcome of one claim check. Timing is collected but kept
/// out of the default JSON so identical command + seed + precision reproduce
/// byte-identical reports.
struct VerificationReport {
    std::string claim;
    Status status = Status::Fail;
    nlohmann::json witnesses = nlohmann::json::object();
    nlohmann::json parameters = nlohmann::json::object();
    double seconds = 0.0;
    std::vector<std::string> notes;
};

inline constexpr const char* kReportVersion = "1";

nlohmann::json report_json(const VerificationReport& r, bool with_timing = false);
nlohmann::json reports_json(const std::vector<VerificationReport>& rs, bool with_timing = false);
std::string report_text(const VerificationReport& r);

/// 0 = all PASS/TRUSTED, 2 = any FAIL, 3 = PARTIAL only
int reports_exit_code(const std::vector<VerificationReport>& rs);

// JSON forms of the domain values: rationals as "num/den" strings, quadratic
// elements as {a, b, d}, weighted points as normalized triples.
nlohmann::json js(const Rational& q);
nlohmann::json js(const QuadExt& q);
nlohmann::json js(const WPPoint& P);
nlohmann::json js(const EllipticPoint<Rational>& P);
nlohmann::json js(const EllipticPoint<QuadExt>& P);

} // namespace nicecurves
