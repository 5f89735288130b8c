#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nicecurves/campaigns.hpp"

using namespace nicecurves;

TEST_CASE("serialization formats") {
    CHECK(js(Rational(8, 5)) == "8/5");
    CHECK(js(Rational(3)) == "3/1");
    nlohmann::json q = js(QuadExt(Rational(1), Rational(1, 5), Integer(-15)));
    CHECK(q["a"] == "1/1");
    CHECK(q["b"] == "1/5");
    CHECK(q["d"] == -15);
    nlohmann::json w = js(WPPoint{Rational(-1, 4), Rational(0), Rational(1)});
    CHECK(w == nlohmann::json::array({"-1/4", "0/1", "1/1"}));
    CHECK(js(EllipticPoint<Rational>(Rational(0))) == "inf");
}

TEST_CASE("exit codes") {
    VerificationReport pass, fail, partial, trusted;
    pass.status = Status::Pass;
    fail.status = Status::Fail;
    partial.status = Status::Partial;
    trusted.status = Status::TrustedInput;
    CHECK(reports_exit_code({pass, trusted}) == 0);
    CHECK(reports_exit_code({pass, partial}) == 3);
    CHECK(reports_exit_code({pass, partial, fail}) == 2);
    CHECK(reports_exit_code({}) == 0);
}

TEST_CASE("identical command + seed -> byte-identical JSON") {
    auto once = [] {
        std::vector<VerificationReport> rs;
        rs.push_back(campaign_param(0x4E1CE, 50));
        rs.push_back(campaign_torsion_classification(5, 20, 5, 20, 0x4E1CE));
        rs.push_back(campaign_search_Hq(30));
        return reports_json(rs, false).dump(2);
    };
    std::string a = once(), b = once();
    CHECK(a == b);
    // timing is excluded from the default serialization
    CHECK(a.find("timing") == std::string::npos);
    // a different seed changes the sampled campaign parameters
    auto other = reports_json({campaign_torsion_classification(5, 20, 5, 20, 7)}, false).dump(2);
    CHECK(other.find("\"seed\": 7") != std::string::npos);
}

TEST_CASE("failure reports embed the first violated operands") {
    // a FAIL must carry the offending inputs; force one through the search
    // campaign with a wrong expectation is not possible from outside, so check
    // the torsion campaign's violation plumbing instead via the report shape
    auto r = campaign_torsion_classification(3, 20, 3, 20, 0x4E1CE);
    CHECK(r.status == Status::Pass);
    CHECK(r.witnesses.contains("pairs_checked"));
    CHECK(r.parameters["seed"] == 0x4E1CE);
}

TEST_CASE("CSV export has the documented columns") {
    std::string csv = param_sweep_csv(5, 20, 0x4E1CE);
    CHECK(csv.rfind("t,L,W,r,s,torsion_class_d,j_num,j_den\n", 0) == 0);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 6); // header + 5 rows
    // deterministic across runs
    CHECK(csv == param_sweep_csv(5, 20, 0x4E1CE));
}

TEST_CASE("trusted inputs name their source") {
    auto rs = campaign_chabauty(5, 20, 5);
    REQUIRE(!rs.empty());
    CHECK(rs.front().claim == "trusted.rank.JacHq");
    CHECK(rs.front().status == Status::TrustedInput);
    REQUIRE(!rs.front().notes.empty());
    CHECK(rs.front().notes.front().find("rank") != std::string::npos);
}
