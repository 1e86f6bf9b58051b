#include "entcc/verify.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace entcc;

TEST_CASE("every registered claim passes") {
    for (const std::string& claim : claim_names()) {
        CAPTURE(claim);
        const Report report = verify_claim(claim, kDefaultSeed);
        CHECK(report.pass());
        CHECK_FALSE(report.checks.empty());
    }
}

TEST_CASE("verify all aggregates the claims and adds the headlines") {
    const Report report = verify_claim("all", kDefaultSeed);
    CHECK(report.pass());

    bool headline_f = false, headline_g = false, witness = false;
    for (const Check& check : report.checks) {
        if (check.name == "headline-f") headline_f = check.pass;
        if (check.name == "headline-g") headline_g = check.pass;
    }
    witness = report.artifacts.count("witness-f-depth4") > 0;
    CHECK(headline_f);
    CHECK(headline_g);
    CHECK(witness);
}

TEST_CASE("unknown claims are a domain error") {
    CHECK_THROWS_AS(verify_claim("bogus", kDefaultSeed), std::domain_error);
}

TEST_CASE("verdict fails when any check fails") {
    Report report;
    report.command = "verify";
    report.add("good", "value=1", true);
    report.add("bad", "value=0", false);
    CHECK_FALSE(report.pass());

    std::ostringstream text;
    write_report(report, ReportFormat::Text, text);
    CHECK(text.str().find("check: bad value=0 -> fail") != std::string::npos);
    CHECK(text.str().find("verdict: fail") != std::string::npos);

    std::ostringstream kv;
    write_report(report, ReportFormat::Kv, kv);
    CHECK(kv.str().find("check=bad value=0 result=fail") != std::string::npos);
    CHECK(kv.str().find("verdict=fail") != std::string::npos);
}

TEST_CASE("probabilities render with twelve decimals") {
    CHECK(format_probability(1.0) == "1.000000000000");
    CHECK(format_probability(0.8535533905932737) == "0.853553390593");
    CHECK(format_probability(0.0) == "0.000000000000");
}

TEST_CASE("simulate reports match their contracts") {
    const std::vector<int> ghz_input{1, 1, 0};
    const Report ghz = simulate_report("ghz", ghz_input, 10, 7);
    CHECK(ghz.pass());
    bool saw_counts = false;
    int run_lines = 0;
    for (const Check& check : ghz.checks) {
        if (check.name == "correct-runs") {
            saw_counts = true;
            CHECK(check.detail == "count=10/10");
        }
        if (check.name.rfind("run-", 0) == 0) ++run_lines;
    }
    CHECK(saw_counts);
    CHECK(run_lines == 10);

    const std::vector<int> chsh_input{0, 0};
    const Report chsh = simulate_report("chsh", chsh_input, 100000, 7);
    CHECK(chsh.pass());
    for (const Check& check : chsh.checks) {
        CHECK(check.name.rfind("run-", 0) != 0);  // too many shots for per-run lines
    }
}

TEST_CASE("simulate validates protocol, input and shots") {
    const std::vector<int> pair{0, 0};
    const std::vector<int> triple{1, 1, 0};
    const std::vector<int> off_promise{1, 0, 0};
    const std::vector<int> out_of_range{7, 0};
    CHECK_THROWS_AS(simulate_report("epr", pair, 1, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_report("ghz", pair, 1, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_report("chsh", pair, 0, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_report("ghz", off_promise, 1, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_report("chsh", out_of_range, 1, 1), std::domain_error);
    CHECK_NOTHROW(simulate_report("ghz", triple, 1, 1));
}

TEST_CASE("enumerate reports cover both functions") {
    const Report depth3 = enumerate_report("f", 3);
    bool saw_infeasible = false;
    for (const Check& check : depth3.checks) {
        if (check.name == "feasible") saw_infeasible = check.detail.rfind("value=no", 0) == 0;
    }
    CHECK(saw_infeasible);
    CHECK(depth3.artifacts.empty());

    const Report depth4 = enumerate_report("f", 4);
    CHECK(depth4.pass());
    CHECK(depth4.artifacts.count("witness-f-depth4") == 1);

    const Report g2 = enumerate_report("g", 2);
    bool saw_best = false;
    for (const Check& check : g2.checks) {
        if (check.name == "best-success") saw_best = check.detail.rfind("value=3/4", 0) == 0;
    }
    CHECK(saw_best);

    CHECK_THROWS_AS(enumerate_report("f", 6), std::domain_error);
    CHECK_THROWS_AS(enumerate_report("g", 4), std::domain_error);
    CHECK_THROWS_AS(enumerate_report("h", 1), std::domain_error);
}
