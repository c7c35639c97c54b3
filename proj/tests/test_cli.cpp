#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "testkit.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run pxp_run(std::vector<std::string> args) {
    args.insert(args.begin(), "pxp");
    std::ostringstream out, err;
    int code = pxp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> dengue(std::vector<std::string> args) {
    for (const char* a : {"-m", "dengue_model.json", "-q", "dengue_query.json"})
        args.push_back(a[0] == '-' ? a : testkit::fixture(a));
    return args;
}

}  // namespace

TEST_CASE("cli prediction and sufficiency") {
    auto r = pxp_run(dengue({"predict-set"}));
    CHECK(r.code == 0);
    CHECK(r.out == "{+, ++}\n");
    r = pxp_run(dengue({"check-sufficient"}));
    CHECK(r.code == 0);
    CHECK(r.out.rfind("sufficient", 0) == 0);
}

TEST_CASE("cli explanations") {
    auto r = pxp_run(dengue({"explain", "--kind", "axp"}));
    CHECK(r.code == 0);
    CHECK(r.out == "AXp {4,6}  PLT=100, WBC=5\n");
    r = pxp_run(dengue({"explain", "--kind", "axp", "--order", "desc"}));
    CHECK(r.out.rfind("AXp {1,4}", 0) == 0);
    r = pxp_run(dengue({"explain", "--kind", "cxp", "--order", "PLT,Lymp,HCT,WBC"}));
    CHECK(r.out.rfind("CXp {1,6}", 0) == 0);
    r = pxp_run(dengue({"explain", "--order", "1,2"}));
    CHECK(r.code == 2);
}

TEST_CASE("cli enumeration in structured mode") {
    auto r = pxp_run(dengue({"--json", "enumerate"}));
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::vector<nlohmann::json> records;
    for (std::string line; std::getline(lines, line);) records.push_back(nlohmann::json::parse(line));
    REQUIRE(records.size() == 4);
    CHECK(records[0]["kind"] == "CXp");
    CHECK(records[0]["features"] == nlohmann::json({4}));
    CHECK(records[3]["names"] == nlohmann::json({"PLT", "WBC"}));

    r = pxp_run(dengue({"enumerate", "--bias", "neg"}));
    CHECK(r.out.rfind("AXp {4,6}", 0) == 0);
}

TEST_CASE("cli feature queries") {
    CHECK(pxp_run(dengue({"necessary", "--feature", "PLT"})).out == "PLT: necessary\n");
    CHECK(pxp_run(dengue({"necessary", "--feature", "1"})).out == "HCT: not necessary\n");
    CHECK(pxp_run(dengue({"relevant", "--feature", "Lymp"})).out == "Lymp: not relevant\n");
    CHECK(pxp_run(dengue({"relevant", "--feature", "Neutr"})).code == 2);
    CHECK(pxp_run(dengue({"relevant", "--feature", "Pulse"})).code == 2);
}

TEST_CASE("cli probability") {
    std::vector<std::string> grades{"-m", testkit::fixture("grades_model.json"), "-q",
                                    testkit::fixture("grades_query.json")};
    auto args = std::vector<std::string>{"--json", "paxp", "--features", "colour", "--delta", "1/2"};
    args.insert(args.end(), grades.begin(), grades.end());
    auto r = pxp_run(args);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["probability"] == "2/5");
    CHECK(j["weak_paxp"] == false);
    // Real-valued features cannot be counted.
    CHECK(pxp_run(dengue({"paxp", "--features", "PLT"})).code == 1);
}

TEST_CASE("cli assessment") {
    auto r = pxp_run({"assess", "-m", testkit::fixture("assess_model.json"), "--leaf", "8", "--symptoms", "Vomit=1,Fever"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FLAG") != std::string::npos);
    r = pxp_run({"--json", "assess", "-m", testkit::fixture("symptom_only_model.json"), "--leaf", "2", "--symptoms",
                 "Vomit"});
    CHECK(nlohmann::json::parse(r.out)["outcome"] == "inconclusive");
    CHECK(pxp_run({"assess", "-m", testkit::fixture("assess_model.json"), "--leaf", "0"}).code == 2);
}

TEST_CASE("cli verify") {
    auto r = pxp_run({"verify", "--seed", "3", "--instances", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all properties hold on 10 instances, seed 3") != std::string::npos);
}

TEST_CASE("cli errors and exit codes") {
    CHECK(pxp_run({}).code == 2);
    CHECK(pxp_run({"frobnicate"}).code == 2);
    CHECK(pxp_run({"predict-set"}).code == 2);
    CHECK(pxp_run({"--help"}).code == 0);
    auto r = pxp_run({"predict-set", "-m", "/nonexistent.json", "-q", "/nonexistent.json"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    r = pxp_run({"predict-set", "-m", testkit::fixture("dengue_query.json"), "-q", testkit::fixture("dengue_query.json")});
    CHECK(r.code == 1);
    CHECK(r.err.find("format") != std::string::npos);
}
