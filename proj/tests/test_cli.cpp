#include "charclass/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace charclass;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("bound") {
    auto r = run({"bound", "HP^2"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "N >= 14 (Main Theorem I)");
    r = run({"bound", "(S^4,2)+(R^2,8)"});
    CHECK(first_line(r.out) == "N >= 21 (Main Theorem II)");
    r = run({"bound", "(CP^4,2)", "--regime", "complex"});
    CHECK(first_line(r.out) == "N >= 8 (complex disjoint-union obstruction)");
    r = run({"bound", "--cited", "blz", "--m", "2", "--k", "4"});
    CHECK(first_line(r.out).rfind("N >= 7 (", 0) == 0);
    r = run({"bound", "--cited", "handel", "(RP^5,2)+(S^3,2)"});
    CHECK(first_line(r.out).rfind("N >= 14 (", 0) == 0);
    r = run({"bound", "R^2"});
    CHECK(first_line(r.out) == "N >= 3 (Main Theorem II)");
}

TEST_CASE("bound JSON is schema-stable and deterministic") {
    const auto a = run({"bound", "S^3 x RP^5", "--json"});
    const auto b = run({"bound", "S^3 x RP^5", "--json"});
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == "1");
    CHECK(j["bound"] == 3 + 7 + 2);
    CHECK(j["theorem"] == "Main Theorem I");
    CHECK(j["breakdown"].is_array());
    CHECK(j["breakdown"].size() == 3);
    CHECK(j.contains("tightness"));
}

TEST_CASE("errors and exit codes") {
    auto r = run({"bound", "RP^1"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("RP^1") != std::string::npos);
    CHECK(run({"bound", "S^3 x"}).code == kExitUsage);
    CHECK(run({"bound", "(R^3,2)"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"bound", "--cited", "bclz-p", "--m", "3", "--p", "2"}).code == kExitUsage);
    CHECK(run({"bound", "--help"}).code == kExitOk);
    CHECK(run({"height", "--k", "2", "--n", "5", "--trunc", "12"}).code == kExitInconclusive);
}

TEST_CASE("height, lucas, dual-sw, table") {
    auto r = run({"height", "--k", "2", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out).rfind("8 (", 0) == 0);
    CHECK(r.err.find("automatic truncation 18") != std::string::npos);
    r = run({"height", "--k", "2", "--n", "5", "--family", "sw", "--json"});
    CHECK(nlohmann::json::parse(r.out)["height"] == 6);  // G_2(R^6): 2^{3} - 2
    r = run({"lucas", "7", "3", "--p", "2"});
    CHECK(first_line(r.out).rfind("1 (", 0) == 0);
    CHECK(run({"lucas", "7", "3", "--p", "4"}).code == kExitUsage);
    r = run({"dual-sw", "RP^5", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["dual_sw"] == "1 + a^2");
    CHECK(j["q"]["brute_force"] == 2);
    CHECK(j["q"]["closed_form"] == 2);
    r = run({"table", "RP^9"});
    CHECK(r.out.find("exists for N >= 17") != std::string::npos);
    r = run({"table", "RP^15"});
    CHECK(r.out.find("no existence data") != std::string::npos);
    CHECK(r.code == 0);
}

TEST_CASE("verify") {
    auto r = run({"verify", "vandermonde:3", "--trials", "200", "--seed", "4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("no-violation-found") != std::string::npos);
    r = run({"verify", "sphere:2", "--tuple", "5", "--trials", "20"});
    CHECK(r.code == kExitCounterexample);
    CHECK(r.err.find("warning") != std::string::npos);
    r = run({"verify", "sphere:2", "--tuple", "4", "--search", "--json"});
    CHECK(r.code == kExitCounterexample);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "counterexample");
    const auto a = run({"verify", "vandermonde:2+sphere:3", "--tuple", "2,3", "--trials", "100", "--json"});
    const auto b = run({"verify", "vandermonde:2+sphere:3", "--tuple", "2,3", "--trials", "100", "--json"});
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["schema"] == "1");
    CHECK(run({"verify", "cubic:3"}).code == kExitUsage);
    CHECK(run({"verify", "sphere:2", "--tuple", "2,2"}).code == kExitUsage);
}
