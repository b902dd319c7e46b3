#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = weaksort::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli: sequence for all classes")
{
    const auto r = run({"sequence", "--classes", "all", "--n", "8"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.ends_with("  1,1,2,6,21,79,309,1237,5026"));
    }
    CHECK(rows == 5);
}

TEST_CASE("cli: csv and json formats")
{
    const auto csv = run({"recurrence", "--class", "pi1", "--n", "4"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "n,value\n0,1\n1,1\n2,2\n3,6\n4,21\n");

    const auto json = run({"series", "--name", "main", "--n", "30", "--format", "json"});
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["name"] == "main");
    CHECK(parsed["terms"].size() == 31);
    CHECK(parsed["terms"][8] == 5026);
    CHECK(json.out.find("1,1,2,6,21,79,309,1237,5026,20626,85242") != std::string::npos);
}

TEST_CASE("cli: bijection and class5")
{
    CHECK(run({"bijection", "--map", "phi", "--input", "3 1 4 2"}).out == "NDNEE\n");
    CHECK(run({"bijection", "--inverse", "--path", "NDE"}).out == "3 1 2\n");
    CHECK(run({"bijection", "--input", "3 2 1 4"}).code == 2);
    CHECK(run({"bijection", "--inverse", "--path", "EN"}).code == 2);

    const auto d = run({"class5", "--decompose", "3 1 4 2"});
    CHECK(d.code == 0);
    const auto j = nlohmann::json::parse(d.out);
    CHECK(j["A"] == std::vector<int>{3, 4, 2});
    CHECK(j["params"]["k"] == 3);
    CHECK(run({"class5", "--count", "9"}).out == "class5  1,1,2,6,21,79,309,1237,5026,20626\n");
    CHECK(run({"class5", "--indec", "6"}).out == "class5_indec  0,1,1,3,11,43,173\n");
    CHECK(run({"class5"}).code == 2);
}

TEST_CASE("cli: oeis offline")
{
    const auto r = run({"oeis", "--id", "A006318", "--n", "6", "--offline"});
    CHECK(r.code == 0);
    CHECK(r.out == "A006318  1,2,6,22,90,394,1806\n");
    CHECK(run({"oeis", "--id", "A000000"}).code == 1);
    CHECK(run({"oeis", "--id", "nonsense"}).code == 2);
}

TEST_CASE("cli: search finds the five orbit representatives")
{
    const auto r = run({"search", "--target", "A111279", "--n", "8", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["triples"] == 2024);
    CHECK(j["matches"].size() == 5);
    CHECK(j["matches"][0] == "{1234,1243,1342}");
    CHECK(run({"search", "--n", "9"}).code == 2);
}

TEST_CASE("cli: usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"sequence", "--bogus"}).code == 2);
    CHECK(run({"sequence", "--format", "xml"}).code == 2);
    CHECK(run({"series", "--name", "nope"}).code == 2);
    const auto limited = run({"sequence", "--n", "11"});
    CHECK(limited.code == 2);
    CHECK(limited.err.find("--limit-override") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: verify reports each criterion and is deterministic")
{
    const auto first = run({"verify", "--only", "5", "--only", "10"});
    const auto second = run({"verify", "--only", "5", "--only", "10"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("[PASS] AC5") != std::string::npos);
    CHECK(first.out.find("[PASS] AC10") != std::string::npos);
    CHECK(first.out.find("AC1 ") == std::string::npos);
}
