#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ptiles/cli.hpp"
#include "ptiles/json_io.hpp"
#include "ptiles/tiling.hpp"

using namespace ptiles;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return CliRun{code, out.str(), err.str()};
}

const std::string kOmega03 = R"({"p":2,"level":2,"members":[0,3]})";
const std::string kT02 = R"({"p":2,"precision":2,"points":[0,2]})";
const std::string kOmega01 = R"({"p":2,"level":2,"members":[0,1]})";
const std::string kT01 = R"({"p":2,"precision":2,"points":[0,1]})";

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("verify reports a tiling") {
    CliRun r = run({"verify", "--omega", kOmega03, "--t", kT02});
    CHECK(r.code == 0);
    CHECK(r.out == "tiling: true\ncoverage 1: 4 residues\n");
    CHECK(r.err.empty());
}

TEST_CASE("verify reports a failure with a witness") {
    CliRun r = run({"verify", "--omega", kOmega01, "--t", kT01});
    CHECK(r.code == 3);
    CHECK(r.out ==
          "tiling: false\nwitness: 1\ncoverage 0: 1 residues\ncoverage 1: 2 "
          "residues\ncoverage 2: 1 residues\n");
}

TEST_CASE("verify json output") {
    CliRun r = run({"verify", "--omega", kOmega03, "--t", kT02, "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["is_tiling"] == true);
    CHECK(j["coverage_histogram"]["1"] == 4);
    CHECK(!j.contains("witness"));
}

TEST_CASE("spectral json output carries the witness frequency") {
    CliRun ok = run({"spectral", "--omega", kOmega03, "--t", kT02, "--format", "json"});
    CHECK(ok.code == 0);
    CHECK(nlohmann::json::parse(ok.out)["is_tiling"] == true);

    CliRun bad = run({"spectral", "--omega", kOmega01, "--t", kT01, "--format", "json"});
    CHECK(bad.code == 3);
    nlohmann::json j = nlohmann::json::parse(bad.out);
    CHECK(j["is_tiling"] == false);
    CHECK(j["witness_frequency"]["exponent"] == 2);
    CHECK(j["witness_frequency"]["unit"] == 1);
}

TEST_CASE("malformed json is a parse error with a byte offset") {
    CliRun r = run({"verify", "--omega", R"({"p":2,"level":2,"members":[0,3)", "--t", kT02});
    CHECK(r.code == 2);
    CHECK(r.err.find("error: parse: <inline>:") != std::string::npos);
    CHECK(r.err.find("byte") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("json from a file, including parse failures that name the path") {
    const std::string good = "/tmp/ptiles_test_good.json";
    const std::string bad = "/tmp/ptiles_test_bad.json";
    std::ofstream(good) << kOmega03;
    std::ofstream(bad) << "{\"p\":2";
    CliRun ok = run({"verify", "--omega", good, "--t", kT02});
    CHECK(ok.code == 0);
    CliRun broken = run({"verify", "--omega", bad, "--t", kT02});
    CHECK(broken.code == 2);
    CHECK(broken.err.find(bad) != std::string::npos);
    CHECK(broken.err.find("byte") != std::string::npos);
    CliRun missing = run({"verify", "--omega", "/tmp/ptiles_no_such_file.json", "--t", kT02});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error: format:") != std::string::npos);
    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("well-formed json with the wrong shape is a format error") {
    CliRun missing_key =
        run({"verify", "--omega", R"({"p":2,"level":2})", "--t", kT02});
    CHECK(missing_key.code == 2);
    CHECK(missing_key.err.find("error: format:") != std::string::npos);
    CliRun extra_key = run(
        {"verify", "--omega", R"({"p":2,"level":2,"members":[0,3],"x":1})", "--t", kT02});
    CHECK(extra_key.code == 2);
    CliRun wrong_type =
        run({"verify", "--omega", R"({"p":2,"level":"2","members":[0,3]})", "--t", kT02});
    CHECK(wrong_type.code == 2);
}

TEST_CASE("domain, precision, and ambiguity map to exit 1") {
    CliRun mismatch =
        run({"verify", "--omega", kOmega03, "--t", R"({"p":2,"precision":1,"points":[0,1]})"});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.err.find("error: domain:") != std::string::npos);

    CliRun ambiguous = run({"regularize", "--omega", kOmega01, "--t", kT01});
    CHECK(ambiguous.code == 1);
    CHECK(ambiguous.err.find("error: ambiguous-cell:") != std::string::npos);

    CliRun shallow = run(
        {"regularize", "--omega", R"({"p":2,"level":1,"members":[0]})", "--t", kT02});
    CHECK(shallow.code == 1);
    CHECK(shallow.err.find("error: precision:") != std::string::npos);
}

TEST_CASE("usage errors map to exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--omega", kOmega03}).code == 2);  // --t is required
    CHECK(run({"verify", "--omega", kOmega03, "--t", kT02, "--format", "yaml"}).code == 2);
    CHECK(run({"ft", "--xi", "1/2"}).code == 2);  // no source
    CHECK(run({"ft", "--t", kT01, "--omega", kOmega01, "--xi", "1/2"}).code == 2);
    CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("ptiles") != std::string::npos);
}

TEST_CASE("ft prints the exact transform") {
    CliRun r = run({"ft", "--t", kT01, "--xi", "1/4"});
    CHECK(r.code == 0);
    CHECK(r.out == "gamma: 2\ncoeff 0: 1\ncoeff 3: 1\nzero: false\napprox: 1 -1\n");
    // unnormalized and negative representations of the same class agree
    CHECK(run({"ft", "--t", kT01, "--xi", "5/4"}).out == r.out);
    CHECK(run({"ft", "--t", kT01, "--xi", "-3/4"}).out == r.out);
    CliRun trivial = run({"ft", "--t", kT01, "--xi", "0"});
    CHECK(trivial.out == "gamma: 0\ncoeff 0: 2\nzero: false\napprox: 2 0\n");
    CliRun json_run = run({"ft", "--t", kT01, "--xi", "1/4", "--format", "json"});
    nlohmann::json j = nlohmann::json::parse(json_run.out);
    CHECK(j["gamma"] == 2);
    CHECK(j["zero"] == false);
    REQUIRE(j["coefficients"].size() == 2);
    CHECK(j["coefficients"][0]["index"] == 0);
    CHECK(j["coefficients"][0]["value"] == "1");
    CHECK(j["coefficients"][1]["index"] == 3);
    CHECK(j["approx"]["re"] == doctest::Approx(1.0));
    CHECK(j["approx"]["im"] == doctest::Approx(-1.0));
}

TEST_CASE("ft accepts all three source kinds") {
    CliRun from_set = run({"ft", "--set",
                           R"({"p":2,"balls":[{"level":2,"center":0},{"level":2,"center":3}]})",
                           "--xi", "1/2", "--format", "json"});
    CHECK(from_set.code == 0);
    CHECK(nlohmann::json::parse(from_set.out)["zero"] == true);
    CliRun from_omega = run({"ft", "--omega", kOmega03, "--xi", "1/2", "--format", "json"});
    CHECK(nlohmann::json::parse(from_omega.out)["zero"] == true);
}

TEST_CASE("frequency text validation") {
    CliRun garbage = run({"ft", "--t", kT01, "--xi", "abc"});
    CHECK(garbage.code == 2);
    CHECK(garbage.err.find("error: format:") != std::string::npos);
    CliRun mixed_denominator = run({"ft", "--t", kT01, "--xi", "1/6"});
    CHECK(mixed_denominator.code == 1);
    CHECK(mixed_denominator.err.find("error: domain:") != std::string::npos);
    CHECK(run({"ft", "--t", kT01, "--xi", "1/0"}).code == 1);
}

TEST_CASE("zeroset lists vanishing frequencies in order") {
    CliRun r = run({"zeroset", "--omega", kOmega03, "--max-k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "checked: 8\nzeros: 5\n1/2\n1/8\n3/8\n5/8\n7/8\n");
    CliRun j = run({"zeroset", "--omega", kOmega03, "--max-k", "3", "--format", "json"});
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["checked"] == 8);
    REQUIRE(parsed["zeros"].size() == 5);
    CHECK(parsed["zeros"][0]["exponent"] == 1);
    CHECK(parsed["zeros"][0]["unit"] == 1);
    CHECK(parsed["zeros"][4]["exponent"] == 3);
    CHECK(parsed["zeros"][4]["unit"] == 7);
}

TEST_CASE("complements output round-trips") {
    CliRun text = run({"complements", "--omega", R"({"p":2,"level":2,"members":[0,2]})"});
    CHECK(text.code == 0);
    CHECK(text.out == "complements: 2\n0 1\n0 3\n");
    CliRun js = run({"complements", "--omega", R"({"p":2,"level":2,"members":[0,2]})",
                     "--format", "json"});
    nlohmann::json parsed = nlohmann::json::parse(js.out);
    PrimeBase two(2);
    std::vector<PointSet> expected = find_complements(LevelSet(two, 2, {0, 2}));
    REQUIRE(parsed["complements"].size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(read_point_set(parsed["complements"][i]) == expected[i]);
}

TEST_CASE("regularize output round-trips") {
    const std::string omega16 = R"({"p":2,"level":4,"members":[0,3,4,7,8,11,12,15]})";
    const std::string t16 = R"({"p":2,"precision":4,"points":[0,2]})";
    CliRun text = run({"regularize", "--omega", omega16, "--t", t16});
    CHECK(text.code == 0);
    CHECK(text.out == "balls: 2\nB(0, p^-2)\nB(3, p^-2)\nmeasure: 1/2\n");
    CliRun js = run({"regularize", "--omega", omega16, "--t", t16, "--format", "json"});
    PrimeBase two(2);
    CHECK(read_compact_open(nlohmann::json::parse(js.out)) ==
          canonicalize(two, {Ball(two, 2, 0), Ball(two, 2, 3)}));
}

TEST_CASE("enumerate emits one census record per line") {
    CliRun r = run({"enumerate", "--p", "2", "--n", "2", "--size", "2"});
    CHECK(r.code == 0);
    std::vector<std::string> lines = split_lines(r.out);
    PrimeBase two(2);
    std::vector<CensusRecord> expected = census(two, 2, 2);
    REQUIRE(lines.size() == expected.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(lines[i] == write_census_record(expected[i]).dump());
        CensusRecord back = read_census_record(nlohmann::json::parse(lines[i]), two, 2);
        CHECK(back.omega == expected[i].omega);
        CHECK(back.complements == expected[i].complements);
        CHECK(back.gamma == expected[i].gamma);
        CHECK(back.compact_open == expected[i].compact_open);
    }
    CHECK(run({"enumerate", "--p", "2", "--n", "2", "--size", "3"}).out.empty());
}

TEST_CASE("enumerate output is deterministic and job-independent") {
    std::vector<std::string> base_args = {"enumerate", "--p", "3", "--n", "2", "--size", "3"};
    CliRun a = run(base_args);
    CliRun b = run(base_args);
    CHECK(a.out == b.out);
    std::vector<std::string> with_jobs = base_args;
    with_jobs.push_back("--jobs");
    with_jobs.push_back("4");
    CHECK(run(with_jobs).out == a.out);
    setenv("PADIC_TILES_JOBS", "3", 1);
    CHECK(run(base_args).out == a.out);
    unsetenv("PADIC_TILES_JOBS");
}

TEST_CASE("lemmas runs the self-check sweeps") {
    CliRun r = run({"lemmas", "--p", "2", "--max-gamma", "2", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    REQUIRE(j["sweeps"].size() == 4);
    CHECK(j["sweeps"][0]["name"] == "ball-transform-riemann");
    CHECK(j["sweeps"][1]["name"] == "root-sum-zero-float");
    CHECK(j["sweeps"][2]["name"] == "p-point-vanishing");
    CHECK(j["sweeps"][3]["name"] == "nonvanishing-radius");
    for (const auto& sweep : j["sweeps"]) {
        CHECK(sweep["pass"] == true);
        CHECK(sweep["checks"].get<long long>() > 0);
    }
    CliRun text = run({"lemmas", "--p", "2", "--max-gamma", "2"});
    CHECK(text.code == 0);
    for (const std::string& line : split_lines(text.out))
        CHECK(line.find(": pass") != std::string::npos);
}

TEST_CASE("json encodings round-trip through their readers") {
    PrimeBase three(3);
    PointSet t(three, 2, {0, 4, 8});
    CHECK(read_point_set(write_point_set(t)) == t);
    LevelSet omega(three, 2, {0, 3, 6});
    CHECK(read_level_set(write_level_set(omega)) == omega);
    CompactOpenSet s = canonicalize(three, {Ball(three, 1, 2), Ball(three, 2, 4)});
    CHECK(read_compact_open(write_compact_open(s)) == s);
}
