#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <sys/wait.h>

#include "constacode/constacode.hpp"

using constacode::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + std::string(CONSTACODE_CLI) + "\" " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const char* name) { return (fs::path(CONSTACODE_FIXTURE_DIR) / name).string(); }

}  // namespace

TEST(Cli, FactorTable) {
    const Result r = run("factor -n 3 -m 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3 factors"), std::string::npos);
    EXPECT_NE(r.out.find("x + w"), std::string::npos);
}

TEST(Cli, FactorJsonLength85) {
    const Result r = run("--output json factor -n 85 -m 2 --lift");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["count"], 23);
    std::map<int, int> degrees;
    for (const auto& f : j["factors"]) ++degrees[f["degree"].get<int>()];
    EXPECT_EQ(degrees, (std::map<int, int>{{1, 1}, {2, 2}, {4, 20}}));
    EXPECT_TRUE(j["factors"][0].contains("lift"));
}

TEST(Cli, PaperFormLifts) {
    const Result r = run("--paper-form --output json factor -n 5 -m 2 --lift");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["factors"][1]["lift"], "(1+u)*x^2 + w*x + (1+u)");
}

TEST(Cli, EvenLengthIsAValidationError) {
    EXPECT_EQ(run("factor -n 4 -m 2").code, 2);
    EXPECT_EQ(run("factor -n 3 -m 9").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
}

TEST(Cli, BuildAndVerifyRoundTrip) {
    const Result b = run("--output json build -n 5 -m 2 --f-poly \"x + 1 + u\" --h-poly \"x^2 + w*(1+u)*x + 1\"");
    ASSERT_EQ(b.code, 0);
    const json desc = json::parse(b.out);
    const fs::path tmp = fs::temp_directory_path() / "constacode_cli_test_desc.json";
    std::ofstream(tmp) << desc.dump();
    const Result v = run("--output json verify -d \"" + tmp.string() + "\"");
    ASSERT_EQ(v.code, 0);
    const json j = json::parse(v.out);
    EXPECT_EQ(j["descriptor"], desc);
    EXPECT_EQ(j["gray"]["length"], 20);
    EXPECT_EQ(j["gray"]["dimension"], 12);
    EXPECT_EQ(j["cardinality"], "4^4*2^4");
    fs::remove(tmp);
}

TEST(Cli, BadTripleIsAValidationError) {
    EXPECT_EQ(run("build -n 3 -m 2 --f-poly \"x + 1\" --g-poly \"x + w\" --h-poly \"x + w^2\"").code, 2);
    EXPECT_EQ(run("build -n 3 -m 2 --f-poly \"x + \"").code, 2);
    EXPECT_EQ(run("build -d /nonexistent/file.json").code, 2);
}

TEST(Cli, DistanceModes) {
    const Result exact = run("--output json distance -d \"" + fixture("n3-c1.json") + "\"");
    ASSERT_EQ(exact.code, 0);
    EXPECT_EQ(json::parse(exact.out)["value"], 8);
    EXPECT_EQ(json::parse(exact.out)["mode"], "exact");
    // a tiny enumeration limit pushes auto mode to the witness search
    const Result ub = run("--output json distance -d \"" + fixture("n5.json") + "\"", "CONSTACODE_MAX_ENUM=16");
    ASSERT_EQ(ub.code, 0);
    EXPECT_EQ(json::parse(ub.out)["mode"], "upper_bound");
    EXPECT_GE(json::parse(ub.out)["value"].get<int>(), 4);
    EXPECT_EQ(run("distance --mode exact -d \"" + fixture("n5.json") + "\"", "CONSTACODE_MAX_ENUM=16").code, 2);
}

TEST(Cli, GrayWord) {
    const Result r = run("--output json gray -m 1 --word \"[[0,1]]\"");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["lee_weight"], 2);
    EXPECT_EQ(j["length"], 2);
    EXPECT_EQ(run("gray --word \"[[0,1]]\"").code, 2);
}

TEST(Cli, QuantumNeedsDualContaining) {
    EXPECT_EQ(run("quantum -n 3 -m 2 --f-poly \"x^3 + 1 + u\"").code, 2);
    const Result r = run("--output json quantum -n 3 -m 2 --g-poly \"x^3 + 1 + u\"");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["pretty"], "[[12, 12, 1]]");
}

TEST(Cli, ReproduceSmallExamples) {
    const Result r = run("--output json reproduce 5.5");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["rows"].size(), 3U);
    EXPECT_EQ(j["rows"][0]["actual"], "[12, 2, 8]");
}

TEST(Cli, ReproduceAll) {
    const Result r = run("--output json reproduce all");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["rows"].size(), 15U);
}

TEST(Cli, ReproduceMismatchExitsOne) {
    const fs::path dir = fs::temp_directory_path() / "constacode_cli_test_fixtures";
    fs::create_directories(dir);
    for (const char* f : {"n3-c1.json", "n3-c2.json", "n5.json"})
        fs::copy_file(fixture(f), dir / f, fs::copy_options::overwrite_existing);
    fs::copy_file(fixture("n3-c2.json"), dir / "n3-c1.json", fs::copy_options::overwrite_existing);
    const Result r = run("reproduce 5.5 --fixtures \"" + dir.string() + "\"");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Cli, DeterministicOutput) {
    const std::string args = "--output json --budget 200 distance --mode upper -d \"" + fixture("n5.json") + "\"";
    EXPECT_EQ(run(args).out, run(args).out);
}
