#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orenil/cli.hpp"

namespace
{

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "orenil");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = orenil::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string &text, const std::string &line)
{
    return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

std::string scratch_dir()
{
    auto dir = std::filesystem::temp_directory_path() / "orenil_cli_test";
    std::filesystem::create_directories(dir);
    return dir.string();
}

} // namespace

TEST(Cli, AnalyzeWeightAndValidity)
{
    auto r = run({"words-analyze", "2,1", "--k", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "weight: 4")) << r.out;
    EXPECT_TRUE(has_line(r.out, "k_valid: false")) << r.out;
}

TEST(Cli, AnalyzeDecreasing)
{
    auto r = run({"words-analyze", "3,2,1", "--decreasing", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "decreasing.v: (3)")) << r.out;
    EXPECT_TRUE(has_line(r.out, "decreasing.w1: (2)"));
    EXPECT_TRUE(has_line(r.out, "decreasing.w2: (1)"));
    EXPECT_TRUE(has_line(r.out, "decreasing.x: ()"));

    auto none = run({"words-analyze", "1,2,3", "--decreasing", "2"});
    EXPECT_TRUE(has_line(none.out, "decreasing: none")) << none.out;
}

TEST(Cli, Bounds)
{
    auto r = run({"words-bounds", "--d", "1", "--k", "1", "--eps", "1", "--b", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "M: 9")) << r.out;
    EXPECT_TRUE(has_line(r.out, "N: 11"));
}

TEST(Cli, JsonEchoesParameters)
{
    auto r = run({"--json", "words-bounds", "--d", "2", "--k", "1", "--b", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "words-bounds");
    EXPECT_EQ(j["parameters"]["d"], 2);
    EXPECT_EQ(j["parameters"]["eps"], "1");
    EXPECT_EQ(j["trace"].size(), 2u);

    auto after = run({"words-analyze", "1", "--json"});
    EXPECT_TRUE(nlohmann::json::accept(after.out)) << after.out;
}

TEST(Cli, OracleWithinBound)
{
    auto r = run({"words-bounds", "--d", "1", "--k", "1", "--b", "2", "--oracle", "6", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "oracle.within_bound: true")) << r.out;
}

TEST(Cli, ExamplesReproduceVerdicts)
{
    const auto dir = scratch_dir();
    for (const char *p : {"2", "3", "5"})
    {
        auto r = run({"examples", "charp", "--p", p, "--out", dir});
        EXPECT_EQ(r.code, 0) << r.out << r.err;
        EXPECT_TRUE(has_line(r.out, "check.stability: Unstable")) << r.out;
        EXPECT_TRUE(has_line(r.out, "check.witness: t"));
        EXPECT_TRUE(has_line(r.out, "check.delta_of_witness: 1"));
    }
    auto u = run({"examples", "upper3strict", "--out", dir});
    EXPECT_EQ(u.code, 0) << u.out << u.err;
    auto s = run({"examples", "squarezero", "--out", dir});
    EXPECT_EQ(s.code, 0) << s.out << s.err;
    EXPECT_TRUE(has_line(s.out, "check.minimal_N: 1"));
}

TEST(Cli, NilpotencyOfWrittenExample)
{
    const auto dir = scratch_dir();
    ASSERT_EQ(run({"examples", "upper3strict", "--out", dir}).code, 0);
    const auto file = dir + "/upper3strict.json";
    auto r = run({"ore-nilpotency", file, "--set", "e12 + e23*x"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "minimal_N: 2")) << r.out;
    EXPECT_TRUE(has_line(r.out, "derivation: zero"));

    auto capped = run({"ore-nilpotency", file, "--set", "e12 + e23*x", "--cap", "1"});
    EXPECT_EQ(capped.code, 3);
}

TEST(Cli, RewriteChecksAgainstDirectProduct)
{
    const auto dir = scratch_dir();
    ASSERT_EQ(run({"examples", "upper3strict", "--out", dir}).code, 0);
    auto r = run({"ore-rewrite", "--indices", "0,1,2", "--exponents", "1,2,1", "--k", "2", "--algebra",
                  dir + "/upper3strict.json", "--gens", "e12 + e13, e23, e12", "--derivation", "inner_e12"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_TRUE(has_line(r.out, "check.equal: true"));

    auto bare = run({"ore-rewrite", "--indices", "0,1", "--exponents", "1,1", "--k", "1"});
    EXPECT_TRUE(has_line(bare.out, "terms[0]: 1 | 0,1 | 0 | 2")) << bare.out;
    EXPECT_TRUE(has_line(bare.out, "terms[1]: 1 | 0,1 | 1 | 1"));
}

TEST(Cli, RadicalExpectationMismatchIsExitOne)
{
    const auto dir = scratch_dir();
    ASSERT_EQ(run({"examples", "charp", "--p", "3", "--out", dir}).code, 0);
    auto r = run({"radical-check", dir + "/charp_p3.json", "--derivation", "d_dt", "--candidate", "t; t^2",
                  "--expect", "stable"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(has_line(r.out, "expectation_met: false"));
}

TEST(Cli, InputErrorsAreExitTwo)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"words-analyze", "1,x"}).code, 2);
    EXPECT_EQ(run({"words-bounds", "--d", "1", "--k", "1", "--b", "1", "--eps", "3/2"}).code, 2);
    auto missing = run({"radical-check", "/nonexistent/file.json"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("error:"), std::string::npos);
    const auto dir = scratch_dir();
    ASSERT_EQ(run({"examples", "charp", "--p", "3", "--out", dir}).code, 0);
    EXPECT_EQ(run({"radical-check", dir + "/charp_p3.json"}).code, 2);
    EXPECT_EQ(run({"examples", "nope"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
