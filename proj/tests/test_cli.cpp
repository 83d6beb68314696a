#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + (env.empty() ? "" : " ") + LIE_CENSUS_BIN + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    const int raw = ::pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST(Cli, CensusCount)
{
    auto r = run("census count --family gl --n 2 --q 3 --k 2");
    ASSERT_EQ(r.status, 0);
    auto j = json_of(r);
    EXPECT_EQ(j["polynomial"]["text"], "q - 1");
    EXPECT_EQ(j["polynomial"]["coefficients"], (nlohmann::json{-1, 1}));
    EXPECT_EQ(j["value"], 2);
    EXPECT_EQ(j["admissible"], true);
}

TEST(Cli, CensusCountInadmissible)
{
    auto r = run("census count --family gl --n 3 --q 3 --k 3");
    EXPECT_EQ(r.status, 3);
    auto j = json_of(r);
    EXPECT_EQ(j["polynomial"]["text"], "q - 1");
    EXPECT_TRUE(j["value"].is_null());
}

TEST(Cli, SeriesCoefficients)
{
    auto r = run("series coeffs --epsilon -1 --k 1 --max-degree 2");
    ASSERT_EQ(r.status, 0);
    auto j = json_of(r);
    ASSERT_EQ(j["coefficients"].size(), 3u);
    EXPECT_EQ(j["coefficients"][0]["polynomial"]["coefficients"], (nlohmann::json{1}));
    EXPECT_EQ(j["coefficients"][1]["polynomial"]["coefficients"], (nlohmann::json{1, 1}));
    EXPECT_EQ(j["coefficients"][2]["polynomial"]["coefficients"], (nlohmann::json{1, 2, 1}));
    EXPECT_EQ(j["coefficients"][2]["polynomial"]["text"], "q^2 + 2*q + 1");
    EXPECT_EQ(run("series coeffs --epsilon +1 --k 2 --max-degree 4").status, 0);
}

TEST(Cli, OracleReport)
{
    auto r = run("oracle report --family sl --n 2 --q 5");
    ASSERT_EQ(r.status, 0);
    auto j = json_of(r);
    EXPECT_EQ(j["order"], 120);
    EXPECT_EQ(j["counts"]["classes"], 9);
    EXPECT_EQ(j["classes"].size(), 9u);
}

TEST(Cli, CensusLabelsAndRatios)
{
    auto l = json_of(run("census labels --family gu --n 2 --q 2"));
    EXPECT_EQ(l["count"], 9);
    EXPECT_EQ(l["labels"].size(), 9u);
    auto r = json_of(run("census ratios --family gl --n 2 --q 3"));
    EXPECT_EQ(r["counts"]["classes"], 8);
    EXPECT_EQ(r["ratios"]["r_a"]["numerator"], 3);
    EXPECT_EQ(r["ratios"]["r_a"]["denominator"], 4);
    EXPECT_EQ(r["ratios"]["r_c"]["numerator"], 3);
}

TEST(Cli, Formats)
{
    auto csv = run("census count --family gl --n 2 --q 3 --format csv");
    ASSERT_EQ(csv.status, 0);
    EXPECT_EQ(csv.out, "family,n,q,k,polynomial,admissible,value\ngl,2,3,1,q^2 - 1,true,8\n");
    auto pretty = run("census count --family gl --n 2 --q 3 --format pretty");
    ASSERT_EQ(pretty.status, 0);
    EXPECT_NE(pretty.out.find("polynomial: q^2 - 1"), std::string::npos);
    EXPECT_EQ(run("census count --family gl --n 2 --q 3 --format xml").status, 2);
}

TEST(Cli, Deterministic)
{
    for (const char* args : {"oracle report --family gu --n 2 --q 3", "census labels --family gl --n 3 --q 2 --format csv",
                             "series coeffs --epsilon +1 --k 1 --max-degree 8 --format pretty"}) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.status, 0);
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("census count --family gl --n 2 --q 3 --bogus 1").status, 2);
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("census count --family sl --n 2 --q 3").status, 2);
    EXPECT_EQ(run("census count --family gl --n 2 --q 6").status, 5);
    EXPECT_EQ(run("series coeffs --epsilon 2 --k 1 --max-degree 2").status, 5);
    EXPECT_EQ(run("oracle report --family gl --n 2 --q 5 --max-order 100").status, 4);
    EXPECT_EQ(run("oracle report --family gl --n 2 --q 5", "LIE_CENSUS_MAX_ORDER=100").status, 4);
    EXPECT_EQ(run("oracle report --family gl --n 2 --q 5 --max-order 1000", "LIE_CENSUS_MAX_ORDER=100").status, 0);
    EXPECT_EQ(run("--help").status, 0);
}
