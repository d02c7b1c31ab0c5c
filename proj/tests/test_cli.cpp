#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using isotwist::cli::run;
using nlohmann::json;

namespace {

json load(const std::filesystem::path& path) {
    std::ifstream in(path);
    return json::parse(in);
}

std::vector<std::string> args_of(const json& golden) { return golden.at("args").get<std::vector<std::string>>(); }

}  // namespace

// ---------------------------------------------------------------------------------------------
// Golden files

TEST(Golden, EveryFileReproduces) {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(ISOTWIST_GOLDEN_DIR)) {
        if (entry.path().extension() != ".json") continue;
        const json golden = load(entry.path());
        const auto outcome = run(args_of(golden));
        EXPECT_EQ(outcome.exit_code, golden.at("exit_code").get<int>()) << entry.path();
        EXPECT_EQ(outcome.response, golden.at("response")) << entry.path() << "\n" << outcome.response.dump(2);
        ++seen;
    }
    EXPECT_GE(seen, 3);
}

TEST(Golden, PrintedValuesInTheFixtures) {
    json g = load(std::filesystem::path(ISOTWIST_GOLDEN_DIR) / "faltings_l3_9_t45_d3.json");
    EXPECT_EQ(g["response"]["vertex"], "E_9");
    EXPECT_EQ(g["response"]["probability"], "1/4");
    g = load(std::filesystem::path(ISOTWIST_GOLDEN_DIR) / "classify_121a2_p11.json");
    EXPECT_EQ(g["response"]["kodaira"], "II");
    EXPECT_EQ(g["response"]["u_p"], "1");
    g = load(std::filesystem::path(ISOTWIST_GOLDEN_DIR) / "faltings_cusp.json");
    EXPECT_EQ(g["exit_code"], 2);
    EXPECT_EQ(g["response"]["error"]["message"], "t=0 is a cusp");
}

// ---------------------------------------------------------------------------------------------
// Exit codes and messages

TEST(Run, DistinctInputErrors) {
    struct Case {
        std::vector<std::string> args;
        std::string message;
    };
    const std::vector<Case> cases{
        {{"faltings", "--type", "L3_10", "--t", "1", "--d", "1"}, "unknown type tag 'L3_10'"},
        {{"faltings", "--type", "L3_9", "--t", "0", "--d", "1"}, "t=0 is a cusp"},
        {{"faltings", "--type", "L3_9", "--t", "1", "--d", "-18"}, "d=-18 is not square-free"},
        {{"faltings", "--type", "L3_9", "--t", "1", "--d", "1/2"}, "d=1/2 is not an integer"},
        {{"prob", "--type", "L2_2", "--t", "-64"}, "t=-64 is not covered: v_2(t+64) is infinite"},
        {{"faltings", "--type", "L2_11", "--t", "1", "--d", "1"}, "type L2_11 has genus >= 1 and takes no parameter t"},
    };
    for (const auto& c : cases) {
        const auto o = run(c.args);
        EXPECT_EQ(o.exit_code, isotwist::cli::kExitInput) << c.message;
        EXPECT_EQ(o.response["error"]["kind"], "input");
        EXPECT_EQ(o.response["error"]["message"], c.message);
    }
}

TEST(Run, UsageErrors) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {}, {"faltings", "--type", "L3_9"}, {"classify", "--ainvs", "0,0,1,0,0", "--sig", "48,0,64", "--p", "2"}}) {
        const auto o = run(args);
        EXPECT_EQ(o.exit_code, isotwist::cli::kExitInput);
        EXPECT_EQ(o.response["error"]["kind"], "usage");
    }
}

TEST(Run, HelpExitsCleanly) {
    const auto o = run({"--help"});
    EXPECT_EQ(o.exit_code, 0);
    EXPECT_NE(o.text.find("faltings"), std::string::npos);
}

TEST(Run, TableGapIsInternal) {
    const auto o = run({"faltings", "--type", "S8", "--t", "3", "--d", "1"});
    EXPECT_EQ(o.exit_code, isotwist::cli::kExitInternal);
    EXPECT_EQ(o.response["error"]["kind"], "internal");
}

// ---------------------------------------------------------------------------------------------
// Subcommands

TEST(Run, FaltingsGenusOne) {
    auto o = run({"faltings", "--type", "L2_11", "--d", "-11"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_TRUE(o.response["t"].is_null());
    EXPECT_EQ(o.response["vertex"], "E_11");
    EXPECT_EQ(o.response["probability"], "1/12");
    o = run({"faltings", "--type", "L2_11", "--d", "7"});
    EXPECT_EQ(o.response["vertex"], "E_1");
    EXPECT_EQ(o.response["probability"], "11/12");
}

TEST(Run, ProbSumsToOne) {
    const auto o = run({"prob", "--type", "R4_10", "--t", "14"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.response["branches"].size(), 2u);
    EXPECT_EQ(o.response["branches"][0]["probability"], "1/3");
    EXPECT_EQ(o.response["branches"][1]["probability"], "2/3");
}

TEST(Run, MinimalAndTwist) {
    auto o = run({"minimal", "--sig", "768,0,262144"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.response["u"], "2");
    EXPECT_EQ(o.response["minimal"], (json{{"c4", "48"}, {"c6", "0"}, {"delta", "64"}}));
    o = run({"twist", "--ainvs", "0,0,1,0,0", "--d", "-3"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.response["twisted"]["c6"], "5832");
}

TEST(Run, ClassifyWithTwist) {
    const auto o = run({"classify", "--ainvs", "1,1,1,-30,-76", "--p", "11", "--d", "-11"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.response["pal_u"], "1");
    EXPECT_EQ(o.response["minimal_psig"], (json{"1", "1", "2"}));
}

TEST(Run, Families) {
    auto o = run({"family", "l39", "--t", "1"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.response["command"], "family l39");
    EXPECT_EQ(o.response["members"][0]["signature"], (json{{"c4", "160"}, {"c6", "2008"}, {"delta", "37"}}));
    EXPECT_EQ(o.response["fricke_t"], "27");
    o = run({"family", "l211", "--variant", "a"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.response["curves"][1]["j"], "-121");
    EXPECT_EQ(run({"family", "l211", "--variant", "c"}).exit_code, isotwist::cli::kExitInput);
}

TEST(Run, VerifyHonoursBitsFromEnvironment) {
    ::setenv("ISOTWIST_BITS", "160", 1);
    auto o = run({"verify", "--type", "L3_9", "--t", "45", "--d", "3"});
    ::unsetenv("ISOTWIST_BITS");
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.response["bits"], 160);
    EXPECT_EQ(o.response["argmin"], "E_9");
    EXPECT_TRUE(o.response["match"].get<bool>());
    o = run({"verify", "--type", "L3_9", "--t", "45", "--d", "3", "--bits", "96"});
    EXPECT_EQ(o.response["bits"], 96);
}

TEST(Run, DensityAndEmpirical) {
    auto o = run({"density", "--p", "2", "--n", "100000"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.response["expected_fraction"], "1/3");
    EXPECT_NEAR(o.response["fraction_divisible"].get<double>(), 1.0 / 3, 0.005);
    o = run({"empirical", "--type", "L2_11", "--n", "50000"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.response["vertices"][0]["vertex"], "E_1");
    EXPECT_NEAR(o.response["vertices"][0]["frequency"].get<double>(), 11.0 / 12, 0.01);
}

// ---------------------------------------------------------------------------------------------
// Rendering

TEST(Render, CompactIsOneLineOfJson) {
    const auto o = run({"prob", "--type", "L3_9", "--t", "1"});
    std::ostringstream out;
    isotwist::cli::render(o.response, false, out);
    const std::string s = out.str();
    EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 1);
    EXPECT_EQ(json::parse(s), o.response);
}

TEST(Render, PrettyListsKeys) {
    const auto o = run({"faltings", "--type", "L3_9", "--t", "45", "--d", "3", "--pretty"});
    EXPECT_TRUE(o.pretty);
    std::ostringstream out;
    isotwist::cli::render(o.response, true, out);
    EXPECT_NE(out.str().find("uEd             (1, 1, 3)"), std::string::npos) << out.str();
}

TEST(Main, ErrorsGoToStderr) {
    std::ostringstream out, err;
    const int code = isotwist::cli::main({"faltings", "--type", "L3_9", "--t", "0", "--d", "5"}, out, err);
    EXPECT_EQ(code, 2);
    EXPECT_EQ(err.str(), "error: t=0 is a cusp\n");
    EXPECT_EQ(json::parse(out.str())["error"]["message"], "t=0 is a cusp");
}
