#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperseries/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = {}) {
    args.insert(args.begin(), "hyperseries");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = hyperseries::cli::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Eval) {
    const auto r = run({"eval", "sum(i=1..omega, i)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "w^2/2 + w/2\n");
    EXPECT_EQ(run({"eval", "--principal", "sum(i=1..omega, i)"}).out, "w^2/2\n");
    EXPECT_EQ(run({"eval", "--std", "sum(i=1..omega, (-1)^(i+1))"}).out, "1/2\n");
    EXPECT_EQ(run({"eval", "--std", "sum(i=1..omega, 1)"}).out, "none\n");
}

TEST(Cli, EvalJson) {
    const auto r = run({"eval", "--json", "sum(i=1..omega, i)"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["input"], "sum(i=1..omega, i)");
    EXPECT_EQ(j["value"], "w^2/2 + w/2");
    EXPECT_EQ(j["principal"], "w^2/2");
    EXPECT_TRUE(j["standardPart"].is_null());
    ASSERT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j["terms"][0]["coeff"], "1/2");
    EXPECT_EQ(j["terms"][0]["power"], 2);
}

TEST(Cli, Hyper) {
    EXPECT_EQ(run({"hyper", "w/2 + w^2/2"}).out, "w^2/2 + w/2\n");
    EXPECT_EQ(run({"hyper", "--principal", "3*w - 7"}).out, "3*w\n");
    EXPECT_EQ(run({"hyper", "--std", "1/w + 2"}).out, "2\n");
}

TEST(Cli, PartialAndFormula) {
    EXPECT_EQ(run({"partial", "--n", "5", "sum(i=1..omega, i)"}).out, "15\n");
    EXPECT_EQ(run({"partial", "-n", "3", "sum(i=1..omega, (-1)^(i+1))"}).out, "1\n");
    EXPECT_EQ(run({"partial", "sum(i=1..omega, i)"}).code, 2);
    EXPECT_EQ(run({"formula", "sum(i=1..omega, (-1)^(i+1))"}).out, "1/2 - (-1)^n/2    (n >= 1)\n");
    const auto j = nlohmann::json::parse(run({"formula", "--json", "sum(i=1..omega, i)"}).out);
    EXPECT_EQ(j["formula"], "n^2/2 + n/2");
    EXPECT_EQ(j["validFrom"], 1);
}

TEST(Cli, OracleExitCodes) {
    const auto ok = run({"oracle", "--N", "200", "sum(i=1..omega, i*(-1)^(i-1))"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out.rfind("pass [1, 201]", 0), 0u) << ok.out;

    const auto mean_ok = run({"oracle", "--holder", "1", "--mean-n", "20000", "sum(i=1..omega, (-1)^(i+1))"});
    EXPECT_EQ(mean_ok.code, 0);

    // Cesaro (C,1) at an odd cut-off is far from 1/4 for 1 - 2 + 3 - ...
    const auto fail = run({"oracle", "--holder", "1", "--mean-n", "1001", "sum(i=1..omega, i*(-1)^(i-1))"});
    EXPECT_EQ(fail.code, 1);
    EXPECT_NE(fail.out.find("fail"), std::string::npos);

    const auto j = nlohmann::json::parse(run({"oracle", "--json", "-N", "5", "sum(i=1..omega, 1)"}).out);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["checkedRange"], nlohmann::json::array({1, 6}));
    EXPECT_TRUE(j["firstMismatch"].is_null());
}

TEST(Cli, ParseErrorShowsCaret) {
    const auto r = run({"eval", "sum(i=1..10, i)"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("at byte 9"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("\n           ^\n"), std::string::npos) << r.err;
}

TEST(Cli, NegativeBaseMode) {
    const std::string input = "sum(i=1..omega, (-1/2)^i)";
    EXPECT_EQ(run({"eval", input}).code, 2);
    const auto r = run({"eval", "--neg-base-mode", "conjecture", input});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-1/3\n");
    EXPECT_EQ(run({"eval", "--neg-base-mode", "bogus", input}).code, 2);
}

TEST(Cli, BatchPreservesOrder) {
    const std::string lines = "# comment\nsum(i=1..omega, 1)\n\nsum(i=1..omega, i)\nsum(i=1..omega, (-1)^i)\n";
    const auto r = run({"eval", "--batch", "-"}, lines);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "w\nw^2/2 + w/2\n-1/2\n");

    const auto mixed = run({"eval", "--batch", "-"}, "sum(i=1..omega, 1)\nnot a series\nsum(i=1..omega, 2)\n");
    EXPECT_EQ(mixed.code, 2);
    EXPECT_EQ(mixed.out, "w\n2*w\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"eval"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"eval", "--batch", "/nonexistent/file"}).code, 2);
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("eval"), std::string::npos);
}
