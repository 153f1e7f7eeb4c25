#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <coreseq/cli.hpp>

namespace {

struct Outcome {
    int code;
    std::string out, err;

    bool has(std::string const& s) const { return out.find(s) != std::string::npos; }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = coreseq::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(std::string const& name, std::string const& text) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST(Cli, OmegaCyclicDimensions) {
    auto r = run({"omega", "--scenario", "builtin:c7", "--invariant", "c", "--n", "13"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("#data 2,4,8,16,32,57,114,193,386,639,1278,2094,4188\n"));
}

TEST(Cli, OmegaWithGuessAndExtras) {
    auto r = run({"omega", "--scenario", "c7", "--invariant", "s", "--n", "14", "--guess", "cfinite", "--classify",
                  "--s-recurrence"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.has("class: plus"));
    EXPECT_TRUE(r.has("#rec x[n] = x[n-1] + 2*x[n-2] - x[n-3]"));
}

TEST(Cli, OmegaPrefixScenarioOnlyCarriesS) {
    auto ok = run({"omega", "--scenario", "builtin:s9-prefix", "--invariant", "s", "--n", "6"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(ok.has("#data 1,4,35,310,2789,25096"));
    EXPECT_EQ(run({"omega", "--scenario", "builtin:s9-prefix", "--invariant", "c", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"omega", "--scenario", "builtin:s9-prefix", "--invariant", "s", "--n", "7"}).code, 2);
}

TEST(Cli, OmegaReadsScenarioFile) {
    std::string text = coreseq::scenario_to_string(*coreseq::load_scenario("builtin:z3z3").system);
    auto path = temp_file("z3z3.scenario", text);
    auto r = run({"omega", "--scenario", path, "--invariant", "c", "--n", "5"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.has("#data 6,27,90,189,702"));
}

TEST(Cli, BadScenarioIsAnInputError) {
    auto path = temp_file("bad.scenario", "[system] name=x size=2\n[matrix]\nT[3][1] = \"1\"\n");
    auto r = run({"omega", "--scenario", path, "--n", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"omega", "--scenario", "builtin:unknown"}).code, 2);
}

TEST(Cli, OracleCyclicMatchesEngine) {
    auto r = run({"oracle", "cyclic", "--p", "7", "--jordan", "2", "--n", "10", "--kinds", "c,s"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("#data c 2,4,8,16,32,57,114,193,386,639"));
    EXPECT_TRUE(r.has("#data s 1,2,3,6,10,19,33,61,108,197"));
    auto g = run({"oracle", "cyclic", "--p", "7", "--jordan", "2", "--n", "6", "--kinds", "c", "--generic"});
    EXPECT_TRUE(g.has("#data c 2,4,8,16,32,57"));
}

TEST(Cli, OracleRejectsCompositeModulus) {
    EXPECT_EQ(run({"oracle", "cyclic", "--p", "9", "--jordan", "2"}).code, 2);
    EXPECT_EQ(run({"oracle", "cyclic", "--p", "7", "--jordan", "8"}).code, 2);
}

TEST(Cli, OracleElabBuiltin) {
    auto r = run({"oracle", "elab", "--file", "builtin:z3z3", "--n", "4", "--kinds", "c,d"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.has("#data c 6,27,90,189"));
    EXPECT_EQ(run({"oracle", "elab", "--file", "builtin:z3z3", "--n", "2", "--kinds", "s"}).code, 2);
}

TEST(Cli, OracleBudgetIsARuntimeFailure) {
    auto r = run({"oracle", "elab", "--file", "builtin:z3z3", "--n", "4", "--budget", "100"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, OracleChannels) {
    auto r = run({"oracle", "channels", "--file", "builtin:z3z3-induced", "--depth", "5"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.has("#data dim forward 3,6,3,6,3,6"));
    EXPECT_TRUE(r.has("channel dim forward"));
}

TEST(Cli, GuessCfiniteFromList) {
    auto r = run({"guess", "cfinite", "--terms", "1,4,35,310,2789,25096", "--max-order", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("#rec x[n] = 9*x[n-1] + x[n-2] - 9*x[n-3]"));
}

TEST(Cli, GuessReadsTermsFile) {
    auto path = temp_file("catalan.txt", "1 1 2 5 14 42\n132 429 1430 4862 16796 58786 208012\n");
    auto r = run({"guess", "algebraic", "--terms", path, "--deg-t", "2", "--deg-y", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("#eq t*y^2 - y + 1 = 0"));
}

TEST(Cli, GuessNotFoundIsStillSuccess) {
    auto r = run({"guess", "cfinite", "--terms", "1,2,6,24,120,720,5040,40320,362880,3628800", "--max-order", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("not found"));
    EXPECT_FALSE(r.has("#rec"));
}

TEST(Cli, GuessTooFewTerms) {
    EXPECT_EQ(run({"guess", "cfinite", "--terms", "1,2,3", "--max-order", "4", "--margin", "2"}).code, 2);
    EXPECT_EQ(run({"guess", "quadratic", "--terms", "1,2,3"}).code, 2);
}

TEST(Cli, TriWithLaurentSequence) {
    auto path = temp_file("sym.polyseq", "order = 1\nc[0] = x^-1 + 1 + x\nP[0] = 1\n");
    auto r = run({"tri", "--polyseq", path, "--a", "rec: 1; prefix: 1", "--b", "rec: 1; prefix: 1", "--n", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.has("#data 1,3,9,27,81,243"));
    EXPECT_EQ(run({"tri", "--polyseq", path, "--a", "1,1,1", "--n", "3"}).code, 2);
}

TEST(Cli, TriThenGuess) {
    auto path = temp_file("binom.polyseq", "order = 1\nc[0] = 1 + x\nP[0] = 1\n");
    auto r = run({"tri", "--polyseq", path, "--a", "rec: 1,1; prefix: 0,1", "--n", "12", "--guess", "cfinite"});
    EXPECT_TRUE(r.has("#data 0,1,3,8,21,55,144"));
    EXPECT_TRUE(r.has("#rec x[n] = 3*x[n-1] - x[n-2]"));
}

TEST(Cli, SeqOperations) {
    auto d = run({"seq", "dilate", "--a", "rec: 1,1; prefix: 0,1", "--d", "3", "--n", "5"});
    EXPECT_TRUE(d.has("#data 0,2,8,34,144"));
    auto s = run({"seq", "partial-sums", "--a", "rec: 2; prefix: 1", "--n", "5"});
    EXPECT_TRUE(s.has("#data 1,3,7,15,31"));
    auto h = run({"seq", "hadamard", "--a", "rec: 2; prefix: 1", "--b", "rec: 3; prefix: 1", "--n", "4"});
    EXPECT_TRUE(h.has("#data 1,6,36,216"));
    auto hs = run({"seq", "hilbert", "--a", "rec: 1,1; prefix: 0,1"});
    EXPECT_TRUE(hs.has("(t) / (1 - t - t^2)"));
    EXPECT_EQ(run({"seq", "add", "--a", "rec: 2; prefix: 1"}).code, 2);
    EXPECT_EQ(run({"seq", "transpose", "--a", "rec: 2; prefix: 1"}).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"omega"}).code, 2);
    EXPECT_EQ(run({"omega", "--scenario", "c7", "--n", "abc"}).code, 2);
    EXPECT_EQ(run({"verify", "everything"}).code, 2);
}

TEST(Cli, HelpExitsCleanly) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("omega"));
}
