#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spdspds/cli.hpp"

using namespace spdspds;

namespace {

const std::string kData = SPDSPDS_DATA_DIR;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "spdspds");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Writes a two-variable maximization with the given rows and returns its path.
std::string write_problem(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("spdspds_cli_" + name + ".mps");
    std::ofstream(path) << body;
    return path.string();
}

const char* kUnbounded = R"(NAME          EX4
OBJSENSE
    MAX
ROWS
 N  OBJ
 L  R1
 L  R2
COLUMNS
    X1        OBJ       6            R1        1
    X1        R2        -2
    X2        OBJ       -4           R1        -2
    X2        R2        -1
RHS
    RHS       R1        -1           R2        -1
ENDATA
)";

const char* kDoublyInfeasible = R"(NAME          EX6
OBJSENSE
    MAX
ROWS
 N  OBJ
 L  R1
 L  R2
COLUMNS
    X1        OBJ       2            R1        1
    X1        R2        -1
    X2        OBJ       -1           R1        -1
    X2        R2        1
RHS
    RHS       R1        1            R2        -2
ENDATA
)";

}  // namespace

TEST(Cli, SolveAfiroJson) {
    const CliRun r = cli({"solve", kData + "/netlib/afiro.mps", "--json"});
    EXPECT_EQ(r.code, kExitSolved);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["objective"].get<double>(), -464.75314285714273, 1e-9);
}

TEST(Cli, OutputIsDeterministic) {
    const CliRun a = cli({"solve", kData + "/netlib/kb2.mps", "--json"});
    const CliRun b = cli({"solve", kData + "/netlib/kb2.mps", "--json"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ClassifyInfeasibleExitCode) {
    const CliRun r = cli({"classify", kData + "/netlib-infeas/galenet.mps"});
    EXPECT_EQ(r.code, kExitPrimalInfeasible);
    EXPECT_NE(r.out.find("primal Φ"), std::string::npos);
}

TEST(Cli, UnboundedAndDoublyInfeasibleExitCodes) {
    EXPECT_EQ(cli({"classify", write_problem("ex4", kUnbounded)}).code, kExitPrimalUnbounded);
    EXPECT_EQ(cli({"classify", write_problem("ex6", kDoublyInfeasible)}).code, kExitBothInfeasible);
}

TEST(Cli, OracleCheckAgrees) {
    const CliRun r = cli({"classify", write_problem("ex4o", kUnbounded), "--json", "--oracle-check"});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["oracle"]["status"], "unbounded");
    EXPECT_TRUE(j["oracle"]["agrees"].get<bool>());
}

TEST(Cli, IterationLimitExitCode) {
    EXPECT_EQ(cli({"solve", kData + "/netlib/afiro.mps", "--max-iters", "1"}).code, kExitNotTerminal);
}

TEST(Cli, MissingFileIsOneLineDiagnostic) {
    const CliRun r = cli({"solve", kData + "/missing.mps"});
    EXPECT_EQ(r.code, kExitParse);
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, MalformedFile) {
    EXPECT_EQ(cli({"solve", write_problem("bad", "NAME X\nROWS\n N C\nCOLUMS\nENDATA\n")}).code, kExitParse);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"solve"}).code, kExitUsage);
    EXPECT_EQ(cli({"solve", kData + "/netlib/afiro.mps", "--strategy-order", "PTPPI,PSPPI,DSPNI,DTPNI,DSPZI,PSPZI"})
                  .code,
              kExitUsage);
    EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
}

TEST(Cli, TraceGoesToStderr) {
    const CliRun r = cli({"solve", write_problem("ex4t", kUnbounded), "--trace"});
    EXPECT_EQ(r.err.rfind("1 ", 0), 0u);
    EXPECT_EQ(r.out.find("PSPPI"), std::string::npos);
}

TEST(Cli, BenchTable) {
    const CliRun r = cli({"bench", kData + "/netlib"});
    EXPECT_EQ(r.code, kExitSolved);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
    EXPECT_NE(r.out.find("STOCFOR1"), std::string::npos);
}
