#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "spdspds/error.hpp"
#include "spdspds/mps_io.hpp"
#include "support/worked_examples.hpp"

using namespace spdspds;
using nlohmann::json;

namespace {

const std::string kData = SPDSPDS_DATA_DIR;

constexpr const char* kMinimal = R"(NAME          TINY
ROWS
 N  COST
 L  LIM
COLUMNS
    X         COST      -1           LIM       2
RHS
    RHS       LIM       4
ENDATA
)";

MpsError::Kind parse_error_kind(std::string_view text, std::size_t* line = nullptr) {
    try {
        parse_mps(text);
    } catch (const MpsError& e) {
        if (line) *line = e.line();
        return e.kind();
    }
    ADD_FAILURE() << "no MpsError";
    return MpsError::Kind::io;
}

}  // namespace

TEST(ParseMps, Minimal) {
    const GeneralLP p = parse_mps(kMinimal);
    EXPECT_EQ(p.name, "TINY");
    EXPECT_EQ(p.sense, Sense::minimize);
    ASSERT_EQ(p.num_vars(), 1u);
    ASSERT_EQ(p.num_rows(), 1u);
    EXPECT_EQ(p.rows[0].relation, Relation::less_equal);
    EXPECT_EQ(p.rows[0].rhs, 4.0);
    EXPECT_EQ(p.rows[0].coefficients.at(0), 2.0);
    EXPECT_EQ(p.objective.at(0), -1.0);
}

TEST(ParseMps, AfiroDimensions) {
    const GeneralLP p = read_mps_file(kData + "/netlib/afiro.mps");
    EXPECT_EQ(p.num_vars(), 32u);
    EXPECT_EQ(p.num_rows() + 1, 28u);
}

TEST(ParseMps, UnknownSectionNamesItsLine) {
    std::string text = kMinimal;
    text.replace(text.find("COLUMNS"), 7, "COLUMS");
    std::size_t line = 0;
    EXPECT_EQ(parse_error_kind(text, &line), MpsError::Kind::unknown_section);
    EXPECT_EQ(line, 5u);
}

TEST(ParseMps, ErrorKinds) {
    EXPECT_EQ(parse_error_kind("NAME X\nROWS\n N C\n L R\n L R\nENDATA\n"), MpsError::Kind::duplicate_row);
    EXPECT_EQ(parse_error_kind("NAME X\nROWS\n N C\nCOLUMNS\n    X  NOPE  1\nENDATA\n"),
              MpsError::Kind::undeclared_reference);
    EXPECT_EQ(parse_error_kind("NAME X\nROWS\n N C\nCOLUMNS\n    X  C  1.2.3\nENDATA\n"),
              MpsError::Kind::malformed_number);
    EXPECT_THROW(read_mps_file(kData + "/missing.mps"), MpsError);
}

TEST(ParseMps, SectionsRangesBoundsAndSense) {
    const GeneralLP p = parse_mps(R"(NAME          ALL
OBJSENSE
    MAX
ROWS
 N  OBJ
 G  LO
 E  EQ
 L  RG
COLUMNS
    MARKER                 'MARKER'                 'INTORG'
    A         OBJ       1            LO        1
    A         EQ        1            RG        1
    MARKER                 'MARKER'                 'INTEND'
    B         OBJ       2            EQ        1
    C         OBJ       0
RHS
    RHS       OBJ       -5           LO        1
    RHS       EQ        3            RG        4
RANGES
    RNG       RG        2
BOUNDS
 UP BND       A         2
 MI BND       B
 FX BND       C         1.5
ENDATA
)");
    EXPECT_EQ(p.sense, Sense::maximize);
    EXPECT_EQ(p.objective_offset, 5.0);
    EXPECT_EQ(p.num_vars(), 3u);
    EXPECT_EQ(p.rows[0].relation, Relation::greater_equal);
    EXPECT_EQ(p.rows[1].relation, Relation::equal);
    EXPECT_EQ(p.rows[2].range, 2.0);
    EXPECT_EQ(p.bounds[0].upper, 2.0);
    EXPECT_EQ(p.bounds[1].lower, -kInfinity);
    EXPECT_EQ(p.bounds[2].lower, 1.5);
    EXPECT_EQ(p.bounds[2].upper, 1.5);
}

TEST(WriteMps, RoundTripsNetlibProblems) {
    for (const char* name : {"afiro", "adlittle", "kb2", "blend"}) {
        const GeneralLP p = read_mps_file(kData + "/netlib/" + name + ".mps");
        const GeneralLP q = parse_mps(write_mps(p));
        EXPECT_EQ(q.name, p.name);
        EXPECT_EQ(q.sense, p.sense);
        EXPECT_EQ(q.var_names, p.var_names);
        EXPECT_EQ(q.objective, p.objective);
        EXPECT_EQ(q.objective_offset, p.objective_offset);
        ASSERT_EQ(q.num_rows(), p.num_rows());
        for (std::size_t i = 0; i < p.num_rows(); ++i) {
            EXPECT_EQ(q.rows[i].name, p.rows[i].name);
            EXPECT_EQ(q.rows[i].relation, p.rows[i].relation);
            EXPECT_EQ(q.rows[i].coefficients, p.rows[i].coefficients);
            EXPECT_EQ(q.rows[i].rhs, p.rows[i].rhs);
            EXPECT_EQ(q.rows[i].range, p.rows[i].range);
        }
        for (std::size_t j = 0; j < p.num_vars(); ++j) {
            EXPECT_EQ(q.bounds[j].lower, p.bounds[j].lower);
            EXPECT_EQ(q.bounds[j].upper, p.bounds[j].upper);
        }
    }
}

TEST(EmitReport, AfiroJson) {
    const GeneralLP p = read_mps_file(kData + "/netlib/afiro.mps");
    const CanonicalLP lp = canonicalize(p);
    const json j = json::parse(emit_report(solve(lp), p, lp, ReportFormat::json));
    for (const char* key : {"problem", "status_primal", "status_dual", "objective", "iterations", "cycle_flag",
                            "stop_reason", "solution", "dual_solution", "certificates",
                            "iteration_count_vs_m_plus_n"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["status_primal"], "F");
    EXPECT_EQ(j["status_dual"], "F");
    EXPECT_NEAR(j["objective"].get<double>(), -464.75314285714273, 1e-9);
    EXPECT_EQ(j["solution"].size(), 32u);
    EXPECT_EQ(j["dual_solution"].size(), 27u);
}

TEST(EmitReport, DoublyInfeasibleJson) {
    GeneralLP p;
    p.name = "EX6";
    p.sense = Sense::maximize;
    p.add_variable("x1");
    p.add_variable("x2");
    p.objective = {{0, 2.0}, {1, -1.0}};
    p.rows.push_back({"r1", Relation::less_equal, {{0, 1.0}, {1, -1.0}}, 1.0, {}});
    p.rows.push_back({"r2", Relation::less_equal, {{0, -1.0}, {1, 1.0}}, -2.0, {}});
    const CanonicalLP lp = canonicalize(p);
    const json j = json::parse(emit_report(solve(lp), p, lp, ReportFormat::json));
    EXPECT_TRUE(j["objective"].is_null());
    EXPECT_EQ(j["status_primal"], "Phi");
    EXPECT_EQ(j["status_dual"], "Phi");
    EXPECT_FALSE(j["certificates"]["primal_ray"].is_null());
    EXPECT_FALSE(j["certificates"]["dual_ray"].is_null());
}

TEST(BenchTable, OneLinePerProblem) {
    std::vector<BenchRow> rows;
    for (const char* name : {"afiro", "sc50a"}) {
        const GeneralLP p = read_mps_file(kData + "/netlib/" + name + ".mps");
        const CanonicalLP lp = canonicalize(p);
        rows.push_back(make_bench_row(solve(lp), p, lp, 0.0));
    }
    EXPECT_EQ(rows[0].rows, 28u);
    EXPECT_EQ(rows[0].cols, 32u);
    const std::string table = format_bench_table(rows);
    EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 3);
    EXPECT_EQ(table.rfind("Name", 0), 0u);
    EXPECT_NE(table.find("AFIRO"), std::string::npos);
}
