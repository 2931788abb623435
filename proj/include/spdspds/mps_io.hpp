#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spdspds/lp_model.hpp"
#include "spdspds/solver.hpp"

namespace spdspds {

/// Free-format MPS: NAME, ROWS, COLUMNS, RHS, RANGES, BOUNDS, ENDATA, plus
/// OBJSENSE. The first N row is the objective, minimized unless OBJSENSE says
/// MAX. Throws MpsError naming the offending line.
GeneralLP parse_mps(std::string_view text);

/// Reads and parses a file. A missing or unreadable file is MpsError::Kind::io.
GeneralLP read_mps_file(const std::filesystem::path& path);

/// Writes a document that parse_mps maps back to an identical GeneralLP.
std::string write_mps(const GeneralLP& problem);

enum class ReportFormat { json, text };

/// JSON keys: problem, status_primal, status_dual, objective, iterations,
/// cycle_flag, stop_reason, solution, dual_solution, certificates,
/// iteration_count_vs_m_plus_n. The objective is in the original sense and is
/// null unless the terminal tableau is both primal and dual feasible.
std::string emit_report(const SolveReport& report, const GeneralLP& problem,
                        const CanonicalLP& canonical, ReportFormat format);

/// One line of a bench table.
struct BenchRow {
    std::string name;
    std::size_t rows = 0;  ///< MPS rows including the objective
    std::size_t cols = 0;
    std::size_t cst_rows = 0;
    std::size_t cst_cols = 0;
    std::size_t iterations = 0;
    StopReason stop_reason = StopReason::terminal;
    std::optional<TerminalClass> terminal;
    std::optional<double> objective;
    double seconds = 0.0;
};

BenchRow make_bench_row(const SolveReport& report, const GeneralLP& problem,
                        const CanonicalLP& canonical, double seconds);

/// Aligned columns: Name Rows Cols Rows(CST) Cols(CST) Iterations m+n Primal Dual Objective.
std::string format_bench_table(std::span<const BenchRow> rows);

}  // namespace spdspds
