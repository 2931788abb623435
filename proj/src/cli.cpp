#include "spdspds/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spdspds/error.hpp"
#include "spdspds/mps_io.hpp"
#include "spdspds/oracle.hpp"
#include "spdspds/solver.hpp"

namespace spdspds {

namespace {

struct Config {
    std::vector<std::string> inputs;
    bool json = false;
    bool trace = false;
    std::size_t max_iters = 0;
    double tol = kDefaultTolerance;
    std::string strategy_order;
    bool enumerate_alternatives = false;
    bool oracle_check = false;
};

int exit_code(const SolveReport& r) {
    if (r.stop_reason != StopReason::terminal || !r.terminal) {
        return kExitNotTerminal;
    }
    const TerminalClass& t = *r.terminal;
    if (t.primal == Status::Phi && t.dual == Status::Phi) return kExitBothInfeasible;
    if (t.primal == Status::Phi) return kExitPrimalInfeasible;
    if (t.dual == Status::Phi) return kExitPrimalUnbounded;
    return kExitSolved;
}

// What the brute-force oracle should say about a terminal class.
std::optional<OracleVerdict::Status> expected_verdict(const SolveReport& r) {
    if (!r.terminal) return std::nullopt;
    switch (r.terminal->primal) {
        case Status::Phi: return OracleVerdict::Status::infeasible;
        case Status::Inf:
            return r.terminal->dual == Status::F ? OracleVerdict::Status::optimal
                                                 : OracleVerdict::Status::unbounded;
        case Status::F: return OracleVerdict::Status::optimal;
    }
    return std::nullopt;
}

nlohmann::ordered_json oracle_check(const SolveReport& r, const CanonicalLP& lp) {
    using nlohmann::ordered_json;
    if (lp.m() + lp.n() > kOracleLimit) {
        return {{"checked", false}, {"reason", "m + n exceeds " + std::to_string(kOracleLimit)}};
    }
    const OracleVerdict v = oracle_solve(lp);
    bool agree = expected_verdict(r) == v.status;
    if (agree && v.status == OracleVerdict::Status::optimal && r.f) {
        agree = std::fabs(v.value - *r.f) <= 1e-8 * std::max(1.0, std::fabs(v.value));
    }
    ordered_json j = {{"checked", true}, {"status", to_string(v.status)}};
    j["value"] = v.status == OracleVerdict::Status::optimal ? ordered_json(v.value) : ordered_json(nullptr);
    j["agrees"] = agree;
    return j;
}

SolveOptions solve_options(const Config& c, std::ostream& err) {
    SolveOptions o;
    if (c.max_iters) o.max_iterations = c.max_iters;
    o.tol = c.tol;
    if (!c.strategy_order.empty()) o.order = SchemeOrder::parse(c.strategy_order);
    o.enumerate_alternatives = c.enumerate_alternatives;
    if (c.trace) {
        o.trace = &err;
        o.trace_tableaus = true;
    }
    return o;
}

int run_solve(const Config& c, const SolveOptions& options, bool classify_only, std::ostream& out) {
    const GeneralLP problem = read_mps_file(c.inputs.front());
    const CanonicalLP lp = canonicalize(problem);
    const SolveReport r = solve(lp, options);

    if (classify_only) {
        if (c.json) {
            nlohmann::ordered_json j;
            j["problem"] = problem.name;
            j["status_primal"] = r.terminal ? nlohmann::ordered_json(to_string(r.terminal->primal)) : nlohmann::ordered_json(nullptr);
            j["status_dual"] = r.terminal ? nlohmann::ordered_json(to_string(r.terminal->dual)) : nlohmann::ordered_json(nullptr);
            j["stop_reason"] = to_string(r.stop_reason);
            if (c.oracle_check) j["oracle"] = oracle_check(r, lp);
            out << j.dump(2) << '\n';
        } else {
            out << problem.name << ": primal "
                << (r.terminal ? symbol(r.terminal->primal) : "-") << " dual "
                << (r.terminal ? symbol(r.terminal->dual) : "-");
            if (r.stop_reason != StopReason::terminal) out << " (" << to_string(r.stop_reason) << ")";
            out << '\n';
            if (c.oracle_check) out << "oracle: " << oracle_check(r, lp).dump() << '\n';
        }
        return exit_code(r);
    }

    if (c.json) {
        auto j = nlohmann::ordered_json::parse(emit_report(r, problem, lp, ReportFormat::json));
        if (c.oracle_check) j["oracle"] = oracle_check(r, lp);
        out << j.dump(2) << '\n';
    } else {
        out << emit_report(r, problem, lp, ReportFormat::text);
        if (c.oracle_check) out << "oracle: " << oracle_check(r, lp).dump() << '\n';
    }
    return exit_code(r);
}

std::vector<std::filesystem::path> bench_files(const std::vector<std::string>& inputs) {
    std::vector<std::filesystem::path> files;
    for (const auto& in : inputs) {
        const std::filesystem::path p(in);
        if (std::filesystem::is_directory(p)) {
            for (const auto& e : std::filesystem::directory_iterator(p)) {
                if (e.is_regular_file() && e.path().extension() == ".mps") files.push_back(e.path());
            }
        } else {
            files.push_back(p);
        }
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    return files;
}

int run_bench(const Config& c, const SolveOptions& options, std::ostream& out, std::ostream& err) {
    std::vector<BenchRow> rows;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    int status = kExitSolved;
    for (const auto& file : bench_files(c.inputs)) {
        try {
            const GeneralLP problem = read_mps_file(file);
            const CanonicalLP lp = canonicalize(problem);
            const auto start = std::chrono::steady_clock::now();
            const SolveReport r = solve(lp, options);
            const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
            rows.push_back(make_bench_row(r, problem, lp, took.count()));
            if (c.json) {
                auto j = nlohmann::ordered_json::parse(emit_report(r, problem, lp, ReportFormat::json));
                j.erase("solution");
                j.erase("dual_solution");
                j["rows_cst"] = lp.m();
                j["cols_cst"] = lp.n();
                reports.push_back(std::move(j));
            }
        } catch (const Error& e) {
            err << file.string() << ": " << e.what() << '\n';
            status = kExitParse;
        }
    }
    if (c.json) {
        out << reports.dump(2) << '\n';
    } else {
        out << format_bench_table(rows);
    }
    return status;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetric primal-dual simplex over Tucker's compact tableau", "spdspds"};
    app.require_subcommand(1);
    Config c;

    auto add_common = [&c](CLI::App* sub) {
        sub->add_flag("--json", c.json, "Machine-readable output");
        sub->add_flag("--trace", c.trace, "Per-iteration trace and tableau grids on stderr");
        sub->add_option("--max-iters", c.max_iters, "Iteration limit (default 50*(m+n))")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol", c.tol, "Sign tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--strategy-order", c.strategy_order,
                        "Comma-separated scheme order, permuting only within tiers");
        sub->add_flag("--enumerate-alternatives", c.enumerate_alternatives,
                      "Walk zero-indicator pivots over alternative optima");
        sub->add_flag("--oracle-check", c.oracle_check,
                      "Cross-check small problems against basis enumeration");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one MPS file");
    solve_cmd->add_option("file", c.inputs, "MPS file")->required()->expected(1);
    add_common(solve_cmd);

    CLI::App* classify_cmd = app.add_subcommand("classify", "Print the terminal class only");
    classify_cmd->add_option("file", c.inputs, "MPS file")->required()->expected(1);
    add_common(classify_cmd);

    CLI::App* bench_cmd = app.add_subcommand("bench", "Solve every MPS file of directories");
    bench_cmd->add_option("inputs", c.inputs, "Directories or MPS files")->required();
    add_common(bench_cmd);

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    SolveOptions options;
    try {
        options = solve_options(c, err);
    } catch (const Error& e) {
        err << "spdspds: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(c, options, false, out);
        if (classify_cmd->parsed()) return run_solve(c, options, true, out);
        return run_bench(c, options, out, err);
    } catch (const Error& e) {
        // Unreadable files, malformed MPS and inconsistent bounds.
        err << "spdspds: " << e.what() << '\n';
        return kExitParse;
    }
}

}  // namespace spdspds
