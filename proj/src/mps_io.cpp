#include "spdspds/mps_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "spdspds/error.hpp"

namespace spdspds {

namespace {

enum class Section { none, name, objsense, rows, columns, rhs, ranges, bounds, endata };

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

class Parser {
public:
    GeneralLP run(std::string_view text) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no_;
            handle(line);
            pos = end + 1;
            if (section_ == Section::endata) break;
        }
        lp_.validate();
        return std::move(lp_);
    }

private:
    [[noreturn]] void fail(MpsError::Kind kind, const std::string& detail) const {
        throw MpsError(kind, line_no_, detail);
    }

    double number(std::string_view s) const {
        double v = 0.0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        if (!s.empty() && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
            fail(MpsError::Kind::malformed_number, "'" + std::string(s) + "' is not a number");
        }
        return v;
    }

    void handle(std::string_view line) {
        if (line.empty() || line.front() == '*' || split(line).empty()) {
            return;
        }
        if (!std::isspace(static_cast<unsigned char>(line.front()))) {
            header(line);
            return;
        }
        const auto f = split(line);
        switch (section_) {
            case Section::objsense: objsense(f); break;
            case Section::rows: row(f); break;
            case Section::columns: column(f); break;
            case Section::rhs: rhs(f); break;
            case Section::ranges: range(f); break;
            case Section::bounds: bound(f); break;
            default: fail(MpsError::Kind::malformed_record, "data record outside a section");
        }
    }

    void header(std::string_view line) {
        const auto f = split(line);
        const std::string_view key = f.front();
        static const std::map<std::string_view, Section> sections = {
            {"NAME", Section::name},       {"OBJSENSE", Section::objsense},
            {"ROWS", Section::rows},       {"COLUMNS", Section::columns},
            {"RHS", Section::rhs},         {"RANGES", Section::ranges},
            {"BOUNDS", Section::bounds},   {"ENDATA", Section::endata}};
        const auto it = sections.find(key);
        if (it == sections.end()) {
            fail(MpsError::Kind::unknown_section, "unknown section '" + std::string(key) + "'");
        }
        section_ = it->second;
        if (section_ == Section::name && f.size() > 1) {
            lp_.name = std::string(f[1]);
        }
        if (section_ == Section::objsense && f.size() > 1) {
            objsense({f.begin() + 1, f.end()});
        }
    }

    void objsense(const std::vector<std::string_view>& f) {
        if (f.size() != 1 || (f[0] != "MAX" && f[0] != "MIN" && f[0] != "MAXIMIZE" &&
                              f[0] != "MINIMIZE")) {
            fail(MpsError::Kind::malformed_record, "OBJSENSE expects MAX or MIN");
        }
        lp_.sense = f[0].starts_with("MAX") ? Sense::maximize : Sense::minimize;
    }

    void row(const std::vector<std::string_view>& f) {
        if (f.size() != 2) {
            fail(MpsError::Kind::malformed_record, "ROWS record needs a type and a name");
        }
        const std::string name(f[1]);
        if (!row_names_.insert(name).second) {
            fail(MpsError::Kind::duplicate_row, "row '" + name + "' declared twice");
        }
        const std::string_view type = f[0];
        if (type == "N") {
            if (!objective_row_) {
                objective_row_ = name;
            } else {
                ignored_rows_.insert(name);
            }
            return;
        }
        Constraint c;
        c.name = name;
        if (type == "L") {
            c.relation = Relation::less_equal;
        } else if (type == "G") {
            c.relation = Relation::greater_equal;
        } else if (type == "E") {
            c.relation = Relation::equal;
        } else {
            fail(MpsError::Kind::malformed_record, "unknown row type '" + std::string(type) + "'");
        }
        row_index_[name] = lp_.rows.size();
        lp_.rows.push_back(std::move(c));
    }

    // Applies value to a named row: the objective, an ignored N row or a constraint.
    template <class OnObjective, class OnRow>
    void route(std::string_view row_name, OnObjective on_objective, OnRow on_row) {
        const std::string name(row_name);
        if (objective_row_ && name == *objective_row_) {
            on_objective();
            return;
        }
        if (ignored_rows_.contains(name)) {
            return;
        }
        const auto it = row_index_.find(name);
        if (it == row_index_.end()) {
            fail(MpsError::Kind::undeclared_reference, "row '" + name + "' is not declared");
        }
        on_row(lp_.rows[it->second]);
    }

    void column(const std::vector<std::string_view>& f) {
        if (f.size() >= 2 && f[1] == "'MARKER'") {
            return;
        }
        if (f.size() != 3 && f.size() != 5) {
            fail(MpsError::Kind::malformed_record, "COLUMNS record needs 3 or 5 fields");
        }
        const std::string name(f[0]);
        auto it = col_index_.find(name);
        if (it == col_index_.end()) {
            it = col_index_.emplace(name, lp_.add_variable(name)).first;
        }
        const std::size_t j = it->second;
        for (std::size_t k = 1; k + 1 < f.size(); k += 2) {
            const double v = number(f[k + 1]);
            if (v == 0.0) {
                // Explicit zeros only declare the column.
                route(f[k], [] {}, [](Constraint&) {});
                continue;
            }
            route(
                f[k], [&] { lp_.objective[j] = v; },
                [&](Constraint& c) { c.coefficients[j] = v; });
        }
    }

    // Optional leading set name: even field counts carry none.
    static std::size_t pairs_start(const std::vector<std::string_view>& f) {
        return f.size() % 2 == 0 ? 0 : 1;
    }

    void rhs(const std::vector<std::string_view>& f) {
        if (f.size() < 2 || f.size() > 5) {
            fail(MpsError::Kind::malformed_record, "RHS record needs 2 to 5 fields");
        }
        for (std::size_t k = pairs_start(f); k + 1 < f.size(); k += 2) {
            const double v = number(f[k + 1]);
            route(
                f[k], [&] { lp_.objective_offset = -v; }, [&](Constraint& c) { c.rhs = v; });
        }
    }

    void range(const std::vector<std::string_view>& f) {
        if (f.size() < 2 || f.size() > 5) {
            fail(MpsError::Kind::malformed_record, "RANGES record needs 2 to 5 fields");
        }
        for (std::size_t k = pairs_start(f); k + 1 < f.size(); k += 2) {
            const double v = number(f[k + 1]);
            route(
                f[k],
                [&] {
                    fail(MpsError::Kind::malformed_record, "RANGES entry on the objective row");
                },
                [&](Constraint& c) { c.range = v; });
        }
    }

    void bound(const std::vector<std::string_view>& f) {
        if (f.empty()) {
            fail(MpsError::Kind::malformed_record, "empty BOUNDS record");
        }
        const std::string_view type = f[0];
        const bool valued = type != "FR" && type != "MI" && type != "PL" && type != "BV";
        const std::size_t want = valued ? 4 : 3;
        if (f.size() != want && f.size() != want - 1) {
            fail(MpsError::Kind::malformed_record,
                 "BOUNDS " + std::string(type) + " record has " + std::to_string(f.size()) +
                     " fields");
        }
        const std::size_t at = f.size() == want ? 2 : 1;
        const std::string col(f[at]);
        const auto it = col_index_.find(col);
        if (it == col_index_.end()) {
            fail(MpsError::Kind::undeclared_reference, "column '" + col + "' is not declared");
        }
        Bound& b = lp_.bounds[it->second];
        const double v = valued ? number(f[at + 1]) : 0.0;
        if (type == "UP" || type == "UI") {
            b.upper = v;
            // Conventional reading of a negative upper bound on a default lower bound.
            if (v < 0.0 && b.lower == 0.0) {
                b.lower = -kInfinity;
            }
        } else if (type == "LO" || type == "LI") {
            b.lower = v;
        } else if (type == "FX") {
            b.lower = v;
            b.upper = v;
        } else if (type == "FR") {
            b.lower = -kInfinity;
            b.upper = kInfinity;
        } else if (type == "MI") {
            b.lower = -kInfinity;
        } else if (type == "PL") {
            b.upper = kInfinity;
        } else if (type == "BV") {
            b.lower = 0.0;
            b.upper = 1.0;
        } else {
            fail(MpsError::Kind::malformed_record, "unknown bound type '" + std::string(type) + "'");
        }
    }

    GeneralLP lp_;
    Section section_ = Section::none;
    std::size_t line_no_ = 0;
    std::optional<std::string> objective_row_;
    std::unordered_set<std::string> row_names_;
    std::unordered_set<std::string> ignored_rows_;
    std::unordered_map<std::string, std::size_t> row_index_;
    std::unordered_map<std::string, std::size_t> col_index_;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

GeneralLP parse_mps(std::string_view text) { return Parser().run(text); }

GeneralLP read_mps_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MpsError(MpsError::Kind::io, 0, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw MpsError(MpsError::Kind::io, 0, "cannot read '" + path.string() + "'");
    }
    return parse_mps(buf.str());
}

std::string write_mps(const GeneralLP& p) {
    std::unordered_set<std::string> taken;
    for (const auto& r : p.rows) taken.insert(r.name);
    std::string obj = "COST";
    while (taken.contains(obj)) obj += '_';

    std::ostringstream os;
    os << "NAME          " << p.name << '\n';
    if (p.sense == Sense::maximize) {
        os << "OBJSENSE\n    MAX\n";
    }
    os << "ROWS\n N  " << obj << '\n';
    for (const auto& r : p.rows) {
        const char* type = r.relation == Relation::less_equal      ? "L"
                           : r.relation == Relation::greater_equal ? "G"
                                                                   : "E";
        os << ' ' << type << "  " << r.name << '\n';
    }
    os << "COLUMNS\n";
    std::vector<std::vector<std::pair<std::size_t, double>>> by_col(p.num_vars());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        for (const auto& [j, v] : p.rows[i].coefficients) by_col[j].emplace_back(i, v);
    }
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
        const auto& name = p.var_names[j];
        bool any = false;
        if (const auto it = p.objective.find(j); it != p.objective.end()) {
            os << "    " << name << "  " << obj << "  " << num(it->second) << '\n';
            any = true;
        }
        for (const auto& [i, v] : by_col[j]) {
            os << "    " << name << "  " << p.rows[i].name << "  " << num(v) << '\n';
            any = true;
        }
        if (!any) {
            // Declares a column with no entries.
            os << "    " << name << "  " << obj << "  0\n";
        }
    }
    os << "RHS\n";
    if (p.objective_offset != 0.0) {
        os << "    RHS  " << obj << "  " << num(-p.objective_offset) << '\n';
    }
    for (const auto& r : p.rows) {
        if (r.rhs != 0.0) os << "    RHS  " << r.name << "  " << num(r.rhs) << '\n';
    }
    bool ranges = false;
    for (const auto& r : p.rows) {
        if (!r.range) continue;
        if (!ranges) os << "RANGES\n";
        ranges = true;
        os << "    RNG  " << r.name << "  " << num(*r.range) << '\n';
    }
    bool bounds = false;
    auto line = [&](const char* type, const std::string& name, std::optional<double> v) {
        if (!bounds) os << "BOUNDS\n";
        bounds = true;
        os << ' ' << type << " BND  " << name;
        if (v) os << "  " << num(*v);
        os << '\n';
    };
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
        const Bound& b = p.bounds[j];
        const auto& name = p.var_names[j];
        if (b.is_free()) {
            line("FR", name, std::nullopt);
        } else if (b.is_fixed()) {
            line("FX", name, b.lower);
        } else {
            if (b.lower == -kInfinity) {
                line("MI", name, std::nullopt);
            } else if (b.lower != 0.0) {
                line("LO", name, b.lower);
            }
            if (b.upper != kInfinity) {
                line("UP", name, b.upper);
            }
        }
    }
    os << "ENDATA\n";
    return os.str();
}

namespace {

std::string label_name(const Label& l) {
    return (l.origin == Label::Origin::column ? "x" : "y") + std::to_string(l.index + 1);
}

// Original-sense objective at the terminal point, when it is optimal.
std::optional<double> original_objective(const SolveReport& r, const TransformRecord& tr,
                                         std::optional<OriginalSolution>& mapped) {
    CanonicalSolution sol{r.basic.x, r.basic.v, r.basic.f};
    mapped = map_back(sol, tr);
    if (r.f && r.g && r.terminal) {
        return mapped->objective;
    }
    return std::nullopt;
}

}  // namespace

std::string emit_report(const SolveReport& report, const GeneralLP& problem,
                        const CanonicalLP& canonical, ReportFormat format) {
    std::optional<OriginalSolution> mapped;
    const auto objective = original_objective(report, canonical.transform, mapped);

    if (format == ReportFormat::text) {
        const BenchRow row = make_bench_row(report, problem, canonical, 0.0);
        std::ostringstream os;
        os << format_bench_table(std::span<const BenchRow>(&row, 1));
        if (report.stop_reason != StopReason::terminal) {
            os << "stopped: " << to_string(report.stop_reason) << '\n';
        }
        return os.str();
    }

    using nlohmann::ordered_json;
    ordered_json j;
    j["problem"] = problem.name;
    j["status_primal"] = report.terminal ? ordered_json(to_string(report.terminal->primal)) : ordered_json(nullptr);
    j["status_dual"] = report.terminal ? ordered_json(to_string(report.terminal->dual)) : ordered_json(nullptr);
    j["objective"] = objective ? ordered_json(*objective) : ordered_json(nullptr);
    j["iterations"] = report.iterations;
    j["cycle_flag"] = report.cycle_flag;
    j["stop_reason"] = to_string(report.stop_reason);

    if (report.f) {
        ordered_json sol = ordered_json::object();
        for (std::size_t k = 0; k < problem.num_vars(); ++k) {
            sol[problem.var_names[k]] = mapped->x[k];
        }
        j["solution"] = std::move(sol);
    } else {
        j["solution"] = nullptr;
    }
    if (report.g) {
        ordered_json dual = ordered_json::object();
        for (std::size_t i = 0; i < problem.rows.size(); ++i) {
            dual[problem.rows[i].name] = mapped->row_duals[i];
        }
        j["dual_solution"] = std::move(dual);
    } else {
        j["dual_solution"] = nullptr;
    }

    const Certificates& c = report.certificates;
    const Tableau& t = report.final_tableau;
    auto col_cert = [&](const std::optional<std::size_t>& J) -> ordered_json {
        if (!J) return nullptr;
        return {{"column", *J + 1}, {"label", label_name(t.col_label(*J))}};
    };
    auto row_cert = [&](const std::optional<std::size_t>& I) -> ordered_json {
        if (!I) return nullptr;
        return {{"row", *I + 1}, {"label", label_name(t.row_label(*I))}};
    };
    j["certificates"] = {{"primal_ray", col_cert(c.ray_column)},
                         {"dual_ray", row_cert(c.ray_row)},
                         {"degenerate_primal_ray", col_cert(c.degenerate_ray_column)},
                         {"degenerate_dual_ray", row_cert(c.degenerate_ray_row)}};
    const std::size_t mn = report.m + report.n;
    j["iteration_count_vs_m_plus_n"] = {
        {"iterations", report.iterations},
        {"m_plus_n", mn},
        {"ratio", mn ? static_cast<double>(report.iterations) / static_cast<double>(mn) : 0.0}};
    j["degenerate_entries"] = report.degenerate_entries;
    return j.dump(2) + "\n";
}

BenchRow make_bench_row(const SolveReport& report, const GeneralLP& problem,
                        const CanonicalLP& canonical, double seconds) {
    BenchRow row;
    row.name = problem.name;
    row.rows = problem.rows.size() + 1;
    row.cols = problem.num_vars();
    row.cst_rows = canonical.m();
    row.cst_cols = canonical.n();
    row.iterations = report.iterations;
    row.stop_reason = report.stop_reason;
    row.terminal = report.terminal;
    std::optional<OriginalSolution> mapped;
    row.objective = original_objective(report, canonical.transform, mapped);
    row.seconds = seconds;
    return row;
}

std::string format_bench_table(std::span<const BenchRow> rows) {
    std::ostringstream os;
    auto cell = [&](const std::string& s, int w, bool left = false) {
        os << (left ? std::left : std::right) << std::setw(w) << s << ' ';
    };
    cell("Name", 12, true);
    cell("Rows", 6);
    cell("Cols", 6);
    cell("Rows(CST)", 9);
    cell("Cols(CST)", 9);
    cell("Iterations", 10);
    cell("m+n", 6);
    cell("Primal", 6);
    cell("Dual", 6);
    os << "Objective\n";
    for (const BenchRow& r : rows) {
        cell(r.name, 12, true);
        cell(std::to_string(r.rows), 6);
        cell(std::to_string(r.cols), 6);
        cell(std::to_string(r.cst_rows), 9);
        cell(std::to_string(r.cst_cols), 9);
        cell(std::to_string(r.iterations), 10);
        cell(std::to_string(r.cst_rows + r.cst_cols), 6);
        cell(r.terminal ? std::string(to_string(r.terminal->primal)) : "-", 6);
        cell(r.terminal ? std::string(to_string(r.terminal->dual)) : "-", 6);
        if (r.objective) {
            os << num(*r.objective);
        } else if (r.stop_reason != StopReason::terminal) {
            os << to_string(r.stop_reason);
        } else {
            os << '-';
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace spdspds
