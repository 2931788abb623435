#include "spdspds/solver.hpp"

#include <cstdio>
#include <ostream>

#include "spdspds/error.hpp"

namespace spdspds {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::F: return "F";
        case Status::Inf: return "Inf";
        case Status::Phi: return "Phi";
    }
    return "?";
}

std::string_view symbol(Status s) noexcept {
    switch (s) {
        case Status::F: return "F";
        case Status::Inf: return "\xE2\x88\x9E";
        case Status::Phi: return "\xCE\xA6";
    }
    return "?";
}

bool TerminalClass::admissible() const noexcept {
    if (primal == Status::F) {
        return dual != Status::Phi;
    }
    if (primal == Status::Inf) {
        return dual != Status::Inf;
    }
    return dual != Status::F;
}

std::string_view to_string(StopReason r) noexcept {
    switch (r) {
        case StopReason::terminal: return "terminal";
        case StopReason::iteration_limit: return "iteration_limit";
        case StopReason::cycle: return "cycle";
    }
    return "?";
}

namespace {

struct Patterns {
    bool primal_feasible = true;
    bool dual_feasible = true;
    Certificates cert;
};

// Column with the given gamma sign and no positive alpha.
template <class Keep>
std::optional<std::size_t> ray_column(const Tableau& t, int gamma_sign, Keep keep) {
    for (std::size_t j = 0; j < t.n(); ++j) {
        if (t.gamma_sign(j) != gamma_sign) {
            continue;
        }
        bool ray = true;
        for (std::size_t i = 0; i < t.m() && ray; ++i) {
            ray = t.alpha_sign(i, j) <= 0;
        }
        if (ray && keep(j)) {
            return j;
        }
    }
    return std::nullopt;
}

// Row with the given beta sign and no negative alpha.
template <class Keep>
std::optional<std::size_t> ray_row(const Tableau& t, int beta_sign, Keep keep) {
    for (std::size_t i = 0; i < t.m(); ++i) {
        if (t.beta_sign(i) != beta_sign) {
            continue;
        }
        bool ray = true;
        for (std::size_t j = 0; j < t.n() && ray; ++j) {
            ray = t.alpha_sign(i, j) >= 0;
        }
        if (ray && keep(i)) {
            return i;
        }
    }
    return std::nullopt;
}

Patterns scan(const Tableau& t, const TransformRecord* tr) {
    Patterns p;
    for (std::size_t i = 0; i < t.m(); ++i) {
        p.primal_feasible = p.primal_feasible && t.beta_sign(i) >= 0;
    }
    for (std::size_t j = 0; j < t.n(); ++j) {
        p.dual_feasible = p.dual_feasible && t.gamma_sign(j) <= 0;
    }
    auto any = [](std::size_t) { return true; };
    p.cert.ray_column = ray_column(t, 1, any);
    p.cert.ray_row = ray_row(t, -1, any);
    p.cert.degenerate_ray_column = ray_column(t, 0, [&](std::size_t j) {
        return !tr || degenerate_column_is_genuine(t, j, *tr);
    });
    p.cert.degenerate_ray_row = ray_row(t, 0, [&](std::size_t i) {
        return !tr || degenerate_row_is_genuine(t, i, *tr);
    });
    return p;
}

}  // namespace

std::optional<Classification> classify_best_effort(const Tableau& t,
                                                   const TransformRecord* transform) {
    const Patterns p = scan(t, transform);
    const Certificates& c = p.cert;
    Classification out;
    out.certificates = c;
    if (p.primal_feasible && p.dual_feasible) {
        if (c.degenerate_ray_column) {
            out.terminal = {Status::Inf, Status::F};
        } else if (c.degenerate_ray_row) {
            out.terminal = {Status::F, Status::Inf};
        } else {
            out.terminal = {Status::F, Status::F};
        }
    } else if (p.primal_feasible && c.ray_column) {
        out.terminal = {Status::Inf, Status::Phi};
    } else if (p.dual_feasible && c.ray_row) {
        out.terminal = {Status::Phi, Status::Inf};
    } else if (c.ray_column && c.ray_row) {
        out.terminal = {Status::Phi, Status::Phi};
    } else {
        return std::nullopt;
    }
    return out;
}

Classification classify_terminal(const Tableau& t, const TransformRecord* transform) {
    for (std::size_t k = 0; k < 4; ++k) {
        const auto s = static_cast<PivotScheme>(k);
        if (!enumerate_candidates(t, s).empty()) {
            throw NotTerminalError("tableau still admits a " + std::string(to_string(s)) +
                                   " pivot");
        }
    }
    auto c = classify_best_effort(t, transform);
    if (!c) {
        // Unreachable: without first-tier or tricky candidates every
        // infeasible row or column carries a ray certificate.
        throw NotTerminalError("terminal tableau matches none of the six classes");
    }
    return *c;
}

bool detect_cycle(const std::unordered_set<std::string>& history, const std::string& s) {
    return history.contains(s);
}

std::size_t degenerate_entries(const Tableau& t) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < t.m(); ++i) {
        count += t.beta_sign(i) == 0;
    }
    for (std::size_t j = 0; j < t.n(); ++j) {
        count += t.gamma_sign(j) == 0;
    }
    return count;
}

std::vector<double> primal_ray(const Tableau& t, std::size_t J) {
    if (J >= t.n()) {
        throw ShapeError("ray column out of range");
    }
    std::vector<double> d(t.n(), 0.0);
    if (const Label& l = t.col_label(J); l.origin == Label::Origin::column) {
        d[l.index] = 1.0;
    }
    for (std::size_t i = 0; i < t.m(); ++i) {
        if (const Label& l = t.row_label(i); l.origin == Label::Origin::column) {
            d[l.index] = -t.alpha(i, J);
        }
    }
    return d;
}

std::vector<double> dual_ray(const Tableau& t, std::size_t I) {
    if (I >= t.m()) {
        throw ShapeError("ray row out of range");
    }
    std::vector<double> r(t.m(), 0.0);
    if (const Label& l = t.row_label(I); l.origin == Label::Origin::row) {
        r[l.index] = 1.0;
    }
    for (std::size_t j = 0; j < t.n(); ++j) {
        if (const Label& l = t.col_label(j); l.origin == Label::Origin::row) {
            r[l.index] = t.alpha(I, j);
        }
    }
    return r;
}

bool degenerate_column_is_genuine(const Tableau& t, std::size_t J, const TransformRecord& tr) {
    const std::vector<double> d = primal_ray(t, J);
    if (d.size() != tr.columns) {
        throw ShapeError("transform does not match the tableau columns");
    }
    const double shared = tr.shared_shift_column ? d[*tr.shared_shift_column] : 0.0;
    for (const VariableMap& vm : tr.variables) {
        const double dx = vm.kind == VariableMap::Kind::free_split ? d[vm.column] - shared : d[vm.column];
        if (sign_of(dx, t.tol()) != 0) {
            return true;
        }
    }
    return false;
}

bool degenerate_row_is_genuine(const Tableau& t, std::size_t I, const TransformRecord& tr) {
    if (tr.rows.size() != t.m()) {
        throw ShapeError("transform does not match the tableau rows");
    }
    // A ray that raises some u_j changes a reduced cost.
    if (t.row_label(I).origin == Label::Origin::column) {
        return true;
    }
    for (std::size_t j = 0; j < t.n(); ++j) {
        if (t.alpha_sign(I, j) > 0 && t.col_label(j).origin == Label::Origin::column) {
            return true;
        }
    }
    std::vector<double> r = dual_ray(t, I);
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (sign_of(r[k], t.tol()) == 0) {
            r[k] = 0.0;
            continue;
        }
        switch (tr.rows[k].kind) {
            case RowOrigin::Kind::equality_half:
            case RowOrigin::Kind::aggregated_equality:
            case RowOrigin::Kind::fixed_bound: break;
            default: return true;
        }
    }
    CanonicalSolution probe{std::vector<double>(tr.columns, 0.0), r, 0.0};
    for (double pi : map_back(probe, tr).row_duals) {
        if (sign_of(pi, t.tol()) != 0) {
            return true;
        }
    }
    return false;
}

namespace {

void trace_line(std::ostream& os, const IterationRecord& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu %s %zu %zu %+d %.17g %d %.17g\n", r.iteration,
                  std::string(to_string(r.scheme)).c_str(), r.row + 1, r.col + 1, r.delta_ii, r.lem,
                  r.infeasibility_index, r.delta_after);
    os << buf;
}

void finish(SolveReport& report, const Tableau& t, const TransformRecord* tr) {
    if (report.stop_reason == StopReason::terminal) {
        const Classification c = classify_terminal(t, tr);
        report.terminal = c.terminal;
        report.certificates = c.certificates;
    } else if (auto c = classify_best_effort(t, tr)) {
        report.terminal = c->terminal;
        report.certificates = c->certificates;
    }
    report.basic = basic_solution(t);
    const Patterns p = scan(t, nullptr);
    if (p.primal_feasible) {
        report.f = report.basic.f;
    }
    if (p.dual_feasible) {
        report.g = report.basic.g;
    }
    report.degenerate_entries = degenerate_entries(t);
    report.final_tableau = t;
}

// Zero-indicator walk over alternative optimal bases, bounded by the signature set.
void explore_alternatives(const Tableau& start, const SolveOptions& options,
                          std::unordered_set<std::string>& seen, SolveReport& report) {
    Tableau t = start;
    for (std::size_t steps = 0; steps < report.max_iterations; ++steps) {
        std::optional<PivotCandidate> next;
        for (std::size_t k = 4; k < kSchemeCount && !next; ++k) {
            auto candidates = enumerate_candidates(t, options.order.schemes()[k]);
            if (!candidates.empty()) {
                next = choose_candidate(t, candidates);
            }
        }
        if (!next) {
            return;
        }
        t = pivot(t, next->row, next->col);
        const std::string sig = signature(t);
        if (detect_cycle(seen, sig)) {
            return;
        }
        seen.insert(sig);
        report.alternative_optima.push_back(basic_solution(t).x);
    }
}

SolveReport run(const Tableau& initial, const SolveOptions& options, const TransformRecord* tr) {
    if (options.max_iterations && *options.max_iterations == 0) {
        throw ModelError("max_iterations must be at least 1");
    }
    SolveReport report;
    report.m = initial.m();
    report.n = initial.n();
    report.max_iterations = options.max_iterations.value_or(50 * (report.m + report.n));
    if (report.max_iterations == 0) {
        report.max_iterations = 1;
    }

    Tableau t = initial.tol() == options.tol ? initial : initial.with_tolerance(options.tol);
    std::unordered_set<std::string> seen;
    const SelectOptions select{options.order, false};

    while (true) {
        const std::string sig = signature(t);
        if (detect_cycle(seen, sig)) {
            report.cycle_flag = true;
            report.stop_reason = StopReason::cycle;
            break;
        }
        seen.insert(sig);
        report.signatures.push_back(sig);

        const int index = infeasibility_index(t);
        if (index == 0) {
            if (options.enumerate_alternatives) {
                explore_alternatives(t, options, seen, report);
            }
            break;
        }
        const auto candidate = select_pivot(t, select);
        if (!candidate) {
            break;
        }
        if (report.iterations >= report.max_iterations) {
            report.stop_reason = StopReason::iteration_limit;
            break;
        }

        IterationRecord rec;
        rec.iteration = report.iterations + 1;
        rec.scheme = candidate->scheme;
        rec.row = candidate->row;
        rec.col = candidate->col;
        rec.delta_ii = candidate->delta_ii;
        rec.lem = candidate->lem;
        rec.infeasibility_index = index;
        rec.signature = sig;
        rec.delta_before = t.delta();
        t = pivot(t, candidate->row, candidate->col);
        rec.delta_after = t.delta();
        ++report.iterations;

        if (options.trace) {
            trace_line(*options.trace, rec);
            if (options.trace_tableaus) {
                write_grid(*options.trace, t);
            }
        }
        report.records.push_back(std::move(rec));
    }

    finish(report, t, tr);
    return report;
}

}  // namespace

SolveReport solve(const Tableau& initial, const SolveOptions& options) {
    return run(initial, options, nullptr);
}

SolveReport solve(const CanonicalLP& lp, const SolveOptions& options) {
    SolveReport report = run(initial_tableau(lp, options.tol), options, &lp.transform);
    CanonicalSolution sol;
    sol.x = report.basic.x;
    sol.v = report.basic.v;
    sol.objective = report.basic.f;
    report.original = map_back(sol, lp.transform);
    return report;
}

}  // namespace spdspds
