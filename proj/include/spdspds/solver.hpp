#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "spdspds/lp_model.hpp"
#include "spdspds/pivot_select.hpp"
#include "spdspds/tableau.hpp"

namespace spdspds {

/// F: basic feasible and finite. Inf: feasible with an unbounded ray. Phi: infeasible.
enum class Status { F, Inf, Phi };

/// "F", "Inf", "Phi".
std::string_view to_string(Status s) noexcept;
/// "F", "∞", "Φ".
std::string_view symbol(Status s) noexcept;

struct TerminalClass {
    Status primal = Status::F;
    Status dual = Status::F;

    /// One of (F,F), (F,Inf), (Inf,F), (Inf,Phi), (Phi,Inf), (Phi,Phi).
    bool admissible() const noexcept;
    friend bool operator==(const TerminalClass&, const TerminalClass&) = default;
};

/// Witnesses in the terminal tableau (tableau row/column positions).
struct Certificates {
    /// gamma_J > tol and alpha_iJ <= tol for all i: primal ray.
    std::optional<std::size_t> ray_column;
    /// beta_I < -tol and alpha_Ij >= -tol for all j: dual ray.
    std::optional<std::size_t> ray_row;
    /// Same patterns with a zero indicator: alternative unbounded directions.
    std::optional<std::size_t> degenerate_ray_column;
    std::optional<std::size_t> degenerate_ray_row;
};

struct Classification {
    TerminalClass terminal;
    Certificates certificates;
};

/// Throws NotTerminalError when DSPNI, PSPPI, PTPPI or DTPNI still has a candidate.
///
/// With a transform, zero-indicator rays that vanish in the original problem
/// are ignored. Equality aggregation makes the slacks of the equality rows sum
/// to zero, so any optimum of a problem with equalities shows a zero-beta row
/// of nonnegative alphas whose dual direction changes no original row dual;
/// free splitting does the same on the primal side.
Classification classify_terminal(const Tableau& t, const TransformRecord* transform = nullptr);

/// classify_terminal without the terminal check; nothing when no pattern matches.
std::optional<Classification> classify_best_effort(const Tableau& t,
                                                   const TransformRecord* transform = nullptr);

/// Whether the zero-indicator ray through column J moves the original x, or
/// the one through row I moves anything beyond the duals of equality halves,
/// the aggregated row and fixed-variable pins.
bool degenerate_column_is_genuine(const Tableau& t, std::size_t J, const TransformRecord& transform);
bool degenerate_row_is_genuine(const Tableau& t, std::size_t I, const TransformRecord& transform);

/// True iff s is already in history. The caller inserts s afterwards.
bool detect_cycle(const std::unordered_set<std::string>& history, const std::string& s);

/// Count of beta and gamma entries within tol of zero.
std::size_t degenerate_entries(const Tableau& t);

/// Canonical-space direction of the primal ray through column J:
/// x(theta) = x + theta * d stays feasible and c.d = gamma_J.
std::vector<double> primal_ray(const Tableau& t, std::size_t J);

/// Row-dual direction of the ray through row I: r >= 0, r.A >= 0, r.b = beta_I < 0.
std::vector<double> dual_ray(const Tableau& t, std::size_t I);

struct SolveOptions {
    /// Defaults to 50 * (m + n). Must be at least 1 when given.
    std::optional<std::size_t> max_iterations;
    double tol = kDefaultTolerance;
    SchemeOrder order;
    /// On reaching index 0, walk zero-indicator pivots to collect alternative optima.
    bool enumerate_alternatives = false;
    /// When set, one line per iteration (iter scheme I J dII lem II delta) and,
    /// with trace_tableaus, the tableau grid after each pivot.
    std::ostream* trace = nullptr;
    bool trace_tableaus = false;
};

enum class StopReason { terminal, iteration_limit, cycle };
std::string_view to_string(StopReason r) noexcept;

struct IterationRecord {
    std::size_t iteration = 0;
    PivotScheme scheme = PivotScheme::PSPPI;
    std::size_t row = 0;
    std::size_t col = 0;
    int delta_ii = 0;
    double lem = 0.0;
    /// Index and signature of the tableau the pivot was chosen in.
    int infeasibility_index = 0;
    std::string signature;
    double delta_before = 0.0;
    double delta_after = 0.0;
};

struct SolveReport {
    StopReason stop_reason = StopReason::terminal;
    /// Always set when stop_reason is terminal; best effort otherwise.
    std::optional<TerminalClass> terminal;
    Certificates certificates;
    bool cycle_flag = false;
    std::size_t iterations = 0;
    std::size_t max_iterations = 0;
    std::size_t m = 0;
    std::size_t n = 0;

    /// f = -delta when primal feasible, g = -delta when dual feasible.
    std::optional<double> f;
    std::optional<double> g;

    Tableau final_tableau;
    BasicSolution basic;
    std::vector<IterationRecord> records;
    /// In visiting order.
    std::vector<std::string> signatures;
    std::size_t degenerate_entries = 0;
    /// Canonical x of further optimal bases found by the zero-indicator walk.
    std::vector<std::vector<double>> alternative_optima;

    /// Filled by solve(CanonicalLP): the basic point mapped to original space.
    std::optional<OriginalSolution> original;
};

SolveReport solve(const Tableau& initial, const SolveOptions& options = {});
SolveReport solve(const CanonicalLP& lp, const SolveOptions& options = {});

}  // namespace spdspds
