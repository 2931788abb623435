#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spdspds/tableau.hpp"

namespace spdspds {

/// D/P: dual or primal indicator. SP: standard pivot with a ratio test,
/// TP: tricky pivot without one. NI/PI/ZI: negative, positive or zero indicator.
enum class PivotScheme { DSPNI, PSPPI, PTPPI, DTPNI, DSPZI, PSPZI };

inline constexpr std::size_t kSchemeCount = 6;

std::string_view to_string(PivotScheme s) noexcept;
/// Throws ModelError for unknown names.
PivotScheme parse_scheme(std::string_view name);

/// Whether a cell of the given type may be pivoted on by the scheme.
bool admissible(PivotScheme s, CellType type);

/// Standard primal and dual schemes use a ratio test; the two tricky ones do not.
bool is_primal(PivotScheme s) noexcept;
bool is_standard(PivotScheme s) noexcept;

struct PivotCandidate {
    std::size_t row = 0;
    std::size_t col = 0;
    PivotScheme scheme = PivotScheme::PSPPI;
    int delta_ii = 0;
    double lem = 0.0;
    /// Ratio followed by perturbation coefficients keyed by label slot.
    /// Empty for tricky pivots.
    std::vector<double> tie_key;
};

/// Lexicographic key of row i in the primal ratio test of column J.
std::vector<double> row_tie_key(const Tableau& t, std::size_t i, std::size_t J);
/// Lexicographic key of column j in the dual ratio test of row I.
std::vector<double> col_tie_key(const Tableau& t, std::size_t I, std::size_t j);
/// Componentwise comparison with a relative band of 1e-9: -1, 0 or +1.
int compare_tie_keys(std::span<const double> a, std::span<const double> b);

std::vector<PivotCandidate> enumerate_candidates(const Tableau& t, PivotScheme s);

/// infeasibility_index(pivot(t, I, J)) - infeasibility_index(t), computed in O(m + n).
int predicted_delta_ii(const Tableau& t, std::size_t I, std::size_t J);

/// The same quantity from ratio windows: sigma1 - sigma4 or sigma3 - sigma2 + 1
/// for rows, and the rho analogues for columns. Agrees with predicted_delta_ii
/// whenever no updated entry lands within tol of zero through roundoff.
int delta_ii_by_ratio_windows(const Tableau& t, std::size_t I, std::size_t J);

/// |beta_I * gamma_J / alpha_IJ|, the magnitude of the objective move.
double lem(const Tableau& t, std::size_t I, std::size_t J);

/// Among candidates tied on delta_ii: lexicographic perturbation key when they
/// compete in one ratio test, else smallest (row, col) in row-major order.
PivotCandidate tie_break_lex(const Tableau& t, std::span<const PivotCandidate> tied);

/// Scan order of the six schemes. Only orders that keep the three tiers
/// {DSPNI, PSPPI}, {PTPPI, DTPNI}, {DSPZI, PSPZI} in place are valid.
class SchemeOrder {
public:
    SchemeOrder();

    /// Comma-separated names, e.g. "PSPPI,DSPNI,PTPPI,DTPNI,DSPZI,PSPZI".
    /// Throws ModelError on unknown names, repeats or tier violations.
    static SchemeOrder parse(std::string_view list);
    static SchemeOrder from(const std::array<PivotScheme, kSchemeCount>& order);

    const std::array<PivotScheme, kSchemeCount>& schemes() const noexcept { return order_; }
    std::string to_string() const;

    friend bool operator==(const SchemeOrder&, const SchemeOrder&) = default;

private:
    std::array<PivotScheme, kSchemeCount> order_;
};

struct SelectOptions {
    SchemeOrder order;
    /// Also scan the zero-indicator tier (alternative optima).
    bool include_zero_indicator = false;
};

/// Minimum delta_ii, then tie_break_lex. Throws ModelError on an empty span.
PivotCandidate choose_candidate(const Tableau& t, std::span<const PivotCandidate> candidates);

/// Candidate from the first scheme in order with a nonempty set, or nothing.
std::optional<PivotCandidate> select_pivot(const Tableau& t, const SelectOptions& options = {});

}  // namespace spdspds
