#include "spdspds/pivot_select.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "exchange.hpp"
#include "spdspds/error.hpp"

namespace spdspds {

namespace {

constexpr std::array<std::string_view, kSchemeCount> kNames = {"DSPNI", "PSPPI", "PTPPI",
                                                               "DTPNI", "DSPZI", "PSPZI"};

constexpr double kTieBand = 1e-9;

void require_pivot(const Tableau& t, std::size_t I, std::size_t J) {
    if (I >= t.m() || J >= t.n()) {
        throw ShapeError("cell (" + std::to_string(I) + ", " + std::to_string(J) +
                         ") outside the tableau");
    }
    if (t.alpha_sign(I, J) == 0) {
        throw ZeroPivotError(I, J, t.alpha(I, J));
    }
}

// Values within tol of zero enter ratios as exact zeros so that degenerate
// ties are not decided by roundoff.
double clamped(double v, double tol) { return std::fabs(v) <= tol ? 0.0 : v; }

int tier(PivotScheme s) { return static_cast<int>(s) / 2; }

}  // namespace

std::string_view to_string(PivotScheme s) noexcept { return kNames[static_cast<std::size_t>(s)]; }

PivotScheme parse_scheme(std::string_view name) {
    for (std::size_t k = 0; k < kSchemeCount; ++k) {
        if (kNames[k] == name) {
            return static_cast<PivotScheme>(k);
        }
    }
    throw ModelError("unknown pivot scheme '" + std::string(name) + "'");
}

bool is_primal(PivotScheme s) noexcept {
    return s == PivotScheme::PSPPI || s == PivotScheme::PTPPI || s == PivotScheme::PSPZI;
}

bool is_standard(PivotScheme s) noexcept {
    return s != PivotScheme::PTPPI && s != PivotScheme::DTPNI;
}

bool admissible(PivotScheme s, CellType type) {
    const std::string code = type.code();
    switch (s) {
        case PivotScheme::DSPNI: return code == "-Nn" || code == "-Nz";
        case PivotScheme::PSPPI: return code == "+Pp" || code == "+Zp";
        case PivotScheme::PTPPI: return code == "-Np";
        case PivotScheme::DTPNI: return code == "+Np";
        case PivotScheme::DSPZI: return code == "-Zn" || code == "-Zz";
        case PivotScheme::PSPZI: return code == "+Pz" || code == "+Zz";
    }
    return false;
}

std::vector<double> row_tie_key(const Tableau& t, std::size_t i, std::size_t J) {
    const std::size_t n = t.n();
    const double a = t.alpha(i, J);
    std::vector<double> key(1 + n + t.m(), 0.0);
    key[0] = clamped(t.beta(i), t.tol()) / a;
    key[1 + t.row_label(i).slot(n)] = 1.0 / a;
    for (std::size_t l = 0; l < n; ++l) {
        key[1 + t.col_label(l).slot(n)] += t.alpha(i, l) / a;
    }
    return key;
}

std::vector<double> col_tie_key(const Tableau& t, std::size_t I, std::size_t j) {
    const std::size_t n = t.n();
    const double a = t.alpha(I, j);
    std::vector<double> key(1 + n + t.m(), 0.0);
    key[0] = clamped(t.gamma(j), t.tol()) / a;
    key[1 + t.col_label(j).slot(n)] = -1.0 / a;
    for (std::size_t i = 0; i < t.m(); ++i) {
        key[1 + t.row_label(i).slot(n)] += t.alpha(i, j) / a;
    }
    return key;
}

int compare_tie_keys(std::span<const double> a, std::span<const double> b) {
    const std::size_t len = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < len; ++k) {
        const double x = a[k];
        const double y = b[k];
        if (std::fabs(x - y) > kTieBand * std::max({1.0, std::fabs(x), std::fabs(y)})) {
            return x < y ? -1 : 1;
        }
    }
    if (a.size() != b.size()) {
        return a.size() < b.size() ? -1 : 1;
    }
    return 0;
}

int predicted_delta_ii(const Tableau& t, std::size_t I, std::size_t J) {
    require_pivot(t, I, J);
    const double p = t.alpha(I, J);
    const double tol = t.tol();
    int delta = 0;
    auto row_bad = [tol](double b) { return sign_of(b, tol) < 0 ? 1 : 0; };
    auto col_bad = [tol](double g) { return sign_of(g, tol) > 0 ? 1 : 0; };

    const double beta_row = detail::scaled_pivot_row(t.beta(I), p);
    for (std::size_t i = 0; i < t.m(); ++i) {
        double next = beta_row;
        if (i != I) {
            const double a_iJ = t.alpha(i, J);
            next = a_iJ != 0.0 ? detail::eliminated(t.beta(i), a_iJ, beta_row) : t.beta(i);
        }
        delta += row_bad(next) - row_bad(t.beta(i));
    }

    const double g_J = t.gamma(J);
    for (std::size_t j = 0; j < t.n(); ++j) {
        double next;
        if (j == J) {
            next = detail::scaled_pivot_col(g_J, p);
        } else if (g_J != 0.0) {
            next = detail::eliminated(t.gamma(j), g_J, detail::scaled_pivot_row(t.alpha(I, j), p));
        } else {
            next = t.gamma(j);
        }
        delta += col_bad(next) - col_bad(t.gamma(j));
    }
    return delta;
}

int delta_ii_by_ratio_windows(const Tableau& t, std::size_t I, std::size_t J) {
    require_pivot(t, I, J);
    const double tol = t.tol();

    // Rows: R_i = beta_i / alpha_iJ against R = beta_I / alpha_IJ.
    int sigma = 0;
    if (t.beta_sign(I) != 0) {
        const double R = t.beta(I) / t.alpha(I, J);
        int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
        for (std::size_t i = 0; i < t.m(); ++i) {
            const int a = t.alpha_sign(i, J);
            if (a == 0) {
                continue;
            }
            const bool feasible = t.beta_sign(i) >= 0;
            const double Ri = clamped(t.beta(i), tol) / t.alpha(i, J);
            if (R > 0) {
                s1 += feasible && a > 0 && 0 <= Ri && Ri < R;
                s4 += !feasible && a < 0 && 0 < Ri && Ri <= R;
            } else {
                s3 += feasible && a < 0 && R < Ri && Ri <= 0;
                s2 += !feasible && a > 0 && R <= Ri && Ri < 0;
            }
        }
        sigma = R > 0 ? s1 - s4 : s3 - s2 + 1;
    }

    // Columns: S_j = gamma_j / alpha_Ij against S = gamma_J / alpha_IJ.
    // The feasible-to-infeasible window needs alpha_Ij < 0 when S > 0 and
    // the reverse window alpha_Ij > 0.
    int rho = 0;
    if (t.gamma_sign(J) != 0) {
        const double S = t.gamma(J) / t.alpha(I, J);
        int r1 = 0, r2 = 0, r3 = 0, r4 = 0;
        for (std::size_t j = 0; j < t.n(); ++j) {
            const int a = t.alpha_sign(I, j);
            if (a == 0) {
                continue;
            }
            const bool feasible = t.gamma_sign(j) <= 0;
            const double Sj = clamped(t.gamma(j), tol) / t.alpha(I, j);
            if (S > 0) {
                r1 += feasible && a < 0 && 0 <= Sj && Sj < S;
                r4 += !feasible && a > 0 && 0 < Sj && Sj <= S;
            } else {
                r3 += feasible && a > 0 && S < Sj && Sj <= 0;
                r2 += !feasible && a < 0 && S <= Sj && Sj < 0;
            }
        }
        rho = S > 0 ? r1 - r4 : r3 - r2 + 1;
    }
    return sigma + rho;
}

double lem(const Tableau& t, std::size_t I, std::size_t J) {
    require_pivot(t, I, J);
    return std::fabs(t.beta(I) * t.gamma(J) / t.alpha(I, J));
}

namespace {

PivotCandidate make_candidate(const Tableau& t, std::size_t I, std::size_t J, PivotScheme s,
                              std::vector<double> key) {
    PivotCandidate c;
    c.row = I;
    c.col = J;
    c.scheme = s;
    c.delta_ii = predicted_delta_ii(t, I, J);
    c.lem = lem(t, I, J);
    c.tie_key = std::move(key);
    return c;
}

// Primal ratio test in column J over rows with alpha > tol and beta >= -tol.
std::optional<std::size_t> primal_ratio_row(const Tableau& t, std::size_t J,
                                            std::vector<double>& best_key) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < t.m(); ++i) {
        if (t.alpha_sign(i, J) <= 0 || t.beta_sign(i) < 0) {
            continue;
        }
        auto key = row_tie_key(t, i, J);
        if (!best || compare_tie_keys(key, best_key) < 0) {
            best = i;
            best_key = std::move(key);
        }
    }
    return best;
}

// Dual ratio test in row I over columns with alpha < -tol and gamma <= tol.
std::optional<std::size_t> dual_ratio_col(const Tableau& t, std::size_t I,
                                          std::vector<double>& best_key) {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < t.n(); ++j) {
        if (t.alpha_sign(I, j) >= 0 || t.gamma_sign(j) > 0) {
            continue;
        }
        auto key = col_tie_key(t, I, j);
        if (!best || compare_tie_keys(key, best_key) < 0) {
            best = j;
            best_key = std::move(key);
        }
    }
    return best;
}

}  // namespace

std::vector<PivotCandidate> enumerate_candidates(const Tableau& t, PivotScheme s) {
    std::vector<PivotCandidate> out;
    switch (s) {
        case PivotScheme::PSPPI:
        case PivotScheme::PSPZI: {
            const int indicator = s == PivotScheme::PSPPI ? 1 : 0;
            for (std::size_t J = 0; J < t.n(); ++J) {
                if (t.gamma_sign(J) != indicator) {
                    continue;
                }
                std::vector<double> key;
                if (auto I = primal_ratio_row(t, J, key)) {
                    out.push_back(make_candidate(t, *I, J, s, std::move(key)));
                }
            }
            break;
        }
        case PivotScheme::DSPNI:
        case PivotScheme::DSPZI: {
            const int indicator = s == PivotScheme::DSPNI ? -1 : 0;
            for (std::size_t I = 0; I < t.m(); ++I) {
                if (t.beta_sign(I) != indicator) {
                    continue;
                }
                std::vector<double> key;
                if (auto J = dual_ratio_col(t, I, key)) {
                    out.push_back(make_candidate(t, I, *J, s, std::move(key)));
                }
            }
            break;
        }
        case PivotScheme::PTPPI:
        case PivotScheme::DTPNI: {
            const int want = s == PivotScheme::PTPPI ? -1 : 1;
            for (std::size_t I = 0; I < t.m(); ++I) {
                if (t.beta_sign(I) >= 0) {
                    continue;
                }
                for (std::size_t J = 0; J < t.n(); ++J) {
                    if (t.gamma_sign(J) > 0 && t.alpha_sign(I, J) == want) {
                        out.push_back(make_candidate(t, I, J, s, {}));
                    }
                }
            }
            break;
        }
    }
    return out;
}

PivotCandidate tie_break_lex(const Tableau& t, std::span<const PivotCandidate> tied) {
    if (tied.empty()) {
        throw ModelError("tie_break_lex needs at least one candidate");
    }
    auto row_major = [](const PivotCandidate& a, const PivotCandidate& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    };
    const PivotCandidate& first = tied.front();
    const bool standard = is_standard(first.scheme);
    const bool primal = is_primal(first.scheme);
    const bool shared = std::all_of(tied.begin(), tied.end(), [&](const PivotCandidate& c) {
        return c.scheme == first.scheme && (primal ? c.col == first.col : c.row == first.row);
    });
    if (!standard || !shared) {
        return *std::min_element(tied.begin(), tied.end(), row_major);
    }
    std::vector<double> best_key;
    const PivotCandidate* best = nullptr;
    for (const PivotCandidate& c : tied) {
        auto key = primal ? row_tie_key(t, c.row, c.col) : col_tie_key(t, c.row, c.col);
        const int cmp = best ? compare_tie_keys(key, best_key) : -1;
        if (cmp < 0 || (cmp == 0 && row_major(c, *best))) {
            best = &c;
            best_key = std::move(key);
        }
    }
    return *best;
}

SchemeOrder::SchemeOrder()
    : order_{PivotScheme::DSPNI, PivotScheme::PSPPI, PivotScheme::PTPPI,
             PivotScheme::DTPNI, PivotScheme::DSPZI, PivotScheme::PSPZI} {}

SchemeOrder SchemeOrder::from(const std::array<PivotScheme, kSchemeCount>& order) {
    std::array<bool, kSchemeCount> seen{};
    for (std::size_t k = 0; k < kSchemeCount; ++k) {
        const auto s = order[k];
        if (seen[static_cast<std::size_t>(s)]) {
            throw ModelError("scheme " + std::string(spdspds::to_string(s)) + " listed twice");
        }
        seen[static_cast<std::size_t>(s)] = true;
        if (tier(s) != static_cast<int>(k) / 2) {
            throw ModelError("scheme " + std::string(spdspds::to_string(s)) +
                             " moved out of its tier (tiers are {DSPNI,PSPPI}, {PTPPI,DTPNI}, "
                             "{DSPZI,PSPZI})");
        }
    }
    SchemeOrder out;
    out.order_ = order;
    return out;
}

SchemeOrder SchemeOrder::parse(std::string_view list) {
    std::array<PivotScheme, kSchemeCount> order{};
    std::size_t count = 0;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        std::string_view name = list.substr(start, comma - start);
        while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
        while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
        if (count == kSchemeCount) {
            throw ModelError("scheme order lists more than six schemes");
        }
        order[count++] = parse_scheme(name);
        start = comma + 1;
    }
    if (count != kSchemeCount) {
        throw ModelError("scheme order must list all six schemes");
    }
    return from(order);
}

std::string SchemeOrder::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < kSchemeCount; ++k) {
        if (k) out += ',';
        out += spdspds::to_string(order_[k]);
    }
    return out;
}

PivotCandidate choose_candidate(const Tableau& t, std::span<const PivotCandidate> candidates) {
    if (candidates.empty()) {
        throw ModelError("choose_candidate needs at least one candidate");
    }
    int best = candidates.front().delta_ii;
    for (const auto& c : candidates) {
        best = std::min(best, c.delta_ii);
    }
    std::vector<PivotCandidate> tied;
    for (const auto& c : candidates) {
        if (c.delta_ii == best) {
            tied.push_back(c);
        }
    }
    return tie_break_lex(t, tied);
}

std::optional<PivotCandidate> select_pivot(const Tableau& t, const SelectOptions& options) {
    const std::size_t scanned = options.include_zero_indicator ? kSchemeCount : 4;
    for (std::size_t k = 0; k < scanned; ++k) {
        auto candidates = enumerate_candidates(t, options.order.schemes()[k]);
        if (!candidates.empty()) {
            return choose_candidate(t, candidates);
        }
    }
    return std::nullopt;
}

}  // namespace spdspds
