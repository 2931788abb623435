#include "spdspds/tableau.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <utility>

#include "exchange.hpp"
#include "spdspds/error.hpp"

namespace spdspds {

Tableau::Tableau(Matrix alpha, std::vector<double> beta, std::vector<double> gamma, double delta,
                 std::vector<Label> row_labels, std::vector<Label> col_labels, double tol)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      delta_(delta),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      tol_(tol) {
    const std::size_t m = alpha_.rows();
    const std::size_t n = alpha_.cols();
    if (beta_.size() != m || gamma_.size() != n || row_labels_.size() != m ||
        col_labels_.size() != n) {
        throw ShapeError("tableau parts disagree with a " + std::to_string(m) + "x" +
                         std::to_string(n) + " alpha block");
    }
    if (!(tol_ >= 0.0)) {
        throw ShapeError("sign tolerance must be non-negative");
    }
    // Labels must be a permutation of the n column and m row origins.
    std::vector<bool> seen(n + m, false);
    auto claim = [&](const Label& l) {
        const std::size_t bound = l.origin == Label::Origin::column ? n : m;
        if (l.index >= bound || seen[l.slot(n)]) {
            throw ShapeError("tableau labels are not a permutation of the initial labels");
        }
        seen[l.slot(n)] = true;
    };
    for (const Label& l : row_labels_) {
        claim(l);
    }
    for (const Label& l : col_labels_) {
        claim(l);
    }
}

Tableau Tableau::from_data(Matrix alpha, std::vector<double> beta, std::vector<double> gamma,
                           double delta, double tol) {
    std::vector<Label> rows(alpha.rows());
    std::vector<Label> cols(alpha.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i] = Label::row(i);
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
        cols[j] = Label::column(j);
    }
    return Tableau(std::move(alpha), std::move(beta), std::move(gamma), delta, std::move(rows),
                   std::move(cols), tol);
}

Tableau Tableau::with_tolerance(double tol) const {
    Tableau copy = *this;
    copy.tol_ = tol;
    return copy;
}

Tableau initial_tableau(const CanonicalLP& lp, double tol) {
    return Tableau::from_data(lp.a, lp.b, lp.c, 0.0, tol);
}

Tableau pivot(const Tableau& t, std::size_t row, std::size_t col) {
    const std::size_t m = t.m();
    const std::size_t n = t.n();
    if (row >= m || col >= n) {
        throw ShapeError("pivot cell (" + std::to_string(row) + ", " + std::to_string(col) +
                         ") outside a " + std::to_string(m) + "x" + std::to_string(n) + " tableau");
    }
    const double p = t.alpha_(row, col);
    if (std::fabs(p) <= t.tol_) {
        throw ZeroPivotError(row, col, p);
    }

    Tableau out = t;
    Matrix& a = out.alpha_;

    auto pivot_row = a.row(row);
    for (std::size_t j = 0; j < n; ++j) {
        if (j != col) {
            pivot_row[j] = detail::scaled_pivot_row(t.alpha_(row, j), p);
        }
    }
    const double beta_row = detail::scaled_pivot_row(t.beta_[row], p);
    out.beta_[row] = beta_row;

    for (std::size_t i = 0; i < m; ++i) {
        if (i == row) {
            continue;
        }
        const double a_iJ = t.alpha_(i, col);
        auto dst = a.row(i);
        if (a_iJ != 0.0) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) {
                    dst[j] = detail::eliminated(dst[j], a_iJ, pivot_row[j]);
                }
            }
            out.beta_[i] = detail::eliminated(t.beta_[i], a_iJ, beta_row);
        }
        dst[col] = detail::scaled_pivot_col(a_iJ, p);
    }

    const double g_J = t.gamma_[col];
    if (g_J != 0.0) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != col) {
                out.gamma_[j] = detail::eliminated(t.gamma_[j], g_J, pivot_row[j]);
            }
        }
        out.delta_ = detail::eliminated(t.delta_, g_J, beta_row);
    }
    out.gamma_[col] = detail::scaled_pivot_col(g_J, p);
    a(row, col) = 1.0 / p;

    std::swap(out.row_labels_[row], out.col_labels_[col]);
    return out;
}

int infeasibility_index(const Tableau& t) {
    int count = 0;
    for (std::size_t i = 0; i < t.m(); ++i) {
        count += t.beta_sign(i) < 0 ? 1 : 0;
    }
    for (std::size_t j = 0; j < t.n(); ++j) {
        count += t.gamma_sign(j) > 0 ? 1 : 0;
    }
    return count;
}

namespace {

// Positions within a sign triple: + is 0, - is 1; Z/P/N and z/p/n are 0/1/2.
constexpr int sign_slot(int s) { return s == 0 ? 0 : (s > 0 ? 1 : 2); }
constexpr char kBetaChars[] = {'Z', 'P', 'N'};
constexpr char kGammaChars[] = {'z', 'p', 'n'};

}  // namespace

CellType CellType::of(int alpha_sign, int beta_sign, int gamma_sign) {
    CellType ct;
    if (alpha_sign == 0) {
        return ct;
    }
    const std::size_t a = alpha_sign > 0 ? 0 : 1;
    ct.id_ = 1 + a * 9 + static_cast<std::size_t>(sign_slot(beta_sign)) * 3 +
             static_cast<std::size_t>(sign_slot(gamma_sign));
    return ct;
}

CellType CellType::parse(std::string_view code) {
    std::string s(code);
    // Accept the typographic minus sign.
    if (const auto pos = s.find("\xE2\x88\x92"); pos != std::string::npos) {
        s.replace(pos, 3, "-");
    }
    if (s == "0**") {
        return zero();
    }
    if (s.size() != 3 || (s[0] != '+' && s[0] != '-')) {
        throw ModelError("invalid cell type code '" + std::string(code) + "'");
    }
    auto beta = [&](char c) -> int {
        switch (c) {
            case 'Z': return 0;
            case 'P': return 1;
            case 'N': return -1;
        }
        throw ModelError("invalid beta sign in cell type '" + std::string(code) + "'");
    };
    auto gamma = [&](char c) -> int {
        switch (c) {
            case 'z': return 0;
            case 'p': return 1;
            case 'n': return -1;
        }
        throw ModelError("invalid gamma sign in cell type '" + std::string(code) + "'");
    };
    return of(s[0] == '+' ? 1 : -1, beta(s[1]), gamma(s[2]));
}

std::string CellType::code() const {
    if (id_ == 0) {
        return "0**";
    }
    const std::size_t k = id_ - 1;
    return {k / 9 == 0 ? '+' : '-', kBetaChars[(k / 3) % 3], kGammaChars[k % 3]};
}

std::array<CellType, CellType::kCount> CellType::all() {
    std::array<CellType, kCount> out{};
    for (std::size_t k = 0; k < kCount; ++k) {
        out[k].id_ = k;
    }
    return out;
}

CellType cell_type(const Tableau& t, std::size_t i, std::size_t j) {
    return CellType::of(t.alpha_sign(i, j), t.beta_sign(i), t.gamma_sign(j));
}

std::string signature(const Tableau& t) {
    const std::size_t n = t.n();
    std::string sig(n + t.m(), '?');
    for (std::size_t j = 0; j < n; ++j) {
        sig[t.col_label(j).slot(n)] = kGammaChars[sign_slot(t.gamma_sign(j))];
    }
    for (std::size_t i = 0; i < t.m(); ++i) {
        sig[t.row_label(i).slot(n)] = kBetaChars[sign_slot(t.beta_sign(i))];
    }
    return sig;
}

BasicSolution basic_solution(const Tableau& t) {
    BasicSolution s;
    s.x.assign(t.n(), 0.0);
    s.u.assign(t.n(), 0.0);
    s.y.assign(t.m(), 0.0);
    s.v.assign(t.m(), 0.0);
    for (std::size_t i = 0; i < t.m(); ++i) {
        const Label& l = t.row_label(i);
        (l.origin == Label::Origin::column ? s.x : s.y)[l.index] = t.beta(i);
    }
    for (std::size_t j = 0; j < t.n(); ++j) {
        const Label& l = t.col_label(j);
        (l.origin == Label::Origin::column ? s.u : s.v)[l.index] = -t.gamma(j);
    }
    s.f = -t.delta();
    s.g = -t.delta();
    return s;
}

namespace {

void put(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

}  // namespace

void write_grid(std::ostream& os, const Tableau& t) {
    for (std::size_t i = 0; i < t.m(); ++i) {
        for (std::size_t j = 0; j < t.n(); ++j) {
            put(os, t.alpha(i, j));
            os << ' ';
        }
        os << "| ";
        put(os, t.beta(i));
        os << '\n';
    }
    for (std::size_t j = 0; j < t.n(); ++j) {
        put(os, t.gamma(j));
        os << ' ';
    }
    os << "| ";
    put(os, t.delta());
    os << '\n';
}

std::string to_grid(const Tableau& t) {
    std::ostringstream os;
    write_grid(os, t);
    return os.str();
}

}  // namespace spdspds
