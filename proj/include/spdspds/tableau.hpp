#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spdspds/lp_model.hpp"
#include "spdspds/matrix.hpp"

namespace spdspds {

/// Absolute tolerance below which a value is treated as zero for every sign decision.
inline constexpr double kDefaultTolerance = 1e-9;

/// Identity of a variable pair by its position in the initial tableau.
///
/// A column-origin label j carries the pair (x_j, u_j); a row-origin label i
/// carries (y_i, v_i). The pairing never changes; only the label's position
/// (row or column of the current tableau) moves under pivoting.
struct Label {
    enum class Origin : std::uint8_t { column, row };

    Origin origin = Origin::column;
    std::size_t index = 0;

    static constexpr Label column(std::size_t j) { return {Origin::column, j}; }
    static constexpr Label row(std::size_t i) { return {Origin::row, i}; }

    /// Fixed slot of the label in [0, n + m): columns first, then rows.
    constexpr std::size_t slot(std::size_t n) const {
        return origin == Origin::column ? index : n + index;
    }

    friend constexpr bool operator==(const Label&, const Label&) = default;
};

/// Sign of a value under tolerance: -1, 0 or +1.
constexpr int sign_of(double value, double tol) {
    return value > tol ? 1 : (value < -tol ? -1 : 0);
}

/// Tucker's compact symmetric tableau.
///
/// Row i reads z_i^B = beta_i - sum_j alpha_ij z_j^N and column j reads
/// w_j^B = -gamma_j + sum_i w_i^N alpha_ij, with f = g = -delta at the basic
/// point. Values are immutable; pivot() returns a new tableau.
class Tableau {
public:
    /// Empty 0x0 tableau.
    Tableau() = default;
    Tableau(Matrix alpha, std::vector<double> beta, std::vector<double> gamma, double delta,
            std::vector<Label> row_labels, std::vector<Label> col_labels,
            double tol = kDefaultTolerance);

    /// A tableau in initial position (row labels 0..m-1, column labels 0..n-1).
    static Tableau from_data(Matrix alpha, std::vector<double> beta, std::vector<double> gamma,
                             double delta = 0.0, double tol = kDefaultTolerance);

    std::size_t m() const noexcept { return alpha_.rows(); }
    std::size_t n() const noexcept { return alpha_.cols(); }
    double tol() const noexcept { return tol_; }

    double alpha(std::size_t i, std::size_t j) const { return alpha_(i, j); }
    double beta(std::size_t i) const { return beta_[i]; }
    double gamma(std::size_t j) const { return gamma_[j]; }
    double delta() const noexcept { return delta_; }

    const Matrix& alpha() const noexcept { return alpha_; }
    std::span<const double> beta() const noexcept { return beta_; }
    std::span<const double> gamma() const noexcept { return gamma_; }
    std::span<const Label> row_labels() const noexcept { return row_labels_; }
    std::span<const Label> col_labels() const noexcept { return col_labels_; }
    const Label& row_label(std::size_t i) const { return row_labels_[i]; }
    const Label& col_label(std::size_t j) const { return col_labels_[j]; }

    int alpha_sign(std::size_t i, std::size_t j) const { return sign_of(alpha_(i, j), tol_); }
    int beta_sign(std::size_t i) const { return sign_of(beta_[i], tol_); }
    int gamma_sign(std::size_t j) const { return sign_of(gamma_[j], tol_); }

    /// Copy with a different sign tolerance.
    Tableau with_tolerance(double tol) const;

private:
    friend Tableau pivot(const Tableau&, std::size_t, std::size_t);

    Matrix alpha_;
    std::vector<double> beta_;
    std::vector<double> gamma_;
    double delta_ = 0.0;
    std::vector<Label> row_labels_;
    std::vector<Label> col_labels_;
    double tol_ = kDefaultTolerance;
};

/// alpha = A, beta = b, gamma = c, delta = 0, initial labels.
Tableau initial_tableau(const CanonicalLP& lp, double tol = kDefaultTolerance);

/// Exchanges the basic variable of row I with the nonbasic variable of column J.
/// Throws ZeroPivotError when |alpha_IJ| <= tol.
Tableau pivot(const Tableau& t, std::size_t row, std::size_t col);

/// Rows with beta < -tol plus columns with gamma > tol.
int infeasibility_index(const Tableau& t);

/// Sign pattern of a cell: "0**" when alpha is zero, else alpha in {+,-},
/// beta in {Z,P,N}, gamma in {z,p,n}.
class CellType {
public:
    static constexpr std::size_t kCount = 19;

    static CellType zero() { return CellType{}; }
    static CellType of(int alpha_sign, int beta_sign, int gamma_sign);
    /// Parses codes such as "+Pp", "-Nz" or "0**". Accepts U+2212 for minus.
    static CellType parse(std::string_view code);

    /// Dense id in [0, 19); 0 is "0**".
    std::size_t id() const noexcept { return id_; }
    bool is_zero() const noexcept { return id_ == 0; }
    std::string code() const;

    static std::array<CellType, kCount> all();

    friend bool operator==(const CellType&, const CellType&) = default;

private:
    std::size_t id_ = 0;
};

CellType cell_type(const Tableau& t, std::size_t i, std::size_t j);

/// Length n+m string keyed to initial positions: the slot of a label in a
/// column holds the lowercase sign of its gamma, a label in a row the
/// uppercase sign of its beta.
std::string signature(const Tableau& t);

/// Values at the basic point, routed to original slots through the labels.
struct BasicSolution {
    std::vector<double> x;  ///< primal, column-origin variables (n)
    std::vector<double> y;  ///< primal slacks, row-origin variables (m)
    std::vector<double> v;  ///< dual, row-origin variables (m)
    std::vector<double> u;  ///< dual surplus, column-origin variables (n)
    double f = 0.0;
    double g = 0.0;
};

BasicSolution basic_solution(const Tableau& t);

/// Plain-text grid "alpha | beta" rows then "gamma | delta", 17 significant digits.
void write_grid(std::ostream& os, const Tableau& t);
std::string to_grid(const Tableau& t);

}  // namespace spdspds
