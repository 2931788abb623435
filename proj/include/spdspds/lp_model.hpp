#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spdspds/matrix.hpp"

namespace spdspds {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { minimize, maximize };
enum class Relation { less_equal, greater_equal, equal };

/// Sparse coefficient map keyed by variable index. Ordered for deterministic iteration.
using SparseVector = std::map<std::size_t, double>;

struct Bound {
    double lower = 0.0;
    double upper = kInfinity;

    bool is_free() const noexcept { return lower == -kInfinity && upper == kInfinity; }
    bool is_fixed() const noexcept { return lower == upper; }
};

struct Constraint {
    std::string name;
    Relation relation = Relation::less_equal;
    SparseVector coefficients;
    double rhs = 0.0;
    /// MPS-style range: turns the row into an interval (see canonicalize).
    std::optional<double> range;
};

/// A user-level LP: any objective sense, row relations, ranges and variable bounds.
struct GeneralLP {
    std::string name;
    Sense sense = Sense::minimize;
    std::vector<std::string> var_names;
    SparseVector objective;
    /// Constant added to the objective value (MPS: negated RHS of the objective row).
    double objective_offset = 0.0;
    std::vector<Constraint> rows;
    std::vector<Bound> bounds;

    std::size_t num_vars() const noexcept { return var_names.size(); }
    std::size_t num_rows() const noexcept { return rows.size(); }

    /// Adds a variable with the default [0, +inf) bound and returns its index.
    std::size_t add_variable(std::string var_name, Bound bound = {});

    /// Throws ModelError on undeclared references or size mismatches and
    /// InfeasibleBoundsError when lower > upper.
    void validate() const;
};

/// How an original variable is recovered from canonical columns.
struct VariableMap {
    enum class Kind {
        direct,      ///< x = x'[column]
        shifted,     ///< x = x'[column] + shift
        free_split,  ///< x = x'[column] - t, t the shared shift column
    };
    Kind kind = Kind::direct;
    std::size_t column = 0;
    double shift = 0.0;
};

/// Where a canonical row came from.
struct RowOrigin {
    enum class Kind {
        direct,               ///< original inequality row, multiplied by sign
        range_half,           ///< one side of a ranged row, multiplied by sign
        equality_half,        ///< a_i.x <= b_i taken from an equality row
        aggregated_equality,  ///< -sum(a_i).x <= -sum(b_i) over all equalities
        upper_bound,          ///< x'_j (- t) <= u - l for variable source
        fixed_bound,          ///< x'_j <= 0 pinning a fixed variable (an equality)
    };
    Kind kind = Kind::direct;
    std::size_t source = 0;
    double sign = 1.0;
};

/// Everything needed to map a canonical solution back to the original problem.
struct TransformRecord {
    bool objective_sign_flip = false;
    /// Original-sense objective constant (shifts and the model offset).
    double objective_constant = 0.0;
    std::vector<VariableMap> variables;
    std::vector<RowOrigin> rows;
    std::optional<std::size_t> shared_shift_column;
    std::size_t original_rows = 0;
    std::size_t columns = 0;
    /// Original equality rows folded into the aggregated row.
    std::vector<std::size_t> equality_rows;
    /// Fixed variables, pinned by a fixed_bound row and also folded into the aggregate.
    std::vector<std::size_t> fixed_variables;

    bool is_identity() const;
};

/// maximize c.x  s.t.  A.x <= b, x >= 0.
struct CanonicalLP {
    Matrix a;
    std::vector<double> b;
    std::vector<double> c;
    TransformRecord transform;

    std::size_t m() const noexcept { return a.rows(); }
    std::size_t n() const noexcept { return a.cols(); }

    /// Wraps raw data with an identity transform. Throws ShapeError on mismatch.
    static CanonicalLP from_dense(Matrix a, std::vector<double> b, std::vector<double> c);
};

CanonicalLP canonicalize(const GeneralLP& problem);

/// Canonical-space solution values: x (n), row duals v (m) and f = c.x.
struct CanonicalSolution {
    std::vector<double> x;
    std::vector<double> v;
    double objective = 0.0;
};

struct OriginalSolution {
    std::vector<double> x;
    /// One dual value per original row, in the original objective sense.
    std::vector<double> row_duals;
    double objective = 0.0;
};

/// Throws ShapeError when the solution does not fit the transform.
OriginalSolution map_back(const CanonicalSolution& solution, const TransformRecord& transform);

/// Evaluates the original objective at x (including the offset).
double evaluate_objective(const GeneralLP& problem, std::span<const double> x);

/// Largest violation of rows and bounds of the original problem at x.
double max_violation(const GeneralLP& problem, std::span<const double> x);

}  // namespace spdspds
