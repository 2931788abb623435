#include "spdspds/lp_model.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "spdspds/error.hpp"

namespace spdspds {

namespace {

// Entries of the aggregated equality row whose magnitude is below this
// fraction of the summed magnitudes are cancellation residue.
constexpr double kCancellation = 1e-12;

/// Sums values and snaps results dominated by cancellation to zero.
class CancellingSum {
public:
    void add(double v) {
        sum_ += v;
        magnitude_ += std::fabs(v);
    }
    double value() const {
        if (std::fabs(static_cast<double>(sum_)) <= kCancellation * static_cast<double>(magnitude_)) {
            return 0.0;
        }
        return static_cast<double>(sum_);
    }

private:
    long double sum_ = 0.0L;
    long double magnitude_ = 0.0L;
};

struct Interval {
    double lower;
    double upper;
};

// Row activity interval implied by relation, rhs and optional range.
Interval row_interval(const Constraint& row) {
    const double b = row.rhs;
    if (!row.range) {
        switch (row.relation) {
            case Relation::less_equal: return {-kInfinity, b};
            case Relation::greater_equal: return {b, kInfinity};
            case Relation::equal: return {b, b};
        }
    }
    const double r = *row.range;
    switch (row.relation) {
        case Relation::less_equal: return {b - std::fabs(r), b};
        case Relation::greater_equal: return {b, b + std::fabs(r)};
        case Relation::equal: return r >= 0.0 ? Interval{b, b + r} : Interval{b + r, b};
    }
    return {-kInfinity, kInfinity};
}

}  // namespace

std::size_t GeneralLP::add_variable(std::string var_name, Bound bound) {
    var_names.push_back(std::move(var_name));
    bounds.push_back(bound);
    return var_names.size() - 1;
}

void GeneralLP::validate() const {
    const std::size_t n = var_names.size();
    if (bounds.size() != n) {
        throw ModelError("bounds size " + std::to_string(bounds.size()) +
                         " does not match variable count " + std::to_string(n));
    }
    for (const auto& [j, coef] : objective) {
        if (j >= n) {
            throw ModelError("objective references undeclared variable " + std::to_string(j));
        }
        if (!std::isfinite(coef)) {
            throw ModelError("objective coefficient of '" + var_names[j] + "' is not finite");
        }
    }
    for (const auto& row : rows) {
        for (const auto& [j, coef] : row.coefficients) {
            if (j >= n) {
                throw ModelError("row '" + row.name + "' references undeclared variable " +
                                 std::to_string(j));
            }
            if (!std::isfinite(coef)) {
                throw ModelError("row '" + row.name + "' has a non-finite coefficient");
            }
        }
        if (!std::isfinite(row.rhs)) {
            throw ModelError("row '" + row.name + "' has a non-finite right-hand side");
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Bound& bd = bounds[j];
        if (std::isnan(bd.lower) || std::isnan(bd.upper) || bd.lower == kInfinity ||
            bd.upper == -kInfinity) {
            throw ModelError("variable '" + var_names[j] + "' has an invalid bound");
        }
        if (bd.lower > bd.upper) {
            throw InfeasibleBoundsError(var_names[j], bd.lower, bd.upper);
        }
    }
}

bool TransformRecord::is_identity() const {
    if (objective_sign_flip || objective_constant != 0.0 || shared_shift_column ||
        !equality_rows.empty() || !fixed_variables.empty()) {
        return false;
    }
    for (std::size_t j = 0; j < variables.size(); ++j) {
        if (variables[j].kind != VariableMap::Kind::direct || variables[j].column != j) {
            return false;
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].kind != RowOrigin::Kind::direct || rows[i].source != i || rows[i].sign != 1.0) {
            return false;
        }
    }
    return rows.size() == original_rows;
}

CanonicalLP CanonicalLP::from_dense(Matrix a, std::vector<double> b, std::vector<double> c) {
    if (a.rows() != b.size() || a.cols() != c.size()) {
        throw ShapeError("canonical LP dimensions disagree: A is " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + ", b has " + std::to_string(b.size()) +
                         ", c has " + std::to_string(c.size()));
    }
    CanonicalLP lp;
    lp.transform.original_rows = a.rows();
    lp.transform.columns = a.cols();
    for (std::size_t j = 0; j < a.cols(); ++j) {
        lp.transform.variables.push_back({VariableMap::Kind::direct, j, 0.0});
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        lp.transform.rows.push_back({RowOrigin::Kind::direct, i, 1.0});
    }
    lp.a = std::move(a);
    lp.b = std::move(b);
    lp.c = std::move(c);
    return lp;
}

CanonicalLP canonicalize(const GeneralLP& problem) {
    problem.validate();
    const std::size_t n = problem.num_vars();

    TransformRecord tr;
    tr.objective_sign_flip = problem.sense == Sense::minimize;
    tr.original_rows = problem.num_rows();
    const double sense_sign = tr.objective_sign_flip ? -1.0 : 1.0;

    // Columns: one per original variable, then the shared shift t.
    tr.variables.resize(n);
    bool any_free = false;
    for (std::size_t j = 0; j < n; ++j) {
        const Bound& bd = problem.bounds[j];
        VariableMap& vm = tr.variables[j];
        vm.column = j;
        if (bd.lower == -kInfinity) {
            vm.kind = VariableMap::Kind::free_split;
            any_free = true;
        } else if (bd.lower != 0.0) {
            vm.kind = VariableMap::Kind::shifted;
            vm.shift = bd.lower;
        }
    }
    const std::size_t ncols = n + (any_free ? 1 : 0);
    if (any_free) {
        tr.shared_shift_column = n;
    }
    tr.columns = ncols;

    // Dense canonical coefficients of one original row, and its rhs shift.
    auto substitute = [&](const SparseVector& coefs, std::vector<double>& dense) {
        dense.assign(ncols, 0.0);
        CancellingSum t_coef;
        double shift = 0.0;
        for (const auto& [j, a] : coefs) {
            const VariableMap& vm = tr.variables[j];
            dense[vm.column] += a;
            if (vm.kind == VariableMap::Kind::shifted) {
                shift += a * vm.shift;
            } else if (vm.kind == VariableMap::Kind::free_split) {
                t_coef.add(-a);
            }
        }
        if (any_free) {
            dense[*tr.shared_shift_column] = t_coef.value();
        }
        return shift;
    };

    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<std::vector<double>> eq_rows;
    std::vector<double> eq_rhs;

    auto push = [&](std::vector<double> coefs, double b, RowOrigin origin) {
        rows.push_back(std::move(coefs));
        rhs.push_back(b);
        tr.rows.push_back(origin);
    };
    auto negated = [](std::vector<double> v) {
        for (double& x : v) {
            x = -x;
        }
        return v;
    };

    std::vector<double> dense;
    for (std::size_t i = 0; i < problem.num_rows(); ++i) {
        const Constraint& row = problem.rows[i];
        const double shift = substitute(row.coefficients, dense);
        const Interval iv = row_interval(row);
        if (iv.lower == iv.upper) {
            tr.equality_rows.push_back(i);
            eq_rows.push_back(dense);
            eq_rhs.push_back(iv.upper - shift);
            push(dense, iv.upper - shift, {RowOrigin::Kind::equality_half, i, 1.0});
            continue;
        }
        const bool ranged = std::isfinite(iv.lower) && std::isfinite(iv.upper);
        const auto kind = ranged ? RowOrigin::Kind::range_half : RowOrigin::Kind::direct;
        if (std::isfinite(iv.upper)) {
            push(dense, iv.upper - shift, {kind, i, 1.0});
        }
        if (std::isfinite(iv.lower)) {
            push(negated(dense), -(iv.lower - shift), {kind, i, -1.0});
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        const Bound& bd = problem.bounds[j];
        if (!std::isfinite(bd.upper)) {
            continue;
        }
        const VariableMap& vm = tr.variables[j];
        std::vector<double> coefs(ncols, 0.0);
        coefs[vm.column] = 1.0;
        if (bd.lower == bd.upper) {
            tr.fixed_variables.push_back(j);
            eq_rows.push_back(coefs);
            eq_rhs.push_back(0.0);
            push(std::move(coefs), 0.0, {RowOrigin::Kind::fixed_bound, j, 1.0});
            continue;
        }
        if (vm.kind == VariableMap::Kind::free_split) {
            coefs[*tr.shared_shift_column] = -1.0;
            push(std::move(coefs), bd.upper, {RowOrigin::Kind::upper_bound, j, 1.0});
        } else {
            push(std::move(coefs), bd.upper - bd.lower, {RowOrigin::Kind::upper_bound, j, 1.0});
        }
    }

    if (!eq_rows.empty()) {
        std::vector<double> agg(ncols, 0.0);
        for (std::size_t j = 0; j < ncols; ++j) {
            CancellingSum s;
            for (const auto& r : eq_rows) {
                s.add(r[j]);
            }
            agg[j] = -s.value();
        }
        CancellingSum sb;
        for (double b : eq_rhs) {
            sb.add(b);
        }
        push(std::move(agg), -sb.value(), {RowOrigin::Kind::aggregated_equality, 0, -1.0});
    }

    CanonicalLP lp;
    lp.a = Matrix(rows.size(), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::copy(rows[i].begin(), rows[i].end(), lp.a.row(i).begin());
    }
    lp.b = std::move(rhs);
    lp.c.assign(ncols, 0.0);
    CancellingSum t_obj;
    double constant = problem.objective_offset;
    for (const auto& [j, cj] : problem.objective) {
        const VariableMap& vm = tr.variables[j];
        lp.c[vm.column] += sense_sign * cj;
        if (vm.kind == VariableMap::Kind::shifted) {
            constant += cj * vm.shift;
        } else if (vm.kind == VariableMap::Kind::free_split) {
            t_obj.add(-sense_sign * cj);
        }
    }
    if (any_free) {
        lp.c[*tr.shared_shift_column] = t_obj.value();
    }
    tr.objective_constant = constant;
    lp.transform = std::move(tr);
    return lp;
}

OriginalSolution map_back(const CanonicalSolution& solution, const TransformRecord& transform) {
    if (solution.x.size() != transform.columns) {
        throw ShapeError("primal solution has " + std::to_string(solution.x.size()) +
                         " entries, transform expects " + std::to_string(transform.columns));
    }
    if (!solution.v.empty() && solution.v.size() != transform.rows.size()) {
        throw ShapeError("dual solution has " + std::to_string(solution.v.size()) +
                         " entries, transform expects " + std::to_string(transform.rows.size()));
    }

    OriginalSolution out;
    const double t = transform.shared_shift_column ? solution.x[*transform.shared_shift_column] : 0.0;
    out.x.reserve(transform.variables.size());
    for (const VariableMap& vm : transform.variables) {
        const double xv = solution.x[vm.column];
        switch (vm.kind) {
            case VariableMap::Kind::direct: out.x.push_back(xv); break;
            case VariableMap::Kind::shifted: out.x.push_back(xv + vm.shift); break;
            case VariableMap::Kind::free_split: out.x.push_back(xv - t); break;
        }
    }

    const double sense_sign = transform.objective_sign_flip ? -1.0 : 1.0;
    out.objective = sense_sign * solution.objective + transform.objective_constant;

    out.row_duals.assign(transform.original_rows, 0.0);
    if (!solution.v.empty()) {
        double aggregated = 0.0;
        for (std::size_t k = 0; k < transform.rows.size(); ++k) {
            const RowOrigin& ro = transform.rows[k];
            switch (ro.kind) {
                case RowOrigin::Kind::direct:
                case RowOrigin::Kind::range_half:
                case RowOrigin::Kind::equality_half:
                    out.row_duals[ro.source] += ro.sign * solution.v[k];
                    break;
                case RowOrigin::Kind::aggregated_equality: aggregated = solution.v[k]; break;
                case RowOrigin::Kind::upper_bound:
                case RowOrigin::Kind::fixed_bound: break;
            }
        }
        for (std::size_t i : transform.equality_rows) {
            out.row_duals[i] -= aggregated;
        }
        for (double& d : out.row_duals) {
            d *= sense_sign;
        }
    }
    return out;
}

double evaluate_objective(const GeneralLP& problem, std::span<const double> x) {
    double f = problem.objective_offset;
    for (const auto& [j, cj] : problem.objective) {
        f += cj * x[j];
    }
    return f;
}

double max_violation(const GeneralLP& problem, std::span<const double> x) {
    if (x.size() != problem.num_vars()) {
        throw ShapeError("point has " + std::to_string(x.size()) + " entries, problem has " +
                         std::to_string(problem.num_vars()) + " variables");
    }
    double worst = 0.0;
    for (const auto& row : problem.rows) {
        double activity = 0.0;
        for (const auto& [j, a] : row.coefficients) {
            activity += a * x[j];
        }
        const Interval iv = row_interval(row);
        worst = std::max({worst, iv.lower - activity, activity - iv.upper});
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        worst = std::max({worst, problem.bounds[j].lower - x[j], x[j] - problem.bounds[j].upper});
    }
    return worst;
}

}  // namespace spdspds
