#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spdspds/error.hpp"
#include "spdspds/lp_model.hpp"
#include "spdspds/mps_io.hpp"
#include "spdspds/oracle.hpp"
#include "spdspds/pivot_select.hpp"
#include "spdspds/solver.hpp"
#include "spdspds/tableau.hpp"

namespace py = pybind11;
using namespace spdspds;

namespace {

using Rows = std::vector<std::vector<double>>;

Matrix to_matrix(const Rows& rows) {
    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    Matrix a(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n) throw ShapeError("ragged matrix: row " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
    }
    return a;
}

Rows to_rows(const Matrix& a) {
    Rows out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) out[i].assign(a.row(i).begin(), a.row(i).end());
    return out;
}

SolveOptions make_options(std::optional<std::size_t> max_iterations, double tol, const std::string& order,
                          bool enumerate_alternatives) {
    SolveOptions o;
    o.max_iterations = max_iterations;
    o.tol = tol;
    if (!order.empty()) o.order = SchemeOrder::parse(order);
    o.enumerate_alternatives = enumerate_alternatives;
    return o;
}

py::object optional_index(const std::optional<std::size_t>& k) {
    return k ? py::object(py::int_(*k)) : py::object(py::none());
}

py::dict report_dict(const SolveReport& r) {
    py::dict d;
    d["stop_reason"] = std::string(to_string(r.stop_reason));
    d["status_primal"] = r.terminal ? py::object(py::str(std::string(to_string(r.terminal->primal)))) : py::none();
    d["status_dual"] = r.terminal ? py::object(py::str(std::string(to_string(r.terminal->dual)))) : py::none();
    d["iterations"] = r.iterations;
    d["max_iterations"] = r.max_iterations;
    d["cycle_flag"] = r.cycle_flag;
    d["f"] = r.f ? py::object(py::float_(*r.f)) : py::none();
    d["g"] = r.g ? py::object(py::float_(*r.g)) : py::none();
    d["x"] = r.basic.x;
    d["y"] = r.basic.y;
    d["u"] = r.basic.u;
    d["v"] = r.basic.v;
    py::dict cert;
    cert["primal_ray"] = optional_index(r.certificates.ray_column);
    cert["dual_ray"] = optional_index(r.certificates.ray_row);
    cert["degenerate_primal_ray"] = optional_index(r.certificates.degenerate_ray_column);
    cert["degenerate_dual_ray"] = optional_index(r.certificates.degenerate_ray_row);
    d["certificates"] = cert;
    d["signatures"] = r.signatures;
    d["alternative_optima"] = r.alternative_optima;
    py::list records;
    for (const auto& rec : r.records) {
        records.append(py::dict(py::arg("iteration") = rec.iteration,
                                py::arg("scheme") = std::string(to_string(rec.scheme)), py::arg("row") = rec.row,
                                py::arg("col") = rec.col, py::arg("delta_ii") = rec.delta_ii,
                                py::arg("lem") = rec.lem,
                                py::arg("infeasibility_index") = rec.infeasibility_index,
                                py::arg("delta") = rec.delta_after));
    }
    d["records"] = records;
    if (r.original) {
        d["objective"] = r.original->objective;
        d["original_x"] = r.original->x;
        d["row_duals"] = r.original->row_duals;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Symmetric primal-dual simplex over Tucker's compact tableau";
    m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;

    // Translators run newest first, so the base class goes in before its children.
    const auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<MpsError>(m, "MpsError", base);
    py::register_exception<ZeroPivotError>(m, "ZeroPivotError", base);
    py::register_exception<NotTerminalError>(m, "NotTerminalError", base);
    py::register_exception<TooLargeError>(m, "TooLargeError", base);

    py::class_<Tableau>(m, "Tableau")
        .def(py::init([](const Rows& alpha, std::vector<double> beta, std::vector<double> gamma, double delta,
                         double tol) { return Tableau::from_data(to_matrix(alpha), beta, gamma, delta, tol); }),
             py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta") = 0.0,
             py::arg("tol") = kDefaultTolerance)
        .def_property_readonly("m", &Tableau::m)
        .def_property_readonly("n", &Tableau::n)
        .def_property_readonly("alpha", [](const Tableau& t) { return to_rows(t.alpha()); })
        .def_property_readonly("beta", [](const Tableau& t) { return std::vector<double>(t.beta().begin(), t.beta().end()); })
        .def_property_readonly("gamma", [](const Tableau& t) { return std::vector<double>(t.gamma().begin(), t.gamma().end()); })
        .def_property_readonly("delta", &Tableau::delta)
        .def("pivot", [](const Tableau& t, std::size_t i, std::size_t j) { return pivot(t, i, j); })
        .def("signature", [](const Tableau& t) { return signature(t); })
        .def("infeasibility_index", [](const Tableau& t) { return infeasibility_index(t); })
        .def("cell_type", [](const Tableau& t, std::size_t i, std::size_t j) { return cell_type(t, i, j).code(); })
        .def("basic_solution",
             [](const Tableau& t) {
                 const BasicSolution s = basic_solution(t);
                 return py::dict(py::arg("x") = s.x, py::arg("y") = s.y, py::arg("u") = s.u, py::arg("v") = s.v,
                                 py::arg("f") = s.f, py::arg("g") = s.g);
             })
        .def("predicted_delta_ii", [](const Tableau& t, std::size_t i, std::size_t j) { return predicted_delta_ii(t, i, j); })
        .def("simulate_delta_ii", [](const Tableau& t, std::size_t i, std::size_t j) { return simulate_delta_ii(t, i, j); })
        .def("lem", [](const Tableau& t, std::size_t i, std::size_t j) { return lem(t, i, j); })
        .def("select_pivot",
             [](const Tableau& t, bool include_zero_indicator) -> py::object {
                 const auto c = select_pivot(t, {SchemeOrder(), include_zero_indicator});
                 if (!c) return py::none();
                 return py::make_tuple(std::string(to_string(c->scheme)), c->row, c->col, c->delta_ii);
             },
             py::arg("include_zero_indicator") = false)
        .def("classify",
             [](const Tableau& t) {
                 const Classification c = classify_terminal(t);
                 return py::make_tuple(std::string(to_string(c.terminal.primal)),
                                       std::string(to_string(c.terminal.dual)));
             })
        .def("__repr__", [](const Tableau& t) { return to_grid(t); });

    m.def("solve_tableau",
          [](const Tableau& t, std::optional<std::size_t> max_iterations, double tol, const std::string& order,
             bool enumerate_alternatives) {
              const SolveReport r = solve(t, make_options(max_iterations, tol, order, enumerate_alternatives));
              py::dict d = report_dict(r);
              d["final_tableau"] = r.final_tableau;
              return d;
          },
          py::arg("tableau"), py::arg("max_iterations") = py::none(), py::arg("tol") = kDefaultTolerance,
          py::arg("strategy_order") = "", py::arg("enumerate_alternatives") = false);

    m.def("solve_dense",
          [](const Rows& a, std::vector<double> b, std::vector<double> c, std::optional<std::size_t> max_iterations,
             double tol, const std::string& order, bool enumerate_alternatives) {
              const CanonicalLP lp = CanonicalLP::from_dense(to_matrix(a), std::move(b), std::move(c));
              return report_dict(solve(lp, make_options(max_iterations, tol, order, enumerate_alternatives)));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("max_iterations") = py::none(),
          py::arg("tol") = kDefaultTolerance, py::arg("strategy_order") = "",
          py::arg("enumerate_alternatives") = false,
          "maximize c.x subject to A.x <= b, x >= 0");

    m.def("solve_mps_report",
          [](const std::filesystem::path& path, std::optional<std::size_t> max_iterations, double tol,
             const std::string& order) {
              const GeneralLP problem = read_mps_file(path);
              const CanonicalLP lp = canonicalize(problem);
              const SolveReport r = solve(lp, make_options(max_iterations, tol, order, false));
              return emit_report(r, problem, lp, ReportFormat::json);
          },
          py::arg("path"), py::arg("max_iterations") = py::none(), py::arg("tol") = kDefaultTolerance,
          py::arg("strategy_order") = "");

    m.def("parse_mps_summary",
          [](const std::string& text) {
              const GeneralLP p = parse_mps(text);
              return py::dict(py::arg("name") = p.name, py::arg("variables") = p.num_vars(),
                              py::arg("rows") = p.num_rows(),
                              py::arg("sense") = p.sense == Sense::minimize ? "min" : "max");
          },
          py::arg("text"));

    m.def("oracle_solve",
          [](const Rows& a, std::vector<double> b, std::vector<double> c) {
              const OracleVerdict v =
                  oracle_solve(CanonicalLP::from_dense(to_matrix(a), std::move(b), std::move(c)));
              py::dict d;
              d["status"] = to_string(v.status);
              d["value"] = v.status == OracleVerdict::Status::optimal ? py::object(py::float_(v.value)) : py::none();
              d["x"] = v.x;
              d["vertices"] = v.vertices;
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("c"));
}
