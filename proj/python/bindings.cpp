#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rado/certificate.hpp"
#include "rado/cnf.hpp"
#include "rado/enumerate.hpp"
#include "rado/equation.hpp"
#include "rado/solver.hpp"
#include "rado/table.hpp"

namespace py = pybind11;
using namespace rado;

namespace {

SearchParams make_params(const std::string& backend, double timeout, std::uint64_t node_limit,
                         std::int64_t cap, bool symmetry_breaking) {
  SearchParams p;
  p.backend = parse_backend(backend);
  p.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(timeout * 1000.0));
  p.node_limit = node_limit;
  p.n_cap = cap;
  p.symmetry_breaking = symmetry_breaking;
  return p;
}

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["nodes"] = s.nodes;
  d["propagations"] = s.propagations;
  d["max_depth"] = s.max_depth;
  d["elapsed_ms"] = s.elapsed_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_rado, m) {
  m.doc() = "Rado numbers of Diophantine equations by exhaustive coloring search";
  m.attr("__version__") = RADO_VERSION;

  auto base = py::register_exception<Error>(m, "RadoError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<EquationError>(m, "EquationError", base.ptr());
  py::register_exception<OverflowError>(m, "BoundOverflowError", base.ptr());
  py::register_exception<LimitError>(m, "LimitError", base.ptr());

  py::class_<Equation>(m, "Equation")
      .def_property_readonly("degree", &Equation::degree)
      .def_property_readonly("distinct_required", &Equation::distinct_required)
      .def_property_readonly("variable_count", &Equation::variable_count)
      .def_property_readonly("constrained_count", &Equation::constrained_count)
      .def_property_readonly("free_vars", &Equation::free_vars)
      .def_property_readonly("lhs", [](const Equation& e) {
        py::list out;
        for (const auto& t : e.lhs()) out.append(py::make_tuple(t.coefficient, t.variable, t.free));
        return out;
      })
      .def_property_readonly("rhs", [](const Equation& e) {
        py::list out;
        for (const auto& t : e.rhs()) out.append(py::make_tuple(t.coefficient, t.variable, t.free));
        return out;
      })
      .def("with_distinct", &Equation::with_distinct, py::arg("distinct"))
      .def("__str__", &Equation::to_string)
      .def("__repr__", [](const Equation& e) { return "Equation('" + e.to_string() + "')"; })
      .def("__eq__", [](const Equation& a, const Equation& b) { return a == b; })
      .def("__hash__", [](const Equation& e) { return py::hash(py::str(e.to_string())); });

  m.def("parse_equation", &parse_equation, py::arg("text"));
  m.def("family_equation", &family_equation, py::arg("k"));

  m.def(
      "solutions",
      [](const Equation& eq, std::int64_t n) {
        std::vector<std::vector<std::int64_t>> out;
        for (auto& s : enumerate_solutions(eq, n)) out.push_back(std::move(s.values));
        return out;
      },
      py::arg("equation"), py::arg("n"), "Every solution in [1, n], values aligned with the equation's terms.");
  m.def(
      "hyperedges",
      [](const Equation& eq, std::int64_t n, bool minimize) { return build_hyperedges(eq, n, minimize).to_vectors(); },
      py::arg("equation"), py::arg("n"), py::arg("minimize") = true);
  m.def(
      "dp_feasible",
      [](const Equation& eq, const std::vector<std::int64_t>& cls, std::int64_t pivot) {
        return dp_feasible(eq, cls, pivot);
      },
      py::arg("equation"), py::arg("class_values"), py::arg("pivot"));

  m.def(
      "find_coloring",
      [](const Equation& eq, std::int64_t n, int r, const std::string& backend, double timeout,
         std::uint64_t node_limit, bool symmetry_breaking) {
        SearchOutcome out;
        {
          py::gil_scoped_release release;
          out = find_coloring(eq, n, r, make_params(backend, timeout, node_limit, 10'000, symmetry_breaking));
        }
        py::dict d;
        d["verdict"] = to_string(out.verdict);
        d["backend"] = to_string(out.backend);
        d["coloring"] = out.coloring ? py::cast(out.coloring->colors) : py::none();
        d["stats"] = stats_dict(out.stats);
        return d;
      },
      py::arg("equation"), py::arg("n"), py::arg("r"), py::arg("backend") = "auto", py::arg("timeout") = 600.0,
      py::arg("node_limit") = 0, py::arg("symmetry_breaking") = true);

  m.def(
      "compute_rado",
      [](const Equation& eq, int r, std::int64_t cap, double timeout, const std::string& backend) {
        RadoOutcome out;
        {
          py::gil_scoped_release release;
          out = compute_rado(eq, r, make_params(backend, timeout, 0, cap, true));
        }
        py::dict d;
        d["result"] = out.kind == RadoOutcome::Kind::Exact ? "exact" : "lower-bound";
        d["value"] = out.value;
        d["witness"] = out.witness.colors;
        d["backend"] = to_string(out.backend);
        d["stats"] = stats_dict(out.total);
        return d;
      },
      py::arg("equation"), py::arg("r"), py::arg("cap") = 10'000, py::arg("timeout") = 600.0,
      py::arg("backend") = "auto");

  m.def("oracle_colorable", &oracle_colorable, py::arg("equation"), py::arg("n"), py::arg("r"));

  m.def(
      "export_cnf",
      [](const Equation& eq, std::int64_t n, int r, bool direct) {
        const auto enc = direct ? Encoding::Direct : default_encoding(r);
        return write_dimacs(export_cnf(build_hyperedges(eq, n, true), r, enc, eq.to_string()));
      },
      py::arg("equation"), py::arg("n"), py::arg("r"), py::arg("direct") = false, "DIMACS text of the instance.");

  m.def(
      "model_to_certificate",
      [](const std::string& dimacs, const std::string& model_text) {
        const auto meta = read_cnf_meta(dimacs);
        const auto eq = parse_equation(meta.equation);
        const auto edges = build_hyperedges(eq, meta.n, true);
        const auto cert = make_certificate(eq, import_model(parse_model(model_text), meta, &edges), "colorable");
        const auto check = verify(cert);
        if (check.status != VerifyResult::Status::Valid) {
          throw Error("model does not satisfy the instance: " + check.reason);
        }
        return write_certificate(cert);
      },
      py::arg("dimacs"), py::arg("model"), "Certificate text from a solver model for an exported instance.");

  m.def(
      "write_certificate",
      [](const Equation& eq, const std::vector<int>& colors, int r, std::optional<std::string> claim) {
        return write_certificate(make_certificate(eq, Coloring{r, colors}, std::move(claim)));
      },
      py::arg("equation"), py::arg("colors"), py::arg("r"), py::arg("claim") = py::none());

  m.def(
      "verify_certificate",
      [](const std::string& text) {
        const auto v = verify_text(text);
        return py::make_tuple(to_string(v.status), v.reason);
      },
      py::arg("text"), "Returns (status, reason) with status valid, invalid or malformed.");

  m.def(
      "table",
      [](int min_k, int max_k, int r, int jobs, double timeout_per_k, std::int64_t cap) {
        TableOptions opt;
        opt.min_k = min_k;
        opt.max_k = max_k;
        opt.r = r;
        opt.jobs = jobs;
        opt.params = make_params("auto", timeout_per_k, 0, cap, true);
        std::vector<TableRow> rows;
        {
          py::gil_scoped_release release;
          rows = run_table(opt);
        }
        py::list out;
        for (const auto& row : rows) {
          py::dict d;
          d["k"] = row.k;
          d["result"] = row.kind == RadoOutcome::Kind::Exact ? "exact" : "lower-bound";
          d["value"] = row.value;
          d["backend"] = to_string(row.backend);
          d["nodes"] = row.nodes;
          out.append(d);
        }
        return out;
      },
      py::arg("min_k"), py::arg("max_k"), py::arg("r") = 2, py::arg("jobs") = 1, py::arg("timeout_per_k") = 600.0,
      py::arg("cap") = 10'000);
}
