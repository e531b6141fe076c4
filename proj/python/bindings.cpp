#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symlap/bounds.hpp"
#include "symlap/entropy.hpp"
#include "symlap/error.hpp"
#include "symlap/graph.hpp"
#include "symlap/laplacian.hpp"
#include "symlap/qstate.hpp"
#include "symlap/report.hpp"

namespace py = pybind11;
using namespace symlap;

namespace {

py::array_t<double> to_numpy(const Matrix& a) {
  py::array_t<double> out({a.rows(), a.cols()});
  auto view = out.mutable_unchecked<2>();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) view(i, j) = a(i, j);
  return out;
}

py::array_t<double> to_numpy(const SymMatrix& a) { return to_numpy(a.to_matrix()); }

SymMatrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
  const auto view = a.unchecked<2>();
  Matrix m(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = view(i, j);
  return SymMatrix::from_matrix(m, 1e-12);
}

LogBase parse_base(const std::string& b) {
  if (b == "e") return LogBase::e;
  if (b == "2") return LogBase::two;
  throw ParseError("base must be \"e\" or \"2\", got \"" + b + "\"");
}

py::dict check_dict(const BoundCheck& c) {
  py::dict d;
  d["name"] = c.name;
  d["lhs"] = c.lhs;
  d["rhs"] = c.rhs;
  d["margin"] = c.margin;
  d["strict"] = c.strict;
  d["holds"] = c.holds;
  d["boundary"] = c.boundary;
  return d;
}

py::list report_list(const BoundReport& r) {
  py::list out;
  for (const auto& c : r.checks) out.append(check_dict(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_symlap, m) {
  m.doc() = "Symmetric-Laplacian density matrices, entropies and bound checks.";
  m.attr("__version__") = "0.1.0";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<RangeError>(m, "RangeError", error.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<SpectrumError>(m, "SpectrumError", error.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());
  py::register_exception<IdentityError>(m, "IdentityError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (const auto& [u, v] : edges) es.push_back({u, v});
             return Graph(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_bitmask", &Graph::from_bitmask, py::arg("n"), py::arg("mask"))
      .def_static("from_edge_list", [](const std::string& text) { return from_edge_list(text); })
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def_property_readonly("degrees", &Graph::degrees)
      .def_property_readonly("bitmask", &Graph::bitmask)
      .def("has_edge", &Graph::has_edge)
      .def("neighbors", &Graph::neighbors)
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("is_bipartite", [](const Graph& g) { return is_bipartite(g); })
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("complete", &complete, py::arg("n"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("a"), py::arg("b"));
  m.def("star", &star, py::arg("n"));
  m.def("cycle", &cycle, py::arg("n"));
  m.def("enumerate_connected", &enumerate_connected, py::arg("n"));

  m.def("combinatorial_laplacian", [](const Graph& g) { return to_numpy(combinatorial(g)); });
  m.def("positive_laplacian", [](const Graph& g) { return to_numpy(positive(g)); });
  m.def("symmetric_laplacian", [](const Graph& g) { return to_numpy(symmetric(g)); });
  m.def("positive_symmetric_laplacian", [](const Graph& g) { return to_numpy(positive_symmetric(g)); });
  m.def("incidence", [](const Graph& g) { return to_numpy(incidence(g).m_matrix); });
  m.def("doubled_incidence", [](const Graph& g) { return to_numpy(doubled_incidence(g).s_bar); });

  m.def(
      "eigenvalues",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, double tol) {
        return jacobi_eigen(from_numpy(a), tol).values;
      },
      py::arg("matrix"), py::arg("tol") = kDefaultEigenTol);

  m.def("psi", [](const Graph& g) {
    const PureState s = psi(g);
    return py::array_t<double>(static_cast<py::ssize_t>(s.amplitudes.size()), s.amplitudes.data());
  });
  m.def("rho_v", [](const Graph& g) { return to_numpy(rho_v(g).matrix()); });
  m.def("rho_e", [](const Graph& g) { return to_numpy(rho_e(g).matrix()); });
  m.def("spectrum", [](const Graph& g) { return rho_v(g).spectrum().values; });

  m.def("verify_lemma1", [](const Graph& g) {
    const Lemma1Report r = verify_lemma1(g);
    py::dict d;
    d["trE_matches"] = r.trE_matches;
    d["trE_residual"] = r.trE_residual;
    d["trV_spectrum"] = r.trV_spectrum;
    d["lplus_spectrum"] = r.lplus_spectrum;
    d["trV_isospectral"] = r.trV_isospectral;
    d["schmidt_gap"] = r.schmidt_gap;
    d["entropy_gap"] = r.entropy_gap;
    return d;
  });

  m.def(
      "von_neumann", [](const Graph& g, const std::string& base) { return von_neumann(rho_v(g), parse_base(base)); },
      py::arg("graph"), py::arg("base") = "e");
  m.def(
      "renyi",
      [](const Graph& g, double p, const std::string& base) { return renyi(rho_v(g), p, parse_base(base)); },
      py::arg("graph"), py::arg("p"), py::arg("base") = "e");
  m.def(
      "renyi_of",
      [](const std::vector<double>& probs, double p, const std::string& base) {
        return renyi(ProbabilityVector(probs), p, parse_base(base));
      },
      py::arg("probabilities"), py::arg("p"), py::arg("base") = "e");
  m.def(
      "structural", [](const Graph& g, const std::string& base) { return structural(g, parse_base(base)); },
      py::arg("graph"), py::arg("base") = "e");
  m.def("majorizes", [](const std::vector<double>& a, const std::vector<double>& b) {
    return majorizes(ProbabilityVector(a), ProbabilityVector(b));
  });

  py::enum_<ClosedForm>(m, "ClosedForm")
      .value("complete_vn", ClosedForm::complete_vn)
      .value("regular_renyi2", ClosedForm::regular_renyi2)
      .value("bipartite_vn", ClosedForm::bipartite_vn)
      .value("bipartite_renyi2", ClosedForm::bipartite_renyi2);
  m.def("closed_form", &closed_form, py::arg("form"), py::arg("n"), py::arg("k") = 0);

  m.def("theorem1_check", [](const Graph& g, const std::vector<double>& grid) {
    return report_list(theorem1_check(g, grid));
  }, py::arg("graph"), py::arg("p_grid") = std::vector<double>{1.0, 2.0, 3.0});
  m.def("theorem2_check", [](const Graph& g) { return report_list(theorem2_check(g)); });
  m.def("lemma5_check", [](const Graph& g) { return report_list(lemma5_check(g)); });
  m.def("lemma6_check", [](const Graph& g) {
    const Lemma6Report r = lemma6_check(g);
    py::list vertices;
    for (const auto& v : r.vertices) {
      py::dict d;
      d["vertex"] = v.vertex;
      d["lhs"] = v.lhs;
      d["rhs"] = v.rhs;
      d["holds"] = v.holds;
      vertices.append(d);
    }
    py::dict d;
    d["vertices"] = vertices;
    d["aggregate_lhs"] = r.aggregate_lhs;
    d["aggregate_rhs"] = r.aggregate_rhs;
    d["aggregate_holds"] = r.aggregate_holds;
    return d;
  });
  m.def("star_comparison", [](int n) {
    const StarComparison c = star_comparison(n);
    py::dict d;
    d["n"] = c.n;
    d["star_vn"] = c.star_vn_eigen;
    d["cycle_vn"] = c.cycle_vn;
    d["cycle_below_star"] = check_dict(c.cycle_below_star);
    d["bipartite_renyi2"] = c.bipartite_renyi2;
    d["cycle_renyi2"] = c.cycle_renyi2;
    d["bipartite_above_cycle"] = check_dict(c.bipartite_above_cycle);
    d["gap_to_max"] = c.gap_to_max;
    return d;
  });

  m.def(
      "scan",
      [](int n, const std::vector<double>& grid, int threads, bool allow_large, const std::string& base) {
        ScanOptions opts;
        opts.p_grid = grid;
        opts.threads = threads;
        opts.allow_large = allow_large;
        ScanResult r;
        {
          py::gil_scoped_release release;
          r = scan(n, opts);
        }
        return render_scan(r, Format::json, parse_base(base));
      },
      py::arg("n"), py::arg("p_grid") = std::vector<double>{1.0, 2.0, 3.0}, py::arg("threads") = 1,
      py::arg("allow_large") = false, py::arg("base") = "e",
      "Exhaustive scan; returns the JSON report as a string.");
}
