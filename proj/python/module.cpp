// Python bindings. Matrices cross the boundary as complex128 numpy arrays;
// structured results come back as dicts built from the library's JSON
// encodings so that Python and the CLI report identical fields.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pptedge/analysis.hpp"
#include "pptedge/errors.hpp"

namespace py = pybind11;
using namespace pptedge;

namespace {

SeeSawConfig make_config(int restarts, int max_iter, double conv_tol, std::uint64_t seed) {
  SeeSawConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iter = max_iter;
  cfg.conv_tol = conv_tol;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

BipartiteOperator as_operator(const ComplexMatrix& m, int dim_a, int dim_b) {
  return BipartiteOperator(dim_a, dim_b, m);
}

#define PPTEDGE_OPT_ARGS                                                                   \
  py::arg("restarts") = 200, py::arg("max_iter") = 500, py::arg("conv_tol") = 1e-12,   \
      py::arg("seed") = 42

}  // namespace

PYBIND11_MODULE(_pptedge, m) {
  m.doc() = "PPT edge states: catalog, criteria, witnesses and see-saw optimizers";
  m.attr("__version__") = PPTEDGE_VERSION;

  py::register_exception<InapplicableError>(m, "InapplicableError", PyExc_ValueError);
  py::register_exception<InvalidStateError>(m, "InvalidStateError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<NotPsdError>(m, "NotPsdError", PyExc_ValueError);
  py::register_exception<LookupError>(m, "LookupError", PyExc_KeyError);

  // Catalog.
  m.def("catalog_names", &catalog_names);
  m.def(
      "catalog_state", [](const std::string& name) { return catalog_entry(name).state.matrix(); },
      py::arg("name"), "Density matrix of a catalog entry (9x9 complex).");
  m.def(
      "catalog_info",
      [](const std::string& name) {
        const CatalogEntry e = catalog_entry(name);
        py::dict d;
        d["name"] = e.name;
        d["description"] = e.description;
        d["dims"] = py::make_tuple(e.state.dim_a(), e.state.dim_b());
        d["denominator"] = e.denominator;
        d["expected_rank"] = e.expected_rank;
        d["expected_pt_rank"] = e.expected_pt_rank;
        d["expected_ppt"] = e.expected_ppt;
        d["exact"] = e.exact_numerator.has_value();
        return d;
      },
      py::arg("name"));
  m.def(
      "exact_ranks",
      [](const std::string& name) {
        const CatalogEntry e = catalog_entry(name);
        if (!e.exact_numerator) throw InapplicableError("'" + name + "' has no exact form");
        return py::make_tuple(exact_rank(*e.exact_numerator), exact_rank(*e.exact_pt_numerator()));
      },
      py::arg("name"), "(rank, PT rank) of the exact numerator, over the rationals.");

  // Linear algebra and index maps.
  m.def(
      "exact_rank",
      [](const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& a) {
        std::vector<std::int64_t> entries;
        for (Eigen::Index r = 0; r < a.rows(); ++r)
          for (Eigen::Index c = 0; c < a.cols(); ++c) entries.push_back(a(r, c));
        return exact_rank(RationalMatrix::from_integers(static_cast<std::size_t>(a.rows()),
                                                        static_cast<std::size_t>(a.cols()),
                                                        entries));
      },
      py::arg("matrix"));
  m.def(
      "numeric_rank", [](const ComplexMatrix& a, double tol) { return numeric_rank(a, tol); },
      py::arg("matrix"), py::arg("rel_tol") = kDefaultRankTol);
  m.def("trace_norm", &trace_norm, py::arg("matrix"));
  m.def(
      "partial_transpose",
      [](const ComplexMatrix& a, int dim_a, int dim_b) { return partial_transpose(a, dim_a, dim_b); },
      py::arg("matrix"), py::arg("dim_a"), py::arg("dim_b"));
  m.def(
      "realign", [](const ComplexMatrix& a, int dim) { return realign(a, dim); }, py::arg("matrix"),
      py::arg("dim"));
  m.def("schmidt_coefficients", &schmidt_coefficients, py::arg("vector"), py::arg("dim_a"),
        py::arg("dim_b"));

  // Criteria.
  m.def(
      "is_ppt",
      [](const ComplexMatrix& rho, int da, int db, double tol) {
        return to_python(to_json(is_ppt(as_operator(rho, da, db), tol)));
      },
      py::arg("rho"), py::arg("dim_a") = 3, py::arg("dim_b") = 3, py::arg("tol") = 1e-12);
  m.def(
      "realignment_criterion",
      [](const ComplexMatrix& rho, int dim, double margin) {
        return to_python(to_json(realignment_criterion(as_operator(rho, dim, dim), margin)));
      },
      py::arg("rho"), py::arg("dim") = 3, py::arg("margin") = 1e-9);
  m.def(
      "certify_edge",
      [](const std::string& input, int restarts, int max_iter, double conv_tol,
         std::uint64_t seed) {
        const CatalogEntry e = load_input(input);
        return to_python(to_json(certify_edge(e.state, e.name, RangeProjectors::from_entry(e),
                                              make_config(restarts, max_iter, conv_tol, seed))));
      },
      py::arg("input"), PPTEDGE_OPT_ARGS,
      "Edge certificate for a catalog name or matrix file path.");

  // Optimizers.
  m.def(
      "min_product_expectation",
      [](const ComplexMatrix& h, int da, int db, int restarts, int max_iter, double conv_tol,
         std::uint64_t seed) {
        return to_python(to_json(min_product_expectation(
            as_operator(h, da, db), make_config(restarts, max_iter, conv_tol, seed))));
      },
      py::arg("h"), py::arg("dim_a"), py::arg("dim_b"), PPTEDGE_OPT_ARGS);
  m.def(
      "min_schmidt2_expectation",
      [](const ComplexMatrix& h, int da, int db, int restarts, int max_iter, double conv_tol,
         std::uint64_t seed) {
        return to_python(to_json(min_schmidt2_expectation(
            as_operator(h, da, db), make_config(restarts, max_iter, conv_tol, seed))));
      },
      py::arg("h"), py::arg("dim_a"), py::arg("dim_b"), PPTEDGE_OPT_ARGS);

  // Witnesses.
  py::class_<Witness>(m, "Witness")
      .def_property_readonly("matrix", [](const Witness& w) { return w.op.matrix(); })
      .def_property_readonly("dims",
                             [](const Witness& w) {
                               return py::make_tuple(w.op.dim_a(), w.op.dim_b());
                             })
      .def_property_readonly("method", [](const Witness& w) { return to_string(w.method); })
      .def_property_readonly("base_method",
                             [](const Witness& w) -> std::optional<std::string> {
                               if (!w.base_method) return std::nullopt;
                               return to_string(*w.base_method);
                             })
      .def_readonly("epsilon", &Witness::epsilon)
      .def_readonly("normalization", &Witness::normalization)
      .def_readonly("source", &Witness::source)
      .def("__repr__", [](const Witness& w) {
        return "<Witness " + std::string(to_string(w.method)) + " for '" + w.source + "'>";
      });

  m.def(
      "kernel_witness",
      [](const std::string& input, int restarts, int max_iter, double conv_tol,
         std::uint64_t seed) {
        const CatalogEntry e = load_input(input);
        const SeeSawConfig cfg = make_config(restarts, max_iter, conv_tol, seed);
        return e.range_basis.empty() ? kernel_witness(e.state, e.name, cfg)
                                     : kernel_witness(e, cfg);
      },
      py::arg("input"), PPTEDGE_OPT_ARGS);
  m.def(
      "realignment_witness",
      [](const std::string& input) {
        const CatalogEntry e = load_input(input);
        return realignment_witness(e.state, e.name);
      },
      py::arg("input"));
  m.def(
      "shift_witness",
      [](const Witness& w, const std::string& input, double eps) {
        return shift_witness(w, load_input(input).state, eps);
      },
      py::arg("witness"), py::arg("input"), py::arg("eps_shift") = 1e-6);
  m.def(
      "evaluate",
      [](const Witness& w, const ComplexMatrix& rho) {
        return evaluate(w.op, as_operator(rho, w.op.dim_a(), w.op.dim_b()));
      },
      py::arg("witness"), py::arg("rho"), "Re Tr(W^dagger rho).");
  m.def(
      "schmidt2_evidence",
      [](const Witness& w, int restarts, int max_iter, double conv_tol, std::uint64_t seed) {
        return to_python(
            to_json(schmidt2_evidence(w, make_config(restarts, max_iter, conv_tol, seed))));
      },
      py::arg("witness"), PPTEDGE_OPT_ARGS);

  // Files and reports.
  m.def(
      "write_witness",
      [](const Witness& w, const std::string& path) { write_matrix_file(path, to_matrix_file(w)); },
      py::arg("witness"), py::arg("path"));
  m.def(
      "read_matrix_file",
      [](const std::string& path) {
        const MatrixFile f = read_matrix_file(path);
        return py::make_tuple(f.matrix, py::make_tuple(f.dim_a, f.dim_b), to_python(f.metadata));
      },
      py::arg("path"), "Returns (matrix, (dim_a, dim_b), metadata).");
  m.def(
      "analyze",
      [](const std::string& input, int restarts, int max_iter, double conv_tol,
         std::uint64_t seed, double tol_eig, double tol_pos, double shift) {
        AnalysisOptions opts;
        opts.cfg = make_config(restarts, max_iter, conv_tol, seed);
        opts.tol_eig = tol_eig;
        opts.tol_pos = tol_pos;
        opts.shift = shift;
        return to_python(analyze(load_input(input, tol_pos), opts));
      },
      py::arg("input"), PPTEDGE_OPT_ARGS, py::arg("tol_eig") = kDefaultRankTol,
      py::arg("tol_pos") = 1e-12, py::arg("shift") = 1e-6);
}
