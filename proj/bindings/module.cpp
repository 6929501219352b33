// Python bindings: the scheme builders, the full analysis pipeline and the
// self-duality classifiers, with reports delivered as plain dicts (via their
// JSON form).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "assoc/analysis.hpp"

namespace py = pybind11;
using namespace assoc;

namespace {

AnalysisOptions options_from(const std::string& mode, double eps,
                             double eps_cluster) {
  if (mode == "exact") return AnalysisOptions::exact();
  if (mode == "approx") return AnalysisOptions::approx(eps, eps_cluster);
  throw std::invalid_argument("mode must be \"exact\" or \"approx\"");
}

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

struct Pipeline {
  SchemeParameters params;
  SpectralData sp;
  KreinTensor kt;
};

Pipeline pipeline(const AssociationScheme& s, const AnalysisOptions& opt,
                  bool align_characters) {
  Pipeline p;
  p.params = intersection_numbers(s);
  p.sp = decompose(s, p.params, opt.mode, opt.tol);
  p.kt = krein_parameters(p.sp, p.params, opt.tol);
  if (align_characters) {
    OrderingPermutation align = character_alignment(p.sp);
    std::tie(p.sp, p.kt) = reorder(p.sp, p.kt, align);
  }
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Symmetric association schemes: intersection numbers, primitive "
      "idempotents, eigenmatrices, Krein parameters and self-duality "
      "classification.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ScmParseError>(m, "ScmParseError",
                                        PyExc_ValueError);
  py::register_exception<SchemeError>(m, "SchemeError", PyExc_ValueError);
  py::register_exception<SpectralError>(m, "SpectralError",
                                        PyExc_RuntimeError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency",
                                                PyExc_RuntimeError);

  py::class_<AssociationScheme>(m, "Scheme")
      .def_property_readonly("n", &AssociationScheme::n)
      .def_property_readonly("d", &AssociationScheme::d)
      .def("relation", &AssociationScheme::relation, py::arg("x"),
           py::arg("y"))
      .def("to_scm",
           [](const AssociationScheme& s) { return write_scm(s.relations()); })
      .def("__repr__", [](const AssociationScheme& s) {
        return "<Scheme n=" + std::to_string(s.n()) +
               " d=" + std::to_string(s.d()) + ">";
      });

  m.def("group_scheme", &build_group_scheme, py::arg("m"),
        "The binary group scheme X^(m) on 2^m points.");
  m.def(
      "hamming_scheme",
      [](int n, int q) { return generate_fixture(FixtureSpec::hamming(n, q)); },
      py::arg("n"), py::arg("q") = 2,
      "The Hamming scheme H(n,q): q-ary words of length n by distance.");
  m.def(
      "cycle_scheme",
      [](int n) { return generate_fixture(FixtureSpec::cycle(n)); },
      py::arg("n"), "The cycle scheme C_n by circular distance.");
  m.def(
      "parse_scm",
      [](const std::string& text) { return make_scheme(read_scm_string(text)); },
      py::arg("text"), "Parse and verify an scm-v1 scheme description.");

  m.def(
      "verify",
      [](const std::string& text) {
        RelationIndexMatrix rel = read_scm_string(text);
        VerifyOutcome out = verify_scheme(rel);
        nlohmann::json j;
        j["valid"] = out.ok();
        j["n"] = rel.n;
        j["d"] = rel.d;
        if (out.ok()) {
          if (out.params) j["k"] = out.params->k;
        } else {
          j["violation"] = to_json(*out.violation);
        }
        return to_py(j);
      },
      py::arg("text"),
      "Check the scheme axioms of an scm-v1 description; returns a dict "
      "with a violation report instead of raising.");

  m.def(
      "analyze",
      [](const AssociationScheme& s, const std::string& mode, double eps,
         double eps_cluster) {
        return to_py(to_json(run_analyze(s, options_from(mode, eps,
                                                         eps_cluster))));
      },
      py::arg("scheme"), py::arg("mode") = "exact", py::arg("eps") = 1e-9,
      py::arg("eps_cluster") = 1e-6,
      "Full pipeline: parameters, idempotents, eigenmatrices, Krein "
      "parameters, identity-ordering duality and polynomial checks.");

  m.def(
      "selfdual",
      [](const AssociationScheme& s, const std::string& mode, double eps,
         double eps_cluster, std::optional<std::vector<int>> sigma,
         std::optional<std::string> S, bool enumerate_all,
         std::optional<bool> align_characters) {
        AnalysisOptions opt = options_from(mode, eps, eps_cluster);
        bool align = align_characters.value_or(S.has_value());
        Pipeline p = pipeline(s, opt, align);
        if (enumerate_all) {
          return to_py(
              to_json(classify_all_orderings(p.params, p.sp, p.kt, opt.tol)));
        }
        OrderingPermutation ordering;
        if (sigma && S) {
          throw std::invalid_argument("give sigma or S, not both");
        } else if (S) {
          ordering = sigma_from_matrix(Gf2Matrix::parse(*S));
          if (ordering.d() != s.d()) {
            throw std::invalid_argument(
                "matrix dimension does not match the scheme");
          }
        } else if (sigma) {
          ordering.sigma = *sigma;
          require_valid_ordering(ordering, s.d());
        } else {
          ordering = OrderingPermutation::identity(s.d());
        }
        return to_py(
            to_json(duality_report(p.params, p.sp, p.kt, ordering, opt.tol)));
      },
      py::arg("scheme"), py::arg("mode") = "exact", py::arg("eps") = 1e-9,
      py::arg("eps_cluster") = 1e-6, py::arg("sigma") = py::none(),
      py::arg("S") = py::none(), py::arg("enumerate_all") = false,
      py::arg("align_characters") = py::none(),
      "Formal/numerical self-duality for one ordering (sigma, or x -> Sx "
      "over GF(2)), or for all orderings with enumerate_all=True.");

  m.def(
      "gl2_classify",
      [](int m_, int trials_nonlinear, std::uint64_t seed,
         const std::string& mode, double eps, double eps_cluster,
         bool details) {
        AnalysisOptions opt = options_from(mode, eps, eps_cluster);
        return to_py(to_json(gl2_classify(m_, trials_nonlinear, seed,
                                          opt.mode, opt.tol, details)));
      },
      py::arg("m"), py::arg("trials_nonlinear") = 0,
      py::arg("seed") = 12345, py::arg("mode") = "exact",
      py::arg("eps") = 1e-9, py::arg("eps_cluster") = 1e-6,
      py::arg("details") = false,
      "Classify all GF(2)-linear orderings of X^(m) (m <= 3) and test "
      "sampled non-linear permutations for numerical self-duality.");

  m.def(
      "poly_check",
      [](const AssociationScheme& s, const std::string& mode, double eps,
         double eps_cluster) {
        return to_py(poly_check_json(
            run_analyze(s, options_from(mode, eps, eps_cluster))));
      },
      py::arg("scheme"), py::arg("mode") = "exact", py::arg("eps") = 1e-9,
      py::arg("eps_cluster") = 1e-6,
      "P-/Q-polynomial detection, Askey-Wilson residual and the ordering "
      "equivalence check.");

  m.def("closed_form_eigenmatrix", &closed_form_eigenmatrix, py::arg("m"),
        "The matrix with entries (-1)^<x,y> indexing the group scheme's "
        "eigenmatrices by characters.");
}
