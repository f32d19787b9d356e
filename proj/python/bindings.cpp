#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orthogen/fixtures.hpp"
#include "orthogen/orthogen.hpp"

namespace py = pybind11;
using namespace orthogen;

namespace {

RecurrenceTable make_table(std::vector<double> alpha, std::vector<double> beta,
                           bool indefinite) {
  RecurrenceTable t;
  t.alpha = std::move(alpha);
  t.beta = std::move(beta);
  t.indefinite = indefinite;
  return t;
}

DiscreteMeasure make_measure(std::vector<double> nodes, std::vector<double> weights) {
  DiscreteMeasure d;
  d.nodes = std::move(nodes);
  d.weights = std::move(weights);
  return d;
}

ModificationKind modification(int iopt, double x, double y, bool symmetric) {
  if (iopt < 1 || iopt > 7) throw Error(ErrorKind::InvalidOption, "iopt must be 1..7", iopt);
  ModificationKind k;
  k.op = Modification(iopt);
  k.x = x;
  k.y = y;
  k.symmetric = symmetric;
  return k;
}

}  // namespace

PYBIND11_MODULE(_orthogen, m) {
  m.doc() = "Recurrence coefficients of orthogonal polynomials and Gauss-type quadrature";

  static py::exception<Error> error(m, "OrthogenError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(e.what(), to_string(e.kind()), e.index()).ptr());
    }
  });

  py::class_<RecurrenceTable>(m, "RecurrenceTable")
      .def(py::init(&make_table), py::arg("alpha"), py::arg("beta"),
           py::arg("indefinite") = false)
      .def_readwrite("alpha", &RecurrenceTable::alpha)
      .def_readwrite("beta", &RecurrenceTable::beta)
      .def_readwrite("indefinite", &RecurrenceTable::indefinite)
      .def("__len__", &RecurrenceTable::size)
      .def("to_record", [](const RecurrenceTable& t) { return to_record(t); })
      .def_static("from_record", &table_from_record);

  py::class_<QuadratureRule>(m, "QuadratureRule")
      .def_readonly("nodes", &QuadratureRule::nodes)
      .def_readonly("weights", &QuadratureRule::weights)
      .def_readonly("exactness", &QuadratureRule::exactness)
      .def_readonly("positive", &QuadratureRule::positive)
      .def("__len__", &QuadratureRule::size)
      .def("to_record", [](const QuadratureRule& q) { return to_record(q); });

  py::class_<DiscretizationReport>(m, "DiscretizationReport")
      .def_readonly("ncap", &DiscretizationReport::ncap)
      .def_readonly("kount", &DiscretizationReport::kount);

  m.def("classical_coeffs",
        [](const std::string& family, int n, double a, double b) {
          return classical_coeffs<double>(parse_family(family), n, a, b);
        },
        py::arg("family"), py::arg("n"), py::arg("a") = 0.0, py::arg("b") = 0.0,
        "Coefficients of a classical weight: legendre, shifted-legendre, chebyshev1..4, "
        "jacobi (a, b), laguerre (a), hermite.");

  m.def("modified_chebyshev",
        [](int n, std::vector<double> moments, std::optional<RecurrenceTable> reference) {
          MomentVector mv;
          mv.values = std::move(moments);
          mv.reference = std::move(reference);
          return modified_chebyshev(n, mv).table;
        },
        py::arg("n"), py::arg("moments"), py::arg("reference") = py::none(),
        "Modified Chebyshev algorithm; ordinary moments when no reference table is given.");
  m.def("elliptic_moments", [](int n, double omsq) {
    return elliptic_modified_moments<double>(n, omsq).values;
  });
  m.def("log_weight_moments", [](int n, double sigma, bool modified) {
    const bool integer = sigma >= 0 && std::floor(sigma) == sigma;
    return log_weight_moments<double>(n, sigma, integer, modified).values;
  }, py::arg("n"), py::arg("sigma"), py::arg("modified") = true);

  m.def("stieltjes", [](int n, std::vector<double> x, std::vector<double> w) {
    return stieltjes(n, make_measure(std::move(x), std::move(w)));
  }, py::arg("n"), py::arg("nodes"), py::arg("weights"));
  m.def("lanczos", [](int n, std::vector<double> x, std::vector<double> w) {
    return lanczos_reduce(n, make_measure(std::move(x), std::move(w)));
  }, py::arg("n"), py::arg("nodes"), py::arg("weights"));

  m.def("mcdis",
        [](int n, const std::vector<std::tuple<double, double, std::function<double(double)>>>& parts,
           const std::vector<std::pair<double, double>>& masses, double eps, int ncapm,
           bool lanczos) {
          MeasureSpec spec;
          for (const auto& [a, b, f] : parts)
            spec.components.push_back({a, b, [f](double t, int) { return f(t); }});
          for (const auto& [x, y] : masses) spec.masses.push_back({x, y});
          DiscretizationPolicy p;
          p.eps = eps;
          p.ncapm = ncapm;
          p.engine = lanczos ? Engine::Lanczos : Engine::Stieltjes;
          auto r = mcdis(n, spec, p);
          return py::make_tuple(r.table, r.report);
        },
        py::arg("n"), py::arg("components"), py::arg("masses") = std::vector<std::pair<double, double>>{},
        py::arg("eps") = 0.0, py::arg("ncapm") = 500, py::arg("lanczos") = false,
        "Multiple-component discretization with the general-purpose Fejer discretizer. "
        "components: list of (left, right, weight) with infinite ends allowed.");

  m.def("chri",
        [](int iopt, double x, double y, const RecurrenceTable& t, int n, bool symmetric) {
          return chri(modification(iopt, x, y, symmetric), t, n);
        },
        py::arg("iopt"), py::arg("x"), py::arg("y"), py::arg("table"), py::arg("n") = -1,
        py::arg("symmetric") = false);
  m.def("gchri",
        [](int iopt, double x, double y, int n, int nu0, int numax, double eps,
           const RecurrenceTable& t) {
          auto r = gchri(modification(iopt, x, y, false), n, nu0, numax, eps, t);
          return py::make_tuple(r.table, r.nu_used);
        },
        py::arg("iopt"), py::arg("x"), py::arg("y"), py::arg("n"), py::arg("nu0"),
        py::arg("numax"), py::arg("eps"), py::arg("table"));
  m.def("nu0_jacobi", [](int n, std::complex<double> z, double eps) {
    return nu0_estimate<double>(Nu0Family::Jacobi, n, z, eps);
  });
  m.def("induced_legendre", &fixtures::induced_legendre, py::arg("n"), py::arg("m"));

  m.def("gauss", [](int n, const RecurrenceTable& t) { return gauss_rule(n, t); });
  m.def("radau", [](int n, const RecurrenceTable& t, double x0) { return radau_rule(n, t, x0); });
  m.def("lobatto", [](int n, const RecurrenceTable& t, double left, double right) {
    return lobatto_rule(n, t, left, right);
  });
}
