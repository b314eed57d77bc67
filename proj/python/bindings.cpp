// Python view of the exact core. Rationals cross the boundary as
// fractions.Fraction, polynomials as a wrapped class that parses and prints
// the usual text form, structured results as plain dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rza/amalgamation.hpp"
#include "rza/certify.hpp"
#include "rza/error.hpp"
#include "rza/json_io.hpp"
#include "rza/matroid.hpp"
#include "rza/report.hpp"

namespace py = pybind11;
using namespace rza;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::handle& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj, py::arg("default") = py::module_::import("builtins").attr("str")).cast<std::string>());
}

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(to_string(r)); }

// int, str and Fraction are all accepted; floats are refused to keep things exact
Rational rational(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) throw InputError("floats are not accepted, use int, str or Fraction");
  return parse_rational(py::str(obj).cast<std::string>());
}

Polynomial poly(const py::handle& obj) {
  if (py::isinstance<Polynomial>(obj)) return obj.cast<Polynomial>();
  if (py::isinstance<py::int_>(obj)) return Polynomial::constant(rational(obj));
  return parse(obj.cast<std::string>());
}

SampleOptions sample_opts(std::size_t samples, std::uint64_t seed) { return {samples, seed}; }

PoljakTurzik which(const std::string& name) {
  if (name == "M1" || name == "m1") return PoljakTurzik::kM1;
  if (name == "M2" || name == "m2") return PoljakTurzik::kM2;
  throw InputError("expected 'M1' or 'M2', got '" + name + "'");
}

std::vector<NamedMatrix> named(const py::dict& d) { return named_matrices_from_json(from_py(d)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact real-zero and matroid amalgamation tools";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
      .def("__str__", [](const Polynomial& p) { return format(p); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + format(p) + "')"; })
      .def("__eq__", [](const Polynomial& a, const py::object& b) { return a == poly(b); })
      .def("__add__", [](const Polynomial& a, const py::object& b) { return a + poly(b); })
      .def("__radd__", [](const Polynomial& a, const py::object& b) { return poly(b) + a; })
      .def("__sub__", [](const Polynomial& a, const py::object& b) { return a - poly(b); })
      .def("__rsub__", [](const Polynomial& a, const py::object& b) { return poly(b) - a; })
      .def("__mul__", [](const Polynomial& a, const py::object& b) { return a * poly(b); })
      .def("__rmul__", [](const Polynomial& a, const py::object& b) { return poly(b) * a; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__pow__", [](const Polynomial& a, unsigned e) { return pow(a, e); })
      .def("__hash__", [](const Polynomial& p) { return py::hash(py::str(format(p))); })
      .def_property_readonly("variables", [](const Polynomial& p) { return p.vars().names(); })
      .def_property_readonly("degree", [](const Polynomial& p) { return p.is_zero() ? -1 : static_cast<int>(p.degree()); })
      .def("is_zero", &Polynomial::is_zero)
      .def(
          "__call__",
          [](const Polynomial& p, const py::dict& point) {
            std::vector<Rational> pt(p.vars().size());
            for (const auto& [k, v] : point) {
              const auto i = p.vars().index_of(k.cast<std::string>());
              if (!i) throw InputError("unknown variable '" + k.cast<std::string>() + "'");
              pt[*i] = rational(v);
            }
            return fraction(evaluate(p, pt));
          },
          py::arg("point"), "Evaluate at {name: value}; missing variables are 0.")
      .def("substitute", [](const Polynomial& p, const std::string& var, const py::object& v) {
        return substitute(p, var, rational(v));
      })
      .def("to_json", [](const Polynomial& p) { return to_py(polynomial_to_json(p)); });

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));

  m.def("real_zero_exact", [](const py::object& p) { return to_py(verdict_to_json(quadratic_real_zero(poly(p)))); },
        py::arg("p"), "Decide real-zeroness of a polynomial of degree at most 2.");
  m.def(
      "real_zero_sample",
      [](const py::object& p, std::size_t samples, std::uint64_t seed) {
        return to_py(verdict_to_json(real_zero_sample(poly(p), sample_opts(samples, seed))));
      },
      py::arg("p"), py::arg("samples") = 500, py::arg("seed") = 42);
  m.def(
      "stable_sample",
      [](const py::object& p, std::size_t samples, std::uint64_t seed) {
        return to_py(verdict_to_json(stable_sample(poly(p), sample_opts(samples, seed))));
      },
      py::arg("p"), py::arg("samples") = 500, py::arg("seed") = 42);
  m.def(
      "wagner_wei",
      [](const py::object& p, std::size_t samples, std::uint64_t seed) {
        return to_py(verdict_to_json(wagner_wei_stable(poly(p), {}, sample_opts(samples, seed))));
      },
      py::arg("p"), py::arg("samples") = 500, py::arg("seed") = 42);
  m.def("rayleigh", [](const py::object& p, const std::string& i, const std::string& j) { return rayleigh(poly(p), i, j); });
  m.def("is_psd", [](const py::list& rows) { return is_psd(SymmetricMatrixQ(matrix_from_json(from_py(rows)))); },
        py::arg("rows"));
  m.def("det_polynomial", [](const py::dict& mats) { return det_polynomial(named(mats)); }, py::arg("matrices"),
        "det(I + sum of name * matrix) for {name: rows}.");
  m.def("verify_sos", [](const py::object& target, const py::dict& cert) {
    return verify_sos(poly(target), sos_from_json(from_py(cert)));
  });

  py::class_<Matroid>(m, "Matroid")
      .def(py::init([](const std::vector<std::string>& ground, const std::vector<std::vector<std::string>>& bases) {
             return Matroid::from_bases(ground, bases);
           }),
           py::arg("ground"), py::arg("bases"))
      .def_static("uniform", &Matroid::uniform, py::arg("rank"), py::arg("ground"))
      .def_static("poljak_turzik", [](const std::string& name) { return poljak_turzik(which(name)); })
      .def_static("from_json", [](const py::dict& d) { return matroid_from_json(from_py(d)); })
      .def("to_json", [](const Matroid& mt) { return to_py(matroid_to_json(mt)); })
      .def_property_readonly("ground", [](const Matroid& mt) { return mt.ground().labels(); })
      .def_property_readonly("bases", [](const Matroid& mt) {
        std::vector<std::vector<std::string>> out;
        for (Subset b : mt.bases()) out.push_back(mt.ground().names(b));
        return out;
      })
      .def("rank", [](const Matroid& mt, const std::optional<std::vector<std::string>>& set) {
        return set ? mt.rank(mt.ground().subset(*set)) : mt.rank();
      }, py::arg("set") = py::none())
      .def("closure", [](const Matroid& mt, const std::vector<std::string>& set) {
        return mt.ground().names(mt.closure(mt.ground().subset(set)));
      })
      .def("restrict", [](const Matroid& mt, const std::vector<std::string>& set) { return restriction(mt, set); })
      .def("contract", [](const Matroid& mt, const std::vector<std::string>& set) { return contraction(mt, set); })
      .def("is_modular", [](const Matroid& mt) { return is_modular(mt); })
      .def("bases_polynomial", [](const Matroid& mt) { return bases_generating_poly(mt); })
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& mt) {
        return "Matroid(rank " + std::to_string(mt.rank()) + " on " + mt.ground().format(mt.ground().full()) + ")";
      });

  m.def(
      "matroid_amalgam",
      [](const Matroid& a, const Matroid& b) {
        const AmalgamResult r = amalgam_search(a, b);
        py::dict out;
        out["kind"] = std::string(to_string(r.kind));
        out["nodes"] = r.nodes;
        out["detail"] = r.detail;
        out["amalgam"] = r.amalgam ? py::cast(*r.amalgam) : py::none();
        return out;
      },
      py::arg("m1"), py::arg("m2"));
  m.def("support_matroid", [](const py::object& p) { return support_matroid(poly(p)); });
  m.def("delta_check", [](const py::object& p) {
    const DeltaMatroid d = support_family(poly(p));
    const auto fails = exchange_failures(d);
    py::dict out;
    out["is_delta_matroid"] = fails.empty();
    out["failures"] = fails.size();
    if (!fails.empty()) out["first"] = to_py(exchange_check_to_json(fails.front(), d.ground()));
    return out;
  });

  m.def(
      "amalgamate_disjoint",
      [](const py::object& p, const py::object& q, std::optional<unsigned> degree) {
        return amalgamate_disjoint(poly(p), poly(q), degree);
      },
      py::arg("p"), py::arg("q"), py::arg("degree") = py::none());
  m.def(
      "amalgamate_quadratic",
      [](const std::vector<std::string>& x, const std::vector<std::string>& y, const std::vector<std::string>& z,
         const py::object& p, const py::object& q) {
        return amalgamate_quadratic(AmalgamationProblem{VariableSet(x), VariableSet(y), VariableSet(z), poly(p), poly(q)});
      },
      py::arg("x"), py::arg("y"), py::arg("z"), py::arg("p"), py::arg("q"));
  m.def(
      "amalgamate_determinantal",
      [](const py::dict& x, const py::dict& y, const py::dict& z) {
        const DeterminantalAmalgam d = amalgamate_determinantal(named(x), named(y), named(z));
        return py::make_tuple(d.r, d.p, d.q);
      },
      py::arg("x"), py::arg("y"), py::arg("z"), "Returns (r, p, q).");
  m.def("walsh_identity", [](const std::vector<py::object>& a, const std::vector<py::object>& b) {
    std::vector<Rational> ra, rb;
    for (const auto& v : a) ra.push_back(rational(v));
    for (const auto& v : b) rb.push_back(rational(v));
    return walsh_identity_check(ra, rb);
  });

  m.def(
      "repro_counterexample",
      [](std::size_t samples, std::uint64_t seed) { return to_py(report_to_json(repro_counterexample(sample_opts(samples, seed)))); },
      py::arg("samples") = 500, py::arg("seed") = 42);
}
