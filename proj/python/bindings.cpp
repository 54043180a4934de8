#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sjack/configurations.hpp"
#include "sjack/json_io.hpp"
#include "sjack/nonsym_jack.hpp"
#include "sjack/recurrence.hpp"
#include "sjack/superjack.hpp"
#include "sjack/triangular.hpp"

namespace py = pybind11;
using namespace sjack;

namespace {

Superpartition to_sp(const std::string& text) { return parse_superpartition(text); }

py::tuple report(const CheckReport& r) { return py::make_tuple(r.ok, r.checked, r.failures); }

NormConvention convention(const std::string& name) {
  if (name == "stated") return NormConvention::as_stated;
  if (name == "signed") return NormConvention::sector_signed;
  throw std::invalid_argument("convention must be 'stated' or 'signed'");
}

std::map<std::string, AlphaRational> keyed(const std::map<Superpartition, AlphaRational>& coeffs) {
  std::map<std::string, AlphaRational> out;
  for (const auto& [sp, c] : coeffs) out.emplace(sp.str(), c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Jack superpolynomials and the combinatorics behind their minimal coefficient";

  py::class_<AlphaRational>(m, "AlphaRational")
      .def(py::init([](long c) { return AlphaRational(c); }))
      .def_property_readonly("num", [](const AlphaRational& r) { return r.num().str(); })
      .def_property_readonly("den", [](const AlphaRational& r) { return r.den().str(); })
      .def("latex", [](const AlphaRational& r) { return r.str(Style::latex); })
      .def("at_inverse_alpha", &AlphaRational::at_inverse_alpha)
      // value at alpha = p/q as the string "a/b"; the package wraps it in a Fraction
      .def("_eval", [](const AlphaRational& r, const std::string& at) {
        const Rational x(at);
        const Rational v = r.num().eval(x) / r.den().eval(x);
        return v.get_str();
      })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def("__str__", [](const AlphaRational& r) { return r.str(); })
      .def("__repr__", [](const AlphaRational& r) { return "AlphaRational(" + r.str() + ")"; });

  m.def("parse_alpha_rational", [](const std::string& num, const std::string& den) {
    return AlphaRational(parse_alpha_poly(num), parse_alpha_poly(den));
  }, py::arg("num"), py::arg("den") = "1");

  m.def("normalize", [](const std::string& sp) { return to_sp(sp).str(); });
  m.def("conjugate", [](const std::string& sp) { return conjugate(to_sp(sp)).str(); });
  m.def("star", [](const std::string& sp) { return star(to_sp(sp)).parts(); });
  m.def("diagram_rows", [](const std::string& sp) { return diagram(to_sp(sp)).row_lengths(); });
  m.def("diagram_ascii", [](const std::string& sp) { return diagram(to_sp(sp)).ascii(); });
  m.def("lambda_min", [](int n, int fermions) { return lambda_min(n, fermions).str(); }, py::arg("n"), py::arg("m"));
  m.def("superpartitions", [](int n, int fermions) {
    std::vector<std::string> out;
    for (const auto& sp : superpartitions(n, fermions)) out.push_back(sp.str());
    return out;
  }, py::arg("n"), py::arg("m"));
  m.def("default_n_vars", [](const std::string& sp) { return default_n_vars(to_sp(sp)); });

  m.def("c_min_closed", [](const std::string& sp) { return c_min_closed(to_sp(sp)); });
  m.def("c_min_closed_factored", [](const std::string& sp, bool latex) {
    return c_min_closed_str(to_sp(sp), latex ? Style::latex : Style::text);
  }, py::arg("sp"), py::arg("latex") = false);
  m.def("c_min_via_expansion", [](const std::string& sp, int jobs) {
    py::gil_scoped_release release;
    return c_min_via_expansion(to_sp(sp), jobs);
  }, py::arg("sp"), py::arg("jobs") = 1);
  m.def("c_min_via_configurations", [](const std::string& sp) { return c_min_via_configurations(to_sp(sp)); });

  m.def("jack_expand", [](const std::string& sp, std::optional<int> n_vars, int jobs) {
    const Superpartition s = to_sp(sp);
    JackExpansion e;
    {
      py::gil_scoped_release release;
      e = jack_super(s, n_vars.value_or(default_n_vars(s)), jobs);
    }
    return keyed(e.m_basis);
  }, py::arg("sp"), py::arg("n_vars") = py::none(), py::arg("jobs") = 1);
  m.def("jack_expand_json", [](const std::string& sp, std::optional<int> n_vars) {
    const Superpartition s = to_sp(sp);
    return to_json(jack_super(s, n_vars.value_or(default_n_vars(s)))).dump();
  }, py::arg("sp"), py::arg("n_vars") = py::none());
  m.def("scalar_product_jacks", [](const std::string& a, const std::string& b) {
    const Superpartition x = to_sp(a), y = to_sp(b);
    const int n = std::max(default_n_vars(x), default_n_vars(y));
    return scalar_product(jack_super(x, n).poly, jack_super(y, n).poly);
  });
  m.def("expected_norm", [](const std::string& sp, const std::string& conv) {
    return expected_norm(to_sp(sp), convention(conv));
  }, py::arg("sp"), py::arg("convention") = "stated");

  m.def("nonsym_jack", [](const std::vector<int>& eta, int jobs) {
    const NonsymJack e = nonsym_jack(Composition(eta), jobs);
    py::dict out;
    for (const auto& [exps, num] : e.numerators) out[py::tuple(py::cast(exps))] = e.coeff(exps);
    return out;
  }, py::arg("eta"), py::arg("jobs") = 1);
  m.def("admissible_tableaux", [](const std::vector<int>& eta) {
    std::vector<std::string> out;
    enumerate_admissible(Composition(eta), [&](const AdmissibleTableau& t) { out.push_back(t.str()); });
    return out;
  });

  m.def("sigma_gamma", [](const std::string& bits) { return sigma_gamma(parse_gamma(bits)).str(); });
  m.def("det_M", [](const std::string& bits) { return det(P_matrix(parse_gamma(bits))).str(); });
  m.def("vandermonde_shift", [](int size) { return vandermonde_shift(PolyRing::for_m(size), size).str(); });
  m.def("enumerate_V", [](const std::string& bits) {
    std::vector<std::string> out;
    for (const auto& t : enumerate_V(parse_gamma(bits))) out.push_back(tableau_str(t));
    return out;
  });

  // each returns (ok, number of checks, failure messages)
  m.def("verify_lemma2", [](const std::string& sp) { return report(verify_lemma2(to_sp(sp))); });
  m.def("verify_norm", [](const std::string& sp, const std::string& conv) {
    return report(verify_norm(to_sp(sp), 1, convention(conv)));
  }, py::arg("sp"), py::arg("convention") = "stated");
  m.def("verify_cmin_configurations", [](const std::string& sp, bool against_expansion) {
    return report(verify_cmin_configurations(to_sp(sp), against_expansion));
  }, py::arg("sp"), py::arg("against_expansion") = false);
  m.def("verify_config_reduction", [](const std::string& sp) { return report(verify_config_reduction(to_sp(sp))); });
  m.def("identity1_check", [](const std::string& sp) { return report(identity1_check(to_sp(sp))); });
  m.def("identity2_check", [](const std::string& bits) { return report(identity2_check(parse_gamma(bits))); });
  m.def("det_check", [](const std::string& bits) { return report(det_check(parse_gamma(bits))); });
  m.def("lgv_involution_check", [](const std::string& bits) { return report(lgv_involution_check(parse_gamma(bits))); });
  m.def("iota_check", [](const std::string& bits) { return report(iota_check(parse_gamma(bits))); });
  m.def("row_reduce_check", [](int size) { return report(row_reduce_check(size)); });
  m.def("recurrence_suite", [](int max_k, int max_ij) {
    py::gil_scoped_release release;
    return recurrence_suite(max_k, max_ij);
  }, py::arg("max_k"), py::arg("max_ij"));

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("ok", &CheckReport::ok)
      .def_readonly("checked", &CheckReport::checked)
      .def_readonly("failures", &CheckReport::failures)
      .def("__bool__", [](const CheckReport& r) { return r.ok; });

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });
}
