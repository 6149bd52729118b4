#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cliffcent/centralizer.hpp"
#include "cliffcent/closed_forms.hpp"
#include "cliffcent/multivector.hpp"
#include "cliffcent/verify.hpp"

namespace py = pybind11;
using namespace cliffcent;

namespace {

using Triple = std::tuple<int, int, int>;
using BladeLists = std::vector<std::vector<int>>;

Signature sig_of(const Triple& t) { return Signature(std::get<0>(t), std::get<1>(t), std::get<2>(t)); }

Subspace target(const Signature& sig, const std::string& spec) { return evaluate_spec(sig, parse_subspace_spec(spec)); }

}  // namespace

PYBIND11_MODULE(_cliffcent, m) {
  m.doc() = "Exact centralizers and twisted centralizers in Clifford algebras Cl(p,q,r)";

  py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
  py::register_exception<OverlapError>(m, "OverlapError", PyExc_ValueError);
  py::register_exception<ClosedFormMismatch>(m, "ClosedFormMismatch", PyExc_RuntimeError);

  m.def("parse_signature", [](const std::string& text) {
    const Signature s = parse_signature(text);
    return Triple{s.p(), s.q(), s.r()};
  });

  m.def(
      "centralizer",
      [](const Triple& sig, const std::string& spec, const std::string& kind) {
        return blade_index_lists(brute_force_centralizer(target(sig_of(sig), spec), parse_kind(kind)));
      },
      py::arg("signature"), py::arg("subspace"), py::arg("kind") = "plain",
      "Brute-force centralizer of a subspace spec, as sorted index lists.");

  m.def(
      "closed_form",
      [](const Triple& sig, int grade, const std::string& kind) {
        return blade_index_lists(closed_form_grade(sig_of(sig), grade, parse_kind(kind)));
      },
      py::arg("signature"), py::arg("grade"), py::arg("kind") = "plain");

  m.def("center", [](const Triple& sig) { return blade_index_lists(center_closed_form(sig_of(sig))); },
        py::arg("signature"));

  m.def(
      "nullspace_dimension",
      [](const Triple& sig, const std::string& spec, const std::string& kind) {
        return nullspace_centralizer_oracle(target(sig_of(sig), spec), parse_kind(kind)).dimension;
      },
      py::arg("signature"), py::arg("subspace"), py::arg("kind") = "plain");

  m.def(
      "verify_json",
      [](const Triple& sig, const std::string& spec, const std::string& kind) {
        return report_to_json(verify_case(sig_of(sig), parse_subspace_spec(spec), parse_kind(kind))).dump();
      },
      py::arg("signature"), py::arg("subspace"), py::arg("kind") = "plain");

  m.def(
      "sweep",
      [](int max_dim, const std::string& targets, const std::vector<std::string>& kinds) {
        SweepOptions options;
        options.targets = parse_target_set(targets);
        if (!kinds.empty()) {
          options.kinds.clear();
          for (const auto& k : kinds) options.kinds.push_back(parse_kind(k));
        }
        SweepResult result;
        {
          py::gil_scoped_release release;
          result = sweep_verify(max_dim, options);
        }
        return std::pair<std::size_t, std::size_t>{result.reports.size(), result.mismatches()};
      },
      py::arg("max_dim"), py::arg("targets") = "all", py::arg("kinds") = std::vector<std::string>{},
      "Run the verification sweep; returns (cases, mismatches).");

  m.def("table1_json", [](const Triple& sig) { return table1_to_json(sig_of(sig), evaluate_table1(sig_of(sig))).dump(); },
        py::arg("signature"));

  m.def(
      "blade_product",
      [](const Triple& sig, const std::string& a, const std::string& b) {
        const Signature s = sig_of(sig);
        const ScaledBlade r = blade_product(s, parse_blade(a, s), parse_blade(b, s));
        return std::pair<int, std::string>{r.sign, r.sign == 0 ? std::string() : format_blade(r.blade)};
      },
      py::arg("signature"), py::arg("a"), py::arg("b"));

  m.def(
      "commute_class",
      [](const Triple& sig, const std::string& a, const std::string& b) {
        const Signature s = sig_of(sig);
        return std::string(to_string(commute_class(s, parse_blade(a, s), parse_blade(b, s))));
      },
      py::arg("signature"), py::arg("a"), py::arg("b"));

  py::class_<Multivector>(m, "Multivector")
      .def(py::init([](const Triple& sig, const std::string& text) { return parse_multivector(sig_of(sig), text); }),
           py::arg("signature"), py::arg("text") = "0")
      .def("__str__", &format_multivector)
      .def("__repr__", [](const Multivector& u) { return "Multivector(" + format_multivector(u) + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("grade", &grade_project)
      .def("parity", &parity_project)
      .def("grade_involute", &grade_involute)
      .def("reverse", &reverse)
      .def("is_invertible", &is_invertible)
      .def("inverse", &inverse_of)
      .def("is_zero", &Multivector::is_zero);
}
