#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "symqe/oracle.hpp"
#include "symqe/qe_plus.hpp"
#include "symqe/qe_real.hpp"
#include "symqe/report.hpp"
#include "symqe/symquartic.hpp"

namespace py = pybind11;
using namespace symqe;

namespace {

std::array<Rational, 5> parse_five(const std::vector<std::string>& coeffs) {
  if (coeffs.size() != 5) throw py::value_error("expected 5 coefficients");
  std::array<Rational, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = parse_rational(coeffs[i]);
  return out;
}

SymmetricQuartic make_quartic(long n, const std::vector<std::string>& coeffs, const std::string& basis) {
  const auto c = parse_five(coeffs);
  if (basis == "monomial") return from_monomial(MonomialQuartic{n, c});
  if (basis != "power-sum") throw py::value_error("basis must be 'power-sum' or 'monomial'");
  return SymmetricQuartic(n, c);
}

std::string decide_json(long n, const std::vector<std::string>& coeffs, const std::string& domain,
                        const std::string& basis, bool trace) {
  const SymmetricQuartic f = make_quartic(n, coeffs, basis);
  DecideOptions options;
  options.trace = trace;
  Verdict v;
  if (domain == "orthant") {
    v = decide_orthant(f, options);
  } else if (domain == "real") {
    v = decide_real(f, options);
  } else {
    throw py::value_error("domain must be 'orthant' or 'real'");
  }
  return verdict_json(v, 0, true, trace).dump();
}

}  // namespace

PYBIND11_MODULE(_symqe, m) {
  m.doc() = "Exact nonnegativity decisions for symmetric quartic forms";

  py::register_exception<std::invalid_argument>(m, "InputError", PyExc_ValueError);

  m.def("decide_json", &decide_json, py::arg("n"), py::arg("coeffs"), py::arg("domain") = "orthant",
        py::arg("basis") = "power-sum", py::arg("trace") = false,
        "Decide f >= 0; returns the verdict as a JSON string");

  m.def(
      "reference_decision",
      [](long n, const std::vector<std::string>& coeffs, const std::string& domain) {
        const SymmetricQuartic f = make_quartic(n, coeffs, "power-sum");
        return domain == "real" ? oracle::decide_real_reference(f) : oracle::decide_orthant_reference(f);
      },
      py::arg("n"), py::arg("coeffs"), py::arg("domain") = "orthant");

  m.def(
      "from_monomial",
      [](long n, const std::vector<std::string>& coeffs) {
        const SymmetricQuartic f = from_monomial(MonomialQuartic{n, parse_five(coeffs)});
        std::vector<std::string> out;
        for (const auto& c : f.coefficients()) out.push_back(to_string(c));
        return out;
      },
      py::arg("n"), py::arg("coeffs"));

  m.def(
      "eval_point",
      [](const std::vector<std::string>& coeffs, const std::vector<std::string>& point) {
        std::vector<Rational> x;
        for (const auto& s : point) x.push_back(parse_rational(s));
        return to_string(eval_point(SymmetricQuartic(static_cast<long>(x.size()), parse_five(coeffs)), x));
      },
      py::arg("coeffs"), py::arg("point"));

  m.def(
      "quartic_nonneg_real",
      [](const std::vector<std::string>& coeffs) {
        const auto c = parse_five(coeffs);
        if (c[0] <= 0) throw py::value_error("leading coefficient must be positive");
        return quartic_nonneg_real(c);
      },
      py::arg("coeffs"));
}
