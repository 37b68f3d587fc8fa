#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "freegb/corpus.hpp"
#include "freegb/io.hpp"

namespace py = pybind11;
using namespace freegb;

namespace {

std::vector<std::string> poly_strs(const std::vector<FreePoly>& ps,
                                   const Alphabet& ab) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str(ab));
  return out;
}

py::dict presentation_dict(const Presentation& p) {
  py::dict d;
  d["label"] = p.label;
  d["letters"] = std::vector<std::string>(p.alphabet.letter_names.begin() + 1,
                                          p.alphabet.letter_names.end());
  d["params"] = p.alphabet.param_names;
  d["gens"] = poly_strs(p.gens, p.alphabet);
  d["degbound"] = p.default_bound;
  d["order"] = order_name(p.default_order);
  d["variant"] = variant_name(p.default_variant);
  return d;
}

py::dict run_presentation(const Presentation& p, std::size_t degbound,
                          const std::string& order, const std::string& variant,
                          bool check, bool homogeneous) {
  RunRequest req;
  req.presentation = p;
  if (degbound != 0) req.degbound = degbound;
  if (!order.empty()) {
    const auto o = order_from_name(order);
    if (!o) throw std::invalid_argument("unknown order '" + order + "'");
    req.order = *o;
  }
  if (!variant.empty()) {
    const auto v = variant_from_name(variant);
    if (!v) throw std::invalid_argument("unknown variant '" + variant + "'");
    req.variant = *v;
  }
  req.check = check;
  req.homogeneous = homogeneous;
  const RunRecord rec = execute(req);

  py::dict d;
  d["label"] = p.label;
  d["order"] = order_name(rec.order);
  d["variant"] = variant_name(rec.variant);
  d["degbound"] = rec.degbound;
  d["pairs"] = rec.result.stats.pairs_reduced;
  d["saturations"] = rec.result.stats.saturations;
  d["seeds"] = rec.result.stats.seeds;
  d["max_degree"] = rec.result.stats.max_degree;
  d["certified"] = rec.result.certified_complete;
  d["truncated"] = rec.result.truncated;
  d["basis"] = poly_strs(rec.result.basis, p.alphabet);
  d["minimal"] = poly_strs(rec.result.minimal_basis, p.alphabet);
  if (rec.checked) {
    d["check"] = rec.check_passed ? "ok" : "mismatch";
    if (!rec.check_passed)
      d["oracle"] = poly_strs(rec.oracle_basis, p.alphabet);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_freegb, m) {
  m.doc() = "Two-sided Groebner bases in free associative algebras";

  py::register_exception<inconsistent_ideal>(m, "InconsistentIdeal",
                                             PyExc_RuntimeError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  m.def("labels", &corpus::labels, "Labels of the bundled examples.");
  m.def("example_input", &corpus::input_text, py::arg("label"),
        "Input-format source text of a bundled example.");
  m.def(
      "parse",
      [](const std::string& text) {
        return presentation_dict(parse_presentation(text));
      },
      py::arg("text"), "Parse input-format text into a presentation summary.");
  m.def(
      "run",
      [](const std::string& text, std::size_t degbound,
         const std::string& order, const std::string& variant, bool check,
         bool homogeneous) {
        return run_presentation(parse_presentation(text), degbound, order,
                                variant, check, homogeneous);
      },
      py::arg("text"), py::arg("degbound") = 0, py::arg("order") = "",
      py::arg("variant") = "", py::arg("check") = false,
      py::arg("homogeneous") = false,
      "Run the basis engine on input-format text.");
  m.def(
      "run_example",
      [](const std::string& label, std::size_t degbound,
         const std::string& order, const std::string& variant, bool check,
         bool homogeneous) {
        return run_presentation(corpus::presentation(label), degbound, order,
                                variant, check, homogeneous);
      },
      py::arg("label"), py::arg("degbound") = 0, py::arg("order") = "",
      py::arg("variant") = "", py::arg("check") = false,
      py::arg("homogeneous") = false,
      "Run the basis engine on a bundled example.");
}
