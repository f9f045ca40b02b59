// JSON text in, JSON text out; the Python package decodes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <filesystem>
#include <optional>

#include "homcoh/cohomology.hpp"
#include "homcoh/deformation.hpp"
#include "homcoh/errors.hpp"
#include "homcoh/io.hpp"
#include "homcoh/selftest.hpp"

namespace py = pybind11;
using namespace homcoh;
using Dir = std::filesystem::path;

namespace {

Flavor flavor_of(const HomAlgebra& a) { return a.kind == Kind::lie ? Flavor::lie : Flavor::hom; }

std::string validate_json(const std::string& text, const Dir& dir) {
  const Json j = parse_json_text(text);
  if (is_morphism_json(j)) {
    const HomMorphism phi = morphism_from_json(j, dir);
    Json out;
    out["source"] = validity_to_json(validate(phi.source), phi.source);
    out["target"] = validity_to_json(validate(phi.target), phi.target);
    out["morphism"] = validity_to_json(check_morphism(phi.source, phi.target, phi.matrix), phi.source);
    return out.dump();
  }
  const HomAlgebra a = algebra_from_json(j);
  return validity_to_json(validate(a), a).dump();
}

std::string cohomology_json(const std::string& text, const Dir&, std::size_t lo, std::size_t hi, bool force) {
  const HomAlgebra a = algebra_from_json(parse_json_text(text));
  if (!force && !validate(a).is_valid) throw InvalidAlgebra(a.name + " fails its identities; pass force=True");
  const auto c = flavor_of(a) == Flavor::lie ? lie_self_complex(a) : hom_self_complex(a);
  return summary_to_json(compute_cohomology(*c, lo, hi)).dump();
}

std::string morphism_cohomology_json(const std::string& text, const Dir& dir, std::size_t n) {
  const HomMorphism phi = morphism_from_json(parse_json_text(text), dir);
  return morphism_cohomology_to_json(morphism_cohomology(phi, n, flavor_of(phi.source))).dump();
}

std::string deform_check_json(const std::string& text, const Dir& dir, std::optional<std::size_t> up_to) {
  const DeformationFile df = deformation_from_json(parse_json_text(text), dir);
  const DeformationReport r =
      df.morphism ? check_morphism_deformation(*df.morphism, up_to) : check_algebra_deformation(df.algebra, up_to);
  return deformation_report_to_json(r).dump();
}

template <class D>
Json extend_loop(D d, std::size_t goal) {
  std::vector<std::string> diagnostics;
  std::size_t failing = 0;
  bool reverified = true;
  while (d.order < goal) {
    auto ext = extend_deformation(d);
    diagnostics.insert(diagnostics.end(), ext.diagnostics.begin(), ext.diagnostics.end());
    if (!ext.extended) {
      failing = ext.failing_order;
      break;
    }
    reverified = reverified && ext.reverified;
    d = *ext.extended;
  }
  return Json{{"extended", failing == 0}, {"reverified", reverified}, {"failing_order", failing},
              {"diagnostics", diagnostics}, {"deformation", deformation_to_json(d)}};
}

std::string deform_extend_json(const std::string& text, const Dir& dir, std::optional<std::size_t> to_order) {
  const DeformationFile df = deformation_from_json(parse_json_text(text), dir);
  const std::size_t start = df.morphism ? df.morphism->order : df.algebra.order;
  const std::size_t goal = to_order.value_or(start + 1);
  if (goal <= start) throw ParseError("to_order must exceed the current order " + std::to_string(start));
  return (df.morphism ? extend_loop(*df.morphism, goal) : extend_loop(df.algebra, goal)).dump();
}

std::string selftest_json(std::uint64_t seed) {
  const auto results = run_selftest(seed);
  bool ok = true;
  for (const auto& s : results) ok = ok && s.passed();
  return Json{{"seed", seed}, {"passed", ok}, {"suites", selftest_to_json(results)}}.dump();
}

}  // namespace

PYBIND11_MODULE(_homcoh, m) {
  auto& base = py::register_exception<Error>(m, "HomcohError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("validate", &validate_json, py::arg("text"), py::arg("base_dir"));
  m.def("cohomology", &cohomology_json, py::arg("text"), py::arg("base_dir"), py::arg("lo"), py::arg("hi"), py::arg("force") = false);
  m.def("morphism_cohomology", &morphism_cohomology_json, py::arg("text"), py::arg("base_dir"), py::arg("degree"));
  m.def("deform_check", &deform_check_json, py::arg("text"), py::arg("base_dir"), py::arg("up_to") = std::nullopt);
  m.def("deform_extend", &deform_extend_json, py::arg("text"), py::arg("base_dir"), py::arg("to_order") = std::nullopt);
  m.def("selftest", &selftest_json, py::arg("seed") = default_seed);
}
