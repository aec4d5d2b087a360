// JSON in, JSON out: algebras and reports cross the boundary as strings.
#include <pybind11/pybind11.h>

#include "obsalg/composite.hpp"
#include "obsalg/deformation.hpp"
#include "obsalg/errors.hpp"
#include "obsalg/io.hpp"
#include "obsalg/pipeline.hpp"
#include "obsalg/report.hpp"
#include "obsalg/spectrum.hpp"
#include "obsalg/structure.hpp"
#include "obsalg/trichotomy.hpp"

namespace py = pybind11;
using namespace obsalg;

namespace {

AssocAlgebra hull_of(const AnyAlgebra& alg) {
  if (const auto* a = std::get_if<AssocAlgebra>(&alg)) return *a;
  const auto& tp = std::get<TwoProductAlgebra>(alg);
  return build_associative(tp, classify(tp));
}

const TwoProductAlgebra& two_product(const AnyAlgebra& alg) {
  if (const auto* tp = std::get_if<TwoProductAlgebra>(&alg)) return *tp;
  throw ParseError("expected a two-product algebra");
}

std::string verify_json(const std::string& text) {
  AnyAlgebra alg = load_algebra_string(text);
  if (const auto* tp = std::get_if<TwoProductAlgebra>(&alg)) return to_json(verify(*tp)).dump();
  return to_json(verify_associativity(std::get<AssocAlgebra>(alg))).dump();
}

std::string classify_json(const std::string& text) {
  return to_json(classify(two_product(load_algebra_string(text)))).dump();
}

std::string hull_json(const std::string& text) { return to_json(AnyAlgebra(hull_of(load_algebra_string(text)))).dump(); }

std::string compose_json(const std::string& a, const std::string& b, const std::string& mu, bool force) {
  ComposeOptions opt;
  opt.unchecked = force;
  auto tp = tensor_compose(two_product(load_algebra_string(a)), two_product(load_algebra_string(b)),
                           Scalar(parse_rational(mu)), opt);
  return to_json(tp).dump();
}

std::string decompose_json(const std::string& text, bool with_star, std::uint64_t seed) {
  return to_json(analyze_structure(hull_of(load_algebra_string(text)), with_star, seed)).dump();
}

std::string spectrum_json(const std::string& text, const std::string& element) {
  AnyAlgebra alg = load_algebra_string(text);
  Vector x = vector_from_json(Json::parse(element));
  if (x.size() != dim_of(alg)) throw DimensionMismatch("element length does not match the algebra dimension");
  return to_json(std::visit([&](const auto& a) { return physical_spectrum(a, x); }, alg)).dump();
}

std::string h2_json(const std::string& text) { return to_json(h2_dimension(hull_of(load_algebra_string(text)))).dump(); }

std::string pipeline_json(const std::string& text, std::uint64_t seed, std::size_t samples) {
  PipelineOptions opt;
  opt.seed = seed;
  opt.samples = samples;
  return to_json(run_pipeline(load_algebra_string(text), opt)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact observable-algebra toolkit (JSON string interface)";
  static py::exception<Error> error(m, "ObsalgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });
  m.def("verify", &verify_json, py::arg("algebra"));
  m.def("classify", &classify_json, py::arg("algebra"));
  m.def("hull", &hull_json, py::arg("algebra"));
  m.def("compose", &compose_json, py::arg("a"), py::arg("b"), py::arg("mu"), py::arg("force") = false);
  m.def("decompose", &decompose_json, py::arg("algebra"), py::arg("with_star") = true, py::arg("seed") = 0);
  m.def("spectrum", &spectrum_json, py::arg("algebra"), py::arg("element"));
  m.def("h2", &h2_json, py::arg("algebra"));
  m.def("pipeline", &pipeline_json, py::arg("algebra"), py::arg("seed") = 0, py::arg("samples") = 50);
}
