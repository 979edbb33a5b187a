// Thin binding: documents cross the boundary as JSON text, the Python
// package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "houghton/complex.hpp"
#include "houghton/homology.hpp"
#include "houghton/io.hpp"
#include "houghton/poset.hpp"
#include "houghton/random.hpp"
#include "houghton/suites.hpp"

namespace py = pybind11;
using namespace houghton;

namespace {

GenMap load(const std::string& text) { return genmap_from_json(parse_json_text(text)); }

ElementKind kind_of(const std::string& k) {
  if (k == "T") return ElementKind::T;
  if (k == "M") return ElementKind::M;
  if (k == "Gn") return ElementKind::Gn;
  if (k == "Gtilde") return ElementKind::Gtilde;
  fail(ErrorCode::PreconditionFailed, "element kind must be T, M, Gn or Gtilde");
}

}  // namespace

PYBIND11_MODULE(_houghton, m) {
  static py::exception<Error> error(m, "HoughtonError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(std::string(code_name(e.code())) + ": " + e.detail());
      exc.attr("code") = std::string(code_name(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("validate", [](const std::string& doc) {
    GenMap g = load(doc);
    MapClass c = validate(g);
    Json j = to_json(c);
    j["phi"] = c.is_bijective ? Json(phi(g)) : Json(nullptr);
    return j.dump();
  });
  m.def("compose", [](const std::string& a, const std::string& b) { return to_json(compose(load(a), load(b))).dump(); });
  m.def("invert", [](const std::string& a) { return to_json(invert(load(a))).dump(); });
  m.def("apply", [](const std::string& a, Int x, Int y, int q) {
    GenMap g = load(a);
    validate(g);
    Point p = g.apply({x, y, q});
    return std::make_tuple(p.x, p.y, p.quadrant);
  });
  m.def("grade", [](const std::string& a) { return grade(load(a)); });
  m.def("decompose", [](const std::string& a) { return to_json(decompose(load(a))).dump(); });
  m.def("translation", [](const std::vector<Int>& e) { return to_json(translation_map(e)).dump(); });
  m.def("random_element", [](const std::string& kind, int n, std::uint64_t seed) {
    return to_json(random_element(kind_of(kind), n, {}, seed)).dump();
  });
  m.def("sigma_nk_homology", [](int n, int k) { return to_json(reduced_homology(sigma_nk(n, k))).dump(); });
  m.def("complex_homology", [](const std::string& doc) {
    return to_json(reduced_homology(complex_from_json(parse_json_text(doc)))).dump();
  });
  m.def("verify", [](const std::string& suite, int trials, std::uint64_t seed) {
    return to_json(run_suite(suite, trials, seed)).dump();
  });
  m.def("suite_names", [] {
    std::vector<std::string> v;
    for (const auto& s : suite_catalog()) v.push_back(s.name);
    return v;
  });
}
