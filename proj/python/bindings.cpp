#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orbicurve/cli.hpp"
#include "orbicurve/errors.hpp"
#include "orbicurve/json_io.hpp"

namespace py = pybind11;
using namespace orbicurve;

namespace {

Signature sig(int g, int r, std::vector<int> m) { return canonicalize(Signature{g, r, std::move(m)}); }

std::string dumps(const Json& j) { return j.dump(); }

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_orbicurve, m) {
  m.doc() = "Curve orbifold group invariants";
  py::register_exception<Error>(m, "OrbicurveError", PyExc_ValueError);

  m.def("euler_characteristic", [](int g, int r, std::vector<int> ms) {
    return to_string(euler_characteristic(sig(g, r, std::move(ms))));
  });
  m.def("kind", [](int g, int r, std::vector<int> ms) { return to_string(classify_kind(sig(g, r, std::move(ms))).geometry); });
  m.def("finite_order", [](int g, int r, std::vector<int> ms) -> std::optional<std::uint64_t> {
    return finite_order(sig(g, r, std::move(ms)));
  });
  m.def("abelianization_json", [](int g, int r, std::vector<int> ms) {
    return dumps(to_json(abelianization(sig(g, r, std::move(ms)))));
  });
  m.def("isomorphism_json", [](int g1, int r1, std::vector<int> m1, int g2, int r2, std::vector<int> m2) {
    return dumps(to_json(decide_isomorphism(sig(g1, r1, std::move(m1)), sig(g2, r2, std::move(m2)))));
  });
  m.def("serre_json", [](int g, int r, std::vector<int> ms) {
    return dumps(to_json(plane_curve_realizability(sig(g, r, std::move(ms)))));
  });
  m.def("cover_json", [](int g, int r, std::vector<int> ms, std::uint64_t d) {
    return dumps(to_json(torsion_free_subgroup_rank(sig(g, r, std::move(ms)), d)));
  });
  m.def(
      "group_order_of_text",
      [](const std::string& text, std::size_t bound) -> std::optional<std::uint64_t> {
        const PresentationFile pf = parse_presentation_text(text);
        const auto t = coset_enumeration(pf.presentation, pf.subgroup_generators, bound);
        if (!t) return std::nullopt;
        return t->cosets;
      },
      py::arg("text"), py::arg("bound") = kDefaultMaxCosets);
  m.def("wallpaper_json", [](int k, std::size_t samples, std::uint64_t seed) {
    return dumps(to_json(run_wallpaper_suite(k, samples, seed)));
  });
  m.def("example_json", [](const std::string& name) { return dumps(to_json(verify_example(name))); });
  m.def("triangle_json", [](int m1, int m2, int m3, double tol) {
    const TriangleRep rep = triangle_representation(m1, m2, m3, tol);
    return dumps(to_json(rep, check_triangle_representation(rep)));
  }, py::arg("m1"), py::arg("m2"), py::arg("m3"), py::arg("tol") = kTriangleTolerance);
  m.def("run_cli", &run_cli, "Runs the command line front end; returns (exit_code, stdout, stderr).");
}
