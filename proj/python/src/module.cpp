#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qholonomy/geometry.hpp"
#include "qholonomy/goldman.hpp"
#include "qholonomy/holonomy.hpp"
#include "qholonomy/intersections.hpp"
#include "qholonomy/io.hpp"
#include "qholonomy/loop_algebra.hpp"
#include "qholonomy/modular.hpp"
#include "qholonomy/verify.hpp"

namespace py = pybind11;
using namespace qholo;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints are accepted too.
Rational from_py(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.get_num().get_str() + "/" + r.get_den().get_str());
}

PLPath path_from_py(const std::vector<std::pair<py::object, py::object>>& pts) {
  std::vector<RatPoint> v;
  v.reserve(pts.size());
  for (const auto& [x, y] : pts) v.emplace_back(from_py(x), from_py(y));
  return PLPath(std::move(v));
}

py::list path_to_py(const PLPath& p) {
  py::list out;
  for (const RatPoint& v : p.vertices()) out.append(py::make_tuple(to_py(v.x), to_py(v.y)));
  return out;
}

EnumerationMode mode_from(const std::string& mode) {
  if (mode == "geometric") return EnumerationMode::Geometric;
  if (mode == "lift") return EnumerationMode::Lift;
  throw std::invalid_argument("mode must be 'geometric' or 'lift'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum holonomies of constant connections on the torus";

  m.def("signed_area_loop", [](const std::vector<std::pair<py::object, py::object>>& loop) {
    return to_py(signed_area_loop(path_from_py(loop)));
  });
  m.def("signed_area_between", [](const std::vector<std::pair<py::object, py::object>>& p,
                                   const std::vector<std::pair<py::object, py::object>>& p2) {
    return to_py(signed_area_between(path_from_py(p), path_from_py(p2)));
  });
  m.def(
      "holonomy",
      [](const std::vector<std::pair<py::object, py::object>>& p) {
        const HolonomyWord w = holonomy_of_path(path_from_py(p));
        return py::make_tuple(to_py(w.phase), to_py(w.alpha), to_py(w.beta));
      },
      "(phase, alpha, beta) of q^phase exp(alpha r1 + beta r2).");
  m.def("concat", [](const std::vector<std::pair<py::object, py::object>>& p,
                     const std::vector<std::pair<py::object, py::object>>& p2) {
    return path_to_py(concat(path_from_py(p), path_from_py(p2)));
  });
  m.def("inverse",
        [](const std::vector<std::pair<py::object, py::object>>& p) { return path_to_py(inverse(path_from_py(p))); });

  m.def("intersections_json", [](long m1, long n1, long m2, long n2, const std::string& mode) {
    const StraightLoop p1(m1, n1), p2(m2, n2);
    return intersections_to_json(enumerate(p1, p2, mode_from(mode)), total_intersection_number(p1, p2)).dump();
  });
  m.def("commutator_json",
        [](long a, long b, long c, long d) { return to_json(commutator_straight(a, b, c, d)).dump(); });
  m.def("poisson_json", [](long a, long b, long c, long d) { return to_json(poisson_bracket(a, b, c, d)).dump(); });
  m.def("goldman_json",
        [](long a, long b, long c, long d) { return to_json(goldman_quantum({a, b}, {c, d})).dump(); });
  m.def("bracket_report_json",
        [](long a, long b, long c, long d) { return to_json(verify_bracket_equality({a, b}, {c, d})).dump(); });
  m.def("commutator_latex", [](long a, long b, long c, long d) {
    const LoopClass order[] = {LoopClass::canonical(a + c, b + d), LoopClass::canonical(a - c, b - d)};
    return to_latex_factored(commutator_straight(a, b, c, d), order);
  });
  m.def("relations_json", []() { return to_json(check_relations(true)).dump(); });
  m.def(
      "verify",
      [](long sweep, std::uint64_t seed, int cases) {
        py::gil_scoped_release release;
        return run_verification(sweep, seed, cases).all_passed();
      },
      py::arg("sweep") = 2, py::arg("seed") = 20041201, py::arg("cases") = 50);
}
