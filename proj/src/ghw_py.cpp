#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ghw/codes.hpp"
#include "ghw/formulas.hpp"
#include "ghw/geometry.hpp"
#include "ghw/gmdfun.hpp"

namespace py = pybind11;
using namespace ghw;

namespace {

PointAlgebra algebra_from_json(const std::string& family_json, const std::string& order,
                               const std::string& priority) {
  PointSet X = parse_family_json(family_json);
  MonomialOrder ord = (order.empty() && priority.empty())
                          ? default_order(X)
                          : MonomialOrder::parse(order.empty() ? "lex" : order,
                                                 priority, X.nvars);
  return make_point_algebra(std::move(X), ord);
}

py::object cell_to_py(const MatrixCell& c) {
  switch (c.kind) {
    case CellKind::Exact:
      return py::int_(c.value);
    case CellKind::Infinite:
      return py::none();
    case CellKind::Interval:
      return py::make_tuple(c.lo, c.hi);
  }
  return py::none();
}

py::list matrix_to_py(const FnMatrix& M) {
  py::list rows;
  for (const auto& row : M.cells) {
    py::list r;
    for (const auto& c : row) r.append(cell_to_py(c));
    rows.append(r);
  }
  return rows;
}

py::dict report_to_py(const VerifyReport& r) {
  py::dict d;
  d["checked"] = r.checked;
  d["violations"] = r.violations;
  d["tight"] = r.tight_instances;
  d["ok"] = r.ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(ghw, m) {
  m.doc() = "generalized Hamming weights, minimum distance functions and "
            "footprint bounds of projective evaluation codes";

  py::class_<PointAlgebra>(m, "PointAlgebra")
      .def(py::init(&algebra_from_json), py::arg("family_json"), py::arg("order") = "",
           py::arg("priority") = "")
      .def_property_readonly("size",
                             [](const PointAlgebra& A) { return A.X.size(); })
      .def_property_readonly("degree",
                             [](const PointAlgebra& A) { return A.degree; })
      .def_property_readonly("regularity",
                             [](const PointAlgebra& A) { return A.regularity; })
      .def_property_readonly("order",
                             [](const PointAlgebra& A) { return A.order.str(); })
      .def_property_readonly("family_json",
                             [](const PointAlgebra& A) { return family_to_json(A.X); })
      .def("hilbert", &hilbert_at, py::arg("d"))
      .def("generators",
           [](const PointAlgebra& A) {
             std::vector<std::string> gens;
             for (const auto& g : A.gb.gens) gens.push_back(g.str());
             return gens;
           })
      .def(
          "delta",
          [](const PointAlgebra& A, int d, int r, uint64_t budget) {
            return delta_fn(A, d, r, budget);
          },
          py::arg("d"), py::arg("r"), py::arg("budget") = 100000000ull)
      .def(
          "vartheta",
          [](const PointAlgebra& A, int d, int r, uint64_t budget) {
            return vasconcelos_fn(A, d, r, budget);
          },
          py::arg("d"), py::arg("r"), py::arg("budget") = 100000000ull)
      .def(
          "footprint",
          [](const PointAlgebra& A, int d, int r) { return footprint_fn(A, d, r); },
          py::arg("d"), py::arg("r"))
      .def(
          "weight_matrix",
          [](const PointAlgebra& A, uint64_t budget) {
            return matrix_to_py(weight_matrix(A, budget));
          },
          py::arg("budget") = 100000000ull)
      .def(
          "vasconcelos_matrix",
          [](const PointAlgebra& A, uint64_t budget) {
            return matrix_to_py(vasconcelos_matrix(A, budget));
          },
          py::arg("budget") = 100000000ull)
      .def("footprint_matrix",
           [](const PointAlgebra& A) { return matrix_to_py(footprint_matrix(A)); })
      .def(
          "zeros",
          [](const PointAlgebra& A, const std::vector<std::string>& texts) {
            std::vector<Polynomial> polys;
            for (const auto& t : texts)
              polys.push_back(parse_polynomial(A.X.field, A.X.nvars, t));
            ZeroSet V = zero_set(A.X, polys);
            return py::make_tuple(V.zeros, V.complement);
          },
          py::arg("polynomials"));

  m.def("subspace_count", &subspace_count, py::arg("n"), py::arg("r"), py::arg("q"),
        "number of r-dimensional subspaces of F_q^n, saturating at 10^18");
  m.def("cartesian_second_weight", &cartesian_second_weight, py::arg("sizes"),
        py::arg("d"));
  m.def(
      "cartesian_second_weight_min",
      [](const std::vector<int>& sizes, int d) {
        MinPair mp = cartesian_second_weight_min(sizes, d);
        return py::make_tuple(mp.value, mp.a, mp.b);
      },
      py::arg("sizes"), py::arg("d"));
  m.def("torus_second_weight", &torus_second_weight, py::arg("q"), py::arg("s"),
        py::arg("d"));
  m.def("nested_conjectured_min_distance", &nested_conjectured_min_distance,
        py::arg("sizes"), py::arg("d"));
  m.def("nested_min_distance_lower_bound", &nested_min_distance_lower_bound,
        py::arg("sizes"), py::arg("d"));
  m.def("degree_pure_powers_plus_monomial", &degree_pure_powers_plus_monomial,
        py::arg("sizes"), py::arg("a"));
  m.def(
      "verify_pi_bound",
      [](const std::vector<long>& e) { return report_to_py(verify_pi_bound(e)); },
      py::arg("e"));
  m.def(
      "verify_complement_product_bound",
      [](const std::vector<long>& e) {
        return report_to_py(verify_complement_product_bound(e));
      },
      py::arg("e"));

  m.attr("__version__") = "0.1.0";
}
