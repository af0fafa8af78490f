#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>

#include "kcf/closure.hpp"
#include "kcf/error.hpp"
#include "kcf/io.hpp"
#include "kcf/lemmas.hpp"
#include "kcf/notation.hpp"
#include "kcf/pencil.hpp"
#include "kcf/rules.hpp"
#include "kcf/verifier.hpp"

namespace py = pybind11;
using kcf::KroneckerStructure;

namespace {

// Round-trips through the JSON text so Python receives plain dicts/lists.
py::object to_python(const kcf::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<std::string>> matrix_strings(const kcf::RationalMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).get_str());
  }
  return out;
}

kcf::EigenvalueAssignment assignment_from(const KroneckerStructure& k,
                                          const std::map<std::string, std::string>& values) {
  auto out = kcf::default_assignment(k);
  for (const auto& [label, value] : values) {
    kcf::Rational q;
    if (q.set_str(value, 10) != 0) throw kcf::Error(kcf::Errc::bad_parameters, "bad rational " + value);
    q.canonicalize();
    out[kcf::parse_label(label)] = q;
  }
  return out;
}

kcf::VerifyOptions options(std::optional<int> pool, std::uint64_t seed) {
  kcf::VerifyOptions o;
  o.pool_size = pool;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_kcf, m) {
  m.doc() = "Orbit codimension and closure order of Kronecker structures";

  auto& error = py::register_exception<kcf::Error>(m, "KcfError", PyExc_ValueError);
  py::register_exception<kcf::ParseError>(m, "ParseError", error.ptr());

  py::class_<KroneckerStructure>(m, "Structure")
      .def(py::init([](const std::string& text) { return kcf::parse_structure(text); }), py::arg("notation"))
      .def_property_readonly("size", [](const KroneckerStructure& k) {
        const auto d = kcf::size_of(k);
        return std::make_pair(d.rows, d.cols);
      })
      .def_property_readonly("rank", &kcf::rank_of)
      .def_property_readonly("codimension", &kcf::codimension)
      .def_property_readonly("orbit_dimension", &kcf::orbit_dimension)
      .def_property_readonly("right", &KroneckerStructure::right)
      .def_property_readonly("left", &KroneckerStructure::left)
      .def_property_readonly("jordan", [](const KroneckerStructure& k) {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& b : k.jordan()) out.emplace_back(b.eigenvalue.to_string(), b.size);
        return out;
      })
      .def("weyr", [](const KroneckerStructure& k, const std::string& label) {
        return kcf::weyr_jordan(k, kcf::parse_label(label)).values();
      })
      .def("weyr_right", [](const KroneckerStructure& k) { return kcf::weyr_singular(k, kcf::Side::right).values(); })
      .def("weyr_left", [](const KroneckerStructure& k) { return kcf::weyr_singular(k, kcf::Side::left).values(); })
      .def("canonical", &kcf::canonicalize)
      .def("to_dict", [](const KroneckerStructure& k) { return to_python(kcf::to_json(k)); })
      .def("__str__", &kcf::format_structure)
      .def("__repr__", [](const KroneckerStructure& k) { return "Structure('" + kcf::format_structure(k) + "')"; })
      .def("__eq__", [](const KroneckerStructure& a, const KroneckerStructure& b) { return a == b; })
      .def("__hash__", [](const KroneckerStructure& k) { return std::hash<std::string>{}(kcf::format_structure(k)); });

  m.def("degenerates_to", &kcf::degenerates_to, py::arg("l"), py::arg("m"),
        "True iff m lies in the closure of the orbit of l.");
  m.def("explain_degeneration", [](const KroneckerStructure& l, const KroneckerStructure& mm) {
    return to_python(kcf::to_json(kcf::explain_degeneration(l, mm)));
  }, py::arg("l"), py::arg("m"));
  m.def("same_orbit", &kcf::same_orbit);
  m.def("reachable", [](const KroneckerStructure& from, const KroneckerStructure& to, bool prune) -> py::object {
    const auto path = kcf::reachable(from, to, prune);
    if (!path) return py::none();
    py::list out;
    for (const auto& s : *path) out.append(to_python(kcf::to_json(s)));
    return out;
  }, py::arg("m"), py::arg("l"), py::arg("prune") = true);
  m.def("enumerate_structures", &kcf::enumerate_structures, py::arg("m"), py::arg("n"), py::arg("pool_size"),
        py::arg("include_infinity") = true);
  m.def("closure_graph", [](std::vector<KroneckerStructure> nodes) {
    return to_python(kcf::to_json(kcf::build_closure_graph(std::move(nodes))));
  });
  m.def("closure_graph_dot", [](std::vector<KroneckerStructure> nodes) {
    return kcf::to_dot(kcf::build_closure_graph(std::move(nodes)));
  });

  m.def("realize", [](const KroneckerStructure& k, const std::map<std::string, std::string>& values) {
    const auto p = kcf::realize(k, assignment_from(k, values));
    return std::make_pair(matrix_strings(p.a), matrix_strings(p.b));
  }, py::arg("structure"), py::arg("assignment") = std::map<std::string, std::string>{});
  m.def("tangent_codimension", [](const KroneckerStructure& k, std::optional<std::uint64_t> seed) {
    auto p = kcf::realize(k, kcf::default_assignment(k));
    if (seed) p = kcf::random_equivalence(p, *seed);
    return kcf::tangent_codimension(p);
  }, py::arg("structure"), py::arg("seed") = py::none());

  m.def("weighted_sum_bound", [](const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& delta) {
    const auto r = kcf::weighted_sum_bound(d, delta);
    return std::make_pair(r.sum, r.equality_condition_ok);
  });
  m.def("square_product_bounds", [](std::int64_t p, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    const auto r = kcf::square_product_bounds(p, a, b);
    py::dict out;
    out["squares"] = std::make_pair(r.squares.lhs, r.squares.rhs);
    out["products"] = std::make_pair(r.products.lhs, r.products.rhs);
    out["equality_iff_equal"] = r.equality_iff_equal_ok;
    return out;
  });

  auto suite = [](auto fn) {
    return [fn](int rows, int cols, std::optional<int> pool, std::uint64_t seed) {
      return to_python(kcf::to_json(fn(rows, cols, options(pool, seed))));
    };
  };
  m.def("verify_dim_theorem", suite(&kcf::verify_dim_theorem), py::arg("m"), py::arg("n"),
        py::arg("pool_size") = py::none(), py::arg("seed") = 0);
  m.def("cross_validate", suite(&kcf::cross_validate_characterizations), py::arg("m"), py::arg("n"),
        py::arg("pool_size") = py::none(), py::arg("seed") = 0);
  m.def("verify_rule_steps", suite(&kcf::verify_rule_steps), py::arg("m"), py::arg("n"),
        py::arg("pool_size") = py::none(), py::arg("seed") = 0);
  m.def("verify_formulas", suite(&kcf::verify_formula_identities), py::arg("m"), py::arg("n"),
        py::arg("pool_size") = py::none(), py::arg("seed") = 0);
}
