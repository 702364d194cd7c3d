#include "hodge/bigraded.hpp"
#include "hodge/cover.hpp"
#include "hodge/errors.hpp"
#include "hodge/group.hpp"
#include "hodge/hilbert.hpp"
#include "hodge/invariants.hpp"
#include "hodge/oracle.hpp"
#include "hodge/report.hpp"
#include "hodge/surface.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

py::int_ to_py(const hodge::BigInt& x) {
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10)));
}

hodge::BigInt from_py(const py::handle& h) {
    return hodge::BigInt(py::str(h).cast<std::string>());
}

py::dict table_to_dict(const hodge::HodgeTable& t) {
    py::dict out;
    for (const auto& [deg, dim] : t.entries()) {
        out[py::make_tuple(deg.p, deg.q)] = to_py(dim);
    }
    return out;
}

hodge::SurfaceSpec surface_from_diamond(const std::string& name, int dimension, const py::dict& diamond) {
    hodge::HodgeTable::Entries entries;
    for (auto [key, value] : diamond) {
        auto pq = key.cast<std::pair<int, int>>();
        entries[hodge::Bidegree{pq.first, pq.second}] = from_py(value);
    }
    return {name, hodge::EquivHodgeTable::trivial(hodge::HodgeTable(dimension, std::move(entries)))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hodge-number computations for Hilbert schemes and deck-group quotients";

    auto base_error = py::register_exception<hodge::Error>(m, "Error");
    py::register_exception<hodge::OddCohomologyUnsupported>(m, "OddCohomologyUnsupported", base_error.ptr());

    py::class_<hodge::SurfaceSpec>(m, "Surface")
        .def_static("from_diamond", &surface_from_diamond, py::arg("name"), py::arg("dimension"),
                    py::arg("diamond"), "Surface with every class in the +1 eigenspace")
        .def_readonly("name", &hodge::SurfaceSpec::name)
        .def_property_readonly("dimension", [](const hodge::SurfaceSpec& s) { return s.hodge.dimension(); })
        .def("diamond", [](const hodge::SurfaceSpec& s) { return table_to_dict(s.diamond()); })
        .def("split", [](const hodge::SurfaceSpec& s) {
            py::dict out;
            for (const auto& [deg, split] : s.hodge.entries()) {
                out[py::make_tuple(deg.p, deg.q)] = py::make_tuple(to_py(split.plus), to_py(split.minus));
            }
            return out;
        })
        .def("__repr__", [](const hodge::SurfaceSpec& s) { return "<Surface " + s.name + ">"; });

    m.def("preset", &hodge::presets::by_name, py::arg("name"));
    m.def("parse_surface_spec", [](const std::string& text) { return hodge::parse_surface_spec(text); },
          py::arg("text"));
    m.def("load_surface_spec", [](const std::string& path) { return hodge::load_surface_spec(path); },
          py::arg("path"));

    m.def("euler", [](const hodge::SurfaceSpec& s) { return to_py(hodge::euler(s.diamond())); },
          py::arg("surface"));
    m.def("group_order",
          [](int n, const std::string& which) {
              return to_py(hodge::group_order(n, hodge::subgroup_from_string(which)));
          },
          py::arg("n"), py::arg("which"));
    m.def("classes",
          [](int n, const std::string& which) {
              py::list out;
              for (const auto& c : hodge::classes(n, hodge::subgroup_from_string(which))) {
                  py::list parts;
                  for (const auto& part : c.type.parts) {
                      parts.append(py::make_tuple(part.length, part.twist));
                  }
                  out.append(py::make_tuple(py::tuple(parts), to_py(c.size)));
              }
              return out;
          },
          py::arg("n"), py::arg("which"),
          "Signed cycle types ((length, twist), ...) with class sizes");

    m.def("invariant_dims",
          [](const hodge::SurfaceSpec& s, int n, const std::string& which) {
              return table_to_dict(hodge::invariant_dims(s.hodge, n, hodge::subgroup_from_string(which)));
          },
          py::arg("surface"), py::arg("n"), py::arg("which"));
    m.def("projector_invariant_dims",
          [](const hodge::SurfaceSpec& s, int n, const std::string& which) {
              return table_to_dict(
                  hodge::oracle::projector_invariant_dims(s.hodge, n, hodge::subgroup_from_string(which)));
          },
          py::arg("surface"), py::arg("n"), py::arg("which"));
    m.def("sym_product",
          [](const hodge::SurfaceSpec& s, int m) { return table_to_dict(hodge::sym_product(s.diamond(), m)); },
          py::arg("surface"), py::arg("m"));
    m.def("hilbert_diamond",
          [](const hodge::SurfaceSpec& s, int n) { return table_to_dict(hodge::hilbert_diamond(s.diamond(), n)); },
          py::arg("surface"), py::arg("n"));
    m.def("h_one_top", [](const hodge::SurfaceSpec& s, int n) { return to_py(hodge::h_one_top(s.diamond(), n)); },
          py::arg("surface"), py::arg("n"));
    m.def("euler_check",
          [](const hodge::SurfaceSpec& s, int n_max) {
              py::list out;
              for (const auto& row : hodge::euler_check(s.diamond(), n_max)) {
                  out.append(py::make_tuple(row.n, to_py(row.assembled), to_py(row.generating_function)));
              }
              return out;
          },
          py::arg("surface"), py::arg("n_max"));

    const auto k3e = hodge::presets::k3_enriques();
    m.def("cover_diamond_n2", [](const hodge::SurfaceSpec& s) { return table_to_dict(hodge::cover_diamond_n2(s)); },
          py::arg("surface") = k3e);
    m.def("exceptional_orbits", &hodge::exceptional_orbits, py::arg("n"));
    m.def("h2_cover", [](int n, const hodge::SurfaceSpec& s) { return to_py(hodge::h2_cover(n, s)); },
          py::arg("n"), py::arg("surface") = k3e);
    m.def("h_top_minus", [](int n, const hodge::SurfaceSpec& s) { return to_py(hodge::h_top_minus(n, s)); },
          py::arg("n"), py::arg("surface") = k3e);

    m.def("verify_paper",
          [](int n_max) {
              py::list out;
              for (const auto& r : hodge::run_paper_checks(n_max)) {
                  py::dict d;
                  d["id"] = r.id;
                  d["description"] = r.description;
                  d["expected"] = r.expected;
                  d["provenance"] = hodge::to_string(r.provenance);
                  d["actual"] = r.actual;
                  d["status"] = hodge::to_string(r.status);
                  out.append(d);
              }
              return out;
          },
          py::arg("n_max") = 6);
}
