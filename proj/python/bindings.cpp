#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <chrono>

#include "smallcover/charmap.hpp"
#include "smallcover/chromatic.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/generators.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/io.hpp"
#include "smallcover/reproduce.hpp"
#include "smallcover/resolution.hpp"

namespace py = pybind11;
namespace sc = smallcover;

namespace {

std::vector<sc::BitVector> to_bits(const std::vector<std::uint32_t>& xs) {
    return {xs.begin(), xs.end()};
}

std::vector<std::uint32_t> from_bits(const std::vector<sc::BitVector>& vs) {
    std::vector<std::uint32_t> out;
    for (auto v : vs) out.push_back(v.bits());
    return out;
}

sc::Preset preset_named(const std::string& name) {
    auto p = sc::parse_preset(name);
    if (!p) throw py::value_error("unknown preset: " + name);
    return *p;
}

}  // namespace

PYBIND11_MODULE(_smallcover, m) {
    m.doc() = "Simple polytopes, characteristic maps over Z_2 and their chromatic numbers";

    auto base = py::register_exception<sc::Error>(m, "Error");
    py::register_exception<sc::InvariantError>(m, "InvariantError", base);
    py::register_exception<sc::ParseError>(m, "ParseError", base);
    py::register_exception<sc::SchemaError>(m, "SchemaError", base);
    py::register_exception<sc::NoVectorFound>(m, "NoVectorFound", base);

    py::class_<sc::Polytope>(m, "Polytope")
        .def(py::init<int, int, std::vector<sc::VertexSet>>(), py::arg("dim"), py::arg("facet_count"),
             py::arg("vertices"))
        .def(py::init<int, std::vector<std::string>, std::vector<sc::VertexSet>>(), py::arg("dim"),
             py::arg("labels"), py::arg("vertices"))
        .def_property_readonly("dim", &sc::Polytope::dim)
        .def_property_readonly("facet_count", &sc::Polytope::facet_count)
        .def_property_readonly("labels", &sc::Polytope::facet_labels)
        .def_property_readonly("vertices", &sc::Polytope::vertices)
        .def("to_json", [](const sc::Polytope& p) { return sc::canonical_dump(sc::to_json(p)); })
        .def_static("from_json", [](const std::string& text) { return sc::polytope_from_json(sc::parse_json(text)); })
        .def(py::self == py::self)
        .def("__repr__", [](const sc::Polytope& p) {
            return "<Polytope dim=" + std::to_string(p.dim()) + " facets=" + std::to_string(p.facet_count()) +
                   " vertices=" + std::to_string(p.vertex_count()) + ">";
        });

    py::class_<sc::CharMap>(m, "CharMap")
        .def(py::init([](int n, const std::vector<std::uint32_t>& vectors, const std::string& mode) {
                 auto parsed = sc::parse_map_mode(mode);
                 if (!parsed) throw py::value_error("mode must be 'general' or 'oriented'");
                 return sc::CharMap(n, to_bits(vectors), *parsed);
             }),
             py::arg("n"), py::arg("vectors"), py::arg("mode") = "general")
        .def_property_readonly("n", &sc::CharMap::n)
        .def_property_readonly("mode", [](const sc::CharMap& c) { return sc::to_string(c.mode()); })
        .def_property_readonly("vectors", [](const sc::CharMap& c) { return from_bits(c.vectors()); })
        .def("to_json", [](const sc::CharMap& c) { return sc::canonical_dump(sc::to_json(c)); })
        .def_static("from_json", [](const std::string& text) { return sc::charmap_from_json(sc::parse_json(text)); })
        .def(py::self == py::self);

    py::class_<sc::BadFace>(m, "BadFace")
        .def_readonly("face", &sc::BadFace::face)
        .def_readonly("circuit_size", &sc::BadFace::circuit_size)
        .def_readonly("witness_vertex", &sc::BadFace::witness_vertex);

    py::class_<sc::ResolutionStep>(m, "ResolutionStep")
        .def_readonly("face", &sc::ResolutionStep::face)
        .def_readonly("circuit_size", &sc::ResolutionStep::circuit_size)
        .def_readonly("new_facet_index", &sc::ResolutionStep::new_facet_index)
        .def_property_readonly("chosen_vector", [](const sc::ResolutionStep& s) { return s.chosen_vector.bits(); })
        .def_readonly("vertices_removed", &sc::ResolutionStep::vertices_removed)
        .def_readonly("vertices_added", &sc::ResolutionStep::vertices_added);

    py::class_<sc::ResolutionReport>(m, "ResolutionReport")
        .def_readonly("steps", &sc::ResolutionReport::steps)
        .def_readonly("initial_bad_count", &sc::ResolutionReport::initial_bad_count)
        .def_readonly("final_polytope", &sc::ResolutionReport::final_polytope)
        .def_readonly("final_map", &sc::ResolutionReport::final_map)
        .def_property_readonly("terminated", [](const sc::ResolutionReport& r) { return sc::to_string(r.terminated); })
        .def("to_json", [](const sc::ResolutionReport& r) { return sc::canonical_dump(sc::to_json(r)); });

    py::class_<sc::ChromaticCertificate>(m, "ChromaticCertificate")
        .def_readonly("chi", &sc::ChromaticCertificate::chi)
        .def_readonly("lower", &sc::ChromaticCertificate::lower)
        .def_readonly("upper", &sc::ChromaticCertificate::upper)
        .def_readonly("clique", &sc::ChromaticCertificate::clique)
        .def_readonly("coloring", &sc::ChromaticCertificate::coloring)
        .def_property_readonly("status", [](const sc::ChromaticCertificate& c) { return sc::to_string(c.status); });

    m.def("rank", [](const std::vector<std::uint32_t>& vs, int n) { return sc::rank(to_bits(vs), n); },
          py::arg("vectors"), py::arg("n"));
    m.def("circuits", [](const std::vector<std::uint32_t>& vs, int n) { return sc::circuits(to_bits(vs), n); },
          py::arg("vectors"), py::arg("n"));

    m.def("dual_cyclic", &sc::dual_cyclic, py::arg("n"), py::arg("m"));
    m.def("product", &sc::product);
    m.def("segment", &sc::segment);
    m.def("validate", [](const sc::Polytope& p) {
        std::vector<std::string> out;
        for (const auto& d : sc::validate(p)) out.push_back(std::string(sc::to_string(d.kind)) + ": " + d.message);
        return out;
    });
    m.def("is_face", [](const sc::Polytope& p, const sc::FaceSet& f) { return sc::is_face(p, f); });
    m.def("f_vector", &sc::f_vector);
    m.def("facet_adjacency", [](const sc::Polytope& p) {
        const auto g = sc::facet_adjacency(p);
        std::vector<std::vector<bool>> out(g.size(), std::vector<bool>(g.size()));
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j) out[i][j] = g.adjacent(i, j);
        return out;
    });
    m.def("truncate_face", [](const sc::Polytope& p, const sc::FaceSet& f) {
        auto t = sc::truncate_face(p, f);
        return py::make_tuple(t.polytope, t.new_facet);
    });

    m.def("preset", [](const std::string& name, const sc::Polytope& p) { return sc::make_preset(preset_named(name), p); },
          py::arg("name"), py::arg("polytope"));
    m.def("is_nonsingular_at",
          [](const sc::Polytope& p, const sc::CharMap& c, const sc::VertexSet& v) { return sc::is_nonsingular_at(p, c, v); });
    m.def("bad_faces", &sc::bad_faces);
    m.def("induced_coloring", [](const sc::Polytope& p, const sc::CharMap& c) {
        auto ic = sc::induced_coloring(p, c);
        return py::make_tuple(ic.colors, ic.proper, ic.colors_used);
    });
    m.def("oriented_valid", &sc::oriented_valid);
    m.def("lift_determinants", [](const sc::Polytope& p, const sc::CharMap& c) {
        std::vector<long long> dets;
        for (const auto& d : sc::lift_determinant_report(p, c).determinants) dets.push_back(d.determinant);
        return dets;
    });

    m.def("resolution_vector", [](const sc::Polytope& p, const sc::CharMap& c, const sc::FaceSet& f) {
        return sc::resolution_vector(p, c, f).bits();
    });
    m.def("resolve", [](const sc::Polytope& p, const sc::CharMap& c, int budget) { return sc::resolve(p, c, budget); },
          py::arg("polytope"), py::arg("map"), py::arg("budget") = sc::kDefaultBudget);

    m.def(
        "chromatic_number",
        [](const sc::Polytope& p, std::optional<sc::CharMap> hint, long long budget_ms) {
            return sc::chromatic_number(p, hint, std::chrono::milliseconds(budget_ms));
        },
        py::arg("polytope"), py::arg("hint") = py::none(), py::arg("time_budget_ms") = sc::kDefaultTimeBudget.count());

    m.def(
        "reproduce",
        [](const std::string& target) {
            auto t = sc::parse_reproduce_target(target);
            if (!t) throw py::value_error("target must be main, main2 or main3");
            return sc::canonical_dump(sc::to_json(sc::reproduce(*t)));
        },
        py::arg("target"), "Runs a construction and returns its JSON summary");
}
