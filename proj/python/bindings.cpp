#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rectlevel/arrangement.hpp"
#include "rectlevel/bounds.hpp"
#include "rectlevel/generators.hpp"
#include "rectlevel/instance_io.hpp"
#include "rectlevel/piercing.hpp"
#include "rectlevel/render.hpp"
#include "rectlevel/report.hpp"

namespace py = pybind11;
using namespace rectlevel;

namespace {

Family family_from_spans(const std::vector<std::array<Coord, 4>>& spans) {
    return Family::from_extents(spans);
}

std::string verify_json(const Family& f, int k,
                        std::optional<std::int64_t> known_nu) {
    VerifyOptions opts;
    opts.known_nu = known_nu;
    const BoundReport report = verify(f, k, opts);
    return dump_report(bound_report_to_json(report));
}

std::string analyze_json(const Family& f, const std::string& source, int k,
                         const std::string& engine) {
    const ArrangementProfile profile =
        engine == "oracle" ? enumerate_vertices_oracle(f) : analyze_sweep(f);
    const BoundReport report = verify(f, k);
    return dump_report(report_document(f, source, k, profile, engine, &report));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact analysis of axis-parallel rectangle families";

    py::register_exception<InvalidFamilyError>(m, "InvalidFamilyError",
                                               PyExc_ValueError);
    py::register_exception<PackingLimitError>(m, "PackingLimitError",
                                              PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<Axis>(m, "Axis")
        .value("horizontal", Axis::horizontal)
        .value("vertical", Axis::vertical)
        .value("both", Axis::both);

    py::enum_<Orientation>(m, "Orientation")
        .value("horizontal", Orientation::horizontal)
        .value("vertical", Orientation::vertical);

    py::class_<Rect>(m, "Rect")
        .def_readonly("id", &Rect::id)
        .def_readonly("x_min", &Rect::x_min)
        .def_readonly("y_min", &Rect::y_min)
        .def_readonly("x_max", &Rect::x_max)
        .def_readonly("y_max", &Rect::y_max)
        .def("__repr__", [](const Rect& r) {
            return "Rect(" + std::to_string(r.x_min) + ", " + std::to_string(r.y_min) +
                   ", " + std::to_string(r.x_max) + ", " + std::to_string(r.y_max) +
                   ")";
        });

    py::class_<Family>(m, "Family")
        .def(py::init(&family_from_spans), py::arg("spans"),
             "Build from [x_min, y_min, x_max, y_max] quadruples")
        .def("__len__", &Family::size)
        .def("__getitem__",
             [](const Family& f, std::size_t i) {
                 if (i >= f.size()) throw py::index_error();
                 return f[i];
             })
        .def("spans", [](const Family& f) {
            std::vector<std::array<Coord, 4>> spans;
            for (const Rect& r : f) spans.push_back({r.x_min, r.y_min, r.x_max, r.y_max});
            return spans;
        })
        .def("__eq__", [](const Family& a, const Family& b) { return a == b; });

    py::class_<Vertex>(m, "Vertex")
        .def_readonly("x", &Vertex::x)
        .def_readonly("y", &Vertex::y)
        .def_readonly("h_owner", &Vertex::h_owner)
        .def_readonly("v_owner", &Vertex::v_owner)
        .def_readonly("depth", &Vertex::depth)
        .def_property_readonly("kind", [](const Vertex& v) {
            return std::string(vertex_kind_name(v.kind()));
        });

    py::class_<ArrangementProfile>(m, "ArrangementProfile")
        .def_readonly("vertices", &ArrangementProfile::vertices)
        .def_readonly("depth_histogram", &ArrangementProfile::depth_histogram)
        .def_readonly("union_complexity", &ArrangementProfile::union_complexity)
        .def("vertex_count", &ArrangementProfile::vertex_count)
        .def("level_complexity", &ArrangementProfile::level_complexity, py::arg("k"))
        .def("__eq__", [](const ArrangementProfile& a, const ArrangementProfile& b) {
            return a == b;
        });

    py::class_<PiercingStructure>(m, "PiercingStructure")
        .def_readonly("lines", &PiercingStructure::lines)
        .def_readonly("witnesses", &PiercingStructure::witnesses)
        .def_readonly("sentinel", &PiercingStructure::sentinel)
        .def_readonly("floor_of", &PiercingStructure::floor_of)
        .def("line_count", &PiercingStructure::line_count);

    m.def("validate_general_position", [](const Family& f) {
        const ValidationResult result = validate_general_position(f);
        return py::make_tuple(result.ok(), result.describe());
    });
    m.def("perturb_to_general_position", &perturb_to_general_position);
    m.def("reflect", &reflect, py::arg("family"), py::arg("axis"));

    m.def("enumerate_vertices_oracle", &enumerate_vertices_oracle);
    m.def("analyze_sweep", &analyze_sweep);

    m.def("greedy_lines", &greedy_lines, py::arg("family"), py::arg("axis"));
    m.def(
        "packing_number_exact",
        [](const Family& f, int limit) {
            const PackingResult result = packing_number_exact(f, limit);
            return py::make_tuple(result.nu, result.witness);
        },
        py::arg("family"), py::arg("exact_limit") = kDefaultExactPackingLimit);
    m.def(
        "packing_bounds",
        [](const Family& f, int limit) {
            const PackingBounds bounds = packing_bounds(f, limit);
            return py::make_tuple(
                bounds.lower,
                bounds.exact ? py::cast(bounds.exact->nu) : py::none());
        },
        py::arg("family"), py::arg("exact_limit") = kDefaultExactPackingLimit);

    m.def("gen_grid", &gen_grid, py::arg("m"));
    m.def("gen_staircase", &gen_staircase, py::arg("m"));
    m.def("gen_tightness", &gen_tightness, py::arg("n"), py::arg("p"));
    m.def("gen_random", &gen_random, py::arg("n"), py::arg("seed"),
          py::arg("span") = 0);
    m.def("gen_clustered", &gen_clustered, py::arg("n"), py::arg("clusters"),
          py::arg("seed"));

    m.def("read_instance_text", &read_instance_text);
    m.def("read_instance_file", &read_instance_file);
    m.def("write_instance_text", &write_instance_text);
    m.def("write_instance_file", &write_instance_file);

    m.def("verify_json", &verify_json, py::arg("family"), py::arg("k"),
          py::arg("known_nu") = py::none());
    m.def("analyze_json", &analyze_json, py::arg("family"), py::arg("source"),
          py::arg("k"), py::arg("engine") = "sweep");

    m.def(
        "render_svg",
        [](const Family& f, bool show_lines, int k) {
            return render_svg(f, RenderOptions{show_lines, k});
        },
        py::arg("family"), py::arg("show_lines") = false, py::arg("k") = 0);
}
