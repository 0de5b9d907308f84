#include "tropmod/contraction.hpp"
#include "tropmod/error.hpp"
#include "tropmod/graph_format.hpp"
#include "tropmod/homology.hpp"
#include "tropmod/linalg.hpp"
#include "tropmod/strata.hpp"
#include "tropmod/torus.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tropmod;

namespace {

// Accepts int, str ("p/q") or fractions.Fraction.
Rational to_rational(const py::handle& value)
{
    return parse_rational(py::str(value).cast<std::string>());
}

py::object to_fraction(const Rational& r)
{
    return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

Ring ring_of(const std::string& s)
{
    if (s == "z2")
        return Ring::Z2;
    if (s == "z" || s == "int")
        return Ring::Z;
    throw Error(ErrorCode::BadParameter, "ring must be 'z2' or 'z', got '" + s + "'");
}

Space space_of(const std::string& s)
{
    if (s == "torus")
        return Space::Torus;
    if (s == "xq")
        return Space::Quotient;
    throw Error(ErrorCode::BadParameter, "space must be 'torus' or 'xq', got '" + s + "'");
}

std::vector<DartId> darts_for(const MetricMarkedGraph& g, const std::vector<std::uint32_t>& ids)
{
    std::map<std::uint32_t, DartId> by_label;
    for (auto [dart, label] : edge_labels(g.graph()))
        by_label[label] = dart;
    std::vector<DartId> out;
    for (auto id : ids) {
        auto it = by_label.find(id);
        if (it == by_label.end())
            throw Error(ErrorCode::UnknownEdge, "no edge with id " + std::to_string(id));
        out.push_back(it->second);
    }
    return out;
}

std::vector<std::uint32_t> labels_for(const MetricMarkedGraph& g, const std::vector<DartId>& darts)
{
    const auto labels = edge_labels(g.graph());
    std::vector<std::uint32_t> out;
    for (DartId d : darts)
        out.push_back(labels.at(d));
    std::sort(out.begin(), out.end());
    return out;
}

using PyChain = std::vector<std::pair<std::string, std::int64_t>>;

PyChain to_py(const Chain& c)
{
    PyChain out;
    for (const auto& [cell, coeff] : c)
        out.emplace_back(cell.to_string(), coeff);
    return out;
}

Chain from_py(const PyChain& c)
{
    Chain out;
    for (const auto& [cell, coeff] : c)
        out.emplace_back(parse_cell(cell), coeff);
    return out;
}

py::object homology_py(const ChainComplexData& data, Ring ring)
{
    const auto h = homology(data, ring);
    if (ring == Ring::Z2)
        return py::cast(h.betti);
    std::vector<std::string> groups;
    for (const auto& g : h.groups)
        groups.push_back(g.to_string());
    return py::cast(groups);
}

SparseMatrix sparse_from_rows(const std::vector<std::vector<std::int64_t>>& rows)
{
    const std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw Error(ErrorCode::BadParameter, "ragged matrix");
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j] != 0)
                m.columns[j].emplace_back(static_cast<std::uint32_t>(i), rows[i][j]);
    }
    return m;
}

} // namespace

PYBIND11_MODULE(_tropmod, m)
{
    m.doc() = "Metric graphs, moduli strata and the cubical model of T^m/Z2";

    static py::handle error_type = py::exception<Error>(m, "TropmodError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = error_type(e.what());
            exc.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<MetricMarkedGraph>(m, "MetricGraph")
        .def_property_readonly("vertex_count", [](const MetricMarkedGraph& g) { return g.graph().vertex_count(); })
        .def_property_readonly("edge_count", [](const MetricMarkedGraph& g) { return g.graph().edge_count(); })
        .def_property_readonly("mark_count", &MetricMarkedGraph::mark_count)
        .def_property_readonly("vertices", [](const MetricMarkedGraph& g) { return g.graph().vertices(); })
        .def("genus", [](const MetricMarkedGraph& g) { return genus(g.graph()); })
        .def("components", [](const MetricMarkedGraph& g) { return connected_components(g.graph()); })
        .def("valency", [](const MetricMarkedGraph& g, VertexId v) { return valency(g.graph(), v); })
        .def("bridges", [](const MetricMarkedGraph& g) { return labels_for(g, bridges(g.graph())); })
        .def("r", [](const MetricMarkedGraph& g) { return to_fraction(r_of(g)); })
        .def("component_data", &component_data)
        .def("format", [](const MetricMarkedGraph& g, const std::string& name) { return format_metric_graph(g, name); }, py::arg("name") = "g")
        .def("__repr__", [](const MetricMarkedGraph& g) {
            return "<MetricGraph |V|=" + std::to_string(g.graph().vertex_count()) + " |E|=" + std::to_string(g.graph().edge_count()) + " n=" + std::to_string(g.mark_count()) + ">";
        });

    m.def("parse_graph", &parse_metric_graph, py::arg("text"));
    m.def("load_graph", [](const std::string& path) { return load_metric_graph(path); }, py::arg("path"));
    m.def("shrink", [](const MetricMarkedGraph& g, const std::vector<std::uint32_t>& edges) { return shrink_forest(g, darts_for(g, edges)); }, py::arg("graph"), py::arg("edges"));
    m.def("retract", [](const MetricMarkedGraph& g, const py::object& t) { return retract(g, to_rational(t)); }, py::arg("graph"), py::arg("t"));
    m.def("is_isometric", [](const MetricMarkedGraph& a, const MetricMarkedGraph& b) { return is_isometric(a, b).has_value(); });
    m.def("in_neighborhood", [](const MetricMarkedGraph& h, const MetricMarkedGraph& g, const py::object& eps) { return in_neighborhood(h, g, to_rational(eps)); },
          py::arg("h"), py::arg("g"), py::arg("eps"));
    m.def(
        "tm_membership",
        [](const MetricMarkedGraph& g, const std::string& variant, const py::object& d) {
            TmVariant v;
            if (variant == "tm")
                v = TmVariant::TM;
            else if (variant == "tmb")
                v = TmVariant::TMb;
            else if (variant == "tmd")
                v = TmVariant::TMd;
            else
                throw Error(ErrorCode::BadParameter, "variant must be tm, tmb or tmd");
            return tm_membership(g, v, d.is_none() ? Rational(0) : to_rational(d));
        },
        py::arg("graph"), py::arg("variant") = "tm", py::arg("d") = py::none());

    py::class_<StratumIndex>(m, "Stratum")
        .def("dimension", &stratum_dimension)
        .def("format", [](const StratumIndex& s, const std::string& name) { return format_stratum(s, name); }, py::arg("name") = "s")
        .def("boundary", [](const StratumIndex& s, bool closure) { return boundary_strata(s, closure ? BoundaryMode::Closure : BoundaryMode::OneStep); }, py::arg("closure") = false)
        .def("equivalent", &strata_equivalent);
    m.def("parse_stratum", &parse_stratum, py::arg("text"));

    m.def("torus_cells", [](int mm, int d) {
        std::vector<std::string> out;
        for (const auto& c : torus_cells(mm, d))
            out.push_back(c.to_string());
        return out;
    });
    m.def("quotient_cells", [](int mm, int d) {
        std::vector<std::string> out;
        for (const auto& c : quotient_cells(mm, d))
            out.push_back(c.to_string());
        return out;
    });
    m.def("conjugate", [](const std::string& c) { return conjugate(parse_cell(c)).to_string(); });
    m.def("canonicalize", [](const std::string& c) { return canonicalize(parse_cell(c)).to_string(); });
    m.def("boundary", [](const std::string& c, const std::string& space, const std::string& ring) { return to_py(boundary(parse_cell(c), space_of(space), ring_of(ring))); },
          py::arg("cell"), py::arg("space") = "torus", py::arg("ring") = "z2");
    m.def("sigma_cycle", [](int mm, const std::vector<int>& subset) { return to_py(sigma_cycle(mm, subset)); });
    m.def("chain_map_q", [](const PyChain& chain, const std::string& ring) { return to_py(chain_map_q(from_py(chain), ring_of(ring))); }, py::arg("chain"), py::arg("ring") = "z2");
    m.def(
        "homology",
        [](int mm, const std::string& space, const std::string& ring, std::size_t max_m) {
            const Ring r = ring_of(ring);
            return homology_py(build_chain_complex(mm, space_of(space), r, max_m).data, r);
        },
        py::arg("m"), py::arg("space") = "xq", py::arg("ring") = "z2", py::arg("max_m") = 0);
    m.def("betti_formula", &betti_formula, py::arg("m"), py::arg("i"));
    m.def("vertex_link", [](int mm, const std::string& v) {
        const auto link = vertex_link(mm, parse_cell(v));
        return py::make_tuple(link.f_vector(), homology(link, Ring::Z2).betti);
    });
    m.def("check_formula", [](int m_max) {
        const auto r = check_formula(m_max);
        return py::make_tuple(r.ok, r.lines);
    });
    m.def("check_recursion", [](int m_max) {
        const auto r = check_recursion(m_max);
        return py::make_tuple(r.ok, r.lines);
    });
    m.def("conjecture_report", [](int mm) {
        const auto r = conjecture_report(mm);
        std::vector<std::string> groups;
        for (const auto& g : r.integral_reduced)
            groups.push_back(g.to_string());
        py::dict d;
        d["z2_reduced"] = r.z2_reduced;
        d["integral_reduced"] = groups;
        d["uct_consistent"] = r.uct_consistent;
        d["pattern_holds"] = r.pattern_holds;
        d["mismatches"] = r.mismatches;
        return d;
    });
    m.def("export_chain_complex", [](int mm, const std::string& space, const std::string& ring) { return format_chain_complex(build_chain_complex(mm, space_of(space), ring_of(ring))); },
          py::arg("m"), py::arg("space") = "xq", py::arg("ring") = "z2");
    m.def("homology_of_text", [](const std::string& text, const std::string& ring) { return homology_py(parse_chain_complex(text).data, ring_of(ring)); },
          py::arg("text"), py::arg("ring") = "z2");

    m.def("gf2_rank", [](const std::vector<std::vector<std::int64_t>>& rows) { return gf2_rank_auto(sparse_from_rows(rows)); });
    m.def("smith_normal_form", [](const std::vector<std::vector<std::int64_t>>& rows) {
        std::vector<py::int_> out;
        for (const auto& f : smith_normal_form(sparse_from_rows(rows)).factors)
            out.push_back(py::int_(py::str(f.get_str())));
        return out;
    });
}
