#include "tropmod/graph_format.hpp"

#include "tropmod/error.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace tropmod {

namespace {

[[noreturn]] void fail(int line, const std::string& message)
{
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint32_t parse_id(std::string_view token, int line, const char* what)
{
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        fail(line, std::string("bad ") + what + " '" + std::string(token) + "'");
    return value;
}

Rational parse_scalar(std::string_view token, int line)
{
    try {
        return parse_rational(token);
    } catch (const Error& e) {
        fail(line, e.what());
    }
}

} // namespace

RawGraphFile parse_raw_graph(std::string_view text)
{
    RawGraphFile raw;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto tok = split_ws(line);
        if (tok.empty())
            continue;

        if (tok[0] == "graph") {
            if (tok.size() != 2)
                fail(line_no, "expected 'graph <name>'");
            raw.name = std::string(tok[1]);
        } else if (tok[0] == "v") {
            if (tok.size() != 2)
                fail(line_no, "expected 'v <vid>'");
            raw.vertices.emplace_back(parse_id(tok[1], line_no, "vertex id"), line_no);
        } else if (tok[0] == "e") {
            if (tok.size() != 4 && tok.size() != 5)
                fail(line_no, "expected 'e <eid> <src-vid> <dst-vid> <length>'");
            RawEdge e{parse_id(tok[1], line_no, "edge id"), parse_id(tok[2], line_no, "vertex id"),
                      parse_id(tok[3], line_no, "vertex id"), std::nullopt, line_no};
            if (tok.size() == 5)
                e.length = parse_scalar(tok[4], line_no);
            raw.edges.push_back(e);
        } else if (tok[0] == "mark") {
            if (tok.size() < 4 || tok.size() > 5)
                fail(line_no, "expected 'mark <k> v <vid>' or 'mark <k> e <eid> <offset>'");
            RawMark m{static_cast<int>(parse_id(tok[1], line_no, "mark label")), false, 0, std::nullopt, line_no};
            if (tok[2] == "v") {
                if (tok.size() != 4)
                    fail(line_no, "vertex marks take no offset");
                m.target = parse_id(tok[3], line_no, "vertex id");
            } else if (tok[2] == "e") {
                m.on_edge = true;
                m.target = parse_id(tok[3], line_no, "edge id");
                if (tok.size() == 5)
                    m.offset = parse_scalar(tok[4], line_no);
            } else {
                fail(line_no, "mark target must be 'v' or 'e'");
            }
            raw.marks.push_back(m);
        } else {
            fail(line_no, "unknown record '" + std::string(tok[0]) + "'");
        }
    }
    return raw;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph raw_to_graph(const RawGraphFile& raw)
{
    std::set<VertexId> vertices;
    for (auto [v, line] : raw.vertices)
        if (!vertices.insert(v).second)
            fail(line, "duplicate vertex " + std::to_string(v));
    std::set<std::uint32_t> edge_ids;
    GraphBuilder builder;
    for (VertexId v : vertices)
        builder.vertex(v);
    for (const RawEdge& e : raw.edges) {
        if (!edge_ids.insert(e.id).second)
            fail(e.line, "duplicate edge " + std::to_string(e.id));
        if (!vertices.count(e.from) || !vertices.count(e.to))
            fail(e.line, "edge " + std::to_string(e.id) + " refers to an unknown vertex");
        builder.edge(e.id, e.from, e.to);
    }
    return builder.build();
}

std::vector<const RawMark*> ordered_marks(const RawGraphFile& raw)
{
    std::vector<const RawMark*> slots(raw.marks.size(), nullptr);
    for (const RawMark& m : raw.marks) {
        if (m.label < 1 || static_cast<std::size_t>(m.label) > raw.marks.size())
            fail(m.line, "mark labels must be 1.." + std::to_string(raw.marks.size()));
        if (slots[m.label - 1])
            fail(m.line, "mark " + std::to_string(m.label) + " given twice");
        slots[m.label - 1] = &m;
    }
    return slots;
}

MetricMarkedGraph parse_metric_graph(std::string_view text)
{
    const RawGraphFile raw = parse_raw_graph(text);
    Graph graph = raw_to_graph(raw);

    std::map<DartId, Rational> lengths;
    std::map<std::uint32_t, const RawEdge*> by_id;
    for (const RawEdge& e : raw.edges) {
        if (!e.length)
            fail(e.line, "edge " + std::to_string(e.id) + " needs a length");
        if (*e.length <= 0)
            fail(e.line, "edge lengths must be positive");
        lengths.emplace(GraphBuilder::forward_dart(e.id), *e.length);
        by_id[e.id] = &e;
    }

    std::vector<DeltaPoint> marks;
    for (const RawMark* m : ordered_marks(raw)) {
        if (!m->on_edge) {
            if (!graph.has_vertex(m->target))
                fail(m->line, "mark on unknown vertex " + std::to_string(m->target));
            marks.push_back(AtVertex{m->target});
            continue;
        }
        auto it = by_id.find(m->target);
        if (it == by_id.end())
            fail(m->line, "mark on unknown edge " + std::to_string(m->target));
        if (!m->offset)
            fail(m->line, "edge marks need an offset");
        if (*m->offset <= 0 || *m->offset >= *it->second->length)
            fail(m->line, "offset must lie strictly between 0 and the edge length");
        marks.push_back(Interior{GraphBuilder::forward_dart(m->target), *m->offset});
    }
    return MetricMarkedGraph::make(std::move(graph), lengths, std::move(marks));
}

MetricMarkedGraph load_metric_graph(const std::filesystem::path& path)
{
    return parse_metric_graph(read_text_file(path));
}

std::map<DartId, std::uint32_t> edge_labels(const Graph& g)
{
    std::map<DartId, std::uint32_t> labels;
    bool conventional = true;
    for (DartId e : g.edges())
        conventional = conventional && e % 2 == 0 && g.op(e) == e + 1;
    std::uint32_t next = 0;
    for (DartId e : g.edges())
        labels[e] = conventional ? e / 2 : next++;
    return labels;
}

std::string format_metric_graph(const MetricMarkedGraph& g, std::string_view name)
{
    const Graph& graph = g.graph();
    const auto labels = edge_labels(graph);
    std::ostringstream out;
    out << "graph " << name << '\n';
    for (VertexId v : graph.vertices())
        out << "v " << v << '\n';
    for (DartId e : graph.edges())
        out << "e " << labels.at(e) << ' ' << graph.src(e) << ' ' << graph.tgt(e) << ' ' << to_string(g.length(e)) << '\n';
    for (std::size_t k = 0; k < g.mark_count(); ++k) {
        out << "mark " << k + 1 << ' ';
        if (const auto* v = std::get_if<AtVertex>(&g.marks()[k]))
            out << "v " << v->vertex << '\n';
        else {
            const auto& in = std::get<Interior>(g.marks()[k]);
            out << "e " << labels.at(in.dart) << ' ' << to_string(in.offset) << '\n';
        }
    }
    return out.str();
}

} // namespace tropmod
