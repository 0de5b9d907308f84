#include "tropmod/strata.hpp"

#include "tropmod/contraction.hpp"
#include "tropmod/error.hpp"
#include "tropmod/graph_format.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace tropmod {

ComponentData component_data(const MetricMarkedGraph& g)
{
    const Graph& graph = g.graph();
    ComponentData data;
    for (const auto& block : connected_components(graph)) {
        const std::set<VertexId> members(block.begin(), block.end());
        std::vector<int> labels;
        for (std::size_t k = 0; k < g.mark_count(); ++k) {
            const DeltaPoint& p = g.marks()[k];
            const VertexId host = std::holds_alternative<AtVertex>(p) ? std::get<AtVertex>(p).vertex
                                                                      : graph.src(std::get<Interior>(p).dart);
            if (members.count(host))
                labels.push_back(static_cast<int>(k + 1));
        }
        data.emplace_back(genus(induced_subgraph(graph, block)), std::move(labels));
    }
    std::sort(data.begin(), data.end());
    return data;
}

namespace {

bool closer_than(const MetricMarkedGraph& g, const DeltaPoint& p, const DeltaPoint& q, const Rational& eps)
{
    try {
        return delta_distance(g, p, q) < eps;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DisconnectedPoints)
            return false;
        throw;
    }
}

} // namespace

bool in_neighborhood(const MetricMarkedGraph& h, const MetricMarkedGraph& g, const Rational& epsilon)
{
    Rational r;
    try {
        r = r_of(g);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooFewSpecialPoints)
            throw;
        throw Error(ErrorCode::EpsilonOutOfRange, "g has no admissible range");
    }
    if (epsilon <= 0 || epsilon * 2 >= r)
        throw Error(ErrorCode::EpsilonOutOfRange, "epsilon must lie in (0, " + to_string(Rational(r / 2)) + ")");
    if (h.mark_count() != g.mark_count())
        throw Error(ErrorCode::MarkCountMismatch, "graphs carry different numbers of marks");

    std::vector<DartId> short_edges;
    for (const auto& [e, len] : h.lengths())
        if (len < epsilon)
            short_edges.push_back(e);
    MetricMarkedGraph collapsed;
    try {
        collapsed = shrink_forest(h, short_edges);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotAForest)
            return false;
        throw;
    }

    IsoConstraints c;
    c.vertex_ok = [&](VertexId x, VertexId y) {
        for (int k : g.marks_at_vertex(x))
            if (!closer_than(collapsed, AtVertex{y}, collapsed.marks()[k - 1], epsilon))
                return false;
        return true;
    };
    c.dart_ok = [&](DartId d, DartId e) {
        const Rational& lg = g.length(d);
        const Rational& lh = collapsed.length(e);
        if (abs(lg - lh) >= epsilon)
            return false;
        // Marks inside the edge follow the dilation between the two edges.
        for (const auto& [k, t] : g.marks_on_dart(d))
            if (!closer_than(collapsed, Interior{e, Rational(t * lh / lg)}, collapsed.marks()[k - 1], epsilon))
                return false;
        return true;
    };
    return find_isomorphism(g.graph(), collapsed.graph(), c).has_value();
}

StratumIndex make_stratum(Graph graph, std::vector<StratumSlot> slots)
{
    for (StratumSlot& s : slots) {
        if (s.kind == StratumSlot::Kind::Vertex) {
            if (!graph.has_vertex(s.id))
                throw Error(ErrorCode::UnknownVertex, "slot refers to unknown vertex " + std::to_string(s.id));
        } else {
            if (!graph.has_dart(s.id))
                throw Error(ErrorCode::UnknownEdge, "slot refers to unknown dart " + std::to_string(s.id));
            s.id = graph.edge_of(s.id);
        }
    }
    return StratumIndex{std::move(graph), std::move(slots)};
}

std::size_t stratum_dimension(const StratumIndex& s)
{
    return s.graph.edge_count()
        + static_cast<std::size_t>(std::count_if(s.slots.begin(), s.slots.end(), [](const StratumSlot& x) {
               return x.kind == StratumSlot::Kind::Edge;
           }));
}

bool strata_equivalent(const StratumIndex& a, const StratumIndex& b)
{
    if (a.slots.size() != b.slots.size())
        return false;
    auto slots_at = [](const StratumIndex& s, StratumSlot::Kind kind, std::uint32_t id) {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < s.slots.size(); ++k)
            if (s.slots[k].kind == kind && s.slots[k].id == id)
                out.push_back(k);
        return out;
    };
    IsoConstraints c;
    c.vertex_ok = [&](VertexId x, VertexId y) {
        return slots_at(a, StratumSlot::Kind::Vertex, x) == slots_at(b, StratumSlot::Kind::Vertex, y);
    };
    c.dart_ok = [&](DartId d, DartId e) {
        return slots_at(a, StratumSlot::Kind::Edge, a.graph.edge_of(d))
            == slots_at(b, StratumSlot::Kind::Edge, b.graph.edge_of(e));
    };
    return find_isomorphism(a.graph, b.graph, c).has_value();
}

namespace {

std::vector<StratumIndex> one_step_moves(const StratumIndex& s)
{
    std::vector<StratumIndex> out;
    const Graph& g = s.graph;
    for (std::size_t k = 0; k < s.slots.size(); ++k) {
        if (s.slots[k].kind != StratumSlot::Kind::Edge)
            continue;
        const DartId e = s.slots[k].id;
        for (VertexId endpoint : {g.src(e), g.tgt(e)}) {
            StratumIndex next = s;
            next.slots[k] = {StratumSlot::Kind::Vertex, endpoint};
            out.push_back(std::move(next));
        }
    }
    for (DartId e : g.edges()) {
        if (g.is_loop(e))
            continue;
        Contraction c = contract_forest(g, {e});
        const VertexId merged = c.vertex_map.at(g.src(e));
        std::vector<StratumSlot> slots = s.slots;
        for (StratumSlot& slot : slots) {
            if (slot.kind == StratumSlot::Kind::Vertex)
                slot.id = c.vertex_map.at(slot.id);
            else if (slot.id == e)
                slot = {StratumSlot::Kind::Vertex, merged};
        }
        out.push_back(StratumIndex{std::move(c.graph), std::move(slots)});
    }
    return out;
}

bool contains_equivalent(const std::vector<StratumIndex>& pool, const StratumIndex& s)
{
    const std::size_t dim = stratum_dimension(s);
    return std::any_of(pool.begin(), pool.end(), [&](const StratumIndex& t) {
        return stratum_dimension(t) == dim && t.graph.vertex_count() == s.graph.vertex_count()
            && strata_equivalent(t, s);
    });
}

} // namespace

std::vector<StratumIndex> boundary_strata(const StratumIndex& s, BoundaryMode mode)
{
    std::vector<StratumIndex> found;
    std::deque<std::size_t> frontier;
    for (StratumIndex& cand : one_step_moves(s)) {
        if (!contains_equivalent(found, cand)) {
            found.push_back(std::move(cand));
            frontier.push_back(found.size() - 1);
        }
    }
    if (mode == BoundaryMode::OneStep)
        return found;
    while (!frontier.empty()) {
        const std::size_t i = frontier.front();
        frontier.pop_front();
        for (StratumIndex& cand : one_step_moves(found[i])) {
            if (!contains_equivalent(found, cand)) {
                found.push_back(std::move(cand));
                frontier.push_back(found.size() - 1);
            }
        }
    }
    return found;
}

StratumIndex parse_stratum(std::string_view text)
{
    const RawGraphFile raw = parse_raw_graph(text);
    Graph graph = raw_to_graph(raw);
    std::set<std::uint32_t> edge_ids;
    for (const RawEdge& e : raw.edges)
        edge_ids.insert(e.id);
    std::vector<StratumSlot> slots;
    for (const RawMark* m : ordered_marks(raw)) {
        const std::string where = "line " + std::to_string(m->line) + ": ";
        if (m->offset)
            throw Error(ErrorCode::ParseError, where + "stratum slots take no offset");
        if (m->on_edge) {
            if (!edge_ids.count(m->target))
                throw Error(ErrorCode::ParseError, where + "slot on unknown edge " + std::to_string(m->target));
            slots.push_back({StratumSlot::Kind::Edge, GraphBuilder::forward_dart(m->target)});
        } else {
            if (!graph.has_vertex(m->target))
                throw Error(ErrorCode::ParseError, where + "slot on unknown vertex " + std::to_string(m->target));
            slots.push_back({StratumSlot::Kind::Vertex, m->target});
        }
    }
    return make_stratum(std::move(graph), std::move(slots));
}

StratumIndex load_stratum(const std::filesystem::path& path)
{
    return parse_stratum(read_text_file(path));
}

std::string format_stratum(const StratumIndex& s, std::string_view name)
{
    const auto labels = edge_labels(s.graph);
    std::ostringstream out;
    out << "graph " << name << '\n';
    for (VertexId v : s.graph.vertices())
        out << "v " << v << '\n';
    for (DartId e : s.graph.edges())
        out << "e " << labels.at(e) << ' ' << s.graph.src(e) << ' ' << s.graph.tgt(e) << '\n';
    for (std::size_t k = 0; k < s.slots.size(); ++k) {
        const StratumSlot& slot = s.slots[k];
        out << "mark " << k + 1 << ' ';
        if (slot.kind == StratumSlot::Kind::Vertex)
            out << "v " << slot.id << '\n';
        else
            out << "e " << labels.at(slot.id) << '\n';
    }
    return out.str();
}

} // namespace tropmod
