#include "tropmod/metric_graph.hpp"

#include "tropmod/error.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace tropmod {

bool operator==(const AtVertex& a, const AtVertex& b)
{
    return a.vertex == b.vertex;
}

bool operator==(const Interior& a, const Interior& b)
{
    return a.dart == b.dart && a.offset == b.offset;
}

MetricMarkedGraph MetricMarkedGraph::make(Graph graph, const std::map<DartId, Rational>& lengths,
                                          std::vector<DeltaPoint> marks)
{
    MetricMarkedGraph g;
    g.graph_ = std::move(graph);
    for (const auto& [d, len] : lengths) {
        if (!g.graph_.has_dart(d))
            throw Error(ErrorCode::InvalidMetric, "length given for unknown dart " + std::to_string(d));
        if (len <= 0)
            throw Error(ErrorCode::InvalidMetric, "edge lengths must be positive");
        auto [it, inserted] = g.lengths_.emplace(g.graph_.edge_of(d), len);
        if (!inserted && it->second != len)
            throw Error(ErrorCode::InvalidMetric, "conflicting lengths for dart " + std::to_string(d));
    }
    for (DartId e : g.graph_.edges())
        if (!g.lengths_.count(e))
            throw Error(ErrorCode::InvalidMetric, "missing length for edge with dart " + std::to_string(e));
    g.marks_.reserve(marks.size());
    for (const DeltaPoint& p : marks)
        g.marks_.push_back(g.canonical(p));
    return g;
}

const Rational& MetricMarkedGraph::length(DartId d) const
{
    auto it = lengths_.find(graph_.edge_of(d));
    if (it == lengths_.end())
        throw Error(ErrorCode::UnknownEdge, "unknown dart " + std::to_string(d));
    return it->second;
}

DeltaPoint MetricMarkedGraph::canonical(const DeltaPoint& p) const
{
    if (const auto* v = std::get_if<AtVertex>(&p)) {
        if (!graph_.has_vertex(v->vertex))
            throw Error(ErrorCode::InvalidMetric, "point at unknown vertex " + std::to_string(v->vertex));
        return p;
    }
    const auto& in = std::get<Interior>(p);
    if (!graph_.has_dart(in.dart))
        throw Error(ErrorCode::InvalidMetric, "point on unknown dart " + std::to_string(in.dart));
    const Rational& len = length(in.dart);
    if (in.offset <= 0 || in.offset >= len)
        throw Error(ErrorCode::InvalidMetric, "interior offset must lie strictly inside the edge");
    DartId canon = graph_.edge_of(in.dart);
    if (canon == in.dart)
        return p;
    return Interior{canon, Rational(len - in.offset)};
}

std::vector<int> MetricMarkedGraph::marks_at_vertex(VertexId v) const
{
    std::vector<int> out;
    for (std::size_t k = 0; k < marks_.size(); ++k)
        if (const auto* at = std::get_if<AtVertex>(&marks_[k]); at && at->vertex == v)
            out.push_back(static_cast<int>(k + 1));
    return out;
}

std::vector<std::pair<int, Rational>> MetricMarkedGraph::marks_on_dart(DartId d) const
{
    const DartId canon = graph_.edge_of(d);
    const Rational& len = length(d);
    std::vector<std::pair<int, Rational>> out;
    for (std::size_t k = 0; k < marks_.size(); ++k) {
        const auto* in = std::get_if<Interior>(&marks_[k]);
        if (!in || in->dart != canon)
            continue;
        out.emplace_back(static_cast<int>(k + 1), canon == d ? in->offset : Rational(len - in->offset));
    }
    return out;
}

std::map<VertexId, Rational> distances_to_vertices(const MetricMarkedGraph& g, const DeltaPoint& p)
{
    const Graph& graph = g.graph();
    using Entry = std::pair<Rational, VertexId>;
    auto later = [](const Entry& a, const Entry& b) { return a.first > b.first || (a.first == b.first && a.second > b.second); };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> heap(later);

    const DeltaPoint start = g.canonical(p);
    if (const auto* v = std::get_if<AtVertex>(&start)) {
        heap.emplace(Rational(0), v->vertex);
    } else {
        const auto& in = std::get<Interior>(start);
        heap.emplace(in.offset, graph.src(in.dart));
        heap.emplace(Rational(g.length(in.dart) - in.offset), graph.tgt(in.dart));
    }

    std::map<VertexId, Rational> dist;
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (dist.count(v))
            continue;
        dist.emplace(v, d);
        for (DartId e : graph.darts_from(v)) {
            VertexId w = graph.tgt(e);
            if (!dist.count(w))
                heap.emplace(Rational(d + g.length(e)), w);
        }
    }
    return dist;
}

Rational delta_distance(const MetricMarkedGraph& g, const DeltaPoint& p, const DeltaPoint& q)
{
    const DeltaPoint a = g.canonical(p);
    const DeltaPoint b = g.canonical(q);
    if (a == b)
        return 0;
    const auto dist = distances_to_vertices(g, a);
    const Graph& graph = g.graph();

    std::optional<Rational> best;
    auto consider = [&best](const Rational& value) {
        if (!best || value < *best)
            best = value;
    };
    if (const auto* w = std::get_if<AtVertex>(&b)) {
        if (auto it = dist.find(w->vertex); it != dist.end())
            consider(it->second);
    } else {
        const auto& in = std::get<Interior>(b);
        if (auto it = dist.find(graph.src(in.dart)); it != dist.end())
            consider(it->second + in.offset);
        if (auto it = dist.find(graph.tgt(in.dart)); it != dist.end())
            consider(it->second + (g.length(in.dart) - in.offset));
        if (const auto* pa = std::get_if<Interior>(&a); pa && pa->dart == in.dart)
            consider(abs(pa->offset - in.offset));
    }
    if (!best)
        throw Error(ErrorCode::DisconnectedPoints, "points lie in different components");
    return *best;
}

std::vector<DeltaPoint> special_points(const MetricMarkedGraph& g)
{
    std::vector<DeltaPoint> out;
    for (VertexId v : g.graph().vertices())
        out.push_back(AtVertex{v});
    for (const DeltaPoint& p : g.marks())
        if (std::holds_alternative<Interior>(p) && std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(p);
    return out;
}

MetricMarkedGraph marks_to_vertices(const MetricMarkedGraph& g)
{
    const Graph& graph = g.graph();
    std::vector<VertexId> vertices = graph.vertices();
    std::vector<DartSpec> darts;
    std::map<DartId, Rational> lengths;
    std::vector<DeltaPoint> marks = g.marks();

    VertexId next_vertex = graph.fresh_vertex_id();
    DartId next_pair = graph.fresh_dart_pair();

    for (DartId e : graph.edges()) {
        std::set<Rational> cuts;
        for (const auto& [label, offset] : g.marks_on_dart(e))
            cuts.insert(offset);
        if (cuts.empty()) {
            darts.push_back({e, graph.op(e), graph.src(e)});
            darts.push_back({graph.op(e), e, graph.tgt(e)});
            lengths.emplace(e, g.length(e));
            continue;
        }
        // The original darts keep the first segment; later segments get fresh pairs.
        std::map<Rational, VertexId> cut_vertex;
        for (const Rational& t : cuts) {
            cut_vertex.emplace(t, next_vertex);
            vertices.push_back(next_vertex++);
        }
        VertexId from = graph.src(e);
        Rational prev = 0;
        bool first = true;
        auto add_segment = [&](VertexId a, VertexId b, const Rational& len) {
            DartId fwd = first ? e : next_pair;
            DartId back = first ? graph.op(e) : next_pair + 1;
            if (!first)
                next_pair += 2;
            first = false;
            darts.push_back({fwd, back, a});
            darts.push_back({back, fwd, b});
            lengths.emplace(fwd, len);
        };
        for (const auto& [t, v] : cut_vertex) {
            add_segment(from, v, Rational(t - prev));
            from = v;
            prev = t;
        }
        add_segment(from, graph.tgt(e), Rational(g.length(e) - prev));

        for (DeltaPoint& p : marks)
            if (const auto* in = std::get_if<Interior>(&p); in && in->dart == e)
                p = AtVertex{cut_vertex.at(in->offset)};
    }
    return MetricMarkedGraph::make(Graph::make(std::move(vertices), std::move(darts)), lengths, std::move(marks));
}

Rational r_of(const MetricMarkedGraph& g)
{
    const MetricMarkedGraph subdivided = marks_to_vertices(g);
    if (subdivided.lengths().empty())
        throw Error(ErrorCode::TooFewSpecialPoints, "no two special points are joined by a path or loop");
    Rational best = subdivided.lengths().begin()->second;
    for (const auto& [e, len] : subdivided.lengths())
        best = std::min(best, len);
    return best;
}

std::optional<GraphIso> is_isometric(const MetricMarkedGraph& g, const MetricMarkedGraph& h)
{
    if (g.mark_count() != h.mark_count())
        throw Error(ErrorCode::MarkCountMismatch,
                    std::to_string(g.mark_count()) + " vs " + std::to_string(h.mark_count()) + " marks");
    IsoConstraints c;
    c.vertex_ok = [&](VertexId x, VertexId y) { return g.marks_at_vertex(x) == h.marks_at_vertex(y); };
    c.dart_ok = [&](DartId d, DartId e) {
        return g.length(d) == h.length(e) && g.marks_on_dart(d) == h.marks_on_dart(e);
    };
    return find_isomorphism(g.graph(), h.graph(), c);
}

bool operator==(const CycleDescriptor& a, const CycleDescriptor& b)
{
    return a.circumference == b.circumference && a.entries == b.entries;
}

CycleDescriptor cycle_canonical_form(const MetricMarkedGraph& g)
{
    const Graph& graph = g.graph();
    if (graph.vertex_count() == 0 || component_count(graph) != 1 || genus(graph) != 1)
        throw Error(ErrorCode::NotAMarkedCycle, "graph is not a single cycle");
    for (VertexId v : graph.vertices()) {
        if (graph.darts_from(v).size() != 2)
            throw Error(ErrorCode::NotAMarkedCycle, "vertex " + std::to_string(v) + " does not have valency 2");
        if (g.marks_at_vertex(v).empty())
            throw Error(ErrorCode::NotAMarkedCycle, "vertex " + std::to_string(v) + " is unmarked");
    }
    for (const DeltaPoint& p : g.marks())
        if (std::holds_alternative<Interior>(p))
            throw Error(ErrorCode::NotAMarkedCycle, "mark in the interior of an edge");

    // Walk once around the cycle.
    std::vector<VertexId> ring;
    std::vector<Rational> gaps;
    const VertexId start = graph.vertices().front();
    DartId d = graph.darts_from(start).front();
    Rational circumference = 0;
    do {
        ring.push_back(graph.src(d));
        gaps.push_back(g.length(d));
        circumference += g.length(d);
        const VertexId w = graph.tgt(d);
        const auto& out = graph.darts_from(w);
        d = out[0] == graph.op(d) ? out[1] : out[0];
    } while (graph.src(d) != start || ring.size() < graph.vertex_count());

    const std::size_t k = ring.size();
    std::optional<CycleDescriptor> best;
    auto offer = [&](CycleDescriptor cand) {
        if (!best || cand.entries < best->entries)
            best = std::move(cand);
    };
    for (std::size_t s = 0; s < k; ++s) {
        CycleDescriptor fwd{circumference, {}}, back{circumference, {}};
        for (std::size_t j = 0; j < k; ++j) {
            // Forward: vertex ring[s + j], arriving along gaps[s + j - 1].
            fwd.entries.emplace_back(gaps[(s + j + k - 1) % k], g.marks_at_vertex(ring[(s + j) % k]));
            // Backward: vertex ring[s - j], arriving along gaps[s - j].
            back.entries.emplace_back(gaps[(s + k - j) % k], g.marks_at_vertex(ring[(s + k - j) % k]));
        }
        offer(std::move(fwd));
        offer(std::move(back));
    }
    return *best;
}

} // namespace tropmod
