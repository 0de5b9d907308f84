#include "tropmod/contraction.hpp"

#include "tropmod/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace tropmod {

namespace {

struct UnionFind {
    std::map<VertexId, VertexId> parent;

    VertexId find(VertexId v)
    {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v)
            return v;
        return it->second = find(it->second);
    }

    bool unite(VertexId a, VertexId b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace

Contraction contract_forest(const Graph& g, const std::vector<DartId>& edges)
{
    std::set<DartId> collapsed;
    for (DartId d : edges) {
        if (!g.has_dart(d))
            throw Error(ErrorCode::UnknownEdge, "unknown edge with dart " + std::to_string(d));
        collapsed.insert(g.edge_of(d));
    }
    UnionFind uf;
    for (DartId e : collapsed)
        if (!uf.unite(g.src(e), g.tgt(e)))
            throw Error(ErrorCode::NotAForest, "edge set contains a cycle (through dart " + std::to_string(e) + ")");

    std::map<VertexId, std::vector<VertexId>> blocks;
    for (VertexId v : g.vertices())
        blocks[uf.find(v)].push_back(v);

    Contraction out;
    std::vector<VertexId> vertices;
    VertexId fresh = g.fresh_vertex_id();
    for (const auto& [root, members] : blocks) {
        const VertexId image = members.size() == 1 ? members.front() : fresh++;
        vertices.push_back(image);
        for (VertexId v : members)
            out.vertex_map[v] = image;
    }
    std::vector<DartSpec> darts;
    for (DartId d : g.darts())
        if (!collapsed.count(g.edge_of(d)))
            darts.push_back({d, g.op(d), out.vertex_map.at(g.src(d))});
    out.graph = Graph::make(std::move(vertices), std::move(darts));
    return out;
}

MetricMarkedGraph shrink_forest(const MetricMarkedGraph& g, const std::vector<DartId>& edges)
{
    const Graph& graph = g.graph();
    Contraction c = contract_forest(graph, edges);

    std::map<DartId, Rational> lengths;
    for (DartId e : c.graph.edges())
        lengths.emplace(e, g.length(e));

    std::vector<DeltaPoint> marks;
    for (const DeltaPoint& p : g.marks()) {
        if (const auto* v = std::get_if<AtVertex>(&p)) {
            marks.push_back(AtVertex{c.vertex_map.at(v->vertex)});
            continue;
        }
        const auto& in = std::get<Interior>(p);
        if (c.graph.has_dart(in.dart))
            marks.push_back(in);
        else
            marks.push_back(AtVertex{c.vertex_map.at(graph.src(in.dart))});
    }
    return MetricMarkedGraph::make(std::move(c.graph), lengths, std::move(marks));
}

MetricMarkedGraph shrink_edge(const MetricMarkedGraph& g, DartId edge)
{
    if (!g.graph().has_dart(edge))
        throw Error(ErrorCode::UnknownEdge, "unknown edge with dart " + std::to_string(edge));
    if (g.graph().is_loop(edge))
        throw Error(ErrorCode::LoopNotContractible, "dart " + std::to_string(edge) + " belongs to a loop");
    return shrink_forest(g, {edge});
}

std::vector<DartId> bridges(const Graph& g)
{
    struct Frame {
        VertexId v;
        DartId entry;
        bool has_entry;
        std::size_t next;
    };
    std::map<VertexId, std::size_t> disc, low;
    std::vector<DartId> out;
    std::size_t clock = 0;

    for (VertexId root : g.vertices()) {
        if (disc.count(root))
            continue;
        std::vector<Frame> stack{{root, 0, false, 0}};
        disc[root] = low[root] = clock++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& out_darts = g.darts_from(f.v);
            if (f.next < out_darts.size()) {
                const DartId d = out_darts[f.next++];
                // Only the exact reverse of the entering dart is the tree edge; a parallel
                // edge back to the parent is a genuine back edge.
                if (f.has_entry && d == g.op(f.entry))
                    continue;
                const VertexId w = g.tgt(d);
                if (auto it = disc.find(w); it != disc.end()) {
                    low[f.v] = std::min(low[f.v], it->second);
                } else {
                    disc[w] = low[w] = clock++;
                    stack.push_back({w, d, true, 0});
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (done.has_entry) {
                const VertexId parent = g.src(done.entry);
                low[parent] = std::min(low[parent], low[done.v]);
                if (low[done.v] > disc[parent])
                    out.push_back(g.edge_of(done.entry));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MetricMarkedGraph retract(const MetricMarkedGraph& g, const Rational& t)
{
    if (t < 0 || t > 1)
        throw Error(ErrorCode::BadParameter, "retraction parameter must lie in [0, 1], got " + to_string(t));
    const std::vector<DartId> br = bridges(g.graph());
    if (t == 0)
        return shrink_forest(g, br);
    if (t == 1)
        return g;

    const std::set<DartId> is_bridge(br.begin(), br.end());
    std::map<DartId, Rational> lengths = g.lengths();
    for (DartId e : br)
        lengths[e] *= t;
    std::vector<DeltaPoint> marks = g.marks();
    for (DeltaPoint& p : marks)
        if (auto* in = std::get_if<Interior>(&p); in && is_bridge.count(in->dart))
            in->offset *= t;
    return MetricMarkedGraph::make(g.graph(), lengths, std::move(marks));
}

bool tm_membership(const MetricMarkedGraph& g, TmVariant variant, const Rational& leaf_length)
{
    if (variant == TmVariant::TMd && leaf_length <= 0)
        throw Error(ErrorCode::BadParameter, "leaf length d must be positive");
    const Graph& graph = g.graph();
    if (component_count(graph) != 1)
        return false;
    for (const DeltaPoint& p : g.marks())
        if (!std::holds_alternative<AtVertex>(p))
            return false;

    switch (variant) {
    case TmVariant::TM:
    case TmVariant::TMb:
        for (VertexId v : graph.vertices())
            if (valency(graph, v) + g.times_marked(v) < 3)
                return false;
        return variant == TmVariant::TM || bridges(graph).empty();
    case TmVariant::TMd: {
        std::size_t leaves = 0;
        for (VertexId v : graph.vertices()) {
            const std::size_t val = valency(graph, v);
            const std::size_t marked = g.times_marked(v);
            if (val == 2)
                return false;
            if (val == 1) {
                ++leaves;
                if (marked != 1 || g.length(graph.darts_from(v).front()) != leaf_length)
                    return false;
            } else if (marked != 0) {
                return false;
            }
        }
        return leaves == g.mark_count();
    }
    }
    return false;
}

} // namespace tropmod
