#include "tropmod/graph.hpp"

#include "tropmod/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace tropmod {

Graph Graph::make(std::vector<VertexId> vertices, std::vector<DartSpec> darts)
{
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw Error(ErrorCode::DuplicateId, "vertex listed twice");
    g.vertices_ = std::move(vertices);
    for (VertexId v : g.vertices_)
        g.out_[v];

    for (const DartSpec& d : darts) {
        if (!g.darts_.emplace(d.id, DartRecord{d.op, d.src}).second)
            throw Error(ErrorCode::DuplicateId, "dart " + std::to_string(d.id) + " listed twice");
        if (!g.has_vertex(d.src))
            throw Error(ErrorCode::DanglingDart,
                        "dart " + std::to_string(d.id) + " has unknown source " + std::to_string(d.src));
    }
    for (const auto& [id, rec] : g.darts_) {
        if (rec.op == id)
            throw Error(ErrorCode::BadInvolution, "dart " + std::to_string(id) + " is its own opposite");
        auto it = g.darts_.find(rec.op);
        if (it == g.darts_.end() || it->second.op != id)
            throw Error(ErrorCode::BadInvolution, "op is not an involution at dart " + std::to_string(id));
        g.out_[rec.src].push_back(id);
    }
    return g;
}

std::vector<DartId> Graph::darts() const
{
    std::vector<DartId> out;
    out.reserve(darts_.size());
    for (const auto& [id, rec] : darts_)
        out.push_back(id);
    return out;
}

std::vector<DartId> Graph::edges() const
{
    std::vector<DartId> out;
    for (const auto& [id, rec] : darts_)
        if (id < rec.op)
            out.push_back(id);
    return out;
}

bool Graph::has_vertex(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

DartId Graph::op(DartId d) const
{
    auto it = darts_.find(d);
    if (it == darts_.end())
        throw Error(ErrorCode::UnknownEdge, "unknown dart " + std::to_string(d));
    return it->second.op;
}

VertexId Graph::src(DartId d) const
{
    auto it = darts_.find(d);
    if (it == darts_.end())
        throw Error(ErrorCode::UnknownEdge, "unknown dart " + std::to_string(d));
    return it->second.src;
}

DartId Graph::edge_of(DartId d) const
{
    return std::min(d, op(d));
}

const std::vector<DartId>& Graph::darts_from(VertexId v) const
{
    auto it = out_.find(v);
    if (it == out_.end())
        throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<DartId> Graph::darts_between(VertexId x, VertexId y) const
{
    std::vector<DartId> out;
    for (DartId d : darts_from(x))
        if (tgt(d) == y)
            out.push_back(d);
    return out;
}

std::vector<DartId> Graph::edges_between(VertexId x, VertexId y) const
{
    std::set<DartId> out;
    for (DartId d : darts_between(x, y))
        out.insert(edge_of(d));
    return {out.begin(), out.end()};
}

VertexId Graph::fresh_vertex_id() const
{
    return vertices_.empty() ? 0 : vertices_.back() + 1;
}

DartId Graph::fresh_dart_pair() const
{
    if (darts_.empty())
        return 0;
    DartId next = darts_.rbegin()->first + 1;
    return next + (next % 2);
}

bool operator==(const Graph& a, const Graph& b)
{
    if (a.vertices_ != b.vertices_ || a.darts_.size() != b.darts_.size())
        return false;
    return std::equal(a.darts_.begin(), a.darts_.end(), b.darts_.begin(), [](const auto& x, const auto& y) {
        return x.first == y.first && x.second.op == y.second.op && x.second.src == y.second.src;
    });
}

GraphBuilder& GraphBuilder::vertex(VertexId v)
{
    vertices_.push_back(v);
    return *this;
}

GraphBuilder& GraphBuilder::edge(std::uint32_t edge_id, VertexId from, VertexId to)
{
    darts_.push_back({2 * edge_id, 2 * edge_id + 1, from});
    darts_.push_back({2 * edge_id + 1, 2 * edge_id, to});
    return *this;
}

Graph GraphBuilder::build() const
{
    return Graph::make(vertices_, darts_);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g)
{
    std::map<VertexId, bool> seen;
    std::vector<std::vector<VertexId>> blocks;
    for (VertexId start : g.vertices()) {
        if (seen[start])
            continue;
        std::vector<VertexId> block;
        std::queue<VertexId> todo;
        todo.push(start);
        seen[start] = true;
        while (!todo.empty()) {
            VertexId v = todo.front();
            todo.pop();
            block.push_back(v);
            for (DartId d : g.darts_from(v)) {
                VertexId w = g.tgt(d);
                if (!seen[w]) {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::size_t component_count(const Graph& g)
{
    return connected_components(g).size();
}

std::size_t genus(const Graph& g)
{
    // |E| - |V| + c is the first Betti number of the realization and never negative.
    return g.edge_count() + component_count(g) - g.vertex_count();
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices)
{
    std::set<VertexId> keep(vertices.begin(), vertices.end());
    std::vector<DartSpec> darts;
    for (DartId d : g.darts())
        if (keep.count(g.src(d)) && keep.count(g.tgt(d)))
            darts.push_back({d, g.op(d), g.src(d)});
    return Graph::make({keep.begin(), keep.end()}, std::move(darts));
}

std::size_t valency(const Graph& g, VertexId v)
{
    if (!g.has_vertex(v))
        throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));
    return g.darts_from(v).size();
}

namespace {

struct IsoProfile {
    std::map<VertexId, std::size_t> valency;
    std::map<VertexId, std::size_t> loops;
    std::map<std::pair<VertexId, VertexId>, std::size_t> multiplicity;

    explicit IsoProfile(const Graph& g)
    {
        for (VertexId v : g.vertices()) {
            valency[v] = g.darts_from(v).size();
            loops[v] = 0;
        }
        for (DartId e : g.edges()) {
            VertexId a = g.src(e), b = g.tgt(e);
            if (a == b)
                ++loops[a];
            ++multiplicity[std::minmax(a, b)];
        }
    }

    std::size_t mult(VertexId a, VertexId b) const
    {
        auto it = multiplicity.find(std::minmax(a, b));
        return it == multiplicity.end() ? 0 : it->second;
    }
};

/// Breadth-first order from the smallest vertex of each component so that
/// adjacency constraints prune as early as possible.
std::vector<VertexId> search_order(const Graph& g)
{
    std::vector<VertexId> order;
    for (const auto& block : connected_components(g)) {
        std::set<VertexId> seen{block.front()};
        std::queue<VertexId> todo;
        todo.push(block.front());
        while (!todo.empty()) {
            VertexId v = todo.front();
            todo.pop();
            order.push_back(v);
            std::set<VertexId> next;
            for (DartId d : g.darts_from(v))
                next.insert(g.tgt(d));
            for (VertexId w : next)
                if (seen.insert(w).second)
                    todo.push(w);
        }
    }
    return order;
}

class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h, const IsoConstraints& c,
              const std::function<bool(const GraphIso&)>& visit)
        : g_(g), h_(h), c_(c), visit_(visit), pg_(g), ph_(h), order_(search_order(g)), edges_(g.edges())
    {
        for (DartId e : h.edges())
            h_edges_[std::minmax(h.src(e), h.tgt(e))].push_back(e);
    }

    void run()
    {
        if (g_.vertex_count() != h_.vertex_count() || g_.dart_count() != h_.dart_count())
            return;
        std::vector<std::size_t> vg, vh;
        for (auto& [v, k] : pg_.valency)
            vg.push_back(k);
        for (auto& [v, k] : ph_.valency)
            vh.push_back(k);
        std::sort(vg.begin(), vg.end());
        std::sort(vh.begin(), vh.end());
        if (vg != vh)
            return;
        assign_vertex(0);
    }

private:
    bool assign_vertex(std::size_t depth)
    {
        if (depth == order_.size())
            return assign_edge(0);
        VertexId x = order_[depth];
        for (VertexId y : h_.vertices()) {
            if (used_vertices_.count(y) || pg_.valency.at(x) != ph_.valency.at(y) || pg_.loops.at(x) != ph_.loops.at(y))
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                VertexId x2 = order_[i];
                ok = pg_.mult(x, x2) == ph_.mult(y, iso_.vertex_map.at(x2));
            }
            if (!ok || (c_.vertex_ok && !c_.vertex_ok(x, y)))
                continue;
            iso_.vertex_map[x] = y;
            used_vertices_.insert(y);
            bool keep_going = assign_vertex(depth + 1);
            used_vertices_.erase(y);
            iso_.vertex_map.erase(x);
            if (!keep_going)
                return false;
        }
        return true;
    }

    bool assign_edge(std::size_t k)
    {
        if (k == edges_.size())
            return visit_(iso_);
        DartId d = edges_[k];
        VertexId x = iso_.vertex_map.at(g_.src(d));
        VertexId y = iso_.vertex_map.at(g_.tgt(d));
        auto it = h_edges_.find(std::minmax(x, y));
        if (it == h_edges_.end())
            return true;
        for (DartId e : it->second) {
            if (used_edges_.count(e))
                continue;
            for (DartId image : {e, h_.op(e)}) {
                if (h_.src(image) != x || h_.tgt(image) != y)
                    continue;
                if (c_.dart_ok && !c_.dart_ok(d, image))
                    continue;
                iso_.dart_map[d] = image;
                iso_.dart_map[g_.op(d)] = h_.op(image);
                used_edges_.insert(e);
                bool keep_going = assign_edge(k + 1);
                used_edges_.erase(e);
                iso_.dart_map.erase(d);
                iso_.dart_map.erase(g_.op(d));
                if (!keep_going)
                    return false;
            }
        }
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    const IsoConstraints& c_;
    const std::function<bool(const GraphIso&)>& visit_;
    IsoProfile pg_, ph_;
    std::vector<VertexId> order_;
    std::vector<DartId> edges_;
    std::map<std::pair<VertexId, VertexId>, std::vector<DartId>> h_edges_;
    GraphIso iso_;
    std::set<VertexId> used_vertices_;
    std::set<DartId> used_edges_;
};

} // namespace

void for_each_isomorphism(const Graph& g, const Graph& h, const IsoConstraints& constraints,
                          const std::function<bool(const GraphIso&)>& visit)
{
    IsoSearch(g, h, constraints, visit).run();
}

std::optional<GraphIso> find_isomorphism(const Graph& g, const Graph& h, const IsoConstraints& constraints)
{
    std::optional<GraphIso> found;
    for_each_isomorphism(g, h, constraints, [&](const GraphIso& iso) {
        found = iso;
        return false;
    });
    return found;
}

std::size_t count_isomorphisms(const Graph& g, const Graph& h, const IsoConstraints& constraints)
{
    std::size_t count = 0;
    for_each_isomorphism(g, h, constraints, [&](const GraphIso&) {
        ++count;
        return true;
    });
    return count;
}

bool is_isomorphism(const Graph& g, const Graph& h, const GraphIso& iso)
{
    if (iso.vertex_map.size() != g.vertex_count() || iso.dart_map.size() != g.dart_count())
        return false;
    std::set<VertexId> vimg;
    std::set<DartId> dimg;
    for (auto [v, w] : iso.vertex_map) {
        if (!g.has_vertex(v) || !h.has_vertex(w))
            return false;
        vimg.insert(w);
    }
    for (auto [d, e] : iso.dart_map) {
        if (!g.has_dart(d) || !h.has_dart(e))
            return false;
        dimg.insert(e);
    }
    if (vimg.size() != h.vertex_count() || dimg.size() != h.dart_count())
        return false;
    for (auto [d, e] : iso.dart_map) {
        if (iso.dart_map.at(g.op(d)) != h.op(e))
            return false;
        if (iso.vertex_map.at(g.src(d)) != h.src(e))
            return false;
    }
    return true;
}

} // namespace tropmod
