#pragma once

// Shared generators for unit, property and acceptance tests.

#include "tropmod/contraction.hpp"
#include "tropmod/error.hpp"
#include "tropmod/graph_format.hpp"
#include "tropmod/strata.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace tropmod::testing {

inline Rational q(const char* text)
{
    return parse_rational(text);
}

inline MetricMarkedGraph mg(std::string_view text)
{
    return parse_metric_graph(text);
}

inline Rational random_length(std::mt19937& rng, int max_num = 12, int max_den = 4)
{
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

/// Uniform rational strictly inside (0, bound) with denominator up to `den`*denominator(bound).
inline Rational random_below(std::mt19937& rng, const Rational& bound, int den = 8)
{
    std::uniform_int_distribution<int> k(1, den - 1);
    Rational r = bound * Rational(k(rng), den);
    r.canonicalize();
    return r;
}

struct RandomGraphOptions {
    int max_vertices = 5;
    int max_edges = 8;
    int max_marks = 4;
    bool connected = false;
    bool loops = true;
    bool interior_marks = true;
};

/// Random multigraph in file convention (edge k owns darts 2k, 2k+1) with random lengths
/// and marks.
inline MetricMarkedGraph random_metric_graph(std::mt19937& rng, const RandomGraphOptions& opt = {})
{
    std::uniform_int_distribution<int> nv_dist(1, opt.max_vertices);
    const int nv = nv_dist(rng);
    GraphBuilder b;
    for (int v = 0; v < nv; ++v)
        b.vertex(static_cast<VertexId>(v));
    std::uniform_int_distribution<int> pick(0, nv - 1);
    int edge_id = 0;
    if (opt.connected)
        for (int v = 1; v < nv; ++v)
            b.edge(static_cast<std::uint32_t>(edge_id++), static_cast<VertexId>(std::uniform_int_distribution<int>(0, v - 1)(rng)), static_cast<VertexId>(v));
    const int budget = std::max(opt.max_edges - edge_id, 0);
    const int extra = std::uniform_int_distribution<int>(0, budget)(rng);
    for (int i = 0; i < extra; ++i) {
        int a = pick(rng), c = pick(rng);
        if (!opt.loops)
            while (a == c && nv > 1)
                c = pick(rng);
        if (a == c && !opt.loops)
            break;
        b.edge(static_cast<std::uint32_t>(edge_id++), static_cast<VertexId>(a), static_cast<VertexId>(c));
    }
    Graph g = b.build();
    std::map<DartId, Rational> lengths;
    for (DartId e : g.edges())
        lengths[e] = random_length(rng);

    std::vector<DeltaPoint> marks;
    const int n = std::uniform_int_distribution<int>(0, opt.max_marks)(rng);
    const auto edges = g.edges();
    for (int k = 0; k < n; ++k) {
        if (opt.interior_marks && !edges.empty() && rng() % 2 == 0) {
            DartId e = edges[rng() % edges.size()];
            marks.push_back(Interior{e, random_below(rng, lengths[e])});
        } else {
            marks.push_back(AtVertex{static_cast<VertexId>(pick(rng))});
        }
    }
    return MetricMarkedGraph::make(std::move(g), lengths, std::move(marks));
}

/// Same metric marked graph with vertex and dart ids replaced by random fresh ones.
inline MetricMarkedGraph relabel(const MetricMarkedGraph& g, std::mt19937& rng)
{
    const Graph& gr = g.graph();
    std::vector<VertexId> vids(gr.vertex_count());
    std::iota(vids.begin(), vids.end(), 100);
    std::shuffle(vids.begin(), vids.end(), rng);
    std::map<VertexId, VertexId> vmap;
    for (std::size_t i = 0; i < vids.size(); ++i)
        vmap[gr.vertices()[i]] = vids[i];

    const auto darts = gr.darts();
    std::vector<DartId> dids(darts.size());
    std::iota(dids.begin(), dids.end(), 500);
    std::shuffle(dids.begin(), dids.end(), rng);
    std::map<DartId, DartId> dmap;
    for (std::size_t i = 0; i < darts.size(); ++i)
        dmap[darts[i]] = dids[i];

    std::vector<VertexId> vs;
    for (VertexId v : gr.vertices())
        vs.push_back(vmap[v]);
    std::vector<DartSpec> specs;
    for (DartId d : darts)
        specs.push_back({dmap[d], dmap[gr.op(d)], vmap[gr.src(d)]});
    std::map<DartId, Rational> lengths;
    for (DartId d : darts)
        lengths[dmap[d]] = g.length(d);
    std::vector<DeltaPoint> marks;
    for (const DeltaPoint& p : g.marks()) {
        if (auto at = std::get_if<AtVertex>(&p))
            marks.push_back(AtVertex{vmap[at->vertex]});
        else {
            auto in = std::get<Interior>(p);
            marks.push_back(Interior{dmap[in.dart], in.offset});
        }
    }
    return MetricMarkedGraph::make(Graph::make(vs, specs), lengths, marks);
}

/// Marked cycle: `k` vertices in cyclic order with the given gaps; labels 1..n spread so
/// that every vertex carries at least one.
inline MetricMarkedGraph marked_cycle(const std::vector<Rational>& gaps, const std::vector<std::vector<int>>& labels)
{
    const std::size_t k = gaps.size();
    GraphBuilder b;
    for (std::size_t v = 0; v < k; ++v)
        b.vertex(static_cast<VertexId>(v));
    for (std::size_t i = 0; i < k; ++i)
        b.edge(static_cast<std::uint32_t>(i), static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k));
    std::map<DartId, Rational> lengths;
    for (std::size_t i = 0; i < k; ++i)
        lengths[GraphBuilder::forward_dart(static_cast<std::uint32_t>(i))] = gaps[i];
    int n = 0;
    for (const auto& l : labels)
        n += static_cast<int>(l.size());
    std::vector<DeltaPoint> marks(static_cast<std::size_t>(n), AtVertex{0});
    for (std::size_t v = 0; v < k; ++v)
        for (int label : labels[v])
            marks[static_cast<std::size_t>(label - 1)] = AtVertex{static_cast<VertexId>(v)};
    return MetricMarkedGraph::make(b.build(), lengths, marks);
}

struct CycleSpec {
    std::vector<Rational> gaps;
    std::vector<std::vector<int>> labels;
};

inline CycleSpec random_cycle_spec(std::mt19937& rng, int n)
{
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    CycleSpec s;
    for (int i = 0; i < k; ++i)
        s.gaps.push_back(Rational(std::uniform_int_distribution<int>(1, 3)(rng)));
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    s.labels.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
        s.labels[static_cast<std::size_t>(i < k ? i : static_cast<int>(rng() % static_cast<unsigned>(k)))].push_back(labels[static_cast<std::size_t>(i)]);
    for (auto& l : s.labels)
        std::sort(l.begin(), l.end());
    return s;
}

/// Rotation by `shift` and optional reflection of a cycle specification.
inline CycleSpec move_cycle(const CycleSpec& s, std::size_t shift, bool reflect)
{
    const std::size_t k = s.gaps.size();
    CycleSpec out;
    for (std::size_t i = 0; i < k; ++i) {
        if (!reflect) {
            out.gaps.push_back(s.gaps[(i + shift) % k]);
            out.labels.push_back(s.labels[(i + shift) % k]);
        } else {
            // vertex i of the result is vertex (shift - i) of s; its outgoing gap is the
            // gap arriving at that vertex in s.
            const std::size_t v = (shift + k * 2 - i) % k;
            out.labels.push_back(s.labels[v]);
            out.gaps.push_back(s.gaps[(v + k - 1) % k]);
        }
    }
    return out;
}

/// Random stratum on a small random graph.
inline StratumIndex random_stratum(std::mt19937& rng, int max_edges = 5, int max_marks = 3)
{
    RandomGraphOptions opt;
    opt.max_vertices = 4;
    opt.max_edges = max_edges;
    opt.max_marks = 0;
    const auto g = random_metric_graph(rng, opt).graph();
    const int n = std::uniform_int_distribution<int>(0, max_marks)(rng);
    const auto edges = g.edges();
    std::vector<StratumSlot> slots;
    for (int k = 0; k < n; ++k) {
        if (!edges.empty() && rng() % 2 == 0)
            slots.push_back({StratumSlot::Kind::Edge, edges[rng() % edges.size()]});
        else
            slots.push_back({StratumSlot::Kind::Vertex, g.vertices()[rng() % g.vertex_count()]});
    }
    return make_stratum(g, slots);
}

/// Random subset of non-loop edges forming a forest.
inline std::vector<DartId> random_forest(const Graph& g, std::mt19937& rng)
{
    std::map<VertexId, VertexId> parent;
    for (VertexId v : g.vertices())
        parent[v] = v;
    auto find = [&](VertexId v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<DartId> out;
    for (DartId e : edges) {
        if (rng() % 3 == 0)
            continue;
        VertexId a = find(g.src(e)), b = find(g.tgt(e));
        if (a == b)
            continue;
        parent[a] = b;
        out.push_back(e);
    }
    return out;
}

} // namespace tropmod::testing
