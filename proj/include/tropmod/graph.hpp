#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace tropmod {

using VertexId = std::uint32_t;
using DartId = std::uint32_t;

/// A directed edge as supplied to `Graph::make`.
struct DartSpec {
    DartId id;
    DartId op;
    VertexId src;
};

/// Finite multigraph in dart form: a set of vertices, a set of darts, a
/// fixed-point-free orientation-reversing involution `op`, and a source map.
/// Loops and parallel edges are allowed.
///
/// An undirected edge is the orbit {d, op(d)}; it is named by its smaller
/// dart, see `edge_of`. Instances are immutable after `make`.
class Graph {
public:
    Graph() = default;

    /// Validates the dart axioms. Throws DuplicateId, DanglingDart or BadInvolution.
    static Graph make(std::vector<VertexId> vertices, std::vector<DartSpec> darts);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    std::vector<DartId> darts() const;
    /// Canonical (smaller) dart of every edge, ascending.
    std::vector<DartId> edges() const;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t dart_count() const { return darts_.size(); }
    std::size_t edge_count() const { return darts_.size() / 2; }

    bool has_vertex(VertexId v) const;
    bool has_dart(DartId d) const { return darts_.count(d) != 0; }

    DartId op(DartId d) const;
    VertexId src(DartId d) const;
    VertexId tgt(DartId d) const { return src(op(d)); }
    DartId edge_of(DartId d) const;
    bool is_loop(DartId d) const { return src(d) == tgt(d); }

    /// Darts with source v, ascending.
    const std::vector<DartId>& darts_from(VertexId v) const;
    /// DE(x, y): darts directed from x to y.
    std::vector<DartId> darts_between(VertexId x, VertexId y) const;
    /// E(x, y) as canonical darts; symmetric in x and y.
    std::vector<DartId> edges_between(VertexId x, VertexId y) const;

    VertexId fresh_vertex_id() const;
    /// Smallest even dart id 2k with both 2k and 2k+1 unused and above every existing dart.
    DartId fresh_dart_pair() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    struct DartRecord {
        DartId op;
        VertexId src;
    };

    std::vector<VertexId> vertices_;
    std::map<DartId, DartRecord> darts_;
    std::map<VertexId, std::vector<DartId>> out_;
};

/// Incremental construction with the file-format convention: edge k owns darts 2k (from
/// the first endpoint) and 2k+1.
class GraphBuilder {
public:
    GraphBuilder& vertex(VertexId v);
    GraphBuilder& edge(std::uint32_t edge_id, VertexId from, VertexId to);
    Graph build() const;

    static DartId forward_dart(std::uint32_t edge_id) { return 2 * edge_id; }

private:
    std::vector<VertexId> vertices_;
    std::vector<DartSpec> darts_;
};

/// Vertex and dart bijections commuting with `op` and `src`.
struct GraphIso {
    std::map<VertexId, VertexId> vertex_map;
    std::map<DartId, DartId> dart_map;
};

/// Extra compatibility rules layered over plain graph isomorphism. `dart_ok` is asked
/// once per edge of the source graph, with its canonical dart and the chosen image dart.
struct IsoConstraints {
    std::function<bool(VertexId, VertexId)> vertex_ok;
    std::function<bool(DartId, DartId)> dart_ok;
};

std::size_t genus(const Graph& g);

/// Vertex blocks of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
std::size_t component_count(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices);

/// Number of darts based at v (a loop counts twice). Throws UnknownVertex.
std::size_t valency(const Graph& g, VertexId v);

/// Backtracking search in ascending id order; `visit` returns false to stop early.
void for_each_isomorphism(const Graph& g, const Graph& h, const IsoConstraints& constraints,
                          const std::function<bool(const GraphIso&)>& visit);
std::optional<GraphIso> find_isomorphism(const Graph& g, const Graph& h,
                                         const IsoConstraints& constraints = {});
std::size_t count_isomorphisms(const Graph& g, const Graph& h, const IsoConstraints& constraints = {});

/// Checks the homomorphism laws and bijectivity of a candidate witness.
bool is_isomorphism(const Graph& g, const Graph& h, const GraphIso& iso);

} // namespace tropmod
