#pragma once

#include "tropmod/graph.hpp"
#include "tropmod/rational.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace tropmod {

struct AtVertex {
    VertexId vertex;
};

/// A point in the open edge of `dart`, `offset` measured from src(dart).
struct Interior {
    DartId dart;
    Rational offset;
};

/// A point of the realization of a graph. Interior(e, t) and Interior(op(e), l - t) are
/// the same point; `MetricMarkedGraph` stores the representative on the smaller dart.
using DeltaPoint = std::variant<AtVertex, Interior>;

bool operator==(const AtVertex& a, const AtVertex& b);
bool operator==(const Interior& a, const Interior& b);

/// Metric graph with n marked points. Edge lengths are keyed by canonical dart; mark k
/// (1-based) lives at `marks()[k - 1]`.
class MetricMarkedGraph {
public:
    MetricMarkedGraph() = default;

    /// Lengths may be keyed by either dart of an edge. Throws InvalidMetric on missing or
    /// non-positive lengths and on marks that are not points of the graph.
    static MetricMarkedGraph make(Graph graph, const std::map<DartId, Rational>& lengths,
                                  std::vector<DeltaPoint> marks);

    const Graph& graph() const { return graph_; }
    const std::map<DartId, Rational>& lengths() const { return lengths_; }
    const Rational& length(DartId d) const;
    const std::vector<DeltaPoint>& marks() const { return marks_; }
    std::size_t mark_count() const { return marks_.size(); }

    /// Canonical representative of a point; throws InvalidMetric if it is not a point.
    DeltaPoint canonical(const DeltaPoint& p) const;

    /// Ascending 1-based labels of the marks sitting at v.
    std::vector<int> marks_at_vertex(VertexId v) const;
    /// (label, offset from src(d)) for the marks in the open edge of d, ascending by label.
    std::vector<std::pair<int, Rational>> marks_on_dart(DartId d) const;
    std::size_t times_marked(VertexId v) const { return marks_at_vertex(v).size(); }

private:
    Graph graph_;
    std::map<DartId, Rational> lengths_;
    std::vector<DeltaPoint> marks_;
};

/// Shortest-path distance in the realization. Throws DisconnectedPoints.
Rational delta_distance(const MetricMarkedGraph& g, const DeltaPoint& p, const DeltaPoint& q);

/// Distances from p to every vertex of its component.
std::map<VertexId, Rational> distances_to_vertices(const MetricMarkedGraph& g, const DeltaPoint& p);

/// Vertices followed by the distinct marked points that are not vertices.
std::vector<DeltaPoint> special_points(const MetricMarkedGraph& g);

/// Minimum edge length after turning marks into vertices; the admissible range is
/// (0, r/2). Throws TooFewSpecialPoints when that graph has no edges.
Rational r_of(const MetricMarkedGraph& g);

/// Isomorphism preserving lengths exactly and carrying mark k to mark k.
/// Throws MarkCountMismatch.
std::optional<GraphIso> is_isometric(const MetricMarkedGraph& g, const MetricMarkedGraph& h);

/// Subdivides edges at interior marks so that every mark sits on a vertex.
MetricMarkedGraph marks_to_vertices(const MetricMarkedGraph& g);

struct CycleDescriptor {
    Rational circumference;
    /// (length of the arc arriving at the vertex, labels at the vertex), one per vertex.
    std::vector<std::pair<Rational, std::vector<int>>> entries;

    friend bool operator==(const CycleDescriptor& a, const CycleDescriptor& b);
};

/// Lexicographically least reading of a marked cycle over rotations and reflections.
/// Requires a connected bridge-free genus-1 graph with every vertex marked and every mark
/// on a vertex; throws NotAMarkedCycle otherwise.
CycleDescriptor cycle_canonical_form(const MetricMarkedGraph& g);

} // namespace tropmod
