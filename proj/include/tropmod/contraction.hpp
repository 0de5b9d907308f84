#pragma once

#include "tropmod/metric_graph.hpp"

#include <vector>

namespace tropmod {

/// Result of collapsing a forest of edges in a bare graph. `vertex_map` sends every old
/// vertex to the vertex it lands on; merged blocks receive fresh ids.
struct Contraction {
    Graph graph;
    std::map<VertexId, VertexId> vertex_map;
};

/// Edges are given by any of their darts. Throws UnknownEdge or NotAForest.
Contraction contract_forest(const Graph& g, const std::vector<DartId>& edges);

/// Throws LoopNotContractible or UnknownEdge.
MetricMarkedGraph shrink_edge(const MetricMarkedGraph& g, DartId edge);
/// Marks on a collapsed edge or at its endpoints move to the merged vertex.
MetricMarkedGraph shrink_forest(const MetricMarkedGraph& g, const std::vector<DartId>& edges);

/// Canonical darts of the edges whose removal disconnects their endpoints.
std::vector<DartId> bridges(const Graph& g);

/// Scales every bridge (and the marks inside it) by t in (0, 1]; collapses all bridges at
/// t = 0. Throws BadParameter outside [0, 1].
MetricMarkedGraph retract(const MetricMarkedGraph& g, const Rational& t);

enum class TmVariant { TM, TMb, TMd };

/// Membership in TM_n, TM_n^b or TM_n(d). `leaf_length` is only read for TMd and must be
/// positive there (BadParameter).
bool tm_membership(const MetricMarkedGraph& g, TmVariant variant, const Rational& leaf_length = Rational(0));

} // namespace tropmod
