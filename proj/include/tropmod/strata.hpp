#pragma once

#include "tropmod/metric_graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tropmod {

/// One (genus, labels) pair per connected component, sorted.
using ComponentData = std::vector<std::pair<std::size_t, std::vector<int>>>;

ComponentData component_data(const MetricMarkedGraph& g);

/// Whether h lies in the epsilon-neighbourhood of g: the edges of h shorter than epsilon
/// form a forest, and after collapsing them there is an isomorphism from g whose edge
/// lengths and mark positions are all within epsilon (strictly).
/// Throws EpsilonOutOfRange unless 0 < epsilon < r(g)/2, MarkCountMismatch on differing n.
bool in_neighborhood(const MetricMarkedGraph& h, const MetricMarkedGraph& g, const Rational& epsilon);

struct StratumSlot {
    enum class Kind { Vertex, Edge };
    Kind kind;
    /// Vertex id, or the canonical dart of the edge.
    std::uint32_t id;

    friend bool operator==(const StratumSlot&, const StratumSlot&) = default;
};

/// Index of a standard stratum: a graph plus, for each mark, the vertex or open edge it
/// is confined to.
struct StratumIndex {
    Graph graph;
    std::vector<StratumSlot> slots;
};

/// Throws UnknownVertex/UnknownEdge for dangling slots; edge slots are canonicalized.
StratumIndex make_stratum(Graph graph, std::vector<StratumSlot> slots);

std::size_t stratum_dimension(const StratumIndex& s);

/// Isomorphism of graphs carrying slot k to slot k.
bool strata_equivalent(const StratumIndex& a, const StratumIndex& b);

enum class BoundaryMode { OneStep, Closure };

/// Strata in the boundary reachable by one move (slot edge -> endpoint, or collapse of a
/// non-loop edge), or by any sequence of moves. Deduplicated, in discovery order.
std::vector<StratumIndex> boundary_strata(const StratumIndex& s, BoundaryMode mode);

StratumIndex parse_stratum(std::string_view text);
StratumIndex load_stratum(const std::filesystem::path& path);
std::string format_stratum(const StratumIndex& s, std::string_view name = "s");

} // namespace tropmod
