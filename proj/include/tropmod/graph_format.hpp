#pragma once

// Line-based text format shared by the metric-graph and stratum tools:
//
//   # comment
//   graph <name>
//   v <vid>
//   e <eid> <src-vid> <dst-vid> <length>
//   mark <k> v <vid>
//   mark <k> e <eid> <offset>
//
// Edge <eid> owns darts 2*eid (leaving <src-vid>) and 2*eid+1. Offsets are measured from
// <src-vid>. Stratum files use the same records with lengths optional and `mark <k> e <eid>`
// (no offset) naming a slot.

#include "tropmod/metric_graph.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropmod {

struct RawEdge {
    std::uint32_t id;
    VertexId from;
    VertexId to;
    std::optional<Rational> length;
    int line;
};

struct RawMark {
    int label;
    bool on_edge;
    std::uint32_t target;
    std::optional<Rational> offset;
    int line;
};

/// Syntactic content of a graph file; semantic checks happen when it is turned into a
/// `MetricMarkedGraph` or a stratum.
struct RawGraphFile {
    std::string name;
    std::vector<std::pair<VertexId, int>> vertices;
    std::vector<RawEdge> edges;
    std::vector<RawMark> marks;
};

RawGraphFile parse_raw_graph(std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

/// Builds the graph part; errors are reported as ParseError with the offending line.
Graph raw_to_graph(const RawGraphFile& raw);
/// Marks must be labelled 1..n exactly once each.
std::vector<const RawMark*> ordered_marks(const RawGraphFile& raw);

MetricMarkedGraph parse_metric_graph(std::string_view text);
MetricMarkedGraph load_metric_graph(const std::filesystem::path& path);

/// File-format edge id of an edge; graphs that do not follow the 2k/2k+1 dart convention
/// are numbered by position instead.
std::map<DartId, std::uint32_t> edge_labels(const Graph& g);
std::string format_metric_graph(const MetricMarkedGraph& g, std::string_view name = "g");

} // namespace tropmod
