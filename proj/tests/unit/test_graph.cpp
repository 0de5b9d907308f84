#include "support.hpp"

#include <doctest.h>

using namespace tropmod;

namespace {

Graph loop_graph()
{
    return Graph::make({0}, {{1, 2, 0}, {2, 1, 0}});
}

Graph theta_graph()
{
    return GraphBuilder().vertex(0).vertex(1).edge(0, 0, 1).edge(1, 0, 1).edge(2, 0, 1).build();
}

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ParseError;
}

} // namespace

TEST_CASE("graph validation")
{
    CHECK(loop_graph().edge_count() == 1);
    Graph empty = Graph::make({}, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(connected_components(empty).empty());
    CHECK(genus(empty) == 0);

    CHECK(code_of([] { Graph::make({0}, {{1, 1, 0}}); }) == ErrorCode::BadInvolution);
    CHECK(code_of([] { Graph::make({0}, {{1, 2, 0}, {2, 3, 0}, {3, 2, 0}}); }) == ErrorCode::BadInvolution);
    CHECK(code_of([] { Graph::make({0}, {{1, 5, 0}}); }) == ErrorCode::BadInvolution);
    CHECK(code_of([] { Graph::make({0}, {{1, 2, 0}, {2, 1, 7}}); }) == ErrorCode::DanglingDart);
    CHECK(code_of([] { Graph::make({0, 0}, {}); }) == ErrorCode::DuplicateId);
    CHECK(code_of([] { Graph::make({0}, {{1, 2, 0}, {1, 2, 0}, {2, 1, 0}}); }) == ErrorCode::DuplicateId);
}

TEST_CASE("genus")
{
    CHECK(genus(loop_graph()) == 1);
    CHECK(genus(GraphBuilder().vertex(0).vertex(1).vertex(2).edge(0, 0, 1).edge(1, 1, 2).build()) == 0);
    CHECK(genus(theta_graph()) == 2);
    // disjoint union of two loops: first Betti number, not |E|-|V|+1
    CHECK(genus(GraphBuilder().vertex(0).vertex(1).edge(0, 0, 0).edge(1, 1, 1).build()) == 2);
}

TEST_CASE("components")
{
    CHECK(connected_components(loop_graph()) == std::vector<std::vector<VertexId>>{{0}});
    Graph c3 = GraphBuilder().vertex(0).vertex(1).vertex(2).vertex(3).edge(0, 0, 1).edge(1, 1, 2).edge(2, 2, 0).build();
    CHECK(connected_components(c3) == std::vector<std::vector<VertexId>>{{0, 1, 2}, {3}});
    CHECK(component_count(c3) == 2);
}

TEST_CASE("isomorphism")
{
    CHECK(find_isomorphism(loop_graph(), loop_graph()).has_value());
    Graph edge = GraphBuilder().vertex(0).vertex(1).edge(0, 0, 1).build();
    CHECK_FALSE(find_isomorphism(loop_graph(), edge).has_value());
    CHECK(count_isomorphisms(loop_graph(), loop_graph()) == 2);
    // theta: swap the two vertices (2) times permutations of the three edges (6)
    CHECK(count_isomorphisms(theta_graph(), theta_graph()) == 12);

    Graph g = theta_graph();
    auto iso = find_isomorphism(g, g);
    REQUIRE(iso);
    CHECK(is_isomorphism(g, g, *iso));
    GraphIso bad = *iso;
    bad.dart_map.begin()->second = bad.dart_map.rbegin()->second;
    CHECK_FALSE(is_isomorphism(g, g, bad));
}

TEST_CASE("valency")
{
    CHECK(valency(loop_graph(), 0) == 2);
    CHECK(valency(theta_graph(), 0) == 3);
    CHECK(valency(theta_graph(), 1) == 3);
    CHECK(valency(Graph::make({4}, {}), 4) == 0);
    CHECK(code_of([] { valency(loop_graph(), 9); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("dart accessors")
{
    Graph g = theta_graph();
    for (DartId d : g.darts()) {
        CHECK(g.tgt(d) == g.src(g.op(d)));
        CHECK(g.op(g.op(d)) == d);
    }
    CHECK(g.edges_between(0, 1) == g.edges_between(1, 0));
    CHECK(g.darts_between(0, 1).size() == 3);
    CHECK(code_of([&] { g.op(99); }) == ErrorCode::UnknownEdge);
}

TEST_CASE("random graphs: self-isomorphism and invariants")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = testing::random_metric_graph(rng);
        const auto h = testing::relabel(g, rng);
        auto iso = find_isomorphism(g.graph(), h.graph());
        REQUIRE(iso);
        CHECK(is_isomorphism(g.graph(), h.graph(), *iso));
        CHECK(find_isomorphism(g.graph(), g.graph()).has_value());
        CHECK(genus(g.graph()) == genus(h.graph()));
        CHECK(component_count(g.graph()) == component_count(h.graph()));
        std::size_t total = 0;
        std::multiset<std::size_t> va, vb;
        for (VertexId v : g.graph().vertices()) {
            total += valency(g.graph(), v);
            va.insert(valency(g.graph(), v));
        }
        for (VertexId v : h.graph().vertices())
            vb.insert(valency(h.graph(), v));
        CHECK(total == 2 * g.graph().edge_count());
        CHECK(va == vb);
    }
}
