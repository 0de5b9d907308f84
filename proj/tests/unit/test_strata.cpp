#include "support.hpp"

#include <doctest.h>

using namespace tropmod;
using testing::mg;
using testing::q;

namespace {

bool throws_code(const std::function<void()>& f, ErrorCode code)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

const char* kLoop5 = "v 0\ne 0 0 0 5\nmark 1 v 0\n";

} // namespace

TEST_CASE("component_data")
{
    const auto g = mg("v 0\nv 1\nv 2\ne 0 0 1 1\ne 1 1 0 1\nmark 1 v 0\nmark 3 v 1\nmark 2 v 2\n");
    CHECK(component_data(g) == ComponentData{{0, {2}}, {1, {1, 3}}});
    CHECK(component_data(mg("v 0\nv 1\ne 0 0 1 1\ne 1 0 1 1\ne 2 0 1 1\n")) == ComponentData{{2, {}}});
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto h = testing::random_metric_graph(rng);
        CHECK(component_data(h) == component_data(testing::relabel(h, rng)));
    }
}

TEST_CASE("in_neighborhood examples")
{
    const auto g = mg(kLoop5);
    CHECK(in_neighborhood(mg("v 0\ne 0 0 0 51/10\nmark 1 v 0\n"), g, q("3/10")));
    CHECK_FALSE(in_neighborhood(mg("v 0\ne 0 0 0 6\nmark 1 v 0\n"), g, q("3/10")));
    CHECK(in_neighborhood(mg("v 0\nv 1\ne 0 0 0 5\ne 1 0 1 1/10\nmark 1 v 1\n"), g, q("3/10")));
    CHECK(in_neighborhood(g, g, q("1/100")));

    CHECK(throws_code([&] { in_neighborhood(g, g, 0); }, ErrorCode::EpsilonOutOfRange));
    CHECK(throws_code([&] { in_neighborhood(g, g, q("5/2")); }, ErrorCode::EpsilonOutOfRange));
    CHECK(throws_code([&] { in_neighborhood(g, mg("v 0\nmark 1 v 0\n"), q("1/2")); }, ErrorCode::EpsilonOutOfRange));
    CHECK(throws_code([&] { in_neighborhood(mg("v 0\ne 0 0 0 5\n"), g, q("1/2")); }, ErrorCode::MarkCountMismatch));

    // short edges forming a cycle are not a forest
    CHECK_FALSE(in_neighborhood(mg("v 0\nv 1\ne 0 0 0 5\ne 1 0 1 1/10\ne 2 0 1 1/10\nmark 1 v 0\n"), g, q("3/10")));
    // interior mark displaced by less than epsilon
    const auto gm = mg("v 0\ne 0 0 0 5\nmark 1 e 0 2\n");
    CHECK(in_neighborhood(mg("v 0\ne 0 0 0 5\nmark 1 e 0 21/10\n"), gm, q("3/10")));
    // reflecting the loop carries offset 2 to offset 3
    CHECK(in_neighborhood(mg("v 0\ne 0 0 0 5\nmark 1 e 0 3\n"), gm, q("3/10")));
    CHECK_FALSE(in_neighborhood(mg("v 0\ne 0 0 0 5\nmark 1 e 0 1\n"), gm, q("3/10")));
}

TEST_CASE("stratum dimension and boundary")
{
    const auto loop_edge = parse_stratum("v 0\ne 0 0 0\nmark 1 e 0\n");
    CHECK(stratum_dimension(loop_edge) == 2);
    const auto loop_vertex = parse_stratum("v 0\ne 0 0 0\nmark 1 v 0\n");
    CHECK(stratum_dimension(loop_vertex) == 1);
    CHECK(stratum_dimension(parse_stratum("v 0\nv 1\nmark 1 v 0\nmark 2 v 1\n")) == 0);

    const auto one = boundary_strata(loop_edge, BoundaryMode::OneStep);
    REQUIRE(one.size() == 1);
    CHECK(strata_equivalent(one[0], loop_vertex));
    const auto closure = boundary_strata(loop_edge, BoundaryMode::Closure);
    REQUIRE(closure.size() == 1);
    CHECK(strata_equivalent(closure[0], loop_vertex));

    const auto edge = parse_stratum("v 0\nv 1\ne 0 0 1\nmark 1 e 0\n");
    const auto eb = boundary_strata(edge, BoundaryMode::OneStep);
    REQUIRE(eb.size() == 2);
    CHECK(stratum_dimension(eb[0]) == 1);
    CHECK(stratum_dimension(eb[1]) == 0);
    CHECK(boundary_strata(parse_stratum("v 0\nmark 1 v 0\n"), BoundaryMode::Closure).empty());

    CHECK(throws_code([] { parse_stratum("v 0\ne 0 0 0\nmark 1 e 0 1/2\n"); }, ErrorCode::ParseError));
    CHECK(throws_code([] { make_stratum(Graph::make({0}, {}), {{StratumSlot::Kind::Vertex, 3}}); }, ErrorCode::UnknownVertex));
    CHECK(throws_code([] { make_stratum(Graph::make({0}, {}), {{StratumSlot::Kind::Edge, 3}}); }, ErrorCode::UnknownEdge));

    const auto round = parse_stratum(format_stratum(edge));
    CHECK(strata_equivalent(round, edge));
}

TEST_CASE("random strata: boundary dimensions drop")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = testing::random_stratum(rng);
        const std::size_t d = stratum_dimension(s);
        for (const auto& b : boundary_strata(s, BoundaryMode::OneStep))
            CHECK(stratum_dimension(b) < d);
        const auto closure = boundary_strata(s, BoundaryMode::Closure);
        for (std::size_t i = 0; i < closure.size(); ++i)
            for (std::size_t j = i + 1; j < closure.size(); ++j)
                CHECK_FALSE(strata_equivalent(closure[i], closure[j]));
    }
}
