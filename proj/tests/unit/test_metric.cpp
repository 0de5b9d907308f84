#include "support.hpp"

#include <doctest.h>

using namespace tropmod;
using testing::mg;
using testing::q;

namespace {

const char* kLoop5 = "v 0\ne 0 0 0 5\n";

bool throws_code(const std::function<void()>& f, ErrorCode code)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

// Distance between special points, minimised over distinct pairs.
Rational pairwise_min(const MetricMarkedGraph& g)
{
    const auto pts = special_points(g);
    std::optional<Rational> best;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Rational d;
            try {
                d = delta_distance(g, pts[i], pts[j]);
            } catch (const Error&) {
                continue;
            }
            if (!best || d < *best)
                best = d;
        }
    return best.value_or(Rational(-1));
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(throws_code([] { parse_rational("1/0"); }, ErrorCode::ParseError));
    CHECK(throws_code([] { parse_rational("1.5"); }, ErrorCode::ParseError));
    CHECK(throws_code([] { parse_rational(""); }, ErrorCode::ParseError));
}

TEST_CASE("delta_distance")
{
    const auto loop = mg(kLoop5);
    CHECK(delta_distance(loop, AtVertex{0}, Interior{0, 1}) == 1);
    CHECK(delta_distance(loop, Interior{0, 1}, Interior{0, 3}) == 2);
    CHECK(delta_distance(loop, Interior{1, 1}, Interior{0, 1}) == 2); // op dart: offset 4 from the other end
    const auto path = mg("v 0\nv 1\nv 2\ne 0 0 1 2\ne 1 1 2 3\n");
    CHECK(delta_distance(path, AtVertex{0}, AtVertex{2}) == 5);
    CHECK(delta_distance(path, Interior{0, q("1/2")}, Interior{2, 1}) == Rational(5, 2));
    const auto two = mg("v 0\nv 1\n");
    CHECK(throws_code([&] { delta_distance(two, AtVertex{0}, AtVertex{1}); }, ErrorCode::DisconnectedPoints));
}

TEST_CASE("r_of")
{
    CHECK(r_of(mg("v 0\ne 0 0 0 5\nmark 1 e 0 1\nmark 2 e 0 3\n")) == 1);
    CHECK(r_of(mg("v 0\nv 1\nv 2\ne 0 0 1 2\ne 1 1 2 2\ne 2 2 0 2\nmark 1 v 0\nmark 2 v 1\nmark 3 v 2\n")) == 2);
    CHECK(throws_code([] { r_of(mg("v 0\nmark 1 v 0\n")); }, ErrorCode::TooFewSpecialPoints));
    // a loop of length 5 at a marked vertex: the admissible range is governed by the loop
    CHECK(r_of(mg("v 0\ne 0 0 0 5\nmark 1 v 0\n")) == 5);
}

TEST_CASE("is_isometric")
{
    const auto a = mg("v 0\nv 1\nv 3\ne 0 0 1 1\ne 1 1 3 2\ne 2 3 0 3\nmark 1 v 0\nmark 2 v 1\nmark 3 v 3\n");
    const auto b = mg("v 0\nv 3\nv 5\ne 0 0 3 3\ne 1 3 5 2\ne 2 5 0 1\nmark 1 v 0\nmark 2 v 5\nmark 3 v 3\n");
    const auto c = mg("v 0\nv 2\nv 3\ne 0 0 2 2\ne 1 2 3 1\ne 2 3 0 3\nmark 1 v 0\nmark 2 v 2\nmark 3 v 3\n");
    CHECK(is_isometric(a, b).has_value());
    CHECK_FALSE(is_isometric(a, c).has_value());
    CHECK(is_isometric(a, a).has_value());
    CHECK(cycle_canonical_form(a) == cycle_canonical_form(b));
    CHECK_FALSE(cycle_canonical_form(a) == cycle_canonical_form(c));
    CHECK(throws_code([&] { is_isometric(a, mg(kLoop5)); }, ErrorCode::MarkCountMismatch));

    // interior marks are compared by position along the matched dart
    const auto m1 = mg("v 0\nv 1\ne 0 0 1 4\nmark 1 e 0 1\n");
    const auto m2 = mg("v 0\nv 1\ne 0 1 0 4\nmark 1 e 0 3\n");
    const auto m3 = mg("v 0\nv 1\ne 0 0 1 4\nmark 1 e 0 2\n");
    CHECK(is_isometric(m1, m2).has_value());
    CHECK_FALSE(is_isometric(m1, m3).has_value());
}

TEST_CASE("marks_to_vertices")
{
    const auto g = mg("v 0\ne 0 0 0 5\nmark 1 e 0 2\n");
    const auto s = marks_to_vertices(g);
    CHECK(s.graph().vertex_count() == 2);
    CHECK(s.graph().edge_count() == 2);
    std::multiset<Rational> lens;
    for (DartId e : s.graph().edges())
        lens.insert(s.length(e));
    CHECK(lens == std::multiset<Rational>{2, 3});
    CHECK(std::holds_alternative<AtVertex>(s.marks()[0]));
    CHECK(s.times_marked(std::get<AtVertex>(s.marks()[0]).vertex) == 1);

    const auto at_vertices = mg("v 0\nv 1\ne 0 0 1 2\nmark 1 v 1\n");
    CHECK(is_isometric(marks_to_vertices(at_vertices), at_vertices).has_value());

    const auto shared = mg("v 0\nv 1\ne 0 0 1 4\nmark 1 e 0 1\nmark 2 e 0 1\n");
    const auto t = marks_to_vertices(shared);
    CHECK(t.graph().vertex_count() == 3);
    CHECK(std::get<AtVertex>(t.marks()[0]).vertex == std::get<AtVertex>(t.marks()[1]).vertex);
}

TEST_CASE("cycle_canonical_form")
{
    const auto one = mg("v 0\ne 0 0 0 7/2\nmark 1 v 0\n");
    const auto cf = cycle_canonical_form(one);
    CHECK(cf.circumference == q("7/2"));
    REQUIRE(cf.entries.size() == 1);
    CHECK(cf.entries[0].first == q("7/2"));
    CHECK(cf.entries[0].second == std::vector<int>{1});

    CHECK(throws_code([] { cycle_canonical_form(mg("v 0\ne 0 0 0 5\n")); }, ErrorCode::NotAMarkedCycle));
    CHECK(throws_code([] { cycle_canonical_form(mg("v 0\ne 0 0 0 5\nmark 1 e 0 1\n")); }, ErrorCode::NotAMarkedCycle));
    CHECK(throws_code([] { cycle_canonical_form(mg("v 0\nv 1\ne 0 0 1 1\ne 1 0 1 1\ne 2 0 1 1\nmark 1 v 0\nmark 2 v 1\n")); }, ErrorCode::NotAMarkedCycle));
}

TEST_CASE("graph file format")
{
    auto err = [](const char* text) {
        try {
            parse_metric_graph(text);
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(err("v 0\ne 0 0 1 1\n").find("line 2") != std::string::npos);
    CHECK(err("v 0\nv 1\ne 0 0 1\n").find("line 3") != std::string::npos);
    CHECK(err("v 0\ne 0 0 0 2\nmark 1 e 0 2\n").find("line 3") != std::string::npos);
    CHECK(err("v 0\nmark 2 v 0\n").find("mark") != std::string::npos);
    CHECK(err("v 0\nbogus\n").find("line 2") != std::string::npos);

    const auto g = mg("# comment\ngraph x\nv 0\nv 1\ne 0 0 1 3/2 # trailing\nmark 1 e 0 1/2\nmark 2 v 1\n");
    const auto again = parse_metric_graph(format_metric_graph(g, "x"));
    CHECK(is_isometric(g, again).has_value());
    CHECK(format_metric_graph(again, "x") == format_metric_graph(g, "x"));
}

TEST_CASE("random metric properties")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        testing::RandomGraphOptions opt;
        opt.connected = true;
        const auto g = testing::random_metric_graph(rng, opt);
        const auto pts = special_points(g);

        for (int k = 0; k < 5 && pts.size() >= 3; ++k) {
            const auto& a = pts[rng() % pts.size()];
            const auto& b = pts[rng() % pts.size()];
            const auto& c = pts[rng() % pts.size()];
            CHECK(delta_distance(g, a, b) == delta_distance(g, b, a));
            CHECK(delta_distance(g, a, c) <= delta_distance(g, a, b) + delta_distance(g, b, c));
            CHECK((delta_distance(g, a, b) == 0) == (g.canonical(a) == g.canonical(b)));
        }

        const auto s = marks_to_vertices(g);
        CHECK(genus(s.graph()) == genus(g.graph()));
        for (std::size_t i = 0; i < g.mark_count(); ++i)
            for (std::size_t j = 0; j < g.mark_count(); ++j)
                CHECK(delta_distance(g, g.marks()[i], g.marks()[j]) == delta_distance(s, s.marks()[i], s.marks()[j]));
        CHECK(is_isometric(marks_to_vertices(s), s).has_value());

        const auto h = testing::relabel(g, rng);
        CHECK(is_isometric(g, h).has_value());
        if (s.graph().edge_count() > 0) {
            CHECK(r_of(g) == r_of(h));
            // r is the shortest edge after subdivision; it agrees with the pairwise
            // minimum unless a loop is the shortest edge
            const Rational pm = pairwise_min(g);
            if (pm >= 0)
                CHECK(r_of(g) <= pm);
            bool loopless = true;
            for (DartId e : s.graph().edges())
                loopless = loopless && !s.graph().is_loop(e);
            if (loopless)
                CHECK(r_of(g) == pm);
        }
    }
}
