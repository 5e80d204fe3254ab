#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "packing/colorer.hpp"
#include "packing/errors.hpp"
#include "packing/generators.hpp"
#include "packing/graph.hpp"
#include "packing/verifier.hpp"
#include "testutil.hpp"

using namespace packing;

namespace {

std::vector<Side> sides_from(const std::string& text)
{
    std::vector<Side> side;
    for (char c : text)
        side.push_back(c == 'X' ? Side::X : Side::Y);
    return side;
}

} // namespace

TEST_CASE("mode parameters")
{
    CHECK(sequence_for(ColorMode::irregular3) == PackingSequence({1, 1, 3}));
    CHECK(sequence_for(ColorMode::saturated1) == PackingSequence({1, 1, 2}));
    CHECK(std::string(color_mode_name(ColorMode::irregular3)) == "t1");
    CHECK(std::string(color_mode_name(ColorMode::saturated1)) == "t2");
}

TEST_CASE("the transversal picks degree-2 endpoints")
{
    // 6-path with sides YXXYYX: same-side edges (1,2) and (3,4), every
    // vertex degree <= 2, so both edges contribute their smaller end
    Graph p6 = named_graph("P6");
    Bipartition b = bipartition_from_sides(p6, sides_from("YXXYYX"));
    SameSideStructure s = same_side_structure(p6, b);
    TSet t = build_t_3irregular(p6, s);
    CHECK(t.members == std::vector<int>{1, 3});
    CHECK(t.contains(1));
    CHECK(t.contains(3));
    CHECK_FALSE(t.contains(2));
    REQUIRE(t.provenance.size() == 2);
    CHECK(t.provenance[0] == std::pair<int, Edge>{1, {1, 2}});
    CHECK(t.provenance[1] == std::pair<int, Edge>{3, {3, 4}});
}

TEST_CASE("the transversal prefers the degree-2 end over the degree-3 end")
{
    // star path: 2 has degree 3, 1 has degree 2; same-side edge (1,2)
    // must contribute 1
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    Bipartition b = bipartition_from_sides(g, sides_from("YXXYY"));
    SameSideStructure s = same_side_structure(g, b);
    CHECK(s.e_x == std::vector<Edge>{{1, 2}});
    TSet t = build_t_3irregular(g, s);
    CHECK(t.members == std::vector<int>{1});
}

TEST_CASE("build_t_3irregular refuses edges without a degree-2 end")
{
    Graph k4 = named_graph("K4");
    Bipartition b = bipartition_from_sides(k4, sides_from("XXYY"));
    SameSideStructure s = same_side_structure(k4, b);
    CHECK_THROWS_WITH_AS(build_t_3irregular(k4, s), "no degree-2 end", InvariantError);
}

TEST_CASE("build_t_1saturated applies the end rule to E2 edges")
{
    // prism split with same-side edges (0,1) in X and (3,4) in Y; all ends
    // have degree 3, so they are E2 edges and the rule decides
    Graph prism = named_graph("prism");
    Bipartition b = bipartition_from_sides(prism, sides_from("XXYYYX"));
    SameSideStructure s = same_side_structure(prism, b);
    REQUIRE(s.e2.size() == 2);
    REQUIRE(s.e1.empty());

    TSet lo = build_t_1saturated(prism, s, E2EndRule::smaller_id);
    TSet hi = build_t_1saturated(prism, s, E2EndRule::larger_id);
    std::vector<int> lo_expected, hi_expected;
    for (const Edge& e : s.e2) {
        lo_expected.push_back(e.first);
        hi_expected.push_back(e.second);
    }
    std::sort(lo_expected.begin(), lo_expected.end());
    std::sort(hi_expected.begin(), hi_expected.end());
    CHECK(lo.members == lo_expected);
    CHECK(hi.members == hi_expected);
}

TEST_CASE("build_t_1saturated still prefers degree-2 ends on E1 edges")
{
    Graph p6 = named_graph("P6");
    Bipartition b = bipartition_from_sides(p6, sides_from("YXXYYX"));
    SameSideStructure s = same_side_structure(p6, b);
    TSet t = build_t_1saturated(p6, s, E2EndRule::larger_id);
    // E1 edges ignore the E2 rule entirely
    CHECK(t.members == std::vector<int>{1, 3});
}

TEST_CASE("check_t_distances reports the lexicographically first close pair")
{
    Graph p6 = named_graph("P6");
    TSet t;
    t.members = {0, 2, 5};
    // d(0,2) = 2, d(2,5) = 3, d(0,5) = 5
    auto v4 = check_t_distances(p6, t, 4);
    REQUIRE(v4.has_value());
    CHECK(v4->u == 0);
    CHECK(v4->v == 2);
    CHECK(v4->dist == 2);

    // with only the farther pair left, the scan moves on to (2,5)
    TSet rest;
    rest.members = {2, 5};
    auto v3 = check_t_distances(p6, rest, 4);
    REQUIRE(v3.has_value());
    CHECK(v3->u == 2);
    CHECK(v3->v == 5);
    CHECK(v3->dist == 3);
}

TEST_CASE("check_t_distances respects the threshold boundary")
{
    Graph p8 = named_graph("P8");
    TSet t;
    t.members = {0, 4};
    CHECK_FALSE(check_t_distances(p8, t, 4).has_value()); // d = 4 is enough
    auto v = check_t_distances(p8, t, 5);
    REQUIRE(v.has_value());
    CHECK(v->dist == 4);

    TSet single;
    single.members = {3};
    CHECK_FALSE(check_t_distances(p8, single, 10).has_value());
    TSet empty;
    CHECK_FALSE(check_t_distances(p8, empty, 10).has_value());
}

TEST_CASE("diagnosing a cross-side distance-3 violation yields the composite")
{
    // path 0-1-2-3-4-5, X = {0,1,3}, Y = {2,4,5}; T = {1,4} with
    // d(1,4) = 3; the repair flips 4 over and exchanges around y = 2
    Graph p6 = named_graph("P6");
    Bipartition b = bipartition_from_sides(p6, sides_from("XXYXYY"));
    TSet t;
    t.members = {1, 4};
    TViolation violation{1, 4, 3};
    Move m = diagnose_violation(p6, b, t, violation, ColorMode::irregular3);
    CHECK(m == Move::composite_flip_then_triple(4, 2, 1, 3));

    Potential before = b.potential();
    apply_move(p6, b, m);
    CHECK(before < b.potential());
}

TEST_CASE("diagnosing a same-side distance-2 violation yields the rewire")
{
    // gadget: u = 0 and v = 1 share the cross neighbor y = 2; u also has
    // the private cross neighbor y1 = 3; both u and v carry a same-side
    // edge so they sit in T
    Graph g(11, {{0, 5},
                 {1, 6},
                 {0, 2},
                 {1, 2},
                 {0, 3},
                 {1, 4},
                 {5, 7},
                 {5, 8},
                 {6, 7},
                 {6, 8},
                 {3, 9},
                 {4, 10}});
    Bipartition b =
        bipartition_from_sides(g, sides_from("XXYYYXXYYXX"));
    SameSideStructure s = same_side_structure(g, b);
    TSet t;
    t.members = {0, 1};
    TViolation violation{0, 1, 2};
    Move m = diagnose_violation(g, b, t, violation, ColorMode::saturated1);
    CHECK(m == Move::rewire_swap(0, 1, 2, 3));

    Potential before = b.potential();
    apply_move(g, b, m);
    CHECK(b.potential().cut == before.cut);
    CHECK(b.potential().e1 > before.e1);
}

TEST_CASE("diagnose_violation rejects shapes it cannot repair")
{
    Graph p6 = named_graph("P6");
    Bipartition b = bipartition_from_sides(p6, sides_from("XYXYXY"));
    TSet t;
    t.members = {0, 2};
    // same side, distance 2, but the common neighbor pattern needs a
    // private cross neighbor that vertex 0 lacks
    TViolation violation{0, 2, 2};
    CHECK_THROWS_AS(diagnose_violation(p6, b, t, violation, ColorMode::saturated1),
                    UnmatchedViolationError);
}

TEST_CASE("color() certifies 3-irregular inputs")
{
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gen_3_irregular(4 + static_cast<int>(seed % 7), seed);
        ColorOutcome out = color(g, ColorMode::irregular3, seed);
        REQUIRE(out.coloring.has_value());
        CHECK(out.coloring->sequence == PackingSequence({1, 1, 3}));
        CHECK(verify_coloring(g, out.coloring->sequence, *out.coloring).valid);

        // independent spacing check of the transversal class
        auto dist = testutil::all_pairs(g);
        const auto& a = out.coloring->assignment;
        for (size_t u = 0; u < a.size(); ++u)
            for (size_t v = u + 1; v < a.size(); ++v)
                if (a[u] == 3 && a[v] == 3)
                    CHECK(dist[u][v] >= 4);
    }
}

TEST_CASE("color() certifies 1-saturated inputs")
{
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gen_1_saturated(2 + static_cast<int>(seed % 2), seed);
        ColorOutcome out = color(g, ColorMode::saturated1, seed);
        REQUIRE(out.coloring.has_value());
        CHECK(out.coloring->sequence == PackingSequence({1, 1, 2}));
        CHECK(verify_coloring(g, out.coloring->sequence, *out.coloring).valid);

        auto dist = testutil::all_pairs(g);
        const auto& a = out.coloring->assignment;
        for (size_t u = 0; u < a.size(); ++u)
            for (size_t v = u + 1; v < a.size(); ++v)
                if (a[u] == 3 && a[v] == 3)
                    CHECK(dist[u][v] >= 3);
    }
}

TEST_CASE("color() is deterministic per seed")
{
    Graph g = gen_3_irregular(9, 42);
    ColorOutcome a = color(g, ColorMode::irregular3, 7);
    ColorOutcome b = color(g, ColorMode::irregular3, 7);
    REQUIRE(a.coloring.has_value());
    REQUIRE(b.coloring.has_value());
    CHECK(a.coloring->assignment == b.coloring->assignment);
    CHECK(a.trace.records.size() == b.trace.records.size());
    for (size_t i = 0; i < a.trace.records.size(); ++i)
        CHECK(a.trace.records[i].move == b.trace.records[i].move);
}

TEST_CASE("color() rejects out-of-class inputs unless forced")
{
    Graph k4 = named_graph("K4");
    CHECK_THROWS_WITH_AS(color(k4, ColorMode::irregular3, 0), "not 3-irregular",
                         ClassMismatchError);
    Graph prism = named_graph("prism");
    CHECK_THROWS_WITH_AS(color(prism, ColorMode::saturated1, 0), "not 1-saturated",
                         ClassMismatchError);

    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK_THROWS_WITH_AS(color(star, ColorMode::irregular3, 0), "not subcubic",
                         ClassMismatchError);
    // force never overrides the subcubic requirement
    CHECK_THROWS_AS(color(star, ColorMode::irregular3, 0, true), ClassMismatchError);
}

TEST_CASE("forced runs on out-of-class inputs either color or certify")
{
    Graph k4 = named_graph("K4");
    ColorOutcome out = color(k4, ColorMode::irregular3, 0, true);
    // K4 has no (1,1,3)-coloring, so a certificate is the only possible
    // outcome
    CHECK_FALSE(out.coloring.has_value());
    REQUIRE(out.failure_certificate.has_value());
    CHECK(out.failure_certificate->find("\"graph\"") != std::string::npos);

    // the prism is (1,1,2)-colorable even though it is 3-saturated, and
    // the forced pipeline finds a witness
    Graph prism = named_graph("prism");
    ColorOutcome forced = color(prism, ColorMode::saturated1, 1, true);
    if (forced.coloring) {
        CHECK(verify_coloring(prism, PackingSequence({1, 1, 2}), *forced.coloring)
                  .valid);
    } else {
        CHECK(forced.failure_certificate.has_value());
    }
}

TEST_CASE("the empty and tiny graphs color trivially")
{
    Graph empty(0, {});
    ColorOutcome out = color(empty, ColorMode::irregular3, 0);
    REQUIRE(out.coloring.has_value());
    CHECK(out.coloring->assignment.empty());

    Graph one(1, {});
    ColorOutcome single = color(one, ColorMode::saturated1, 3);
    REQUIRE(single.coloring.has_value());
    CHECK(single.coloring->assignment.size() == 1);
    CHECK(verify_coloring(one, single.coloring->sequence, *single.coloring).valid);
}

TEST_CASE("outcome exposes the final fixpoint state")
{
    Graph g = gen_3_irregular(8, 3);
    ColorOutcome out = color(g, ColorMode::irregular3, 3);
    REQUIRE(out.coloring.has_value());
    CHECK(audit(g, out.bipartition) == out.bipartition.potential());
    check_fixpoint(g, out.bipartition, out.structure, true);
    // T members are exactly the vertices in class 3
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool in_t = out.tset.contains(v);
        CHECK(in_t == (out.coloring->assignment[static_cast<size_t>(v)] == 3));
    }
    // every repair iteration appended at least one trace record
    CHECK(static_cast<long>(out.trace.records.size())
          >= static_cast<long>(out.repair_iterations));
}
