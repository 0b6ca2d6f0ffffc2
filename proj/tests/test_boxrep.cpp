#include <doctest.h>

#include <algorithm>
#include <random>

#include "atfbox/boxrep.hpp"
#include "atfbox/errors.hpp"
#include "atfbox/graph.hpp"
#include "atfbox/invariants.hpp"
#include "atfbox/model.hpp"

using namespace atfbox;

namespace {

Graph cycle(int n) { return generate({GraphFamily::cycle, {n}, 0}); }
Graph path(int n) { return generate({GraphFamily::path, {n}, 0}); }
Graph k222() { return generate({GraphFamily::complete_multipartite, {2, 2, 2}, 0}); }
Graph complete(int n) { return Graph(n, {}).complement(); }

IntervalQ iq(std::int64_t ln, std::int64_t ld, std::int64_t hn, std::int64_t hd) {
    return IntervalQ{Rational(ln, ld), Rational(hn, hd)};
}

} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(3).str() == "3");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("interval intersection") {
    CHECK(IntervalQ::intersects(iq(0, 1, 1, 1), iq(1, 1, 2, 1)));  // touching endpoints
    CHECK_FALSE(IntervalQ::intersects(iq(0, 1, 1, 1), iq(3, 2, 2, 1)));
    CHECK(IntervalQ::intersects(iq(1, 2, 1, 2), iq(0, 1, 1, 1)));  // degenerate point inside
    CHECK(IntervalQ::intersects(iq(0, 1, 4, 1), iq(1, 1, 2, 1)));  // containment
    CHECK_THROWS_AS(IntervalQ(Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("decompose C5") {
    auto d = decompose(cycle(5));
    CHECK(d.t() == 3);
    CHECK(d.path == std::vector<int>{0, 1, 2});
    CHECK(d.classes[1] == std::vector<int>{4});
    CHECK(d.classes[2].empty());
    CHECK(d.classes[3] == std::vector<int>{3});
    CHECK(d.nonpendant[3]);
    CHECK(d.nonpendant[4]);
    CHECK((d.has_left[3] && !d.has_right[3]));  // 3 in S_3 reaches back to S_1
    CHECK((!d.has_left[4] && d.has_right[4]));  // 4 in S_1 reaches forward to S_3
    CHECK(validate(d, cycle(5)).empty());
}

TEST_CASE("decompose star and path") {
    Graph s4 = generate({GraphFamily::star, {4}, 0});
    auto d = decompose(s4);
    CHECK(d.t() == 3);
    CHECK(d.path == std::vector<int>{1, 0, 2});
    CHECK(d.classes[2] == std::vector<int>{3, 4});
    CHECK_FALSE(d.nonpendant[3]);
    CHECK_FALSE(d.nonpendant[4]);
    CHECK(validate(d, s4).empty());

    auto dp = decompose(path(4));
    CHECK(dp.t() == 4);
    CHECK(dp.path == std::vector<int>{0, 1, 2, 3});
    for (int i = 1; i <= 4; ++i) CHECK(dp.classes[i].empty());

    auto d1 = decompose(Graph(1, {}));
    CHECK(d1.t() == 1);
}

TEST_CASE("decompose preconditions") {
    CHECK_THROWS_AS(decompose(cycle(6)), precondition_error);              // has an AT
    CHECK_THROWS_AS(decompose(cycle(4)), precondition_error);              // girth 4
    CHECK_THROWS_AS(decompose(complete(3)), precondition_error);           // girth 3
    CHECK_THROWS_AS(decompose(parse_edge_list("4 2\n0 1\n2 3")), precondition_error);
}

TEST_CASE("validate flags tampered decompositions") {
    // path 0-1-2 with a in S_1 (3), b in S_2 (4) and the forbidden S_1-S_2 edge
    Graph g(5, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {3, 4}});
    DominatingPathDecomposition d;
    d.path = {0, 1, 2};
    d.classes = {{}, {3}, {4}, {}};
    d.class_of = {0, 0, 0, 1, 2};
    d.nonpendant = {0, 0, 0, 1, 1};
    d.has_left = {0, 0, 0, 0, 0};
    d.has_right = {0, 0, 0, 0, 0};
    auto violations = validate(d, g);
    bool found = false;
    for (const auto& v : violations)
        if (v.lemma.find("part (2)") != std::string::npos) found = true;
    CHECK(found);

    // a vertex with two path neighbors
    Graph g2(4, {{0, 1}, {1, 2}, {0, 3}, {2, 3}});
    DominatingPathDecomposition d2;
    d2.path = {0, 1, 2};
    d2.classes = {{}, {3}, {}, {}};
    d2.class_of = {0, 0, 0, 1};
    d2.nonpendant = {0, 0, 0, 0};
    d2.has_left = {0, 0, 0, 0};
    d2.has_right = {0, 0, 0, 0};
    violations = validate(d2, g2);
    found = false;
    for (const auto& v : violations)
        if (v.lemma.find("V(P)") != std::string::npos) found = true;
    CHECK(found);

    // moving a vertex into the wrong class breaks the partition clause
    auto good = decompose(cycle(5));
    auto bad = good;
    bad.class_of[4] = 2;
    bad.classes[1].clear();
    bad.classes[2] = {4};
    CHECK_FALSE(validate(bad, cycle(5)).empty());
}

TEST_CASE("girth5 representation of C5, frozen") {
    auto rep = girth5_boxrep(cycle(5));
    REQUIRE(rep.dim_count() == 2);
    // dimension 1: path [1,2],[2,3],[3,4]; b=3 left-only [5/2,3]; a=4 right-only [2,5/2]
    CHECK(rep.dims[0].intervals[0] == iq(1, 1, 2, 1));
    CHECK(rep.dims[0].intervals[1] == iq(2, 1, 3, 1));
    CHECK(rep.dims[0].intervals[2] == iq(3, 1, 4, 1));
    CHECK(rep.dims[0].intervals[3] == iq(5, 2, 3, 1));
    CHECK(rep.dims[0].intervals[4] == iq(2, 1, 5, 2));
    // dimension 2: parity layers
    CHECK(rep.dims[1].intervals[0] == iq(1, 1, 2, 1));
    CHECK(rep.dims[1].intervals[1] == iq(2, 1, 3, 1));
    CHECK(rep.dims[1].intervals[2] == iq(1, 1, 2, 1));
    CHECK(rep.dims[1].intervals[3] == iq(0, 1, 1, 1));
    CHECK(rep.dims[1].intervals[4] == iq(0, 1, 1, 1));
    CHECK(verify(cycle(5), rep).ok());
}

TEST_CASE("girth5 representation corner cases") {
    auto single = girth5_boxrep(Graph(1, {}));
    CHECK(single.dim_count() == 2);
    CHECK(single.dims[0].intervals[0] == iq(1, 1, 2, 1));
    CHECK(single.dims[1].intervals[0] == iq(1, 1, 2, 1));

    // star: pendant intervals strictly inside (2,3), pairwise disjoint
    Graph s4 = generate({GraphFamily::star, {4}, 0});
    auto rep = girth5_boxrep(s4);
    CHECK(verify(s4, rep).ok());
    std::vector<IntervalQ> pendants{rep.dims[0].intervals[3], rep.dims[0].intervals[4]};
    for (const auto& iv : pendants) {
        CHECK(Rational(2) < iv.lo);
        CHECK(iv.hi < Rational(3));
    }
    CHECK_FALSE(IntervalQ::intersects(pendants[0], pendants[1]));

    CHECK_THROWS_AS(girth5_boxrep(cycle(6)), precondition_error);
    CHECK_THROWS_AS(girth5_boxrep(complete(3)), precondition_error);
}

TEST_CASE("girth5 representation of disconnected graphs") {
    // C5 plus P3 plus an isolated vertex
    Graph g = parse_edge_list("9 7\n0 1\n1 2\n2 3\n3 4\n4 0\n5 6\n6 7");
    auto rep = girth5_boxrep(g);
    REQUIRE(rep.dim_count() == 2);
    CHECK(verify(g, rep).ok());
    // components keep disjoint dimension-1 windows
    auto max_hi = [&](const std::vector<int>& vs) {
        Rational m = rep.dims[0].intervals[vs[0]].hi;
        for (int v : vs)
            if (m < rep.dims[0].intervals[v].hi) m = rep.dims[0].intervals[v].hi;
        return m;
    };
    auto min_lo = [&](const std::vector<int>& vs) {
        Rational m = rep.dims[0].intervals[vs[0]].lo;
        for (int v : vs)
            if (rep.dims[0].intervals[v].lo < m) m = rep.dims[0].intervals[v].lo;
        return m;
    };
    CHECK(max_hi({0, 1, 2, 3, 4}) < min_lo({5, 6, 7}));
    CHECK(max_hi({5, 6, 7}) < min_lo({8}));
}

TEST_CASE("girth5 corpus: two dimensions, verified, per-dimension supergraph") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = generate({GraphFamily::girth5_atfree, {6 + 2 * static_cast<int>(seed)}, seed});
        auto rep = girth5_boxrep(g);
        REQUIRE(rep.dim_count() == 2);
        CHECK(verify(g, rep).ok());
        for (const auto& dim : rep.dims)
            for (auto [u, v] : g.edges())
                CHECK(IntervalQ::intersects(dim.intervals[u], dim.intervals[v]));
        // kill property: every non-edge dies somewhere
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) {
                if (g.adj(u, v)) continue;
                bool killed = false;
                for (const auto& dim : rep.dims)
                    killed = killed || !IntervalQ::intersects(dim.intervals[u], dim.intervals[v]);
                CHECK(killed);
            }
    }
}

TEST_CASE("chromatic representation") {
    Graph g = k222();
    Coloring c = color(g, ColorMode::exact);
    auto rep = chromatic_boxrep(g, c);
    CHECK(rep.dim_count() == 3);
    CHECK(verify(g, rep).ok());

    Coloring c5col{{0, 1, 0, 1, 2}, 3};
    auto rep5 = chromatic_boxrep(cycle(5), c5col);
    CHECK(rep5.dim_count() == 3);
    CHECK(verify(cycle(5), rep5).ok());

    // interval graph under a deliberately wasteful proper coloring still works
    Graph p5 = path(5);
    Coloring waste{{0, 1, 2, 1, 0}, 3};
    REQUIRE(is_proper(p5, waste));
    auto repp = chromatic_boxrep(p5, waste);
    CHECK(repp.dim_count() == 3);
    CHECK(verify(p5, repp).ok());

    CHECK_THROWS_AS(chromatic_boxrep(cycle(5), Coloring{{0, 0, 1, 1, 2}, 3}), precondition_error);
}

TEST_CASE("chromatic representation rejects non-AT-free inputs via Möhring") {
    Graph c6 = cycle(6);
    Coloring c = color(c6, ColorMode::exact);
    CHECK_THROWS_WITH_AS(chromatic_boxrep(c6, c), doctest::Contains("Möhring"),
                         precondition_error);
}

TEST_CASE("verify catches perturbations") {
    Graph c5 = cycle(5);
    auto rep = girth5_boxrep(c5);
    // move g2 of the S_1 vertex (4) onto the path layer: non-edge (1,4) now
    // meets in both dimensions
    rep.dims[1].intervals[4] = iq(1, 1, 2, 1);
    auto res = verify(c5, rep);
    REQUIRE_FALSE(res.ok());
    bool found = false;
    for (const auto& v : res.violations) {
        if (v.u == 1 && v.v == 4) {
            CHECK_FALSE(v.missing_edge);
            found = true;
        }
    }
    CHECK(found);

    // and a missing edge: shrink the path interval of u_2 away from u_1
    auto rep2 = girth5_boxrep(c5);
    rep2.dims[0].intervals[1] = iq(5, 2, 3, 1);
    auto res2 = verify(c5, rep2);
    REQUIRE_FALSE(res2.ok());
    bool miss = false;
    for (const auto& v : res2.violations)
        if (v.missing_edge && v.u == 0 && v.v == 1) miss = true;
    CHECK(miss);
}

TEST_CASE("zero-dimensional representations") {
    BoxRepresentation zero;
    zero.n = 3;
    zero.method = "complete";
    CHECK(verify(complete(3), zero).ok());
    auto res = verify(path(3), zero);
    CHECK_FALSE(res.ok()); // the non-edge (0,2) can never be killed
    CHECK(res.violations.size() == 1);
}

TEST_CASE("box_upper method selection") {
    auto c5 = box_upper(cycle(5));
    CHECK(c5.k == 2);
    CHECK(c5.method == BoxMethod::girth5);
    CHECK(verify(cycle(5), c5.rep).ok());

    auto k = box_upper(k222());
    CHECK(k.k == 3);
    CHECK(k.method == BoxMethod::coloring);
    CHECK(verify(k222(), k.rep).ok());

    auto p6 = box_upper(path(6));
    CHECK(p6.k == 1);
    CHECK(p6.method == BoxMethod::interval);
    CHECK(verify(path(6), p6.rep).ok());

    auto k4 = box_upper(complete(4));
    CHECK(k4.k == 0);
    CHECK(k4.method == BoxMethod::complete);
    CHECK(verify(complete(4), k4.rep).ok());

    CHECK_THROWS_AS(box_upper(cycle(6)), precondition_error);

    // forcing methods
    auto forced = box_upper(path(6), BoxMethod::girth5);
    CHECK(forced.k == 2);
    auto colored = box_upper(cycle(5), BoxMethod::coloring);
    CHECK(colored.k == 3);
    CHECK(verify(cycle(5), colored.rep).ok());
}

TEST_CASE("representation json round trip") {
    Graph c5 = cycle(5);
    auto rep = girth5_boxrep(c5);
    auto j = representation_to_json(c5, rep);
    CHECK(j["n"] == 5);
    CHECK(j["dims"] == 2);
    CHECK(j["graph6"] == "Dhc");
    CHECK(j["method"] == "girth5");

    auto loaded = representation_from_json(j);
    CHECK(loaded.graph6 == "Dhc");
    CHECK(loaded.rep.n == rep.n);
    CHECK(loaded.rep.method == rep.method);
    REQUIRE(loaded.rep.dims.size() == rep.dims.size());
    for (std::size_t d = 0; d < rep.dims.size(); ++d) CHECK(loaded.rep.dims[d] == rep.dims[d]);
    CHECK(graph6_decode(loaded.graph6) == c5);

    // schema violations
    auto bad = j;
    bad["dims"] = 3;
    CHECK_THROWS_AS(representation_from_json(bad), parse_error);
    bad = j;
    bad["intervals"][0][0] = {{0, 1}}; // not a [lo,hi] pair
    CHECK_THROWS_AS(representation_from_json(bad), parse_error);
    bad = j;
    bad["intervals"][0][0] = {{2, 1}, {1, 1}}; // hi < lo
    CHECK_THROWS_AS(representation_from_json(bad), parse_error);
    bad = j;
    bad["intervals"][1][0] = {{1, 0}, {2, 1}}; // zero denominator
    CHECK_THROWS_AS(representation_from_json(bad), parse_error);
    bad = j;
    bad.erase("graph6");
    CHECK_THROWS_AS(representation_from_json(bad), parse_error);
}
