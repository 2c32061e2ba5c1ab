#include <doctest.h>

#include <random>

#include "ospq/errors.hpp"
#include "ospq/invariant.hpp"
#include "ospq/serialize.hpp"

using namespace ospq;

namespace {

PlumbingGraph random_forest(std::mt19937& rng) {
    std::uniform_int_distribution<int> nverts(1, 4);
    std::uniform_int_distribution<int> framing(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    PlumbingGraph g;
    int n = nverts(rng);
    for (int i = 1; i <= n; ++i) {
        g.add_vertex(i, framing(rng));
        if (i > 1 && coin(rng)) {
            std::uniform_int_distribution<int> parent(1, i - 1);
            g.add_edge(parent(rng), i);
        }
    }
    return g;
}

}  // namespace

TEST_CASE("colored values on tiny graphs") {
    ModularTables t = build_tables(1, 2);
    long M = t.order();
    Weight zero = Weight::zero(1);
    Weight e1 = Weight::from_int_coords({1});

    PlumbingGraph single;
    single.add_vertex(1, 3);
    Coloring c;
    c.assignment[1] = e1;
    CHECK(colored_value(single, c, t) == t.twist.at(e1).pow(3) * t.sdim.at(e1));

    single.vertices[1] = 0;
    c.assignment[1] = zero;
    CHECK(colored_value(single, c, t) == CycloNumber::one(M));

    PlumbingGraph chain;
    chain.add_vertex(1, 0);
    chain.add_vertex(2, 0);
    chain.add_edge(1, 2);
    Coloring cc;
    cc.assignment[1] = e1;
    cc.assignment[2] = zero;
    // degree-one vertices kill both standalone sdim factors
    CHECK(colored_value(chain, cc, t) == t.hopf.at({e1, zero}) * t.sdim.at(zero));

    Coloring missing;
    missing.assignment[1] = e1;
    CHECK_THROWS_AS(colored_value(chain, missing, t), std::invalid_argument);
    Coloring outside;
    outside.assignment[1] = Weight::from_int_coords({2});
    outside.assignment[2] = zero;
    CHECK_THROWS_AS(colored_value(chain, outside, t), std::invalid_argument);
}

TEST_CASE("manifold sanity") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
        ModularTables t = build_tables(n, k);
        long M = t.order();
        // S^3 as the empty link
        CHECK(rt_invariant({}, t) == CycloNumber::one(M));
        // S^1 x S^2: 0-framed unknot, sigma = 1
        PlumbingGraph zero_unknot;
        zero_unknot.add_vertex(1, 0);
        CHECK(rt_invariant(zero_unknot, t) == t.d.at(Weight::zero(n)).inverse());
        // +-1-framed unknots are S^3 again
        for (int s : {1, -1}) {
            PlumbingGraph unknot;
            unknot.add_vertex(1, s);
            CHECK(rt_invariant(unknot, t) == CycloNumber::one(M));
        }
    }
}

TEST_CASE("multiplicativity over disjoint union") {
    ModularTables t = build_tables(1, 2);
    std::mt19937 rng(31337);
    for (int rep = 0; rep < 10; ++rep) {
        PlumbingGraph g1 = random_forest(rng);
        PlumbingGraph g2 = random_forest(rng);
        PlumbingGraph both = g1;
        int offset = both.vertices.rbegin()->first;
        for (const auto& [id, f] : g2.vertices) both.add_vertex(id + offset, f);
        for (const auto& [a, b] : g2.edges) both.add_edge(a + offset, b + offset);
        CHECK(rt_invariant(both, t) == rt_invariant(g1, t) * rt_invariant(g2, t));
    }
}

TEST_CASE("kirby invariance on random forests") {
    std::mt19937 rng(777);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
        ModularTables t = build_tables(n, k);
        for (int rep = 0; rep < 25; ++rep) {
            PlumbingGraph g = random_forest(rng);
            CycloNumber base = rt_invariant(g, t);
            for (int s : {+1, -1}) {
                CHECK(rt_invariant(blow_up(g, s), t) == base);
                std::uniform_int_distribution<int> pick(1, static_cast<int>(g.vertices.size()));
                PlumbingGraph up = blow_up(g, s, pick(rng));
                CHECK(rt_invariant(up, t) == base);
                CHECK(rt_invariant(blow_down(up, up.vertices.rbegin()->first), t) == base);
            }
        }
    }
}

TEST_CASE("lens space presentations agree") {
    ModularTables t = build_tables(1, 2);
    std::mt19937 rng(4242);
    for (int p = 1; p <= 7; ++p) {
        for (int q = 1; q < std::max(p, 2); ++q) {
            if (std::gcd(p, q) != 1) continue;
            PlumbingGraph chain = lens_chain(p, std::min(q, p == 1 ? 1 : q));
            CycloNumber base = rt_invariant(chain, t);
            // random blow-up chains on the same presentation
            PlumbingGraph g = chain;
            std::vector<int> added;
            for (int step = 0; step < 4; ++step) {
                std::uniform_int_distribution<int> sign01(0, 1);
                int s = sign01(rng) ? 1 : -1;
                auto it = g.vertices.begin();
                std::advance(it, rng() % g.vertices.size());
                g = blow_up(g, s, it->first);
                added.push_back(g.vertices.rbegin()->first);
            }
            CHECK(rt_invariant(g, t) == base);
            for (auto it = added.rbegin(); it != added.rend(); ++it) g = blow_down(g, *it);
            CHECK(g == chain);
        }
    }
    // lens_chain(p,1) single vertex vs an equivalent two-vertex chain obtained
    // by a leaf blow-up on the same presentation
    for (int p = 2; p <= 7; ++p) {
        PlumbingGraph single = lens_chain(p, 1);
        PlumbingGraph alt = blow_up(single, -1, 1);  // framings (p-1) -- (-1)
        CHECK(rt_invariant(single, t) == rt_invariant(alt, t));
    }
}

TEST_CASE("invariant reports") {
    ModularTables t = build_tables(1, 2);
    InvariantReport empty = invariant_report({}, t);
    CHECK(empty.value == CycloNumber::one(t.order()));
    CHECK(empty.sigma == 0);
    CHECK(empty.coloring_count == 1);

    InvariantReport lens = invariant_report(lens_chain(5, 2), t);
    CHECK(lens.coloring_count == 4);  // |index set|^2

    PlumbingGraph cyc;
    cyc.add_vertex(1, 0);
    cyc.add_vertex(2, 0);
    cyc.add_vertex(3, 0);
    cyc.add_edge(1, 2);
    cyc.add_edge(2, 3);
    cyc.edges.emplace(1, 3);
    CHECK_THROWS_AS(rt_invariant(cyc, t), CycleDetected);
}

TEST_CASE("tables survive the JSON interchange format") {
    ModularTables t = build_tables(1, 2);
    Json j = to_json(t);
    ModularTables back = tables_from_json(j);
    CHECK(back.index_set == t.index_set);
    CHECK(back.sdim == t.sdim);
    CHECK(back.hopf == t.hopf);
    CHECK(back.d == t.d);
    CHECK(back.z == t.z);
    // byte-identical re-serialization
    CHECK(to_json(back).dump() == j.dump());
    // and the loaded tables drive the invariant identically
    PlumbingGraph g = lens_chain(5, 2);
    CHECK(rt_invariant(g, back) == rt_invariant(g, t));

    PlumbingGraph gj = graph_from_json(to_json(g));
    CHECK(gj == g);
}

TEST_CASE("coloring budget and parallel reduction") {
    ModularTables t = build_tables(1, 2);
    PlumbingGraph g = lens_chain(7, 3);
    CHECK_THROWS_AS(rt_invariant(g, t, /*max_colorings=*/4), BudgetExceeded);
    CHECK(rt_invariant(g, t, 10'000'000, /*workers=*/4) == rt_invariant(g, t));
}
