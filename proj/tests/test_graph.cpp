#include "cutcover/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace cutcover;

TEST_CASE("generators produce the documented sizes", "[graph]") {
    Graph pt = petersen_graph();
    CHECK(pt.vertex_count() == 10);
    CHECK(pt.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pt.degree(v) == 3);

    Graph kn = kneser_graph(5, 2);
    CHECK(kn.vertex_count() == 10);
    CHECK(kn.edge_count() == 15);

    Graph q32 = cube_power(3, 2);
    CHECK(q32.vertex_count() == 8);
    CHECK(q32.edge_count() == 16);

    Graph q43 = cube_power(4, 3);
    CHECK(q43.vertex_count() == 16);
    CHECK(q43.edge_count() == 40);

    Graph layer = cube_layer(5, 4);
    CHECK(layer.vertex_count() == 32);
    for (int v = 0; v < 32; ++v) CHECK(layer.degree(v) == 5);

    Graph cc = circular_clique(11, 4);
    CHECK(cc.vertex_count() == 11);
    CHECK(cc.edge_count() == 22); // circular distance 4 or 5, two each per vertex

    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    CHECK(path_graph(6).edge_count() == 5);
}

TEST_CASE("generate dispatcher is deterministic and validates input", "[graph]") {
    Graph a = generate("kneser", {5, 2});
    Graph b = generate("kneser", {5, 2});
    CHECK(a.edges() == b.edges());
    CHECK_THROWS_AS(generate("moebius", {5}), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle", {3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(generate("cube-power", {3, 4}), EdgelessError);
    CHECK_THROWS_AS(generate("circular-clique", {7, 4}), EdgelessError);
}

TEST_CASE("graph constructor enforces simple loopless graphs", "[graph]") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1); // set semantics
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.edge_index(1, 0) == 0);
    CHECK(g.edge_index(0, 2) == -1);
}

TEST_CASE("cube power is the union of the layers above k", "[graph]") {
    for (int k = 1; k <= 4; ++k) {
        Graph power = cube_power(4, k);
        std::set<Edge> expect;
        for (int j = k; j <= 4; ++j) {
            Graph layer = cube_layer(4, j);
            for (auto e : layer.edges()) expect.insert(e);
        }
        std::set<Edge> got(power.edges().begin(), power.edges().end());
        CHECK(got == expect);
    }
}

TEST_CASE("products match their definitions", "[graph]") {
    Graph square = product(ProductKind::Cartesian, complete_graph(2), complete_graph(2));
    CHECK(square.vertex_count() == 4);
    CHECK(square.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(square.degree(v) == 2);
    CHECK(bipartition(square).has_value());

    Graph tensor = product(ProductKind::Categorical, complete_graph(2), complete_graph(2));
    CHECK(tensor.vertex_count() == 4);
    CHECK(tensor.edge_count() == 2);

    Graph prism = product(ProductKind::Cartesian, cycle_graph(5), complete_graph(2));
    CHECK(prism.vertex_count() == 10);
    CHECK(prism.edge_count() == 15);
}

TEST_CASE("unions and amalgams", "[graph]") {
    Graph u = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(connected_components(u).size() == 2);

    Graph bowtie = amalgam(complete_graph(3), complete_graph(3), 0, 0);
    CHECK(bowtie.vertex_count() == 5);
    CHECK(bowtie.edge_count() == 6);

    Graph two_c5 = amalgam(cycle_graph(5), cycle_graph(5), 0, 0);
    CHECK(two_c5.vertex_count() == 9);
    CHECK(two_c5.edge_count() == 10);

    CHECK_THROWS_AS(amalgam(complete_graph(3), complete_graph(3), 0, 5), std::invalid_argument);
}

TEST_CASE("odd girth", "[graph]") {
    CHECK(odd_girth(petersen_graph()) == 5);
    CHECK(odd_girth(cycle_graph(7)) == 7);
    CHECK(!odd_girth(complete_bipartite(3, 3)).has_value());
    CHECK(odd_girth(complete_graph(4)) == 3);
}

TEST_CASE("chromatic number", "[graph]") {
    CHECK(chromatic_number(complete_graph(5)) == 5);
    CHECK(chromatic_number(petersen_graph()) == 3);
    CHECK(chromatic_number(complete_bipartite(4, 4)) == 2);
    CHECK(chromatic_number(cycle_graph(7)) == 3);
    CHECK_THROWS_AS(chromatic_number(Graph(3, {})), EdgelessError);
}

TEST_CASE("chromatic number of Kneser graphs is n - 2k + 2", "[graph]") {
    struct P { int n, k; };
    for (auto [n, k] : {P{2, 1}, P{3, 1}, P{4, 1}, P{5, 1}, P{6, 1}, P{4, 2}, P{5, 2},
                        P{6, 2}, P{7, 2}, P{8, 2}, P{6, 3}, P{7, 3}}) {
        CAPTURE(n, k);
        CHECK(chromatic_number(kneser_graph(n, k)) == n - 2 * k + 2);
    }
}

TEST_CASE("blocks and induced subgraphs", "[graph]") {
    Graph bowtie = amalgam(complete_graph(3), complete_graph(3), 0, 0);
    auto blks = blocks(bowtie);
    REQUIRE(blks.size() == 2);
    CHECK(blks[0].size() == 3);
    CHECK(blks[1].size() == 3);

    auto pth = blocks(path_graph(4));
    CHECK(pth.size() == 3); // every edge is its own block

    Graph sub = induced_subgraph(petersen_graph(), {0, 1, 2, 3, 4});
    CHECK(sub.vertex_count() == 5);
    CHECK(sub.edge_count() == 5); // the outer cycle

    Graph del = delete_edge(complete_graph(4), 0, 1);
    CHECK(del.edge_count() == 5);
    CHECK(!del.adjacent(0, 1));
}

TEST_CASE("bipartition", "[graph]") {
    Graph k23 = complete_bipartite(2, 3);
    auto col = bipartition(k23);
    REQUIRE(col.has_value());
    for (auto [u, v] : k23.edges()) CHECK((*col)[u] != (*col)[v]);
    CHECK(!bipartition(cycle_graph(5)).has_value());
}
