#include "cutcover/cuts.hpp"
#include "cutcover/random_model.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace cutcover;

TEST_CASE("cut enumeration on small graphs", "[cuts]") {
    auto k3 = enumerate_cuts(complete_graph(3));
    CHECK(k3.size() == 3);
    for (const auto& c : k3) CHECK(c.edge_indices.size() == 2);

    auto k2 = enumerate_cuts(complete_graph(2));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].edge_indices.size() == 1);

    auto c4 = enumerate_cuts(cycle_graph(4));
    CHECK(c4.size() == 7);
    std::multiset<size_t> sizes;
    for (const auto& c : c4) sizes.insert(c.edge_indices.size());
    CHECK(sizes == std::multiset<size_t>{2, 2, 2, 2, 2, 2, 4});
}

TEST_CASE("cuts are canonical and complement-invariant", "[cuts]") {
    Graph g = petersen_graph();
    BigInt full = (BigInt(1) << g.vertex_count()) - 1;
    for (std::uint64_t w : {0b1010101010ULL, 0b0000011111ULL, 0b1000000001ULL}) {
        Cut a = make_cut(g, BigInt(w));
        Cut b = make_cut(g, full & ~BigInt(w));
        CHECK(a.member_mask == b.member_mask); // delta(W) = delta(V \ W)
        CHECK(a.edge_indices == b.edge_indices);
        CHECK(!a.contains_vertex(0));
    }
}

TEST_CASE("cut space is closed under symmetric difference", "[cuts]") {
    Graph g = sample_gnp(9, Rational(1, 2), 42);
    REQUIRE(g.has_edges());
    for (std::uint64_t w1 : {0b101010101ULL, 0b000011111ULL, 0b010000001ULL})
        for (std::uint64_t w2 : {0b110000011ULL, 0b001110000ULL}) {
            Cut a = make_cut(g, BigInt(w1));
            Cut b = make_cut(g, BigInt(w2));
            Cut c = make_cut(g, BigInt(w1 ^ w2));
            std::set<int> sym;
            for (int e : a.edge_indices) sym.insert(e);
            for (int e : b.edge_indices) {
                if (sym.count(e)) sym.erase(e);
                else sym.insert(e);
            }
            std::set<int> got(c.edge_indices.begin(), c.edge_indices.end());
            CHECK(got == sym);
        }
}

TEST_CASE("maximum cut on known instances", "[cuts]") {
    CHECK(max_cut(petersen_graph()).value == 12);
    CHECK(max_cut(complete_graph(4)).value == 4);
    CHECK(max_cut(complete_graph(5)).value == 6);
    CHECK(bipartite_density(complete_graph(5)) == Rational(3, 5));
    CHECK(bipartite_density(complete_bipartite(4, 5)) == 1);
    CHECK(bipartite_density(kneser_graph(5, 2)) == Rational(4, 5));

    // weighted: C_5 with y = 1/4 per edge has max cut weight 1
    std::vector<Rational> w(5, Rational(1, 4));
    MaxCutResult mc = max_cut(cycle_graph(5), &w);
    CHECK(mc.value == 1);
    CHECK(mc.witness.edge_indices.size() == 4);
}

TEST_CASE("maximum cut witness is canonical and consistent", "[cuts]") {
    MaxCutResult mc = max_cut(petersen_graph());
    CHECK(!mc.witness.contains_vertex(0));
    CHECK(Rational(int(mc.witness.edge_indices.size())) == mc.value);
}

TEST_CASE("every graph has a cut with at least half the edges", "[cuts]") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = sample_gnp(10, Rational(1, 2), seed);
        if (!g.has_edges()) continue;
        CHECK(max_cut(g).value * 2 >= g.edge_count());
    }
}

TEST_CASE("bipartite density is 1 exactly for bipartite graphs", "[cuts]") {
    CHECK((bipartite_density(cycle_graph(6)) == 1) == !odd_girth(cycle_graph(6)).has_value());
    CHECK((bipartite_density(cycle_graph(5)) == 1) == !odd_girth(cycle_graph(5)).has_value());
    CHECK((bipartite_density(petersen_graph()) == 1) == !odd_girth(petersen_graph()).has_value());
}

TEST_CASE("kneser cut size closed form", "[cuts]") {
    CHECK(kneser_cut_size(5, 2) == 12);
    CHECK(kneser_cut_size(7, 3) == 60);
    CHECK(kneser_cut_size(2, 1) == 1);
    // brute count of delta(U), U = subsets containing element 0
    for (auto [n, k] : {std::pair{5, 2}, std::pair{7, 3}}) {
        Graph g = kneser_graph(n, k);
        auto sets = kneser_vertex_sets(n, k);
        BigInt count = 0;
        for (auto [u, v] : g.edges())
            if (((sets[u] & 1) != 0) != ((sets[v] & 1) != 0)) ++count;
        CHECK(count == kneser_cut_size(n, k));
    }
}

TEST_CASE("cover checking", "[cuts]") {
    Graph c5 = cycle_graph(5);
    CutFamily rotations;
    for (int i = 0; i < 5; ++i) {
        BigInt mask = (BigInt(1) << i) | (BigInt(1) << ((i + 2) % 5));
        rotations.entries.emplace_back(make_cut(c5, mask), Rational(1));
    }
    CHECK(check_cover(c5, rotations, 4));
    CHECK(!check_cover(c5, rotations, 5));

    Graph k2 = complete_graph(2);
    CutFamily single;
    single.entries.emplace_back(make_cut(k2, BigInt(2)), Rational(1));
    CHECK(check_cover(k2, single, 1));

    Graph k3 = complete_graph(3);
    CutFamily two;
    two.entries.emplace_back(make_cut(k3, BigInt(2)), Rational(1));
    two.entries.emplace_back(make_cut(k3, BigInt(4)), Rational(1));
    CHECK(!check_cover(k3, two, 2)); // edges 0-1 and 0-2 are covered only once
    CHECK(check_cover(k3, two, 1));
}

TEST_CASE("size guards", "[cuts]") {
    CHECK_THROWS_AS(enumerate_cuts(complete_bipartite(11, 11)), SizeLimitError);
    CHECK_THROWS_AS(max_cut(complete_bipartite(15, 15)), SizeLimitError);
    CHECK_THROWS_AS(max_cut(Graph(3, {})), EdgelessError);
}
