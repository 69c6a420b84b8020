#pragma once

#include "cutcover/binomial.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cutcover {

// A cut delta(W) in canonical form: vertex 0 is never in W (delta(W) =
// delta(V \ W), so this loses nothing).
struct Cut {
    BigInt member_mask;            // bit v set iff v in W
    std::vector<int> edge_indices; // indices into g.edges(), ascending

    bool contains_vertex(int v) const { return boost::multiprecision::bit_test(member_mask, unsigned(v)); }
};

// Canonicalizes W and derives delta(W) against g.
inline Cut make_cut(const Graph& g, BigInt w_mask) {
    int n = g.vertex_count();
    if (boost::multiprecision::bit_test(w_mask, 0)) {
        BigInt full = (BigInt(1) << n) - 1;
        w_mask = full & ~w_mask;
    }
    Cut c;
    c.member_mask = w_mask;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        bool bu = boost::multiprecision::bit_test(w_mask, unsigned(u));
        bool bv = boost::multiprecision::bit_test(w_mask, unsigned(v));
        if (bu != bv) c.edge_indices.push_back(e);
    }
    return c;
}

// Rational-weighted family of cuts over one graph.
struct CutFamily {
    std::vector<std::pair<Cut, Rational>> entries; // weights nonnegative
};

// All 2^{n-1} canonical cuts with nonempty edge set.
inline std::vector<Cut> enumerate_cuts(const Graph& g) {
    int n = g.vertex_count();
    if (n > 21) throw SizeLimitError("enumerate_cuts: |V| <= 21");
    std::vector<Cut> cuts;
    std::uint64_t limit = std::uint64_t(1) << (n - 1);
    for (std::uint64_t w = 1; w < limit; ++w) {
        Cut c = make_cut(g, BigInt(w) << 1);
        if (!c.edge_indices.empty()) cuts.push_back(std::move(c));
    }
    return cuts;
}

// Exact maximum cut. Unweighted scan runs in int64; the weighted form
// clears denominators once and scans in big integers. Exhaustive over
// canonical subsets in Gray-code order with O(deg) incremental updates;
// ties broken by smallest member_mask.
struct MaxCutResult {
    Rational value;
    Cut witness;
};

inline MaxCutResult max_cut(const Graph& g, const std::vector<Rational>* weights = nullptr) {
    int n = g.vertex_count();
    if (n > 28) throw SizeLimitError("max_cut: |V| <= 28");
    g.require_edges("max_cut");
    if (weights && int(weights->size()) != g.edge_count())
        throw std::invalid_argument("max_cut: weight vector size mismatch");

    BigInt denom = 1;
    std::vector<BigInt> w_int;
    if (weights) {
        for (const auto& w : *weights) denom = boost::multiprecision::lcm(denom, rat_den(w));
        w_int.reserve(weights->size());
        for (const auto& w : *weights) w_int.push_back(rat_num(w) * (denom / rat_den(w)));
    }

    // per-vertex incremental deltas
    std::vector<char> side(n, 0);
    std::uint64_t best_mask = 0, cur_mask = 0;

    auto scan = [&](auto& cur, auto& best, auto&& edge_weight) {
        std::uint64_t steps = std::uint64_t(1) << (n - 1);
        for (std::uint64_t i = 1; i < steps; ++i) {
            int v = std::countr_zero(i) + 1; // vertex 1..n-1 toggles
            for (int u : g.neighbors(v)) {
                if (side[u] == side[v])
                    cur += edge_weight(u, v);
                else
                    cur -= edge_weight(u, v);
            }
            side[v] ^= 1;
            cur_mask ^= std::uint64_t(1) << v;
            if (cur > best || (cur == best && cur_mask < best_mask)) {
                best = cur;
                best_mask = cur_mask;
            }
        }
    };

    MaxCutResult r;
    if (!weights) {
        long long cur = 0, best = 0;
        best_mask = 0;
        scan(cur, best, [](int, int) { return 1; });
        r.value = Rational(best);
    } else {
        BigInt cur = 0, best = 0;
        best_mask = 0;
        scan(cur, best, [&](int u, int v) -> const BigInt& { return w_int[g.edge_index(u, v)]; });
        r.value = Rational(best, denom);
    }
    r.witness = make_cut(g, BigInt(best_mask));
    return r;
}

// b(G) = MAXCUT(G) / |E(G)|.
inline Rational bipartite_density(const Graph& g) {
    return max_cut(g).value / g.edge_count();
}

// Number of edges in delta(U) of the Kneser graph K(n,k), for U = the
// k-subsets containing one fixed element: C(n-1,k-1) * C(n-k,k).
inline BigInt kneser_cut_size(int n, int k) {
    if (k <= 0 || 2 * k > n) throw std::invalid_argument("kneser_cut_size: 0 < 2k <= n");
    return binomial(n - 1, k - 1) * binomial(n - k, k);
}

// True iff every edge's total weight across the cuts containing it is >= k.
inline bool check_cover(const Graph& g, const CutFamily& family, const Rational& k) {
    std::vector<Rational> covered(g.edge_count(), 0);
    for (const auto& [cut, weight] : family.entries) {
        for (int e : cut.edge_indices) {
            if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("check_cover: cut not valid for graph");
            covered[e] += weight;
        }
    }
    for (const auto& c : covered)
        if (c < k) return false;
    return true;
}

} // namespace cutcover
