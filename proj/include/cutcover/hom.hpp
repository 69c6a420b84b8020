#pragma once

#include "cutcover/graph.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace cutcover {

// Image array: vertex v of the source maps to map[v] in the target.
using VertexMap = std::vector<int>;

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct HomResult {
    SearchStatus status = SearchStatus::NotFound;
    VertexMap map; // valid when status == Found
};

inline bool is_homomorphism(const Graph& g, const Graph& h, const VertexMap& map) {
    if (int(map.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (map[v] < 0 || map[v] >= h.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (map[u] == map[v] || !h.adjacent(map[u], map[v])) return false;
    return true;
}

namespace detail {

struct HomSearch {
    const Graph& g;
    const Graph& h;
    long long budget;
    long long nodes = 0;
    std::vector<int> order;   // g vertices, degree-descending
    std::vector<int> pos;     // position of a g vertex in order
    std::vector<int> image;
    int words;

    HomSearch(const Graph& gg, const Graph& hh, long long b)
        : g(gg), h(hh), budget(b), image(gg.vertex_count(), -1) {
        order.resize(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int c) {
            if (g.degree(a) != g.degree(c)) return g.degree(a) > g.degree(c);
            return a < c;
        });
        pos.resize(g.vertex_count());
        for (int i = 0; i < int(order.size()); ++i) pos[order[i]] = i;
        words = (h.vertex_count() + 63) / 64;
    }

    // domains[level][v] is the candidate bitset of g vertex v at depth level.
    bool run(int level, std::vector<std::vector<std::uint64_t>>& domain) {
        if (level == g.vertex_count()) return true;
        int u = order[level];
        const auto& dom = domain[level];
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = dom[size_t(u) * words + w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                int a = w * 64 + b;
                if (++nodes > budget) return false;
                // forward-check: restrict later neighbors to N(a)
                auto& next = domain[level + 1];
                next = domain[level];
                bool dead = false;
                for (int nb : g.neighbors(u)) {
                    if (pos[nb] <= level) continue;
                    std::uint64_t any = 0;
                    const auto& hm = h.neighbor_mask(a);
                    for (int ww = 0; ww < words; ++ww) {
                        next[size_t(nb) * words + ww] &= hm[ww];
                        any |= next[size_t(nb) * words + ww];
                    }
                    if (!any) { dead = true; break; }
                }
                if (dead) continue;
                image[u] = a;
                if (run(level + 1, domain)) return true;
                image[u] = -1;
                if (nodes > budget) return false;
            }
        }
        return false;
    }
};

} // namespace detail

// Backtracking homomorphism search, exact within the node budget.
// BudgetExceeded is reported distinctly from NotFound.
inline HomResult find_homomorphism(const Graph& g, const Graph& h,
                                   long long node_budget = 100'000'000) {
    if (g.vertex_count() > 32) throw SizeLimitError("find_homomorphism: |V(g)| <= 32");
    if (h.vertex_count() > 4096) throw SizeLimitError("find_homomorphism: |V(h)| <= 4096");
    g.require_edges("find_homomorphism");
    h.require_edges("find_homomorphism");
    detail::HomSearch s(g, h, node_budget);
    int words = s.words;
    std::vector<std::vector<std::uint64_t>> domain(
        g.vertex_count() + 1,
        std::vector<std::uint64_t>(size_t(g.vertex_count()) * words));
    // initial domains: all of V(h), trimmed at the tail word
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w = 0; w < words; ++w) {
            std::uint64_t full = ~std::uint64_t(0);
            int rem = h.vertex_count() - w * 64;
            if (rem < 64) full = (std::uint64_t(1) << rem) - 1;
            domain[0][size_t(v) * words + w] = full;
        }
    HomResult r;
    if (s.run(0, domain)) {
        r.status = SearchStatus::Found;
        r.map = s.image;
    } else {
        r.status = s.nodes > node_budget ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Edge orbits under the automorphism group

struct EdgeOrbits {
    std::vector<int> orbit; // orbit id per edge index, ids 0..count-1
    int count = 0;
    // True when the partition is the orbit partition of the full group.
    // False for the flagged fallback (size/budget exceeded); the partition
    // is then refined by the orbits of the subgroup found so far, which is
    // still sound for orbit-averaging.
    bool exact = false;
};

namespace detail {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

struct AutSearch {
    const Graph& g;
    long long budget;
    long long nodes = 0;
    std::vector<int> image;
    DisjointSet& ds;
    int merges_left;

    AutSearch(const Graph& gg, long long b, DisjointSet& d, int merges)
        : g(gg), budget(b), image(gg.vertex_count(), -1), ds(d), merges_left(merges) {}

    bool run(int v, std::uint32_t used) { // returns false on budget/early stop
        if (merges_left == 0) return true; // single orbit reached, exactness preserved
        if (v == g.vertex_count()) {
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [a, b] = g.edges()[e];
                int f = g.edge_index(image[a], image[b]);
                if (ds.unite(e, f)) --merges_left;
            }
            return merges_left != 0;
        }
        for (int a = 0; a < g.vertex_count(); ++a) {
            if (used & (std::uint32_t(1) << a)) continue;
            if (g.degree(a) != g.degree(v)) continue;
            if (++nodes > budget) return false;
            bool ok = true;
            for (int j = 0; j < v; ++j)
                if (g.adjacent(v, j) != g.adjacent(a, image[j])) { ok = false; break; }
            if (!ok) continue;
            image[v] = a;
            if (!run(v + 1, used | (std::uint32_t(1) << a))) return false;
            image[v] = -1;
        }
        return true;
    }
};

} // namespace detail

// Partition of E(G) into orbits of the automorphism group, by exhaustive
// backtracking over the group (|V| <= 16). Above the limit, or when the
// node budget runs out, returns the flagged fallback.
inline EdgeOrbits edge_orbits(const Graph& g, long long node_budget = 20'000'000) {
    EdgeOrbits out;
    detail::DisjointSet ds(g.edge_count());
    bool exact = false;
    if (g.vertex_count() <= 16 && g.vertex_count() <= 32) {
        detail::AutSearch s(g, node_budget, ds, g.edge_count() - 1);
        bool completed = s.run(0, 0);
        exact = completed || s.merges_left == 0;
        if (s.nodes > node_budget && s.merges_left != 0) exact = false;
    }
    // label orbits by first-edge order
    std::vector<int> label(g.edge_count(), -1);
    out.orbit.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        int r = ds.find(e);
        if (label[r] == -1) label[r] = out.count++;
        out.orbit[e] = label[r];
    }
    out.exact = exact;
    return out;
}

// Enumerates the full automorphism group (intended for tests on tiny graphs).
inline std::vector<VertexMap> all_automorphisms(const Graph& g, long long node_budget = 20'000'000) {
    if (g.vertex_count() > 12) throw SizeLimitError("all_automorphisms: |V| <= 12");
    std::vector<VertexMap> result;
    std::vector<int> image(g.vertex_count(), -1);
    long long nodes = 0;
    std::function<void(int, std::uint32_t)> rec = [&](int v, std::uint32_t used) {
        if (v == g.vertex_count()) {
            result.push_back(image);
            return;
        }
        for (int a = 0; a < g.vertex_count(); ++a) {
            if (used & (std::uint32_t(1) << a)) continue;
            if (g.degree(a) != g.degree(v)) continue;
            if (++nodes > node_budget) throw SizeLimitError("all_automorphisms: budget");
            bool ok = true;
            for (int j = 0; j < v; ++j)
                if (g.adjacent(v, j) != g.adjacent(a, image[j])) { ok = false; break; }
            if (!ok) continue;
            image[v] = a;
            rec(v + 1, used | (std::uint32_t(1) << a));
            image[v] = -1;
        }
    };
    rec(0, 0);
    return result;
}

// ---------------------------------------------------------------------------
// Parity lift V(Q_{n/k}) -> V(Q_{(n+1)/(k+1)}): append the parity bit.
// A homomorphism whenever k is odd; verified edge-by-edge before returning.
inline VertexMap parity_lift(int n, int k) {
    if (k < 1 || k > n || k % 2 == 0) throw std::invalid_argument("parity_lift: odd 1 <= k <= n");
    if (n > 20) throw SizeLimitError("parity_lift: n <= 20");
    int nv = 1 << n;
    VertexMap map(nv);
    for (int v = 0; v < nv; ++v)
        map[v] = v | ((std::popcount(unsigned(v)) & 1) << n);
    // verify: every pair at distance >= k lands at distance >= k+1
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
            int d = std::popcount(unsigned(u ^ v));
            if (d < k) continue;
            int dd = std::popcount(unsigned(map[u] ^ map[v]));
            if (dd < k + 1) throw std::logic_error("parity_lift: verification failed");
        }
    return map;
}

} // namespace cutcover
