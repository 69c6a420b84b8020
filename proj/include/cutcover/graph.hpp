#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutcover {

// Thrown when an input exceeds a documented exact-computation budget.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation that needs at least one edge receives an
// edgeless graph (edgeless graphs are constructible but carry no
// invariants).
struct EdgelessError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>; // always u < v

constexpr int kMaxVertices = 1 << 20;

// Simple undirected loopless graph on vertices 0..n-1. Immutable after
// construction; edge list kept sorted lexicographically, adjacency held
// both as neighbor lists and per-vertex bitmasks.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n <= 0 || n > kMaxVertices)
            throw std::invalid_argument("vertex count out of range");
        std::set<Edge> uniq;
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("loop edge");
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
            uniq.emplace(u, v);
        }
        edges_.assign(uniq.begin(), uniq.end());
        adj_.resize(n);
        mask_.assign(n, std::vector<std::uint64_t>((n + 63) / 64, 0));
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            mask_[u][v >> 6] |= std::uint64_t(1) << (v & 63);
            mask_[v][u >> 6] |= std::uint64_t(1) << (u & 63);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    bool has_edges() const { return !edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    const std::vector<std::uint64_t>& neighbor_mask(int v) const { return mask_[v]; }

    bool adjacent(int u, int v) const {
        return (mask_[u][v >> 6] >> (v & 63)) & 1;
    }

    // Index of {u,v} in the sorted edge list, or -1.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return -1;
        return int(it - edges_.begin());
    }

    void require_edges(const char* what) const {
        if (edges_.empty()) throw EdgelessError(std::string(what) + ": edgeless graph");
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<std::uint64_t>> mask_;
};

// ---------------------------------------------------------------------------
// Graph families

inline Graph complete_graph(int n) {
    if (n < 2) throw std::invalid_argument("complete: n >= 2 required");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) e.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
    return Graph(n, std::move(e));
}

inline Graph path_graph(int n) {
    if (n < 2) throw std::invalid_argument("path: n >= 2 required");
    std::vector<Edge> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete-bipartite: parts >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, std::move(e));
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, 5 + i);
    }
    return Graph(10, std::move(e));
}

namespace detail {
inline long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace detail

// The k-subsets of {0..n-1} as bitmasks in colexicographic order; the
// vertex indexing of kneser_graph.
inline std::vector<std::uint64_t> kneser_vertex_sets(int n, int k) {
    if (k <= 0 || 2 * k > n) throw std::invalid_argument("kneser: 0 < 2k <= n required");
    if (n > 62) throw std::invalid_argument("kneser: n <= 62 required");
    long long nv = detail::binom_ll(n, k);
    if (nv > kMaxVertices) throw std::invalid_argument("kneser: too many vertices");
    std::vector<std::uint64_t> subsets;
    // Colex order coincides with numeric order of the masks; step with
    // Gosper's hack (next mask of equal popcount).
    std::uint64_t s = (std::uint64_t(1) << k) - 1;
    while (s < (std::uint64_t(1) << n)) {
        subsets.push_back(s);
        std::uint64_t c = s & -s, r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
        if (c == 0) break;
    }
    return subsets;
}

// Kneser graph K(n,k): vertices are the k-subsets of {0..n-1} in
// colexicographic order, edges between disjoint subsets.
inline Graph kneser_graph(int n, int k) {
    std::vector<std::uint64_t> subsets = kneser_vertex_sets(n, k);
    std::vector<Edge> e;
    for (int i = 0; i < int(subsets.size()); ++i)
        for (int j = i + 1; j < int(subsets.size()); ++j)
            if ((subsets[i] & subsets[j]) == 0) e.emplace_back(i, j);
    return Graph(int(subsets.size()), std::move(e));
}

// Q_{n/k}: vertices {0,1}^n indexed by binary encoding (coordinate i in
// bit i), edge iff Hamming distance >= k.
inline Graph cube_power(int n, int k) {
    if (n < 1 || n > 20 || k < 1) throw std::invalid_argument("cube-power: 1 <= n <= 20, k >= 1");
    if (k > n) throw EdgelessError("cube-power: k > n gives an edgeless graph");
    int nv = 1 << n;
    std::vector<Edge> e;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            if (std::popcount(unsigned(u ^ v)) >= k) e.emplace_back(u, v);
    return Graph(nv, std::move(e));
}

// Q_n^{=k}: same vertices, edge iff Hamming distance exactly k.
inline Graph cube_layer(int n, int k) {
    if (n < 1 || n > 20 || k < 1 || k > n)
        throw std::invalid_argument("cube-layer: 1 <= k <= n <= 20");
    int nv = 1 << n;
    std::vector<Edge> e;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            if (std::popcount(unsigned(u ^ v)) == k) e.emplace_back(u, v);
    return Graph(nv, std::move(e));
}

// Circular clique K_{n/k}: vertices Z_n, edge iff circular distance >= k.
inline Graph circular_clique(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("circular-clique: n >= 2, k >= 1");
    if (2 * k > n) throw EdgelessError("circular-clique: 2k > n gives an edgeless graph");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = std::min(v - u, n - (v - u));
            if (d >= k) e.emplace_back(u, v);
        }
    return Graph(n, std::move(e));
}

// Dispatcher used by the CLI.
inline Graph generate(const std::string& family, const std::vector<int>& p) {
    auto need = [&](size_t k) {
        if (p.size() != k) throw std::invalid_argument("generate " + family + ": wrong parameter count");
    };
    if (family == "complete") { need(1); return complete_graph(p[0]); }
    if (family == "cycle") { need(1); return cycle_graph(p[0]); }
    if (family == "path") { need(1); return path_graph(p[0]); }
    if (family == "complete-bipartite") { need(2); return complete_bipartite(p[0], p[1]); }
    if (family == "petersen") { need(0); return petersen_graph(); }
    if (family == "kneser") { need(2); return kneser_graph(p[0], p[1]); }
    if (family == "cube-power") { need(2); return cube_power(p[0], p[1]); }
    if (family == "cube-layer") { need(2); return cube_layer(p[0], p[1]); }
    if (family == "circular-clique") { need(2); return circular_clique(p[0], p[1]); }
    throw std::invalid_argument("unknown family: " + family);
}

// ---------------------------------------------------------------------------
// Products and amalgams

enum class ProductKind { Cartesian, Categorical };

// Vertex (u,v) of the product is indexed u*|V(g2)|+v.
inline Graph product(ProductKind kind, const Graph& g1, const Graph& g2) {
    long long nv = (long long)g1.vertex_count() * g2.vertex_count();
    if (nv > kMaxVertices) throw SizeLimitError("product: too many vertices");
    int n2 = g2.vertex_count();
    std::vector<Edge> e;
    if (kind == ProductKind::Cartesian) {
        for (int u = 0; u < g1.vertex_count(); ++u)
            for (auto [v, w] : g2.edges()) e.emplace_back(u * n2 + v, u * n2 + w);
        for (auto [u, w] : g1.edges())
            for (int v = 0; v < n2; ++v) e.emplace_back(u * n2 + v, w * n2 + v);
    } else {
        for (auto [u, u2] : g1.edges())
            for (auto [v, v2] : g2.edges()) {
                e.emplace_back(u * n2 + v, u2 * n2 + v2);
                e.emplace_back(u * n2 + v2, u2 * n2 + v);
            }
    }
    Graph g(int(nv), std::move(e));
    if (!g.has_edges()) throw EdgelessError("product: edgeless result");
    return g;
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int off = g1.vertex_count();
    std::vector<Edge> e = g1.edges();
    for (auto [u, v] : g2.edges()) e.emplace_back(u + off, v + off);
    return Graph(off + g2.vertex_count(), std::move(e));
}

// One-vertex amalgam: glue vertex v1 of g1 to vertex v2 of g2.
inline Graph amalgam(const Graph& g1, const Graph& g2, int v1, int v2) {
    if (v1 < 0 || v1 >= g1.vertex_count() || v2 < 0 || v2 >= g2.vertex_count())
        throw std::invalid_argument("amalgam: shared vertex out of range");
    int off = g1.vertex_count();
    auto relabel = [&](int v) {
        if (v == v2) return v1;
        return v < v2 ? v + off : v + off - 1;
    };
    std::vector<Edge> e = g1.edges();
    for (auto [u, v] : g2.edges()) e.emplace_back(relabel(u), relabel(v));
    return Graph(off + g2.vertex_count() - 1, std::move(e));
}

// ---------------------------------------------------------------------------
// Basic invariants

// Proper 2-coloring if the graph is bipartite.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

// Length of the shortest odd cycle; nullopt for bipartite graphs.
// BFS from every vertex; an edge joining two vertices at equal distance
// d from the source closes an odd cycle of length <= 2d+1, and the
// minimum over all sources is exact.
inline std::optional<int> odd_girth(const Graph& g) {
    int best = -1;
    std::vector<int> dist(g.vertex_count());
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u))
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
        }
        for (auto [u, v] : g.edges())
            if (dist[u] != -1 && dist[u] == dist[v]) {
                int len = 2 * dist[u] + 1;
                if (best == -1 || len < best) best = len;
            }
    }
    if (best == -1) return std::nullopt;
    return best;
}

// ---------------------------------------------------------------------------
// Exact chromatic number (DSATUR branch and bound)

namespace detail {

// Greedy clique on a degree-descending order; gives the initial lower bound.
inline int greedy_clique(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    return int(clique.size());
}

struct ChromaticSearch {
    const Graph& g;
    std::vector<int> color;
    int best;
    std::vector<int> best_coloring;

    explicit ChromaticSearch(const Graph& gr) : g(gr), color(gr.vertex_count(), -1), best(gr.vertex_count() + 1) {}

    int saturation(int v) const {
        std::set<int> seen;
        for (int u : g.neighbors(v))
            if (color[u] != -1) seen.insert(color[u]);
        return int(seen.size());
    }

    // DSATUR vertex choice: max saturation, then max degree, then lowest index.
    int pick() const {
        int bestv = -1, bs = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] != -1) continue;
            int s = saturation(v);
            if (s > bs || (s == bs && bestv != -1 && g.degree(v) > g.degree(bestv))) {
                bs = s;
                bestv = v;
            }
        }
        return bestv;
    }

    void run(int colored, int used, int lower) {
        if (used >= best) return;
        if (colored == g.vertex_count()) {
            best = used;
            best_coloring = color;
            return;
        }
        int v = pick();
        int limit = std::min(used + 1, best - 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) { ok = false; break; }
            if (!ok) continue;
            color[v] = c;
            run(colored + 1, std::max(used, c + 1), lower);
            color[v] = -1;
            if (best <= lower) return;
        }
    }
};

} // namespace detail

// Exact chromatic number; branch-and-bound budget |V| <= 40.
inline int chromatic_number(const Graph& g) {
    g.require_edges("chromatic_number");
    if (g.vertex_count() > 40) throw SizeLimitError("chromatic_number: |V| <= 40");
    if (bipartition(g)) return 2;
    int lower = std::max(3, detail::greedy_clique(g));
    detail::ChromaticSearch s(g);
    s.run(0, 0, lower);
    return s.best;
}

// ---------------------------------------------------------------------------
// Connectivity structure

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// 2-connected blocks as edge lists (cut-vertex DFS). Every edge lands in
// exactly one block.
inline std::vector<std::vector<Edge>> blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> out;
    int counter = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        num[u] = low[u] = counter++;
        for (int v : g.neighbors(u)) {
            if (v == parent) {
                parent = -2; // consume one parent edge (parallel edges impossible)
                continue;
            }
            if (num[v] == -1) {
                stack.emplace_back(std::min(u, v), std::max(u, v));
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    std::vector<Edge> blk;
                    Edge top{std::min(u, v), std::max(u, v)};
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        blk.push_back(e);
                        if (e == top) break;
                    }
                    out.push_back(std::move(blk));
                }
            } else if (num[v] < num[u]) {
                stack.emplace_back(std::min(u, v), std::max(u, v));
                low[u] = std::min(low[u], num[v]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (num[s] == -1) dfs(s, -1);
    return out;
}

// Induced subgraph on the given (sorted) vertex list; vertex i of the
// result is verts[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> index(g.vertex_count(), -1);
    for (int i = 0; i < int(verts.size()); ++i) index[verts[i]] = i;
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1)
            e.emplace_back(std::min(index[u], index[v]), std::max(index[u], index[v]));
    return Graph(int(verts.size()), std::move(e));
}

// Subgraph on the same vertex set with one edge removed.
inline Graph delete_edge(const Graph& g, int u, int v) {
    std::vector<Edge> e;
    if (u > v) std::swap(u, v);
    for (auto ed : g.edges())
        if (ed != Edge{u, v}) e.push_back(ed);
    return Graph(g.vertex_count(), std::move(e));
}

} // namespace cutcover
