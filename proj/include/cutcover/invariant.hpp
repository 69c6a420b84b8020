#pragma once

#include "cutcover/cuts.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/hom.hpp"
#include "cutcover/lp.hpp"

#include <optional>
#include <vector>

namespace cutcover {

// Rational-weighted cut family covering every edge at least once;
// value = total weight = x(G) when optimal.
struct CoverCertificate {
    CutFamily family;
    Rational value;
};

// Per-edge weights with every cut carrying weight at most 1;
// value = sum of weights = x(G) when optimal.
struct DualCertificate {
    std::vector<Rational> y; // indexed like g.edges()
    Rational value;
    bool orbit_constant = false;
};

struct XResult {
    Rational x;
    CoverCertificate primal;
    DualCertificate dual;
};

inline Rational chi_q_of_x(const Rational& x) { return Rational(2) / (Rational(2) - x); }

// ---------------------------------------------------------------------------
// Certificate verification (exact re-checks; malformed input throws
// std::invalid_argument, an invalid-but-well-formed certificate returns false)

inline bool verify_cover_certificate(const Graph& g, const CoverCertificate& cert) {
    g.require_edges("verify_cover_certificate");
    Rational total = 0;
    for (const auto& [cut, w] : cert.family.entries) {
        if (cut.member_mask < 0 || cut.member_mask >= (BigInt(1) << g.vertex_count()))
            throw std::invalid_argument("cover certificate: cut mask out of range");
        if (w < 0) throw std::invalid_argument("cover certificate: negative weight");
        total += w;
    }
    if (total != cert.value) return false;
    std::vector<Rational> covered(g.edge_count(), 0);
    for (const auto& [cut, w] : cert.family.entries) {
        Cut c = make_cut(g, cut.member_mask); // recompute delta(W) against g
        for (int e : c.edge_indices) covered[e] += w;
    }
    for (const auto& c : covered)
        if (c < 1) return false;
    return true;
}

inline bool verify_dual_certificate(const Graph& g, const DualCertificate& cert) {
    g.require_edges("verify_dual_certificate");
    if (int(cert.y.size()) != g.edge_count())
        throw std::invalid_argument("dual certificate: weight count mismatch");
    Rational total = 0;
    for (const auto& w : cert.y) {
        if (w < 0) return false;
        total += w;
    }
    if (total != cert.value) return false;
    // feasibility for every cut at once: weighted MAXCUT <= 1
    return max_cut(g, &cert.y).value <= 1;
}

// ---------------------------------------------------------------------------
// x(G) via exact LP, with both certificates

namespace detail {

inline XResult x_bipartite(const Graph& g, const std::vector<int>& color) {
    XResult r;
    r.x = 1;
    BigInt mask = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (color[v] != color[0]) boost::multiprecision::bit_set(mask, unsigned(v));
    Cut whole = make_cut(g, mask); // delta(W) = E(G)
    if (int(whole.edge_indices.size()) != g.edge_count())
        throw std::logic_error("x_exact: bipartition cut does not cover E");
    r.primal.family.entries.emplace_back(std::move(whole), Rational(1));
    r.primal.value = 1;
    r.dual.y.assign(g.edge_count(), Rational(1, g.edge_count()));
    r.dual.value = 1;
    return r;
}

// Full cut enumeration: LP (min sum w(X), per-edge coverage >= 1).
inline XResult x_primal_route(const Graph& g) {
    std::vector<Cut> cuts = enumerate_cuts(g);
    LpProblem p = LpProblem::make(Sense::Minimize, int(cuts.size()));
    for (int j = 0; j < int(cuts.size()); ++j) p.objective[j] = 1;
    std::vector<std::vector<std::pair<int, Rational>>> rows(g.edge_count());
    for (int j = 0; j < int(cuts.size()); ++j)
        for (int e : cuts[j].edge_indices) rows[e].emplace_back(j, Rational(1));
    for (int e = 0; e < g.edge_count(); ++e)
        p.add_constraint(std::move(rows[e]), Rel::Ge, Rational(1));
    LpSolution sol = lp_solve(p);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("x_exact: covering LP not optimal");
    XResult r;
    r.x = sol.objective_value;
    for (int j = 0; j < int(cuts.size()); ++j)
        if (sol.primal[j] != 0) r.primal.family.entries.emplace_back(cuts[j], sol.primal[j]);
    r.primal.value = sol.objective_value;
    r.dual.y = sol.dual;
    r.dual.value = sol.objective_value;
    return r;
}

// Dual LP (max sum y(e), every cut <= 1) with lazy cut rows separated by
// exact weighted MAXCUT; the row duals are the cover weights.
inline XResult x_separation_route(const Graph& g) {
    LpProblem base = LpProblem::make(Sense::Maximize, g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) base.objective[e] = 1;
    std::vector<Cut> row_cuts;
    for (int v = 0; v < g.vertex_count(); ++v) {
        BigInt m = 0;
        boost::multiprecision::bit_set(m, unsigned(v));
        Cut c = make_cut(g, m);
        if (c.edge_indices.empty()) continue;
        std::vector<std::pair<int, Rational>> coeffs;
        for (int e : c.edge_indices) coeffs.emplace_back(e, Rational(1));
        base.add_constraint(std::move(coeffs), Rel::Le, Rational(1));
        row_cuts.push_back(std::move(c));
    }
    auto oracle = [&](const std::vector<Rational>& y) -> std::optional<LpConstraint> {
        MaxCutResult mc = max_cut(g, &y);
        if (mc.value <= 1) return std::nullopt;
        LpConstraint c;
        c.rel = Rel::Le;
        c.rhs = 1;
        for (int e : mc.witness.edge_indices) c.coeffs.emplace_back(e, Rational(1));
        row_cuts.push_back(mc.witness);
        return c;
    };
    LpSolution sol = lp_solve_with_separation(base, oracle);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("x_exact: dual LP not optimal");
    XResult r;
    r.x = sol.objective_value;
    r.dual.y = sol.primal;
    r.dual.value = sol.objective_value;
    for (size_t i = 0; i < row_cuts.size(); ++i)
        if (sol.dual[i] != 0) r.primal.family.entries.emplace_back(row_cuts[i], sol.dual[i]);
    r.primal.value = sol.objective_value;
    return r;
}

} // namespace detail

// Exact fractional cut-covering number with primal and dual certificates.
// Bipartite graphs short-circuit (x = 1 with explicit certificates); full
// cut enumeration up to `primal_limit` vertices, separation-based dual up
// to 24. Certificates are re-verified before returning.
// The crossover sits at 10 vertices: the all-cuts tableau grows one column
// per canonical subset and measured solve times pass a minute from 11 on,
// while the separated dual stays well under a second there.
inline XResult x_exact(const Graph& g, int primal_limit = 10) {
    g.require_edges("x_exact");
    XResult r;
    if (auto color = bipartition(g)) {
        r = detail::x_bipartite(g, *color);
        if (!verify_cover_certificate(g, r.primal)) throw std::logic_error("x_exact: primal certificate failed");
        // dual feasibility is immediate: any cut's weight is at most the
        // total weight 1, so the MAXCUT oracle pass is skipped here (the
        // graph may exceed the oracle's size budget).
        return r;
    }
    if (g.vertex_count() <= primal_limit)
        r = detail::x_primal_route(g);
    else if (g.vertex_count() <= 24)
        r = detail::x_separation_route(g);
    else
        throw SizeLimitError("x_exact: |V| <= 24");
    if (r.primal.value != r.dual.value) throw std::logic_error("x_exact: strong duality violated");
    if (!verify_cover_certificate(g, r.primal)) throw std::logic_error("x_exact: primal certificate failed");
    if (!verify_dual_certificate(g, r.dual)) throw std::logic_error("x_exact: dual certificate failed");
    return r;
}

inline Rational chi_q(const Graph& g) { return chi_q_of_x(x_exact(g).x); }

// ---------------------------------------------------------------------------
// Orbit-symmetric dual optimum: averages an optimal dual over edge orbits
// (average of optimal solutions under automorphisms stays optimal), then
// re-verifies feasibility and value exactly.
inline DualCertificate dual_symmetric(const Graph& g) {
    XResult r = x_exact(g);
    EdgeOrbits orbits = edge_orbits(g);
    std::vector<Rational> sum(orbits.count, 0);
    std::vector<int> size(orbits.count, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        sum[orbits.orbit[e]] += r.dual.y[e];
        size[orbits.orbit[e]] += 1;
    }
    DualCertificate d;
    d.y.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        d.y[e] = sum[orbits.orbit[e]] / size[orbits.orbit[e]];
    d.value = r.x;
    d.orbit_constant = true;
    if (!verify_dual_certificate(g, d)) throw std::logic_error("dual_symmetric: averaged dual infeasible");
    Rational total = 0;
    for (const auto& w : d.y) total += w;
    if (total != r.x) throw std::logic_error("dual_symmetric: averaged dual lost optimality");
    return d;
}

// ---------------------------------------------------------------------------
// Bounds report

struct BoundsReport {
    std::optional<Rational> lower_bipartite; // 1/b(G)
    std::optional<Rational> lower_subgraph;  // max over induced H of 1/b(H)
    std::optional<Rational> lower_odd_girth; // 1 + 1/(g_o - 1), or 1 if bipartite
    std::optional<Rational> upper_chi;       // 2 - 1/ceil(chi/2)
    std::optional<Rational> exact;
};

// Minimum bipartite density over all induced subgraphs with at least one
// edge. Exhaustive over vertex subsets; |V| <= 16.
inline Rational min_induced_bipartite_density(const Graph& g) {
    int n = g.vertex_count();
    if (n > 16) throw SizeLimitError("min_induced_bipartite_density: |V| <= 16");
    g.require_edges("min_induced_bipartite_density");
    std::optional<Rational> best;
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
        // edges inside S
        int m = 0;
        for (auto [u, v] : g.edges())
            if ((s >> u & 1) && (s >> v & 1)) ++m;
        if (m == 0) continue;
        // MAXCUT of the induced subgraph: Gray scan over W within S
        // (lowest vertex of S pinned outside W)
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) verts.push_back(v);
        int k = int(verts.size());
        std::vector<char> side(n, 0);
        long long cur = 0, bestcut = 0;
        std::uint64_t steps = std::uint64_t(1) << (k - 1);
        for (std::uint64_t i = 1; i < steps; ++i) {
            int v = verts[std::countr_zero(i) + 1];
            for (int u : g.neighbors(v)) {
                if (!(s >> u & 1)) continue;
                cur += (side[u] == side[v]) ? 1 : -1;
            }
            side[v] ^= 1;
            if (cur > bestcut) bestcut = cur;
        }
        for (int v : verts) side[v] = 0;
        Rational b(bestcut, m);
        if (!best || b < *best) best = b;
    }
    return *best;
}

inline BoundsReport bounds(const Graph& g) {
    g.require_edges("bounds");
    BoundsReport r;
    try {
        r.lower_bipartite = Rational(1) / bipartite_density(g);
    } catch (const SizeLimitError&) {}
    try {
        r.lower_subgraph = Rational(1) / min_induced_bipartite_density(g);
    } catch (const SizeLimitError&) {}
    if (auto go = odd_girth(g))
        r.lower_odd_girth = Rational(1) + Rational(1, *go - 1);
    else
        r.lower_odd_girth = Rational(1);
    try {
        int chi = chromatic_number(g);
        r.upper_chi = Rational(2) - Rational(1, (chi + 1) / 2);
    } catch (const SizeLimitError&) {}
    try {
        r.exact = x_exact(g).x;
    } catch (const SizeLimitError&) {}
    return r;
}

// ---------------------------------------------------------------------------
// Structural laws (components, blocks, amalgams, products)

struct OperationsReport {
    Rational x1, x2;
    Rational x_union, x_amalgam, x_cartesian, x_categorical;
    Rational x_blocks_max; // max of x over 2-connected blocks of the amalgam
    bool union_is_max = false;
    bool amalgam_is_max = false;
    bool blocks_law = false;
    bool cartesian_is_max = false;
    bool categorical_le_min = false;
    bool all_hold = false;
};

inline OperationsReport check_operations_laws(const Graph& g1, const Graph& g2) {
    OperationsReport r;
    r.x1 = x_exact(g1).x;
    r.x2 = x_exact(g2).x;
    Rational mx = std::max(r.x1, r.x2), mn = std::min(r.x1, r.x2);
    r.x_union = x_exact(disjoint_union(g1, g2)).x;
    Graph am = amalgam(g1, g2, 0, 0);
    r.x_amalgam = x_exact(am).x;
    r.x_cartesian = x_exact(product(ProductKind::Cartesian, g1, g2)).x;
    r.x_categorical = x_exact(product(ProductKind::Categorical, g1, g2)).x;
    // block decomposition of the amalgam: solve blocks independently, combine by max
    std::optional<Rational> bm;
    for (const auto& blk : blocks(am)) {
        std::vector<int> verts;
        for (auto [u, v] : blk) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        Rational xb = x_exact(induced_subgraph(am, verts)).x;
        if (!bm || xb > *bm) bm = xb;
    }
    r.x_blocks_max = *bm;
    r.union_is_max = r.x_union == mx;
    r.amalgam_is_max = r.x_amalgam == mx;
    r.blocks_law = r.x_blocks_max == r.x_amalgam;
    r.cartesian_is_max = r.x_cartesian == mx;
    r.categorical_le_min = r.x_categorical <= mn;
    r.all_hold = r.union_is_max && r.amalgam_is_max && r.blocks_law && r.cartesian_is_max &&
                 r.categorical_le_min;
    return r;
}

struct HomMonotoneReport {
    SearchStatus status = SearchStatus::NotFound;
    bool monotone = false; // meaningful when status == Found
    Rational x_g, x_h;
};

// A found homomorphism G -> H must give x(G) <= x(H).
// Budget exhaustion is reported as unknown, never as a refutation.
inline HomMonotoneReport check_hom_monotone(const Graph& g, const Graph& h,
                                            long long budget = 100'000'000) {
    HomMonotoneReport r;
    HomResult hom = find_homomorphism(g, h, budget);
    r.status = hom.status;
    if (hom.status != SearchStatus::Found) return r;
    if (!is_homomorphism(g, h, hom.map)) throw std::logic_error("check_hom_monotone: bad map");
    r.x_g = x_exact(g).x;
    r.x_h = x_exact(h).x;
    r.monotone = r.x_g <= r.x_h;
    return r;
}

} // namespace cutcover
