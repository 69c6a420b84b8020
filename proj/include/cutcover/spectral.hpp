#pragma once

#include "cutcover/binomial.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/rational.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace cutcover {

// Alternating sum  sum_t (-1)^t C(x,t) C(n-x,k-t)  — the eigenvalue of the
// Hamming-layer graph Q_n^{=k} at character weight x.
inline BigInt krawtchouk(int n, int k, int x) {
    if (n < 0 || k < 0 || k > n || x < 0 || x > n)
        throw std::invalid_argument("krawtchouk: need 0 <= k <= n, 0 <= x <= n");
    BigInt sum = 0;
    for (int t = 0; t <= k; ++t) {
        BigInt term = binomial(x, t) * binomial(n - x, k - t);
        if (t & 1) sum -= term;
        else sum += term;
    }
    return sum;
}

// Exact spectrum of Q_n^{=k} via the character closed form, plus the
// eigenvalue MAXCUT bound it yields: b <= (r - Theta) / (2r) and hence
// x >= 2r / (r - Theta) with r = C(n,k).
struct SpectralReport {
    int n = 0, k = 0;
    std::vector<BigInt> eigenvalue_by_weight; // index x = 0..n; multiplicity C(n,x)
    BigInt theta_min;
    Rational density_bound;
    Rational x_lower_bound;
};

inline SpectralReport spectrum_cube_layer(int n, int k) {
    if (n < 1 || n > 64 || k < 1 || k > n)
        throw std::invalid_argument("spectrum_cube_layer: 1 <= k <= n <= 64");
    SpectralReport r;
    r.n = n;
    r.k = k;
    r.eigenvalue_by_weight.reserve(n + 1);
    for (int x = 0; x <= n; ++x) r.eigenvalue_by_weight.push_back(krawtchouk(n, k, x));
    r.theta_min = r.eigenvalue_by_weight[0];
    for (const auto& ev : r.eigenvalue_by_weight)
        if (ev < r.theta_min) r.theta_min = ev;
    BigInt degree = binomial(n, k); // = eigenvalue at weight 0
    r.density_bound = Rational(degree - r.theta_min, 2 * degree);
    r.x_lower_bound = Rational(2 * degree, degree - r.theta_min);
    return r;
}

// Scan of the binomial inequality
//   sum_{odd t} C(x,t) C(n-x,k-t) <= C(n-1,k-1)
// over all n <= n_max, even k with k <= n < 2k, 1 <= x <= n.
struct BinomScanReport {
    long long checked = 0;
    std::vector<std::array<int, 3>> violations;   // (n, k, x); expected empty
    std::vector<std::array<int, 3>> tight_not_x1; // tight cases beyond the trivial x = 1
    bool tight_at_x1_always = true;
};

inline BinomScanReport verify_binom_inequality(int n_max) {
    if (n_max < 1 || n_max > 200) throw std::invalid_argument("verify_binom_inequality: n_max <= 200");
    BinomScanReport rep;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 2; k <= n; k += 2) {
            if (!(k <= n && n < 2 * k)) continue;
            BigInt bound = binomial(n - 1, k - 1);
            for (int x = 1; x <= n; ++x) {
                BigInt sum = 0;
                for (int t = 1; t <= std::min(k, x); t += 2) sum += binomial(x, t) * binomial(n - x, k - t);
                ++rep.checked;
                if (sum > bound) rep.violations.push_back({n, k, x});
                if (sum == bound && x != 1) rep.tight_not_x1.push_back({n, k, x});
                if (x == 1 && sum != bound) rep.tight_at_x1_always = false;
            }
        }
    return rep;
}

// Closed-form x(Q_{n/k}) for k <= n < 2k: n/k for even k, (n+1)/(k+1) for odd.
inline Rational theorem_value(int n, int k) {
    if (!(1 <= k && k <= n && n < 2 * k)) throw std::invalid_argument("theorem_value: k <= n < 2k");
    if (k % 2 == 0) return Rational(n, k);
    return Rational(n + 1, k + 1);
}

// ---------------------------------------------------------------------------
// Numeric largest Laplacian eigenvalue with a certified two-sided bound.
// Cyclic Jacobi rotations; the residual off-diagonal Frobenius norm bounds
// the distance from every diagonal entry to the true spectrum.
struct EigenEstimate {
    double value = 0;
    double error = 0; // |true lambda_max - value| <= error
};

namespace detail {

inline EigenEstimate jacobi_max_eigenvalue(std::vector<std::vector<double>> a, double tol) {
    int n = int(a.size());
    auto off_norm = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2 * a[i][j] * a[i][j];
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_norm() <= tol) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
    }
    EigenEstimate e;
    e.error = off_norm();
    if (e.error > tol) throw std::runtime_error("jacobi_max_eigenvalue: did not converge");
    e.value = a[0][0];
    for (int i = 1; i < n; ++i) e.value = std::max(e.value, a[i][i]);
    return e;
}

} // namespace detail

// Largest eigenvalue of the Laplacian D - A, |V| <= 512.
inline EigenEstimate laplacian_lambda_max(const Graph& g, double tol = 1e-12) {
    int n = g.vertex_count();
    if (n > 512) throw SizeLimitError("laplacian_lambda_max: |V| <= 512");
    std::vector<std::vector<double>> lap(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) lap[v][v] = g.degree(v);
    for (auto [u, v] : g.edges()) {
        lap[u][v] = -1;
        lap[v][u] = -1;
    }
    return detail::jacobi_max_eigenvalue(std::move(lap), tol * std::max(1, 2 * n));
}

// The eigenvalue bound b(G) <= (|V|/|E|) * lambda_max(L)/4, as a certified
// numeric interval [lower, upper]. For cube-layer graphs prefer the exact
// spectrum_cube_layer route.
struct SpectralDensityBound {
    double lower = 0, upper = 0;
};

inline SpectralDensityBound spectral_density_bound(const Graph& g) {
    g.require_edges("spectral_density_bound");
    EigenEstimate e = laplacian_lambda_max(g);
    double scale = double(g.vertex_count()) / (4.0 * g.edge_count());
    SpectralDensityBound b;
    b.lower = (e.value - e.error) * scale;
    b.upper = (e.value + e.error) * scale;
    return b;
}

} // namespace cutcover
