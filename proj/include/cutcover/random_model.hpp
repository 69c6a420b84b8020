#pragma once

#include "cutcover/cuts.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/invariant.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace cutcover {

namespace detail {

// splitmix64: the per-edge Bernoulli stream. Fully specified so that
// experiments replay bit-exactly across runs and platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace detail

// G(n,p): each of the C(n,2) candidate edges included independently with
// probability p, deterministically per (seed, edge index).
inline Graph sample_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_gnp: n >= 2");
    if (p < 0 || p > 1) throw std::invalid_argument("sample_gnp: p in [0,1]");
    // include edge iff stream value < floor(p * 2^64)
    BigInt threshold = (rat_num(p) << 64) / rat_den(p);
    std::vector<Edge> e;
    std::uint64_t idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx) {
            if (p == 1) {
                e.emplace_back(u, v);
                continue;
            }
            std::uint64_t r = detail::splitmix64(seed ^ (idx * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL));
            if (BigInt(r) < threshold) e.emplace_back(u, v);
        }
    return Graph(n, std::move(e));
}

// One sampled trial with the concentration-claim booleans:
//   claim1:  |E|  >  (1 - delta) p C(n,2)
//   claim2:  MAXCUT  <  (1 + delta) p n^2 / 4
struct TrialRecord {
    int edges = 0;
    long long maxcut = 0;
    Rational b; // 0 for edgeless samples
    bool claim1 = false;
    bool claim2 = false;
    std::optional<Rational> x;
};

struct Experiment {
    int n = 0;
    Rational p;
    int trials = 0;
    std::uint64_t seed = 0;
    Rational delta;
    std::vector<TrialRecord> records;
    int claim1_count = 0;
    int claim2_count = 0;
    Rational mean_b;
};

// Seeded experiment harness (n <= 24 for the exact per-trial MAXCUT). The
// a.a.s. statements cannot be asserted at fixed n; callers check the
// empirical claim frequencies as a proxy.
inline Experiment run_experiment(int n, const Rational& p, int trials, std::uint64_t seed,
                                 const Rational& delta, bool with_x = false) {
    if (n > 24) throw SizeLimitError("run_experiment: n <= 24");
    if (trials < 1) throw std::invalid_argument("run_experiment: trials >= 1");
    Experiment ex;
    ex.n = n;
    ex.p = p;
    ex.trials = trials;
    ex.seed = seed;
    ex.delta = delta;
    Rational c1_bound = (Rational(1) - delta) * p * Rational(std::int64_t(n) * (n - 1) / 2);
    Rational c2_bound = (Rational(1) + delta) * p * Rational(std::int64_t(n) * n, 4);
    Rational b_sum = 0;
    for (int t = 0; t < trials; ++t) {
        Graph g = sample_gnp(n, p, detail::splitmix64(seed + std::uint64_t(t)));
        TrialRecord rec;
        rec.edges = g.edge_count();
        if (g.has_edges()) {
            MaxCutResult mc = max_cut(g);
            rec.maxcut = static_cast<long long>(rat_num(mc.value));
            rec.b = mc.value / g.edge_count();
            if (with_x) rec.x = x_exact(g).x;
        }
        rec.claim1 = Rational(rec.edges) > c1_bound;
        rec.claim2 = Rational(rec.maxcut) < c2_bound;
        ex.claim1_count += rec.claim1;
        ex.claim2_count += rec.claim2;
        b_sum += rec.b;
        ex.records.push_back(std::move(rec));
    }
    ex.mean_b = b_sum / trials;
    return ex;
}

// chi_q of sampled G(n,1/2) alongside the asymptotic envelope. Only the
// unconditional per-graph facts are asserted (x >= 1/b and
// x <= 2 - 1/ceil(chi/2)); the growth rates are reported, not asserted.
struct ChiQWindowSample {
    std::uint64_t sample_seed = 0;
    Rational x;
    Rational chi_q_value;
    Rational b;
    int chi = 0;
    bool lower_ok = false; // x >= 1/b
    bool upper_ok = false; // x <= 2 - 1/ceil(chi/2)
};

struct ChiQWindowReport {
    int n = 0;
    double sqrt_envelope = 0; // sqrt(n / log n)
    double linear_envelope = 0; // n / log n
    std::vector<ChiQWindowSample> samples;
    bool all_ok = false;
};

inline ChiQWindowReport chi_q_window(int n, std::uint64_t seed, int trials = 3) {
    if (n > 21) throw SizeLimitError("chi_q_window: n <= 21");
    ChiQWindowReport rep;
    rep.n = n;
    rep.sqrt_envelope = std::sqrt(n / std::log(n));
    rep.linear_envelope = n / std::log(n);
    rep.all_ok = true;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t s = detail::splitmix64(seed + std::uint64_t(t));
        Graph g = sample_gnp(n, Rational(1, 2), s);
        if (!g.has_edges()) continue;
        ChiQWindowSample rec;
        rec.sample_seed = s;
        rec.x = x_exact(g).x;
        rec.chi_q_value = chi_q_of_x(rec.x);
        rec.b = bipartite_density(g);
        rec.chi = chromatic_number(g);
        rec.lower_ok = rec.x >= Rational(1) / rec.b;
        rec.upper_ok = rec.x <= Rational(2) - Rational(1, (rec.chi + 1) / 2);
        rep.all_ok = rep.all_ok && rec.lower_ok && rec.upper_ok;
        rep.samples.push_back(std::move(rec));
    }
    return rep;
}

} // namespace cutcover
