#include "cutcover/spectral.hpp"
#include "cutcover/cuts.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace cutcover;

TEST_CASE("krawtchouk values", "[spectral]") {
    CHECK(krawtchouk(3, 2, 1) == -1);
    CHECK(krawtchouk(5, 4, 1) == -3);
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(krawtchouk(n, k, 0) == binomial(n, k));
    CHECK_THROWS_AS(krawtchouk(3, 2, 5), std::invalid_argument);
}

TEST_CASE("trace identities", "[spectral]") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            CAPTURE(n, k);
            BigInt trace = 0, trace_sq = 0;
            for (int x = 0; x <= n; ++x) {
                BigInt ev = krawtchouk(n, k, x);
                trace += binomial(n, x) * ev;
                trace_sq += binomial(n, x) * ev * ev;
            }
            CHECK(trace == 0);                                      // tr(A) = 0
            CHECK(trace_sq == (BigInt(1) << n) * binomial(n, k));   // tr(A^2) = 2|E|
        }
}

TEST_CASE("cube layer spectra", "[spectral]") {
    SpectralReport r42 = spectrum_cube_layer(4, 2);
    CHECK(r42.eigenvalue_by_weight == std::vector<BigInt>{6, 0, -2, 0, 6});
    CHECK(r42.theta_min == -2);

    SpectralReport r32 = spectrum_cube_layer(3, 2);
    CHECK(r32.theta_min == -1);
    CHECK(r32.x_lower_bound == Rational(3, 2));

    SpectralReport r54 = spectrum_cube_layer(5, 4);
    CHECK(r54.theta_min == -3);
    CHECK(r54.density_bound == Rational(4, 5));
    CHECK(r54.x_lower_bound == Rational(5, 4));

    CHECK(r42.eigenvalue_by_weight[0] == binomial(4, 2)); // degree
}

TEST_CASE("spectrum minimum matches the binomial form for even k in range", "[spectral]") {
    for (int k = 2; k <= 24; k += 2)
        for (int n = k; n < 2 * k && n <= 24; ++n) {
            CAPTURE(n, k);
            SpectralReport r = spectrum_cube_layer(n, k);
            // Vandermonde: theta at weight 1 equals C(n,k) - 2 C(n-1,k-1)
            BigInt at_one = binomial(n, k) - 2 * binomial(n - 1, k - 1);
            CHECK(r.eigenvalue_by_weight[1] == at_one);
            CHECK(r.theta_min == at_one);
        }
}

TEST_CASE("odd layers are bipartite", "[spectral]") {
    CHECK(!odd_girth(cube_layer(3, 1)).has_value());
    CHECK(!odd_girth(cube_layer(4, 3)).has_value());
    CHECK(!odd_girth(cube_layer(5, 3)).has_value());
}

TEST_CASE("binomial inequality scan", "[spectral]") {
    BinomScanReport rep = verify_binom_inequality(30);
    CHECK(rep.violations.empty());
    CHECK(rep.tight_at_x1_always);
    CHECK(rep.checked > 0);
    // tight cases beyond x = 1 exist (e.g. n=3,k=2,x=2) and are reported
    CHECK(!rep.tight_not_x1.empty());
    CHECK(rep.tight_not_x1.front() == std::array<int, 3>{3, 2, 2});
}

TEST_CASE("closed-form theorem values", "[spectral]") {
    CHECK(theorem_value(3, 2) == Rational(3, 2));
    CHECK(theorem_value(4, 3) == Rational(5, 4));
    CHECK(theorem_value(5, 4) == Rational(5, 4));
    CHECK_THROWS_AS(theorem_value(5, 2), std::invalid_argument); // needs n < 2k
}

TEST_CASE("numeric laplacian eigenvalue with certified error", "[spectral]") {
    EigenEstimate kn = laplacian_lambda_max(complete_graph(5));
    CHECK(std::abs(kn.value - 5.0) <= kn.error + 1e-9);
    CHECK(kn.error <= 1e-9);

    EigenEstimate c4 = laplacian_lambda_max(cycle_graph(4));
    CHECK(std::abs(c4.value - 4.0) <= c4.error + 1e-9);

    EigenEstimate pt = laplacian_lambda_max(petersen_graph());
    CHECK(std::abs(pt.value - 5.0) <= pt.error + 1e-9); // 3 - (-2)

    // cube layers: numeric agrees with the exact character spectrum
    for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{5, 4}}) {
        SpectralReport exact = spectrum_cube_layer(n, k);
        double want = double(binomial(n, k).convert_to<long long>()) -
                      exact.theta_min.convert_to<double>();
        EigenEstimate got = laplacian_lambda_max(cube_layer(n, k));
        CHECK(std::abs(got.value - want) <= 1e-9);
    }
}

TEST_CASE("spectral density bound", "[spectral]") {
    SpectralDensityBound pt = spectral_density_bound(petersen_graph());
    CHECK(pt.upper >= 5.0 / 6.0 - 1e-9);
    CHECK(pt.lower <= 5.0 / 6.0 + 1e-9);
    CHECK(double(4.0 / 5.0) <= pt.upper); // b(Pt) = 4/5 within the bound

    // bipartite regular: bound is at least 1, consistent with b = 1
    SpectralDensityBound bip = spectral_density_bound(complete_bipartite(3, 3));
    CHECK(bip.upper >= 1.0 - 1e-9);

    // Q_5^{=4}: exact bound is 4/5
    SpectralDensityBound q54 = spectral_density_bound(cube_layer(5, 4));
    CHECK(std::abs(q54.upper - 0.8) <= 1e-8);
}
