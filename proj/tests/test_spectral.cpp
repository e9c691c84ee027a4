#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "anderson/grid.hpp"
#include "anderson/rng.hpp"
#include "anderson/spectral.hpp"

using anderson::DenseMatrix;
using anderson::EigenDecomposition;
using anderson::Potential;
using anderson::SplitMix64;
using anderson::SymmetricMatrix;
using anderson::TorusGrid;

namespace {

SymmetricMatrix random_symmetric(int n, SplitMix64& rng) {
    SymmetricMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.set(i, j, rng.uniform(-1.0, 1.0));
    return a;
}

// Cycle Laplacian spectrum through the Fourier route: the transform turns the
// cycle Laplacian into the diagonal 2 - w^r - w^{-r} with w = exp(2 pi i / L).
std::vector<double> cycle_spectrum_oracle(int L) {
    std::vector<double> out(L);
    for (int r = 0; r < L; ++r) {
        const std::complex<double> w =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / L);
        out[r] = (2.0 - w - std::conj(w)).real();
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("hamiltonian assembly") {
    const TorusGrid c3({3});
    const Potential ones = anderson::explicit_potential({1, 1, 1});

    SUBCASE("zero coupling gives the laplacian") {
        const SymmetricMatrix h = hamiltonian(c3, ones, 0.0);
        const SymmetricMatrix l = laplacian(c3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(h(i, j) == l(i, j));
    }
    SUBCASE("identity potential shifts the diagonal") {
        const SymmetricMatrix h = hamiltonian(c3, ones, 2.0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(h(i, j) == (i == j ? 4.0 : -1.0));
    }
    SUBCASE("sign potential") {
        const SymmetricMatrix h = hamiltonian(c3, anderson::explicit_potential({1, -1, 1}), 1.0);
        CHECK(h(0, 0) == 3.0);
        CHECK(h(1, 1) == 1.0);
        CHECK(h(2, 2) == 3.0);
        CHECK(h(0, 1) == -1.0);
    }
    SUBCASE("length mismatch is rejected") {
        CHECK_THROWS_AS(hamiltonian(c3, anderson::explicit_potential({1, 1}), 1.0),
                        std::invalid_argument);
    }
    SUBCASE("bernoulli tag demands sign values") {
        Potential v;
        v.values = {1.0, 0.5, -1.0};
        v.tag = Potential::Tag::Bernoulli;
        CHECK_THROWS_AS(hamiltonian(c3, v, 1.0), std::invalid_argument);
        v.values = {1.0, 1.0, -1.0};
        CHECK_NOTHROW(hamiltonian(c3, v, 1.0));
    }
}

TEST_CASE("eigh on small exact cases") {
    SUBCASE("cycle of length 4") {
        const EigenDecomposition eig = eigh(laplacian(TorusGrid({4})));
        const std::vector<double> expected{0, 2, 2, 4};
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(eig.eigenvalues[k] - expected[k]) <= 1e-10);
    }
    SUBCASE("diagonal input") {
        SymmetricMatrix d(3);
        d.set(0, 0, 3.0);
        d.set(1, 1, 1.0);
        d.set(2, 2, 2.0);
        const EigenDecomposition eig = eigh(d);
        CHECK(eig.eigenvalues == std::vector<double>{1.0, 2.0, 3.0});
        // Eigenvectors are signed standard basis vectors; the sign rule makes
        // the surviving entry positive.
        const int expected_site[3] = {1, 2, 0};
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                CHECK(eig.vectors(i, k) == (i == expected_site[k] ? 1.0 : 0.0));
    }
    SUBCASE("cycle of length 5 against the Fourier oracle") {
        const EigenDecomposition eig = eigh(laplacian(TorusGrid({5})));
        const std::vector<double> expected = cycle_spectrum_oracle(5);
        for (int k = 0; k < 5; ++k)
            CHECK(std::abs(eig.eigenvalues[k] - expected[k]) <= 1e-10);
    }
}

TEST_CASE("eigh nonzero cycle eigenvalues come in pairs for odd length") {
    for (int L : {5, 7, 9}) {
        const EigenDecomposition eig = eigh(laplacian(TorusGrid({L})));
        CHECK(std::abs(eig.eigenvalues[0]) <= 1e-10);
        int k = 1;
        while (k < L) {
            REQUIRE(k + 1 < L);
            CHECK(std::abs(eig.eigenvalues[k] - eig.eigenvalues[k + 1]) <= 1e-10);
            if (k + 2 < L) CHECK(eig.eigenvalues[k + 2] - eig.eigenvalues[k + 1] > 1e-6);
            k += 2;
        }
    }
}

TEST_CASE("eigh reconstruction, orthogonality, trace") {
    SplitMix64 rng(0xE16);
    for (int n : {3, 17, 60, 120}) {
        const SymmetricMatrix a = random_symmetric(n, rng);
        const EigenDecomposition eig = eigh(a);
        const double scale = std::max(1.0, a.max_abs());
        CHECK(eig.residual <= 1e-10 * scale);
        CHECK(eig.ortho_defect <= 1e-10);

        // Reconstruction in the max norm.
        double recon = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < n; ++k)
                    s += eig.vectors(i, k) * eig.eigenvalues[k] * eig.vectors(j, k);
                recon = std::max(recon, std::abs(s - a(i, j)));
            }
        CHECK(recon <= 1e-10 * scale);

        double trace = 0.0, eigsum = 0.0;
        for (int i = 0; i < n; ++i) {
            trace += a(i, i);
            eigsum += eig.eigenvalues[i];
        }
        CHECK(std::abs(trace - eigsum) <= 1e-9 * n * a.max_abs());
    }
}

TEST_CASE("eigh rejects bad arguments") {
    CHECK_THROWS_AS(eigh(SymmetricMatrix(0)), std::invalid_argument);
    CHECK_THROWS_AS(eigh(SymmetricMatrix(3), 0.0), std::invalid_argument);
}

TEST_CASE("condition report") {
    SUBCASE("constant potential keeps the laplacian degeneracy at every t") {
        for (const std::vector<int>& dims : {std::vector<int>{3}, {5}, {3, 3}}) {
            const TorusGrid grid(dims);
            const Potential v = anderson::explicit_potential(std::vector<double>(grid.size(), 1.0));
            for (double t : {0.3, 1.0, 2.0}) {
                const anderson::ConditionReport r = condition_report(grid, v, t);
                CHECK_FALSE(r.simple);
            }
        }
    }
    SUBCASE("reflection-symmetric sign potential fails a condition") {
        const TorusGrid c5({5});
        const Potential v = anderson::explicit_potential({1, 1, -1, 1, -1});  // symmetric about 3
        const anderson::ConditionReport r = condition_report(c5, v, 0.7316);
        CHECK((!r.simple || !r.nonvanishing));
    }
    SUBCASE("asymmetric sign potential passes at a generic coupling") {
        const TorusGrid c7({7});
        const Potential v = anderson::explicit_potential({1, 1, -1, 1, -1, -1, -1});
        const anderson::ConditionReport r = condition_report(c7, v, 0.7316);
        CHECK(r.simple);
        CHECK(r.nonvanishing);
    }
    SUBCASE("tolerances are validated and recorded") {
        const TorusGrid c5({5});
        const Potential v = anderson::explicit_potential({1, -1, 1, 1, -1});
        CHECK_THROWS_AS(condition_report(c5, v, 1.0, -1.0), std::invalid_argument);
        const anderson::ConditionReport r = condition_report(c5, v, 1.0, 1e-7, 1e-9);
        CHECK(r.gap_tol == 1e-7);
        CHECK(r.entry_tol == 1e-9);
    }
}

TEST_CASE("ipr") {
    CHECK(anderson::ipr({1.0, 0.0, 0.0}) == 1.0);
    const double u = 1.0 / std::sqrt(4.0);
    CHECK(anderson::ipr({u, u, u, u}) == doctest::Approx(0.25).epsilon(1e-12));
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(anderson::ipr({h, h, 0.0}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(anderson::ipr({1.0, 1.0}), std::invalid_argument);

    SplitMix64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 40);
        std::vector<double> v(n);
        double norm = 0.0;
        for (double& x : v) {
            x = rng.uniform(-1.0, 1.0);
            norm += x * x;
        }
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
        const double value = anderson::ipr(v);
        CHECK(value >= 1.0 / n - 1e-12);
        CHECK(value <= 1.0 + 1e-12);
    }
}

TEST_CASE("ipr heatmap shape and limits") {
    const TorusGrid grid({12});
    SplitMix64 rng(77);
    std::vector<double> values(grid.size());
    for (double& x : values) x = rng.uniform(-1.0, 1.0);
    const Potential v = anderson::explicit_potential(values);

    const std::vector<double> ts{0.1, 1.0, 5.0};
    const auto rows = ipr_heatmap(grid, v, ts);
    CHECK(rows.size() == ts.size() * grid.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].t == ts[i / grid.size()]);
        CHECK(rows[i].k == static_cast<int>(i % grid.size()));
    }

    // Strong coupling pins eigenvectors to single sites.
    const auto pinned = ipr_heatmap(grid, v, {1e6});
    for (const auto& row : pinned) CHECK(std::exp(row.log_ipr) >= 0.9);

    // Localization grows with the coupling on average.
    const TorusGrid c30({30});
    std::vector<double> big(c30.size());
    for (double& x : big) x = rng.uniform(-1.0, 1.0);
    const Potential v30 = anderson::explicit_potential(big);
    auto mean_ipr = [&](double t) {
        double sum = 0.0;
        for (const auto& row : ipr_heatmap(c30, v30, {t})) sum += std::exp(row.log_ipr);
        return sum / c30.size();
    };
    CHECK(mean_ipr(5.0) > mean_ipr(0.1));

    CHECK_THROWS_AS(ipr_heatmap(grid, v, {}), std::invalid_argument);
}
