#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "anderson/grid.hpp"
#include "anderson/perturbation.hpp"
#include "anderson/rng.hpp"
#include "anderson/spectral.hpp"

using anderson::DenseMatrix;
using anderson::SplitMix64;
using anderson::SymmetricMatrix;
using anderson::TorusGrid;

namespace {

std::vector<double> ramp(int n) {
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = i;
    return d;
}

DenseMatrix power_of(const DenseMatrix& c, int j) {
    DenseMatrix out = DenseMatrix::identity(c.rows());
    for (int s = 0; s < j; ++s) out = c * out;
    return out;
}

}  // namespace

TEST_CASE("propagator entries") {
    const TorusGrid c5({5});
    const SymmetricMatrix a = laplacian(c5);
    const anderson::PropagatorC prop = propagator(ramp(5), a, 0);

    // C(i,r) = -A(i,r)/(x_i - x_0) away from the anchor row.
    CHECK(prop.c(1, 0) == 1.0);
    CHECK(prop.c(2, 1) == 0.5);
    for (int r = 0; r < 5; ++r) CHECK(prop.c(0, r) == 0.0);
    for (int i = 0; i < 5; ++i)
        for (int r = 0; r < 5; ++r)
            if (prop.c(i, r) != 0.0) CHECK(a(i, r) != 0.0);

    SUBCASE("zero perturbation gives a zero propagator") {
        const anderson::PropagatorC zero = propagator(ramp(5), SymmetricMatrix(5), 2);
        CHECK(zero.c.max_abs() == 0.0);
    }
    SUBCASE("repeated diagonal entries are rejected") {
        CHECK_THROWS_AS(propagator({0, 1, 1, 3, 4}, a, 0), std::invalid_argument);
    }
}

TEST_CASE("coefficient_entry") {
    const TorusGrid c5({5});
    const SymmetricMatrix a = laplacian(c5);

    // Unique geodesic 2-1-0: sign (-1)^2, inverse gaps (0-1)^-1 (0-2)^-1.
    CHECK(coefficient_entry(ramp(5), a, 0, 2) == doctest::Approx(0.5).epsilon(1e-12));

    SUBCASE("adjacent entries unroll to -A(i,k)/(x_i - x_k)") {
        SplitMix64 rng(3);
        std::vector<double> d(5);
        for (double& x : d) x = rng.uniform(0.0, 10.0);
        std::sort(d.begin(), d.end());
        const double expected = -a(1, 0) / (d[1] - d[0]);
        CHECK(coefficient_entry(d, a, 0, 1) == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("the anchor itself is rejected") {
        CHECK_THROWS_AS(coefficient_entry(ramp(5), a, 0, 0), std::invalid_argument);
    }
    SUBCASE("disconnected supports are rejected") {
        SymmetricMatrix block(4);  // two disjoint edges
        block.set(0, 1, 1.0);
        block.set(2, 3, 1.0);
        CHECK_THROWS_AS(coefficient_entry(ramp(4), block, 0, 2), std::invalid_argument);
        CHECK_THROWS_AS(minimal_paths(block, 0, 2), std::invalid_argument);
    }
}

TEST_CASE("minimal_paths") {
    const SymmetricMatrix c5 = laplacian(TorusGrid({5}));
    CHECK(minimal_paths(c5, 2, 0) == std::vector<std::vector<int>>{{2, 1, 0}});

    const SymmetricMatrix c4 = laplacian(TorusGrid({4}));
    CHECK(minimal_paths(c4, 2, 0) == std::vector<std::vector<int>>{{2, 1, 0}, {2, 3, 0}});

    const TorusGrid square({3, 3});
    const SymmetricMatrix l9 = laplacian(square);
    const auto paths = minimal_paths(l9, square.index_of({1, 1}), square.index_of({0, 0}));
    CHECK(paths.size() == 2);
}

TEST_CASE("path_sum") {
    SUBCASE("unique geodesic on the 5-cycle") {
        const SymmetricMatrix a = laplacian(TorusGrid({5}));
        CHECK(path_sum(ramp(5), a, 2, 0) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("two geodesics on the 4-cycle") {
        const SymmetricMatrix a = laplacian(TorusGrid({4}));
        // 2-1-0 gives 1/((0-1)(0-2)) = 1/2, 2-3-0 gives 1/((0-3)(0-2)) = 1/6.
        CHECK(path_sum(ramp(4), a, 2, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        const DenseMatrix c2 = power_of(propagator(ramp(4), a, 0).c, 2);
        CHECK(path_sum(ramp(4), a, 2, 0) == doctest::Approx(c2(2, 0)).epsilon(1e-12));
    }
    SUBCASE("a zeroed edge kills its path") {
        const TorusGrid c5({5});
        SymmetricMatrix a = laplacian(c5);
        const auto paths = minimal_paths(a, 2, 0);
        a.set(1, 2, 0.0);  // the only geodesic edge
        CHECK(path_sum_over(ramp(5), a, paths) == 0.0);
    }
}

TEST_CASE("path sums equal propagator powers everywhere") {
    SplitMix64 rng(0xAB);
    for (const std::vector<int>& dims :
         {std::vector<int>{5}, {8}, {3, 5}, {3, 3, 3}, {4, 7}}) {
        const TorusGrid grid(dims);
        const int n = grid.size();
        REQUIRE(n <= 30);
        const SymmetricMatrix a = laplacian(grid);
        std::vector<double> d(n);
        for (int i = 0; i < n; ++i) d[i] = i + 0.4 * rng.uniform(-1.0, 1.0);

        for (int k = 0; k < n; ++k) {
            const std::vector<int> dist = support_distances(a, k);
            const int diameter = *std::max_element(dist.begin(), dist.end());
            const anderson::PropagatorC prop = propagator(d, a, k);
            DenseMatrix power = DenseMatrix::identity(n);
            for (int j = 1; j <= diameter; ++j) {
                power = prop.c * power;
                for (int i = 0; i < n; ++i) {
                    if (i == k) continue;
                    if (dist[i] == j)
                        CHECK(std::abs(path_sum(d, a, i, k) - power(i, k)) <= 1e-12);
                    else if (dist[i] > j)
                        CHECK(std::abs(power(i, k)) <= 1e-12);  // support stays inside the ball
                }
            }
        }
    }
}

TEST_CASE("small-t eigenvector entries scale like the distance power") {
    const TorusGrid c7({7});
    const SymmetricMatrix a = laplacian(c7);
    SplitMix64 rng(0xFD);
    std::vector<double> d(7);
    for (int i = 0; i < 7; ++i) d[i] = i + 0.4 * rng.uniform(-1.0, 1.0);

    for (const auto& [i, k] : {std::pair<int, int>{1, 0}, {2, 0}, {5, 3}}) {
        const int dist = c7.distance(i, k);
        std::vector<double> logt, logv;
        for (double t : {1e-3, 1e-4, 1e-5}) {
            SymmetricMatrix h(7);
            for (int r = 0; r < 7; ++r) {
                h.set(r, r, d[r] + t * a(r, r));
                for (int c = r + 1; c < 7; ++c) h.set(r, c, t * a(r, c));
            }
            const anderson::EigenDecomposition eig = eigh(h);
            int col = 0;
            double best = -1.0;
            for (int c = 0; c < 7; ++c)
                if (std::abs(eig.vectors(k, c)) > best) {
                    best = std::abs(eig.vectors(k, c));
                    col = c;
                }
            logt.push_back(std::log(t));
            logv.push_back(std::log(std::abs(eig.vectors(i, col))));
        }
        const double slope = (logv.front() - logv.back()) / (logt.front() - logt.back());
        CHECK(std::abs(slope - dist) <= 0.05);
    }
}

TEST_CASE("fourier pair") {
    SUBCASE("constant potential has zero splitting") {
        const anderson::FourierPair fp = anderson::fourier_pair({1, 1, 1}, 1);
        CHECK(fp.p_one.real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(fp.p_plus) <= 1e-15);
        CHECK(fp.splitting() <= 1e-15);
    }
    SUBCASE("one positive site on the 5-cycle") {
        const anderson::FourierPair fp = anderson::fourier_pair({1, -1, -1, -1, -1}, 1);
        CHECK(fp.p_one.real() == doctest::Approx(-0.6).epsilon(1e-12));
        CHECK(std::abs(fp.p_plus) == doctest::Approx(0.4).epsilon(1e-12));
        CHECK(fp.lambda_lo == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(fp.lambda_hi == doctest::Approx(-0.2).epsilon(1e-12));
    }
    SUBCASE("hermitian structure for real input") {
        SplitMix64 rng(5);
        std::vector<double> v(9);
        for (double& x : v) x = rng.uniform(-2.0, 2.0);
        for (int k = 1; k < 9; ++k) {
            const anderson::FourierPair fp = anderson::fourier_pair(v, k);
            CHECK(std::abs(fp.p_minus - std::conj(fp.p_plus)) <= 1e-13);
            CHECK(std::abs(fp.p_one.imag()) <= 1e-13);
        }
    }
    SUBCASE("mode zero is rejected") {
        CHECK_THROWS_AS(anderson::fourier_pair({1, -1, 1}, 0), std::invalid_argument);
        CHECK_THROWS_AS(anderson::fourier_pair({1, -1, 1}, 3), std::invalid_argument);
    }
    SUBCASE("zero splitting at every mode only for constants") {
        for (int L : {3, 5, 7}) {
            for (std::uint64_t mask = 0; mask < (1ull << L); ++mask) {
                std::vector<double> v(L);
                for (int x = 0; x < L; ++x) v[x] = (mask >> x) & 1 ? 1.0 : -1.0;
                bool all_zero = true;
                for (int k = 1; k < L && all_zero; ++k)
                    all_zero = anderson::fourier_pair(v, k).splitting() <= 1e-12;
                const bool constant = mask == 0 || mask == (1ull << L) - 1;
                CHECK(all_zero == constant);
            }
        }
    }
    SUBCASE("nonzero transform gives distinct first-order eigenvalues") {
        const anderson::FourierPair fp = anderson::fourier_pair({1, 1, -1, 1, -1, -1, -1}, 2);
        CHECK(std::abs(fp.p_plus) > 1e-12);
        CHECK(fp.lambda_hi - fp.lambda_lo > 1e-12);
    }
}
