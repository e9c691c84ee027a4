#include <algorithm>
#include <queue>
#include <vector>

#include <doctest.h>

#include "anderson/grid.hpp"
#include "anderson/rng.hpp"

using anderson::SplitMix64;
using anderson::TorusGrid;

namespace {

// Independent distance oracle: plain BFS over the neighbor lists.
std::vector<int> bfs_distances(const TorusGrid& grid, int from) {
    std::vector<int> dist(grid.size(), -1);
    std::queue<int> queue;
    dist[from] = 0;
    queue.push(from);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int u : grid.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
    }
    return dist;
}

}  // namespace

TEST_CASE("torus construction and neighbor counts") {
    const TorusGrid cycle({5});
    CHECK(cycle.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(cycle.neighbors(v).size() == 2);

    const TorusGrid square({3, 3});
    CHECK(square.size() == 9);
    for (int v = 0; v < 9; ++v) {
        const auto nb = square.neighbors(v);
        CHECK(nb.size() == 4);
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());  // distinct even at L=3
    }

    CHECK_THROWS_AS(TorusGrid({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(TorusGrid({}), std::invalid_argument);
    CHECK_THROWS_AS(TorusGrid({5, 0}), std::invalid_argument);
}

TEST_CASE("index and coordinate round trip") {
    const TorusGrid grid({3, 4, 5});
    for (int v = 0; v < grid.size(); ++v) CHECK(grid.index_of(grid.coords_of(v)) == v);
    CHECK_THROWS_AS(grid.coords_of(grid.size()), std::out_of_range);
    CHECK_THROWS_AS(grid.index_of({0, 0}), std::invalid_argument);
}

TEST_CASE("laplacian entries") {
    const anderson::SymmetricMatrix l3 = laplacian(TorusGrid({3}));
    const double expected[3][3] = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(l3(i, j) == expected[i][j]);

    const TorusGrid c5({5});
    const anderson::SymmetricMatrix l5 = laplacian(c5);
    for (int i = 0; i < 5; ++i) {
        CHECK(l5(i, i) == 2.0);
        double row = 0.0;
        for (int j = 0; j < 5; ++j) row += l5(i, j);
        CHECK(row == 0.0);
    }

    const TorusGrid square({3, 3});
    const anderson::SymmetricMatrix l9 = laplacian(square);
    for (int i = 0; i < 9; ++i) {
        CHECK(l9(i, i) == 4.0);
        int minus_ones = 0;
        for (int j = 0; j < 9; ++j)
            if (l9(i, j) == -1.0) ++minus_ones;
        CHECK(minus_ones == 4);
    }
}

TEST_CASE("laplacian kernel contains the constant vector") {
    const anderson::SymmetricMatrix l = laplacian(TorusGrid({4, 3}));
    const std::vector<double> ones(12, 1.0);
    for (double x : l * ones) CHECK(x == 0.0);
}

TEST_CASE("distance closed form") {
    const TorusGrid c5({5});
    CHECK(c5.distance(0, 3) == 2);  // wraps around
    CHECK(c5.distance(2, 2) == 0);

    const TorusGrid grid({3, 5});
    CHECK(grid.distance(grid.index_of({0, 0}), grid.index_of({1, 2})) == 3);
    CHECK_THROWS_AS(grid.distance(0, 15), std::out_of_range);
}

TEST_CASE("distance agrees with BFS on every pair") {
    for (const std::vector<int>& dims :
         {std::vector<int>{10}, {7}, {3, 5}, {4, 4}, {3, 3, 3}}) {
        const TorusGrid grid(dims);
        REQUIRE(grid.size() <= 100);
        for (int a = 0; a < grid.size(); ++a) {
            const std::vector<int> oracle = bfs_distances(grid, a);
            for (int b = 0; b < grid.size(); ++b) CHECK(grid.distance(a, b) == oracle[b]);
        }
    }
}

TEST_CASE("distance symmetry and triangle inequality on random triples") {
    const TorusGrid grid({4, 5, 3});
    SplitMix64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = static_cast<int>(rng.next() % grid.size());
        const int b = static_cast<int>(rng.next() % grid.size());
        const int c = static_cast<int>(rng.next() % grid.size());
        CHECK(grid.distance(a, b) == grid.distance(b, a));
        CHECK(grid.distance(a, c) <= grid.distance(a, b) + grid.distance(b, c));
    }
}

TEST_CASE("balls grow to the whole grid") {
    const TorusGrid c5({5});
    CHECK(c5.ball(0, 1) == std::vector<int>{0, 1, 4});
    CHECK(c5.ball(3, 0) == std::vector<int>{3});
    CHECK(c5.ball(0, 2).size() == 5);

    const TorusGrid grid({3, 5});
    int radius_to_cover = 0;
    for (int L : grid.dims()) radius_to_cover += L / 2;
    std::size_t prev = 0;
    for (int r = 0; r <= radius_to_cover; ++r) {
        const std::size_t size = grid.ball(7, r).size();
        CHECK(size >= prev);
        prev = size;
    }
    CHECK(static_cast<int>(prev) == grid.size());
}
