#include "anderson/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace anderson {

std::vector<std::vector<int>> support_adjacency(const SymmetricMatrix& a) {
    const int n = a.order();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && a(i, j) != 0.0) adj[i].push_back(j);
    return adj;
}

std::vector<int> support_distances(const SymmetricMatrix& a, int from) {
    const int n = a.order();
    if (from < 0 || from >= n) throw std::out_of_range("support_distances: vertex out of range");
    const std::vector<std::vector<int>> adj = support_adjacency(a);
    std::vector<int> dist(n, -1);
    std::queue<int> queue;
    dist[from] = 0;
    queue.push(from);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int u : adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
    }
    return dist;
}

namespace {

void check_distinct_diagonal(const std::vector<double>& diag) {
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (diag[i] == diag[j])
                throw std::invalid_argument("propagator: diagonal entries must be distinct");
}

}  // namespace

PropagatorC propagator(const std::vector<double>& diag, const SymmetricMatrix& a, int k) {
    const int n = a.order();
    if (static_cast<int>(diag.size()) != n)
        throw std::invalid_argument("propagator: diagonal length mismatch");
    if (k < 0 || k >= n) throw std::out_of_range("propagator: anchor out of range");
    check_distinct_diagonal(diag);

    PropagatorC out;
    out.diag = diag;
    out.anchor = k;
    out.c = DenseMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        if (i == k) continue;  // the pseudo-resolvent zeroes the anchor row
        const double inv = 1.0 / (diag[i] - diag[k]);
        for (int r = 0; r < n; ++r) out.c(i, r) = -inv * a(i, r);
    }
    return out;
}

double coefficient_entry(const std::vector<double>& diag, const SymmetricMatrix& a, int k,
                         int i) {
    const int n = a.order();
    if (i < 0 || i >= n) throw std::out_of_range("coefficient_entry: entry out of range");
    if (i == k) throw std::invalid_argument("coefficient_entry: i must differ from the anchor");
    const std::vector<int> dist = support_distances(a, k);
    if (dist[i] < 0)
        throw std::invalid_argument("coefficient_entry: entry unreachable in the support graph");
    const PropagatorC prop = propagator(diag, a, k);
    DenseMatrix power = DenseMatrix::identity(n);
    for (int step = 0; step < dist[i]; ++step) power = prop.c * power;
    return power(i, k);
}

std::vector<std::vector<int>> minimal_paths(const SymmetricMatrix& a, int i, int k) {
    const int n = a.order();
    if (i < 0 || i >= n || k < 0 || k >= n)
        throw std::out_of_range("minimal_paths: vertex out of range");
    const std::vector<int> dist = support_distances(a, k);
    if (dist[i] < 0) throw std::invalid_argument("minimal_paths: vertices are disconnected");

    const std::vector<std::vector<int>> adj = support_adjacency(a);
    std::vector<std::vector<int>> paths;
    std::vector<int> current{i};

    // Walk down the BFS layers toward k; ascending neighbor order makes the
    // enumeration lexicographic.
    auto descend = [&](auto&& self, int v) -> void {
        if (v == k) {
            paths.push_back(current);
            return;
        }
        for (int u : adj[v]) {
            if (dist[u] != dist[v] - 1) continue;
            current.push_back(u);
            self(self, u);
            current.pop_back();
        }
    };
    descend(descend, i);
    return paths;
}

double path_sum_over(const std::vector<double>& diag, const SymmetricMatrix& a,
                     const std::vector<std::vector<int>>& paths) {
    check_distinct_diagonal(diag);
    double total = 0.0;
    for (const std::vector<int>& path : paths) {
        if (path.size() < 2) continue;
        const int k = path.back();
        double term = 1.0;
        for (std::size_t s = 0; s + 1 < path.size(); ++s) term *= a(path[s], path[s + 1]);
        for (std::size_t s = 0; s + 1 < path.size(); ++s)
            term /= diag[k] - diag[path[s]];  // every path vertex except the endpoint k
        total += term;
    }
    return total;
}

double path_sum(const std::vector<double>& diag, const SymmetricMatrix& a, int i, int k) {
    if (static_cast<int>(diag.size()) != a.order())
        throw std::invalid_argument("path_sum: diagonal length mismatch");
    if (i == k) throw std::invalid_argument("path_sum: i must differ from k");
    return path_sum_over(diag, a, minimal_paths(a, i, k));
}

FourierPair fourier_pair(const std::vector<double>& v, int k) {
    const int L = static_cast<int>(v.size());
    if (L < 3) throw std::invalid_argument("fourier_pair: cycle length must exceed 2");
    if (k < 1 || k > L - 1)
        throw std::invalid_argument("fourier_pair: mode must lie in 1..L-1 (0 is the simple mode)");

    // P(z) = (1/L) sum_j v(j) z^j evaluated at z = w^e, with the exponent
    // reduced mod L so the angle never grows.
    auto p_at = [&](long long e) {
        std::complex<double> s{0.0, 0.0};
        for (int j = 0; j < L; ++j) {
            const long long r = ((e * j) % L + L) % L;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / L;
            s += v[j] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return s / static_cast<double>(L);
    };

    FourierPair out;
    out.cycle_len = L;
    out.mode = k;
    out.p_one = p_at(0);
    out.p_plus = p_at(2LL * k);
    out.p_minus = p_at(-2LL * k);
    const double split = std::abs(out.p_plus);
    out.lambda_lo = out.p_one.real() - split;
    out.lambda_hi = out.p_one.real() + split;
    return out;
}

}  // namespace anderson
