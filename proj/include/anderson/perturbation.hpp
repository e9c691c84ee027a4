#pragma once

#include <complex>
#include <vector>

#include "anderson/matrix.hpp"

namespace anderson {

// Support graph of a symmetric matrix: the simple graph with an edge i~j
// exactly when A(i,j) != 0 for i != j (diagonal entries are not edges).
std::vector<std::vector<int>> support_adjacency(const SymmetricMatrix& a);

// BFS distance from `from` in the support graph; -1 where unreachable.
std::vector<int> support_distances(const SymmetricMatrix& a, int from);

// Propagator C = -(D - x_k I)^+ A for the family diag(D) + t*A, where the
// pseudo-resolvent (D - x_k I)^+ is diagonal with 0 at entry k and
// 1/(x_m - x_k) elsewhere. Requires pairwise distinct diagonal entries.
// Row k of C is zero, and C(i,r) != 0 forces A(i,r) != 0.
struct PropagatorC {
    std::vector<double> diag;  // x_1..x_n
    int anchor = 0;            // k
    DenseMatrix c;
};

PropagatorC propagator(const std::vector<double>& diag, const SymmetricMatrix& a, int k);

// Leading Taylor coefficient of the k-th eigenvector branch of diag(D) + t*A
// at entry i: (C^j)(i,k) with j the support-graph distance from i to k.
// Rejects i == k and unreachable pairs.
double coefficient_entry(const std::vector<double>& diag, const SymmetricMatrix& a, int k, int i);

// All paths of minimal length from i to k in the support graph of `a`,
// as vertex sequences [i, ..., k]. Enumerated over the BFS layer DAG with
// neighbors in ascending order, so the output order is deterministic.
std::vector<std::vector<int>> minimal_paths(const SymmetricMatrix& a, int i, int k);

// Sum over the supplied paths [i,...,k] of
//   prod_edges A(edge) * prod_{r in path, r != k} 1/(x_k - x_r).
double path_sum_over(const std::vector<double>& diag, const SymmetricMatrix& a,
                     const std::vector<std::vector<int>>& paths);

// Minimal-path sum from i to k; agrees with coefficient_entry up to round-off.
double path_sum(const std::vector<double>& diag, const SymmetricMatrix& a, int i, int k);

// First-order data of the degenerate Fourier mode pair {k, -k} of a cycle:
// with P(z) = (1/L) sum_j v(j) z^j and w = exp(2*pi*i/L), the Hermitian 2x2
// matrix [[P(1), P(w^{2k})], [P(w^{-2k}), P(1)]] and its eigenvalues
// P(1) +/- |P(w^{2k})|. The gap 2|P(w^{2k})| is the first-order splitting of
// the unperturbed double eigenvalue.
struct FourierPair {
    int cycle_len = 0;
    int mode = 0;                       // k in 1..L-1
    std::complex<double> p_one;         // P(1); real for real v
    std::complex<double> p_plus;        // P(w^{2k})
    std::complex<double> p_minus;       // P(w^{-2k}) = conj for real v
    double lambda_lo = 0.0;             // P(1) - |P(w^{2k})|
    double lambda_hi = 0.0;             // P(1) + |P(w^{2k})|

    double splitting() const { return lambda_hi - lambda_lo; }
};

FourierPair fourier_pair(const std::vector<double>& v, int k);

}  // namespace anderson
