#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "anderson/grid.hpp"
#include "anderson/matrix.hpp"

namespace anderson {

// Diagonal of the onsite term: one real per vertex, in vertex-index order.
struct Potential {
    enum class Tag { Explicit, Bernoulli, Uniform };

    std::vector<double> values;
    Tag tag = Tag::Explicit;
    double param_a = 0.0;  // Bernoulli: probability of +1. Uniform: lower bound.
    double param_b = 0.0;  // Uniform: upper bound.

    // Length must match the grid; Bernoulli-tagged values must all be +/-1.
    void validate(const TorusGrid& grid) const;
};

Potential explicit_potential(std::vector<double> values);

// Laplacian plus t times the diagonal potential.
SymmetricMatrix hamiltonian(const TorusGrid& grid, const Potential& v, double t);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending; ties keep solver output order
    DenseMatrix vectors;              // column k is the unit eigenvector for eigenvalues[k]
    double residual = 0.0;            // max_k ||A q_k - lambda_k q_k||_inf
    double ortho_defect = 0.0;        // max_ij |<q_i,q_j> - delta_ij|
    double tol = 0.0;                 // guarantee: residual <= tol*max(1,|A|_max), defect <= tol

    double min_gap() const;           // smallest spacing of the sorted eigenvalues
    double min_abs_entry() const;     // min_{i,k} |q_k(i)|
    double spectral_diameter() const; // lambda_max - lambda_min
};

class EighError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultEighTol = 1e-11;

// Cyclic Jacobi with the threshold strategy, capped at 30 sweeps. Each
// eigenvector's first entry of magnitude above 1e-12 is made positive.
// Throws EighError if the cap is reached before the residual guarantee holds
// (does not happen for well-scaled symmetric input at desk sizes).
EigenDecomposition eigh(const SymmetricMatrix& a, double tol = kDefaultEighTol);

struct ConditionReport {
    double t = 0.0;
    double min_gap = 0.0;
    double min_entry = 0.0;
    bool simple = false;       // min_gap > gap_tol
    bool nonvanishing = false; // min_entry > entry_tol
    double gap_tol = 0.0;      // tolerances actually used
    double entry_tol = 0.0;
};

inline constexpr double kDefaultEntryTol = 1e-8;
inline constexpr double kDefaultGapTolFactor = 1e-8;  // of the spectral diameter

// Diagnoses the spectrum of hamiltonian(grid, v, t). Defaults: gap tolerance
// 1e-8 times the spectral diameter, entry tolerance 1e-8. Explicit tolerances
// must be positive.
ConditionReport condition_report(const TorusGrid& grid, const Potential& v, double t,
                                 std::optional<double> gap_tol = std::nullopt,
                                 std::optional<double> entry_tol = std::nullopt);

// Inverse participation ratio sum_i vec(i)^4 of a unit vector; 1/n for the
// flat vector, 1 for a single-site vector. Input must be normalized to 1e-8.
double ipr(const std::vector<double>& vec);

struct HeatmapRow {
    double t = 0.0;
    int k = 0;
    double lambda = 0.0;
    double log_ipr = 0.0;
};

// One row per (t, eigenvector index k ascending in eigenvalue order); log is
// natural.
std::vector<HeatmapRow> ipr_heatmap(const TorusGrid& grid, const Potential& v,
                                    const std::vector<double>& t_values, int threads = 0);

}  // namespace anderson
