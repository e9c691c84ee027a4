#include "anderson/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "anderson/parallel.hpp"

namespace anderson {

void Potential::validate(const TorusGrid& grid) const {
    if (static_cast<int>(values.size()) != grid.size())
        throw std::invalid_argument("Potential: length does not match the grid");
    if (tag == Tag::Bernoulli) {
        for (double x : values)
            if (x != 1.0 && x != -1.0)
                throw std::invalid_argument("Potential: Bernoulli values must be +/-1");
    }
}

Potential explicit_potential(std::vector<double> values) {
    Potential v;
    v.values = std::move(values);
    v.tag = Potential::Tag::Explicit;
    return v;
}

SymmetricMatrix hamiltonian(const TorusGrid& grid, const Potential& v, double t) {
    v.validate(grid);
    SymmetricMatrix h = laplacian(grid);
    for (int i = 0; i < grid.size(); ++i) h.add(i, i, t * v.values[i]);
    return h;
}

double EigenDecomposition::min_gap() const {
    const int n = static_cast<int>(eigenvalues.size());
    if (n < 2) return std::numeric_limits<double>::infinity();
    double g = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < n; ++i) g = std::min(g, eigenvalues[i + 1] - eigenvalues[i]);
    return g;
}

double EigenDecomposition::min_abs_entry() const {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < vectors.cols(); ++j)
        for (int i = 0; i < vectors.rows(); ++i) m = std::min(m, std::abs(vectors(i, j)));
    return m;
}

double EigenDecomposition::spectral_diameter() const {
    if (eigenvalues.empty()) return 0.0;
    return eigenvalues.back() - eigenvalues.front();
}

namespace {

constexpr int kMaxSweeps = 30;

// One Jacobi rotation applied to the pair (x, y):
//   x' = x - s*(y + x*tau),  y' = y + s*(x - y*tau).
inline void rotate(double& x, double& y, double s, double tau) {
    const double gx = x, hy = y;
    x = gx - s * (hy + gx * tau);
    y = hy + s * (gx - hy * tau);
}

}  // namespace

EigenDecomposition eigh(const SymmetricMatrix& in, double tol) {
    const int n = in.order();
    if (n < 1) throw std::invalid_argument("eigh: empty matrix");
    if (!(tol > 0.0)) throw std::invalid_argument("eigh: tolerance must be positive");

    const double scale = std::max(1.0, in.max_abs());

    // Working copy; only the strict upper triangle is kept current.
    std::vector<double> a(in.data());
    std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> d(n), b(n), z(n, 0.0);
    for (int i = 0; i < n; ++i) {
        q[static_cast<std::size_t>(i) * n + i] = 1.0;
        b[i] = d[i] = a[static_cast<std::size_t>(i) * n + i];
    }
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto qt = [&](int i, int j) -> double& { return q[static_cast<std::size_t>(i) * n + j]; };

    // Sweep until the off-diagonal mass is far below what the residual
    // guarantee needs; the relative-negligibility zap usually drives it to
    // exactly zero first.
    const double stop = 0.25 * tol * scale / n;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double sm = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int r = p + 1; r < n; ++r) sm += std::abs(at(p, r));
        if (sm <= stop) {
            converged = true;
            break;
        }
        const double thresh = sweep < 3 ? 0.2 * sm / (n * n) : 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                const double g = 100.0 * std::abs(at(p, r));
                if (sweep > 3 && std::abs(d[p]) + g == std::abs(d[p]) &&
                    std::abs(d[r]) + g == std::abs(d[r])) {
                    at(p, r) = 0.0;
                } else if (std::abs(at(p, r)) > thresh) {
                    double h = d[r] - d[p];
                    double t;
                    if (std::abs(h) + g == std::abs(h)) {
                        t = at(p, r) / h;
                    } else {
                        const double theta = 0.5 * h / at(p, r);
                        t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0) t = -t;
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);
                    h = t * at(p, r);
                    z[p] -= h;
                    z[r] += h;
                    d[p] -= h;
                    d[r] += h;
                    at(p, r) = 0.0;
                    for (int j = 0; j < p; ++j) rotate(at(j, p), at(j, r), s, tau);
                    for (int j = p + 1; j < r; ++j) rotate(at(p, j), at(j, r), s, tau);
                    for (int j = r + 1; j < n; ++j) rotate(at(p, j), at(r, j), s, tau);
                    for (int j = 0; j < n; ++j) rotate(qt(j, p), qt(j, r), s, tau);
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if (!converged) throw EighError("eigh: Jacobi did not converge within 30 sweeps");

    // Ascending eigenvalue order; equal values keep the rotation output order.
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.vectors = DenseMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = d[idx[k]];
        for (int i = 0; i < n; ++i) out.vectors(i, k) = qt(i, idx[k]);
    }

    // Sign convention: first entry of magnitude above 1e-12 is positive.
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const double x = out.vectors(i, k);
            if (std::abs(x) > 1e-12) {
                if (x < 0.0)
                    for (int j = 0; j < n; ++j) out.vectors(j, k) = -out.vectors(j, k);
                break;
            }
        }
    }

    // Residual and orthogonality against the original input.
    double residual = 0.0;
    for (int k = 0; k < n; ++k) {
        const double lambda = out.eigenvalues[k];
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += in(i, j) * out.vectors(j, k);
            residual = std::max(residual, std::abs(s - lambda * out.vectors(i, k)));
        }
    }
    double defect = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int r = 0; r < n; ++r) s += out.vectors(r, i) * out.vectors(r, j);
            defect = std::max(defect, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    }
    out.residual = residual;
    out.ortho_defect = defect;
    out.tol = tol;
    if (residual > tol * scale || defect > tol)
        throw EighError("eigh: converged sweep left residual above tolerance");
    return out;
}

ConditionReport condition_report(const TorusGrid& grid, const Potential& v, double t,
                                 std::optional<double> gap_tol,
                                 std::optional<double> entry_tol) {
    if (!std::isfinite(t)) throw std::invalid_argument("condition_report: t must be finite");
    if (gap_tol && !(*gap_tol > 0.0))
        throw std::invalid_argument("condition_report: gap tolerance must be positive");
    if (entry_tol && !(*entry_tol > 0.0))
        throw std::invalid_argument("condition_report: entry tolerance must be positive");

    const EigenDecomposition eig = eigh(hamiltonian(grid, v, t));

    ConditionReport r;
    r.t = t;
    r.min_gap = eig.min_gap();
    r.min_entry = eig.min_abs_entry();
    const double diam = eig.spectral_diameter();
    r.gap_tol = gap_tol ? *gap_tol : kDefaultGapTolFactor * (diam > 0.0 ? diam : 1.0);
    r.entry_tol = entry_tol ? *entry_tol : kDefaultEntryTol;
    r.simple = r.min_gap > r.gap_tol;
    r.nonvanishing = r.min_entry > r.entry_tol;
    return r;
}

double ipr(const std::vector<double>& vec) {
    double norm2 = 0.0;
    for (double x : vec) norm2 += x * x;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-8)
        throw std::invalid_argument("ipr: vector must be normalized");
    double s = 0.0;
    for (double x : vec) s += x * x * x * x;
    return s;
}

std::vector<HeatmapRow> ipr_heatmap(const TorusGrid& grid, const Potential& v,
                                    const std::vector<double>& t_values, int threads) {
    v.validate(grid);
    if (t_values.empty()) throw std::invalid_argument("ipr_heatmap: no t values");
    const int n = grid.size();
    std::vector<HeatmapRow> rows(t_values.size() * static_cast<std::size_t>(n));
    parallel_for(
        static_cast<std::int64_t>(t_values.size()),
        [&](std::int64_t ti) {
            const double t = t_values[ti];
            const EigenDecomposition eig = eigh(hamiltonian(grid, v, t));
            std::vector<double> col(n);
            for (int k = 0; k < n; ++k) {
                for (int i = 0; i < n; ++i) col[i] = eig.vectors(i, k);
                HeatmapRow& row = rows[static_cast<std::size_t>(ti) * n + k];
                row.t = t;
                row.k = k;
                row.lambda = eig.eigenvalues[k];
                row.log_ipr = std::log(ipr(col));
            }
        },
        threads);
    return rows;
}

}  // namespace anderson
