#include "anderson/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "anderson/classify.hpp"
#include "anderson/grid.hpp"
#include "anderson/parallel.hpp"
#include "anderson/perturbation.hpp"
#include "anderson/probability.hpp"
#include "anderson/rng.hpp"
#include "anderson/serialize.hpp"
#include "anderson/spectral.hpp"
#include "anderson/symmetry.hpp"

namespace anderson::selftest {

namespace {

struct Scale {
    std::vector<int> c1_primes;
    std::vector<double> c1_p;
    std::vector<std::vector<int>> c2_dims;
    std::vector<double> c2_p;
    std::vector<int> c3_primes;
    int c4_trials = 0;
    int c5_instances = 0;
    int c5_max_n = 0;
    int c5_slope_pairs = 0;
    int c6_matrices = 0;
    int c6_max_n = 0;
    std::vector<int> c6_cycles;
    int c7_cycle = 0;
    int c7_tgrid = 0;
    int c8_potentials = 0;
};

Scale full_scale() {
    Scale s;
    s.c1_primes = {3, 5, 7, 11, 13};
    s.c1_p = {0.3, 0.5};
    s.c2_dims = {{5}, {7}, {3, 3}, {3, 5}};
    s.c2_p = {0.1, 0.5};
    s.c3_primes = {5, 7};
    s.c4_trials = 200;
    s.c5_instances = 50;
    s.c5_max_n = 25;
    s.c5_slope_pairs = 10;
    s.c6_matrices = 100;
    s.c6_max_n = 200;
    s.c6_cycles = {4, 5, 50};
    s.c7_cycle = 50;
    s.c7_tgrid = 12;
    s.c8_potentials = 500;
    return s;
}

Scale reduced_scale() {
    Scale s;
    s.c1_primes = {3, 5, 7};
    s.c1_p = {0.5};
    s.c2_dims = {{5}, {7}, {3, 3}};
    s.c2_p = {0.5};
    s.c3_primes = {5};
    s.c4_trials = 40;
    s.c5_instances = 10;
    s.c5_max_n = 12;
    s.c5_slope_pairs = 4;
    s.c6_matrices = 15;
    s.c6_max_n = 60;
    s.c6_cycles = {4, 5, 20};
    s.c7_cycle = 20;
    s.c7_tgrid = 6;
    s.c8_potentials = 80;
    return s;
}

class Check {
public:
    void require(bool ok, const std::string& msg) {
        if (ok) return;
        pass_ = false;
        if (++failures_ <= 4) {
            if (!detail_.str().empty()) detail_ << "; ";
            detail_ << msg;
        }
    }

    void info(const std::string& msg) {
        if (!info_.str().empty()) info_ << "; ";
        info_ << msg;
    }

    bool pass() const { return pass_; }

    std::string detail() const {
        std::string d = detail_.str();
        if (failures_ > 4) d += "; ... (" + std::to_string(failures_) + " failures total)";
        if (!info_.str().empty()) d += (d.empty() ? "" : " | ") + info_.str();
        return d;
    }

private:
    bool pass_ = true;
    int failures_ = 0;
    std::ostringstream detail_;
    std::ostringstream info_;
};

std::string dims_str(const std::vector<int>& dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + "]";
}

// 1. The closed-form bad-potential probability on prime cycles must equal the
// exhaustive reflection-based enumeration, with the frozen spot values.
Check criterion_exact_formula(const Scale& s, int threads) {
    Check chk;
    for (int L : s.c1_primes) {
        const TorusGrid grid({L});
        const Classifier cls = make_exact_prime_classifier(grid);
        for (double p : s.c1_p) {
            const double formula = exact_bad_prob_prime_cycle(L, p);
            EnumerateOptions opts;
            opts.threads = threads;
            const ProbabilityEstimate est = enumerate_bernoulli(grid, p, cls, opts);
            chk.require(std::abs(est.estimate - formula) <= 1e-12,
                        "L=" + std::to_string(L) + " p=" + format_double(p) +
                            ": enumeration " + format_double(est.estimate) + " vs formula " +
                            format_double(formula));
        }
    }
    chk.require(std::abs(exact_bad_prob_prime_cycle(3, 0.5) - 1.0) <= 1e-12,
                "spot value L=3 p=0.5 should be 1");
    chk.require(std::abs(exact_bad_prob_prime_cycle(5, 0.5) - 1.0) <= 1e-12,
                "spot value L=5 p=0.5 should be 1");
    chk.require(std::abs(exact_bad_prob_prime_cycle(7, 0.5) - 25.0 / 32.0) <= 1e-12,
                "spot value L=7 p=0.5 should be 25/32");
    return chk;
}

// 2. The inclusion-exclusion bound must equal the enumerated shift-symmetric
// mass exactly, and the fully classified bad mass must dominate it (strictly
// on [3,3], where reflections add mass beyond shifts).
Check criterion_bound(const Scale& s, int threads) {
    Check chk;
    for (const std::vector<int>& dims : s.c2_dims) {
        const TorusGrid grid(dims);
        for (double p : s.c2_p) {
            const double bound = lower_bound_bad(dims, p);
            const double mass = shift_symmetric_mass(grid, p, threads);
            chk.require(std::abs(bound - mass) <= 1e-12,
                        dims_str(dims) + " p=" + format_double(p) + ": bound " +
                            format_double(bound) + " vs shift mass " + format_double(mass));

            ClassifyParams params;
            params.seed = 1001;
            const Classifier cls = make_full_classifier(grid, params);
            EnumerateOptions opts;
            opts.threads = threads;
            const ProbabilityEstimate est = enumerate_bernoulli(grid, p, cls, opts);
            chk.require(est.estimate >= bound - 1e-12,
                        dims_str(dims) + " p=" + format_double(p) + ": bad mass " +
                            format_double(est.estimate) + " below bound " +
                            format_double(bound));
            if (dims == std::vector<int>{3, 3} && p == 0.5) {
                chk.require(std::abs(bound - 7.0 / 256.0) <= 1e-12,
                            "[3,3] p=0.5 bound should be 7/256");
                chk.require(est.estimate > bound + 1e-9,
                            "[3,3] p=0.5: bad mass should exceed the bound strictly");
                chk.info("[3,3] p=0.5 slack above bound: " +
                         format_double(est.estimate - bound));
            }
        }
    }
    return chk;
}

// 3. On prime cycles the reflection criterion and the numerical t-sweep must
// partition all sign patterns identically, with no inconclusive leftovers.
Check criterion_cross_oracle(const Scale& s, int threads) {
    Check chk;
    for (int L : s.c3_primes) {
        const TorusGrid grid({L});
        const Classifier exact = make_exact_prime_classifier(grid);
        const Classifier numeric = make_numerical_classifier(grid);
        const std::uint64_t total = 1ull << L;
        std::vector<std::uint8_t> mismatch(total, 0), inconclusive(total, 0);
        parallel_chunks(
            static_cast<std::int64_t>(total),
            [&](std::int64_t lo, std::int64_t hi) {
                Potential v;
                v.tag = Potential::Tag::Bernoulli;
                v.param_a = 0.5;
                v.values.resize(L);
                for (std::int64_t mask = lo; mask < hi; ++mask) {
                    for (int x = 0; x < L; ++x) v.values[x] = (mask >> x) & 1 ? 1.0 : -1.0;
                    const bool exact_bad = exact(v).verdict == Verdict::BadCertified;
                    const Classification nc = numeric(v);
                    if (nc.verdict != Verdict::GoodNumerical &&
                        nc.verdict != Verdict::BadNumerical) {
                        inconclusive[mask] = 1;
                        continue;
                    }
                    const bool numeric_bad = nc.verdict == Verdict::BadNumerical;
                    if (numeric_bad != exact_bad) mismatch[mask] = 1;
                }
            },
            threads);
        std::uint64_t disagreements = 0, unresolved = 0;
        for (std::uint64_t m = 0; m < total; ++m) {
            disagreements += mismatch[m];
            unresolved += inconclusive[m];
        }
        chk.require(disagreements == 0, "L=" + std::to_string(L) + ": " +
                                            std::to_string(disagreements) + " disagreements");
        chk.require(unresolved == 0, "L=" + std::to_string(L) + ": " +
                                         std::to_string(unresolved) + " inconclusive patterns");
    }
    return chk;
}

// 4. Continuous potentials are good with probability one; every sampled one
// must pass the numerical sweep. The prime-exact shortcut is disabled so the
// verdict exercises the sweep itself on the cycle as well.
Check criterion_continuous(const Scale& s, int threads) {
    Check chk;
    const PotentialDistribution dist = PotentialDistribution::uniform(-1.0, 1.0);
    int grid_tag = 0;
    for (const std::vector<int>& dims : {std::vector<int>{5}, std::vector<int>{3, 3}}) {
        const TorusGrid grid(dims);
        ClassifyParams params;
        params.use_prime_exact = false;
        const ClassifyContext ctx(grid, params);
        std::vector<std::uint8_t> not_good(s.c4_trials, 0);
        parallel_for(
            s.c4_trials,
            [&](std::int64_t trial) {
                SplitMix64 rng(mix_seed(0xC4000 + grid_tag, trial));
                const Potential v = dist.sample(grid.size(), rng);
                if (ctx.classify(v).verdict != Verdict::GoodNumerical) not_good[trial] = 1;
            },
            threads);
        const int bad = static_cast<int>(std::count(not_good.begin(), not_good.end(), 1));
        chk.require(bad == 0, dims_str(dims) + ": " + std::to_string(bad) + " of " +
                                  std::to_string(s.c4_trials) +
                                  " uniform potentials not GoodNumerical");
        ++grid_tag;
    }
    return chk;
}

std::vector<double> jittered_diagonal(int n, SplitMix64& rng) {
    // Unit spacing with +/-0.45 jitter: gaps stay above 0.1, so minimal-path
    // products stay O(1) and the 1e-12 comparisons below are meaningful.
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = i + 0.45 * rng.uniform(-1.0, 1.0);
    return diag;
}

// 5. Minimal-path sums against propagator powers on random diagonals over
// torus Laplacians, structural zeros outside the distance ball, and the
// log-log slope of the small-t eigenvector entry against the distance.
Check criterion_perturbation(const Scale& s, int threads) {
    Check chk;
    const std::vector<std::vector<int>> candidates = {{5},    {7},    {9},       {3, 3}, {11},
                                                      {3, 5}, {13},   {3, 3, 3}, {17},   {4, 5},
                                                      {21},   {5, 5}, {25},      {3, 7}, {4, 6}};
    std::vector<std::vector<int>> dims_pool;
    for (const auto& dims : candidates) {
        int n = 1;
        for (int L : dims) n *= L;
        if (n <= s.c5_max_n) dims_pool.push_back(dims);
    }

    std::vector<std::string> instance_errors(s.c5_instances);
    parallel_for(
        s.c5_instances,
        [&](std::int64_t inst) {
            const TorusGrid grid(dims_pool[inst % dims_pool.size()]);
            const int n = grid.size();
            const SymmetricMatrix a = laplacian(grid);
            SplitMix64 rng(mix_seed(0xC5000, inst));
            const std::vector<double> diag = jittered_diagonal(n, rng);
            std::ostringstream err;
            for (int k = 0; k < n && err.str().empty(); ++k) {
                const std::vector<int> dist = support_distances(a, k);
                const int diameter = *std::max_element(dist.begin(), dist.end());
                const PropagatorC prop = propagator(diag, a, k);
                DenseMatrix power = DenseMatrix::identity(n);
                for (int j = 1; j <= diameter; ++j) {
                    power = prop.c * power;
                    for (int i = 0; i < n; ++i) {
                        if (i == k) continue;
                        if (dist[i] == j) {
                            const double ps = path_sum(diag, a, i, k);
                            if (std::abs(ps - power(i, k)) > 1e-12) {
                                err << "instance " << inst << " (i,k)=(" << i << "," << k
                                    << "): path sum " << format_double(ps) << " vs power "
                                    << format_double(power(i, k));
                                break;
                            }
                        } else if (dist[i] > j && std::abs(power(i, k)) > 1e-12) {
                            err << "instance " << inst << ": (C^" << j << ")(" << i << "," << k
                                << ") nonzero outside the distance ball";
                            break;
                        }
                    }
                }
            }
            instance_errors[inst] = err.str();
        },
        threads);
    for (const std::string& e : instance_errors)
        chk.require(e.empty(), e);

    // Slope check on cycles: |phi_t(i)| ~ |coef| t^{d(i,k)} for small t.
    int checked = 0;
    for (int inst = 0; inst < s.c5_instances && checked < s.c5_slope_pairs; ++inst) {
        const std::vector<int>& dims = dims_pool[inst % dims_pool.size()];
        if (dims.size() != 1) continue;
        const TorusGrid grid(dims);
        const int n = grid.size();
        const SymmetricMatrix a = laplacian(grid);
        SplitMix64 rng(mix_seed(0xC5000, inst));
        const std::vector<double> diag = jittered_diagonal(n, rng);
        for (int want_dist = 1; want_dist <= 2 && checked < s.c5_slope_pairs; ++want_dist) {
            const int k = inst % n;
            const int i = (k + want_dist) % n;
            if (grid.distance(i, k) != want_dist) continue;
            const double coef = path_sum(diag, a, i, k);
            if (std::abs(coef) < 1e-3) continue;

            const std::vector<double> ts = {1e-3, 1e-4, 1e-5};
            std::vector<double> logt, logv;
            bool usable = true;
            for (double t : ts) {
                SymmetricMatrix h(n);
                for (int r = 0; r < n; ++r) {
                    h.set(r, r, diag[r] + t * a(r, r));
                    for (int c = r + 1; c < n; ++c) h.set(r, c, t * a(r, c));
                }
                const EigenDecomposition eig = eigh(h);
                int col = 0;
                double best = -1.0;
                for (int c = 0; c < n; ++c)
                    if (std::abs(eig.vectors(k, c)) > best) {
                        best = std::abs(eig.vectors(k, c));
                        col = c;
                    }
                const double entry = std::abs(eig.vectors(i, col));
                if (entry <= 0.0) {
                    usable = false;
                    break;
                }
                logt.push_back(std::log(t));
                logv.push_back(std::log(entry));
            }
            chk.require(usable, "slope pair: zero eigenvector entry at small t");
            if (!usable) continue;

            double mt = 0, mv = 0;
            for (std::size_t r = 0; r < logt.size(); ++r) {
                mt += logt[r];
                mv += logv[r];
            }
            mt /= logt.size();
            mv /= logv.size();
            double num = 0, den = 0;
            for (std::size_t r = 0; r < logt.size(); ++r) {
                num += (logt[r] - mt) * (logv[r] - mv);
                den += (logt[r] - mt) * (logt[r] - mt);
            }
            const double slope = num / den;
            chk.require(std::abs(slope - want_dist) <= 0.05,
                        "slope " + format_double(slope) + " for distance " +
                            std::to_string(want_dist) + " pair (" + std::to_string(i) + "," +
                            std::to_string(k) + ") on " + dims_str(dims));
            ++checked;
        }
    }
    chk.require(checked >= s.c5_slope_pairs,
                "only " + std::to_string(checked) + " usable slope pairs");
    return chk;
}

// 6. Residual and orthogonality bounds on random symmetric matrices, plus the
// closed-form cycle spectrum 2 - 2 cos(2 pi k / L).
Check criterion_eigensolver(const Scale& s, int threads, const std::string& fault) {
    Check chk;
    const double bound = fault == "eigh-residual" ? 1e-17 : 1e-10;
    std::vector<std::string> errors(s.c6_matrices);
    parallel_for(
        s.c6_matrices,
        [&](std::int64_t m) {
            SplitMix64 rng(mix_seed(0xC6000, m));
            const int n = 2 + static_cast<int>(rng.next() % (s.c6_max_n - 1));
            SymmetricMatrix a(n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) a.set(i, j, rng.uniform(-1.0, 1.0));
            const EigenDecomposition eig = eigh(a);
            const double scale = std::max(1.0, a.max_abs());
            if (eig.residual > bound * scale)
                errors[m] = "eigensolver residual bound exceeded: " +
                            format_double(eig.residual) + " at n=" + std::to_string(n);
            else if (eig.ortho_defect > bound)
                errors[m] = "eigensolver orthogonality bound exceeded: " +
                            format_double(eig.ortho_defect) + " at n=" + std::to_string(n);
        },
        threads);
    for (const std::string& e : errors) chk.require(e.empty(), e);

    for (int L : s.c6_cycles) {
        const EigenDecomposition eig = eigh(laplacian(TorusGrid({L})));
        std::vector<double> expected(L);
        for (int k = 0; k < L; ++k)
            expected[k] = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / L);
        std::sort(expected.begin(), expected.end());
        double worst = 0.0;
        for (int k = 0; k < L; ++k)
            worst = std::max(worst, std::abs(eig.eigenvalues[k] - expected[k]));
        chk.require(worst <= 1e-10, "cycle L=" + std::to_string(L) +
                                        " spectrum off by " + format_double(worst));
    }
    return chk;
}

// 7. Localization grows with the coupling, the strong-coupling limit pins
// eigenvectors to single sites, and the heatmap table is shape-stable and
// byte-identical across reruns and worker counts.
Check criterion_heatmap(const Scale& s, int threads) {
    Check chk;
    const TorusGrid grid({s.c7_cycle});
    const Potential v =
        sample_potential(PotentialDistribution::uniform(-1.0, 1.0), grid.size(), 7);

    auto mean_ipr = [&](double t) {
        const std::vector<HeatmapRow> rows = ipr_heatmap(grid, v, {t}, threads);
        double sum = 0.0;
        for (const HeatmapRow& r : rows) sum += std::exp(r.log_ipr);
        return sum / static_cast<double>(rows.size());
    };
    const double weak = mean_ipr(0.1);
    const double strong = mean_ipr(5.0);
    chk.require(strong > weak, "mean IPR at t=5 (" + format_double(strong) +
                                   ") not above t=0.1 (" + format_double(weak) + ")");
    chk.info("mean IPR " + format_double(weak) + " at t=0.1, " + format_double(strong) +
             " at t=5");

    bool distinct = true;
    for (std::size_t i = 0; i < v.values.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < v.values.size() && distinct; ++j)
            distinct = v.values[i] != v.values[j];
    chk.require(distinct, "sampled potential has repeated entries");
    const std::vector<HeatmapRow> pinned = ipr_heatmap(grid, v, {1e6}, threads);
    double min_ipr = 1.0;
    for (const HeatmapRow& r : pinned) min_ipr = std::min(min_ipr, std::exp(r.log_ipr));
    chk.require(min_ipr >= 0.9,
                "min IPR at t=1e6 is " + format_double(min_ipr) + ", expected >= 0.9");

    std::vector<double> ts(s.c7_tgrid);
    for (int i = 0; i < s.c7_tgrid; ++i)
        ts[i] = 0.1 + (5.0 - 0.1) * i / std::max(1, s.c7_tgrid - 1);
    const std::string csv_serial = heatmap_csv(ipr_heatmap(grid, v, ts, 1));
    const std::string csv_parallel = heatmap_csv(ipr_heatmap(grid, v, ts, 2));
    const std::size_t expected_rows = ts.size() * static_cast<std::size_t>(grid.size());
    const std::size_t lines = static_cast<std::size_t>(
        std::count(csv_serial.begin(), csv_serial.end(), '\n'));
    chk.require(lines == expected_rows + 1,
                "CSV has " + std::to_string(lines) + " lines, expected " +
                    std::to_string(expected_rows + 1));
    chk.require(csv_serial == csv_parallel, "heatmap CSV differs across worker counts");
    return chk;
}

// 8. Every certificate found on random sign potentials must be numerically
// visible at generic couplings: a collapsed gap for order > 2, and a
// vanishing entry at the fixed points (or a collapsed gap, which makes the
// eigenbasis arbitrary inside the degenerate subspaces) for order 2.
Check criterion_certificates(const Scale& s, int threads) {
    Check chk;
    const std::vector<std::vector<int>> dims_pool = {{5}, {7}, {3, 3}};
    std::vector<TorusGrid> grids;
    std::vector<std::vector<VertexPermutation>> pools;
    for (const auto& dims : dims_pool) {
        grids.emplace_back(dims);
        pools.push_back(automorphism_pool(grids.back()));
    }

    std::vector<std::string> errors(s.c8_potentials);
    std::vector<std::uint8_t> found(s.c8_potentials, 0);
    const PotentialDistribution dist = PotentialDistribution::bernoulli(0.5);
    parallel_for(
        s.c8_potentials,
        [&](std::int64_t r) {
            const std::size_t gi = r % grids.size();
            const TorusGrid& grid = grids[gi];
            SplitMix64 rng(mix_seed(0xC8000, r));
            const Potential v = dist.sample(grid.size(), rng);
            const CertificateSearch search = find_certificate(grid, v, pools[gi], false);
            if (search.status != CertSearchStatus::Found) return;
            found[r] = 1;
            const SymmetryCertificate& cert = *search.certificate;
            if (cert.reason == CertReason::OddNPermutation) {
                errors[r] = "unexpected odd-n certificate reason";
                return;
            }
            const std::vector<double> ts = generic_t_samples(0xC8F00D + r, 3);
            for (double t : ts) {
                const EigenDecomposition eig = eigh(hamiltonian(grid, v, t));
                if (cert.reason == CertReason::DegenerateSpectrum) {
                    if (!(eig.min_gap() < 1e-6)) {
                        errors[r] = "degenerate-spectrum certificate but min gap " +
                                    format_double(eig.min_gap()) + " at t=" + format_double(t);
                        return;
                    }
                    continue;
                }
                if (eig.min_gap() < 1e-6) continue;  // basis arbitrary inside degenerate blocks
                for (int j : cert.fixed_points) {
                    double smallest = 1.0;
                    for (int k = 0; k < grid.size(); ++k)
                        smallest = std::min(smallest, std::abs(eig.vectors(j, k)));
                    if (!(smallest < 1e-6)) {
                        errors[r] = "vanishing certificate but entry " + format_double(smallest) +
                                    " at fixed point " + std::to_string(j) +
                                    " for t=" + format_double(t);
                        return;
                    }
                }
            }
        },
        threads);
    for (const std::string& e : errors) chk.require(e.empty(), e);
    const int total_found = static_cast<int>(std::count(found.begin(), found.end(), 1));
    chk.require(total_found > 0, "no certificates found at all");
    chk.info(std::to_string(total_found) + " of " + std::to_string(s.c8_potentials) +
             " potentials carried a certificate");
    return chk;
}

}  // namespace

std::vector<CheckResult> run(const Options& opts) {
    const Scale scale = opts.reduced ? reduced_scale() : full_scale();
    const int threads = opts.threads;

    struct Entry {
        int id;
        const char* name;
        std::function<Check()> fn;
    };
    const std::vector<Entry> entries = {
        {1, "exact-prime-cycle-formula-vs-enumeration",
         [&] { return criterion_exact_formula(scale, threads); }},
        {2, "shift-symmetry-bound-vs-enumeration", [&] { return criterion_bound(scale, threads); }},
        {3, "prime-cycle-cross-oracle", [&] { return criterion_cross_oracle(scale, threads); }},
        {4, "continuous-potentials-all-good", [&] { return criterion_continuous(scale, threads); }},
        {5, "perturbation-coefficients", [&] { return criterion_perturbation(scale, threads); }},
        {6, "eigensolver-quality",
         [&] { return criterion_eigensolver(scale, threads, opts.inject_fault); }},
        {7, "localization-heatmap", [&] { return criterion_heatmap(scale, threads); }},
        {8, "certificate-soundness", [&] { return criterion_certificates(scale, threads); }},
    };

    std::vector<CheckResult> results;
    for (const Entry& entry : entries) {
        if (opts.criterion != 0 && opts.criterion != entry.id) continue;
        const auto start = std::chrono::steady_clock::now();
        CheckResult r;
        r.id = entry.id;
        r.name = entry.name;
        try {
            const Check chk = entry.fn();
            r.pass = chk.pass();
            r.detail = chk.detail();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (opts.out) {
            (*opts.out) << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "/8 " << r.name;
            if (!r.detail.empty()) (*opts.out) << ": " << r.detail;
            char buf[32];
            std::snprintf(buf, sizeof(buf), " (%.1fs)", r.seconds);
            (*opts.out) << buf << std::endl;
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

}  // namespace anderson::selftest
