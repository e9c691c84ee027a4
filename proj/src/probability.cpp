#include "anderson/probability.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "anderson/parallel.hpp"

namespace anderson {

PotentialDistribution PotentialDistribution::bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("PotentialDistribution: p must lie in [0,1]");
    PotentialDistribution d;
    d.kind = Kind::Bernoulli;
    d.p = p;
    return d;
}

PotentialDistribution PotentialDistribution::uniform(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("PotentialDistribution: need a < b");
    PotentialDistribution d;
    d.kind = Kind::Uniform;
    d.a = a;
    d.b = b;
    return d;
}

PotentialDistribution PotentialDistribution::explicit_values(std::vector<double> values) {
    PotentialDistribution d;
    d.kind = Kind::Explicit;
    d.values = std::move(values);
    return d;
}

Potential PotentialDistribution::sample(int n, SplitMix64& rng) const {
    Potential v;
    switch (kind) {
        case Kind::Bernoulli:
            v.tag = Potential::Tag::Bernoulli;
            v.param_a = p;
            v.values.resize(n);
            for (int i = 0; i < n; ++i) v.values[i] = rng.uniform01() < p ? 1.0 : -1.0;
            break;
        case Kind::Uniform:
            v.tag = Potential::Tag::Uniform;
            v.param_a = a;
            v.param_b = b;
            v.values.resize(n);
            for (int i = 0; i < n; ++i) v.values[i] = rng.uniform(a, b);
            break;
        case Kind::Explicit:
            if (static_cast<int>(values.size()) != n)
                throw std::invalid_argument("PotentialDistribution: explicit length mismatch");
            v.tag = Potential::Tag::Explicit;
            v.values = values;
            break;
    }
    return v;
}

Potential sample_potential(const PotentialDistribution& dist, int n, std::uint64_t seed) {
    SplitMix64 rng(mix_seed(seed, 0));
    return dist.sample(n, rng);
}

namespace {

double ipow(double base, long long e) {
    double out = 1.0;
    for (long long i = 0; i < e; ++i) out *= base;
    return out;
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1]");
}

// Weights p^m (1-p)^{n-m} by popcount m, summed largest-first to keep the
// round-off of the accumulation below the 1e-12 comparisons downstream.
double weighted_mass(const std::vector<std::uint64_t>& counts_by_popcount, int n, double p) {
    std::vector<std::pair<double, double>> terms;  // (weight, weighted count)
    for (int m = 0; m <= n; ++m) {
        if (counts_by_popcount[m] == 0) continue;
        const double w = ipow(p, m) * ipow(1.0 - p, n - m);
        terms.emplace_back(w, w * static_cast<double>(counts_by_popcount[m]));
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.second > y.second; });
    double mass = 0.0;
    for (const auto& [w, t] : terms) mass += t;
    return mass;
}

}  // namespace

double exact_bad_prob_prime_cycle(int L, double p) {
    if (!is_odd_prime(L))
        throw std::invalid_argument("exact_bad_prob_prime_cycle: L must be an odd prime");
    check_probability(p);
    const double q = 1.0 - p;
    return L * ipow(p * p + q * q, (L - 1) / 2) - (L - 1) * (ipow(p, L) + ipow(q, L));
}

double lower_bound_bad(const std::vector<int>& dims, double p) {
    check_probability(p);
    const TorusGrid grid(dims);  // validates the dims
    const double q = 1.0 - p;
    const int d = grid.dim_count();
    const long long n = grid.size();

    std::vector<double> terms;
    for (int mask = 1; mask < (1 << d); ++mask) {
        long long prod = 1;
        for (int i = 0; i < d; ++i)
            if (mask & (1 << i)) prod *= grid.side(i);
        const int sign = __builtin_popcount(static_cast<unsigned>(mask)) % 2 == 1 ? 1 : -1;
        terms.push_back(sign * ipow(ipow(p, prod) + ipow(q, prod), n / prod));
    }
    std::sort(terms.begin(), terms.end(),
              [](double x, double y) { return std::abs(x) > std::abs(y); });
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

double shift_symmetric_mass(const TorusGrid& grid, double p, int threads) {
    check_probability(p);
    const int n = grid.size();
    if (n > kEnumerationMaxBits)
        throw std::invalid_argument("shift_symmetric_mass: grid too large to enumerate");

    std::vector<std::vector<int>> shifts;
    for (int axis = 0; axis < grid.dim_count(); ++axis)
        shifts.push_back(shift_perm(grid, axis, 1).image);

    const std::uint64_t total = 1ull << n;
    const int chunk_count = static_cast<int>(std::min<std::uint64_t>(total, 64));
    std::vector<std::vector<std::uint64_t>> chunk_counts(
        chunk_count, std::vector<std::uint64_t>(n + 1, 0));
    const std::uint64_t chunk_size = (total + chunk_count - 1) / chunk_count;

    parallel_for(
        chunk_count,
        [&](std::int64_t ci) {
            std::vector<std::uint64_t>& counts = chunk_counts[ci];
            const std::uint64_t lo = ci * chunk_size;
            const std::uint64_t hi = std::min(total, lo + chunk_size);
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                bool symmetric = false;
                for (const std::vector<int>& s : shifts) {
                    bool match = true;
                    for (int x = 0; x < n && match; ++x)
                        match = ((mask >> x) & 1) == ((mask >> s[x]) & 1);
                    if (match) {
                        symmetric = true;
                        break;
                    }
                }
                if (symmetric) ++counts[__builtin_popcountll(mask)];
            }
        },
        threads);

    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& c : chunk_counts)
        for (int m = 0; m <= n; ++m) counts[m] += c[m];
    return weighted_mass(counts, n, p);
}

Classifier make_full_classifier(const TorusGrid& grid, const ClassifyParams& params) {
    auto ctx = std::make_shared<ClassifyContext>(grid, params);
    return [ctx](const Potential& v) { return ctx->classify(v); };
}

Classifier make_numerical_classifier(const TorusGrid& grid, const ClassifyParams& params) {
    ClassifyParams p = params;
    p.use_certificate_search = false;
    p.use_prime_exact = false;
    return make_full_classifier(grid, p);
}

Classifier make_exact_prime_classifier(const TorusGrid& grid) {
    if (grid.dim_count() != 1 || !is_odd_prime(grid.side(0)))
        throw std::invalid_argument("make_exact_prime_classifier: need a prime cycle");
    TorusGrid g = grid;
    return [g](const Potential& v) {
        v.validate(g);
        Classification out;
        out.prime_exact_applied = true;
        out.refl_center = reflection_center(v.values);
        if (!out.refl_center) {
            out.verdict = Verdict::GoodExact;
            return out;
        }
        VertexPermutation perm = reflection_perm(g, {*out.refl_center});
        std::vector<int> fixed = perm.fixed_points();
        out.verdict = Verdict::BadCertified;
        out.certificate = SymmetryCertificate{std::move(perm), 2, std::move(fixed),
                                              CertReason::VanishingAtFixedPoint};
        return out;
    };
}

namespace {

bool is_bad(Verdict v) { return v == Verdict::BadCertified || v == Verdict::BadNumerical; }

}  // namespace

ProbabilityEstimate enumerate_bernoulli(const TorusGrid& grid, double p,
                                        const Classifier& classifier,
                                        const EnumerateOptions& opts) {
    check_probability(p);
    const int n = grid.size();
    if (n > opts.max_bits)
        throw std::invalid_argument("enumerate_bernoulli: grid exceeds the enumeration cap");

    const std::uint64_t total = 1ull << n;
    const int chunk_count = static_cast<int>(std::min<std::uint64_t>(total, 64));
    // counts[chunk][verdict][popcount]
    std::vector<std::array<std::vector<std::uint64_t>, kVerdictCount>> chunk_counts(chunk_count);
    for (auto& per_verdict : chunk_counts)
        for (auto& c : per_verdict) c.assign(n + 1, 0);
    const std::uint64_t chunk_size = (total + chunk_count - 1) / chunk_count;

    parallel_for(
        chunk_count,
        [&](std::int64_t ci) {
            auto& counts = chunk_counts[ci];
            const std::uint64_t lo = ci * chunk_size;
            const std::uint64_t hi = std::min(total, lo + chunk_size);
            Potential v;
            v.tag = Potential::Tag::Bernoulli;
            v.param_a = p;
            v.values.resize(n);
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                for (int x = 0; x < n; ++x) v.values[x] = (mask >> x) & 1 ? 1.0 : -1.0;
                const Classification c = classifier(v);
                ++counts[static_cast<int>(c.verdict)][__builtin_popcountll(mask)];
            }
        },
        opts.threads);

    ProbabilityEstimate est;
    est.exact = true;
    est.trials = total;
    std::array<std::vector<std::uint64_t>, kVerdictCount> counts;
    for (auto& c : counts) c.assign(n + 1, 0);
    for (const auto& per_verdict : chunk_counts)
        for (int vi = 0; vi < kVerdictCount; ++vi)
            for (int m = 0; m <= n; ++m) counts[vi][m] += per_verdict[vi][m];

    std::vector<std::uint64_t> bad_by_popcount(n + 1, 0);
    for (int vi = 0; vi < kVerdictCount; ++vi) {
        std::uint64_t c = 0;
        for (int m = 0; m <= n; ++m) c += counts[vi][m];
        est.verdict_counts[vi] = c;
        if (is_bad(static_cast<Verdict>(vi)))
            for (int m = 0; m <= n; ++m) bad_by_popcount[m] += counts[vi][m];
    }
    est.estimate = weighted_mass(bad_by_popcount, n, p);
    est.std_error = 0.0;
    return est;
}

ProbabilityEstimate monte_carlo(const TorusGrid& grid, const PotentialDistribution& dist,
                                std::uint64_t trials, std::uint64_t seed,
                                const Classifier& classifier, int threads) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: need at least one trial");
    const int n = grid.size();

    const int chunk_count = static_cast<int>(std::min<std::uint64_t>(trials, 64));
    std::vector<std::array<std::uint64_t, kVerdictCount>> chunk_counts(chunk_count);
    for (auto& c : chunk_counts) c.fill(0);
    const std::uint64_t chunk_size = (trials + chunk_count - 1) / chunk_count;

    parallel_for(
        chunk_count,
        [&](std::int64_t ci) {
            auto& counts = chunk_counts[ci];
            const std::uint64_t lo = ci * chunk_size;
            const std::uint64_t hi = std::min(trials, lo + chunk_size);
            for (std::uint64_t trial = lo; trial < hi; ++trial) {
                SplitMix64 rng(mix_seed(seed, trial));
                const Potential v = dist.sample(n, rng);
                const Classification c = classifier(v);
                ++counts[static_cast<int>(c.verdict)];
            }
        },
        threads);

    ProbabilityEstimate est;
    est.exact = false;
    est.trials = trials;
    for (const auto& counts : chunk_counts)
        for (int vi = 0; vi < kVerdictCount; ++vi) est.verdict_counts[vi] += counts[vi];

    const std::uint64_t bad =
        est.count(Verdict::BadCertified) + est.count(Verdict::BadNumerical);
    est.estimate = static_cast<double>(bad) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
    return est;
}

}  // namespace anderson
