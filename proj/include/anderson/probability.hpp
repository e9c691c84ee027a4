#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "anderson/classify.hpp"
#include "anderson/grid.hpp"
#include "anderson/rng.hpp"

namespace anderson {

struct PotentialDistribution {
    enum class Kind { Bernoulli, Uniform, Explicit };

    Kind kind = Kind::Bernoulli;
    double p = 0.5;                // Bernoulli: probability of +1
    double a = -1.0, b = 1.0;      // Uniform bounds, a < b
    std::vector<double> values;    // Explicit

    static PotentialDistribution bernoulli(double p);
    static PotentialDistribution uniform(double a, double b);
    static PotentialDistribution explicit_values(std::vector<double> values);

    Potential sample(int n, SplitMix64& rng) const;
};

struct ProbabilityEstimate {
    double estimate = 0.0;   // probability mass (exact) or fraction (sampled) of bad verdicts
    double std_error = 0.0;  // binomial; 0 for exact enumeration
    std::uint64_t trials = 0;
    std::array<std::uint64_t, kVerdictCount> verdict_counts{};
    bool exact = false;

    std::uint64_t count(Verdict v) const {
        return verdict_counts[static_cast<int>(v)];
    }
};

// Probability that a Bernoulli(+1 w.p. p) potential on the prime cycle is
// bad:  L (p^2+(1-p)^2)^{(L-1)/2} - (L-1) (p^L + (1-p)^L).
// Rejects even or composite L.
double exact_bad_prob_prime_cycle(int L, double p);

// Inclusion-exclusion lower bound for any box: sum over nonempty axis
// subsets S of (-1)^{|S|-1} (p^{prod_S L} + (1-p)^{prod_S L})^{n/prod_S L}.
// This is exactly the probability of having some single-axis shift symmetry.
double lower_bound_bad(const std::vector<int>& dims, double p);

inline constexpr int kEnumerationMaxBits = 24;

// Exact mass of Bernoulli potentials commuting with at least one single-axis
// shift, by exhausting all 2^n sign patterns (n <= 24). Equals
// lower_bound_bad by construction of the bound.
double shift_symmetric_mass(const TorusGrid& grid, double p, int threads = 0);

using Classifier = std::function<Classification(const Potential&)>;

// Full pipeline, numerical-only (certificate and prime-exact routes
// disabled), and the exact prime-cycle reflection criterion (d=1 odd prime
// only; throws otherwise).
Classifier make_full_classifier(const TorusGrid& grid, const ClassifyParams& params = {});
Classifier make_numerical_classifier(const TorusGrid& grid, const ClassifyParams& params = {});
Classifier make_exact_prime_classifier(const TorusGrid& grid);

struct EnumerateOptions {
    int max_bits = kEnumerationMaxBits;
    int threads = 0;
};

// Classifies every sign pattern and weights it by p^{#+1} (1-p)^{#-1}.
// Weights are accumulated from per-popcount integer counts in descending
// magnitude order, so results do not depend on scheduling.
ProbabilityEstimate enumerate_bernoulli(const TorusGrid& grid, double p,
                                        const Classifier& classifier,
                                        const EnumerateOptions& opts = {});

// Seeded sampling; trial k draws from SplitMix64(mix_seed(seed, k)), so the
// counts are identical for any worker count.
ProbabilityEstimate monte_carlo(const TorusGrid& grid, const PotentialDistribution& dist,
                                std::uint64_t trials, std::uint64_t seed,
                                const Classifier& classifier, int threads = 0);

// Convenience: the potential a single-shot command with this seed draws
// (trial 0 of the Monte Carlo stream).
Potential sample_potential(const PotentialDistribution& dist, int n, std::uint64_t seed);

}  // namespace anderson
