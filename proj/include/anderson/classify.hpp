#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anderson/grid.hpp"
#include "anderson/spectral.hpp"
#include "anderson/symmetry.hpp"

namespace anderson {

bool is_odd_prime(int n);

enum class Verdict {
    GoodExact,      // d=1 prime cycle, no reflection center: provably good
    GoodNumerical,  // some sampled t shows simple spectrum and no vanishing entry
    BadCertified,   // a commuting symmetry certifies failure at every t
    BadNumerical,   // every sampled t fails a condition; evidence, not proof
    Inconclusive,
};

const char* to_string(Verdict v);
inline constexpr int kVerdictCount = 5;

inline constexpr std::uint64_t kDefaultSeed = 1;

struct ClassifyParams {
    int t_sample_count = 3;
    std::uint64_t seed = kDefaultSeed;
    std::optional<double> gap_tol;    // default: 1e-8 x spectral diameter, per sample
    std::optional<double> entry_tol;  // default: 1e-8
    // A sample decides cleanly only when the deciding quantity clears its
    // tolerance by this factor; otherwise the sample is tolerance-ambiguous.
    double ambiguity_margin = 10.0;
    bool use_certificate_search = true;
    bool use_prime_exact = true;
    std::size_t pool_cap = kDefaultPoolCap;
};

struct Classification {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<SymmetryCertificate> certificate;  // BadCertified evidence
    bool prime_exact_applied = false;                // the d=1 prime route ran
    std::optional<int> refl_center;                  // its finding, when it ran
    std::vector<double> t_samples;
    std::vector<ConditionReport> reports;
    std::string note;  // diagnostics for Inconclusive
};

// Deterministic pseudo-random couplings in [0.5, 2.0], pairwise distinct
// (rejection resampling). The range stays away from t = 0, where the
// Laplacian's own degeneracies mask everything.
std::vector<double> generic_t_samples(std::uint64_t seed, int count);

// Reusable classifier for one grid: the automorphism pool and the t samples
// are built once and shared across calls. Immutable after construction, safe
// for concurrent classify() calls.
class ClassifyContext {
public:
    ClassifyContext(TorusGrid grid, ClassifyParams params = {});

    Classification classify(const Potential& v) const;

    const TorusGrid& grid() const { return grid_; }
    const ClassifyParams& params() const { return params_; }
    const std::vector<double>& t_samples() const { return t_samples_; }

private:
    TorusGrid grid_;
    ClassifyParams params_;
    std::vector<VertexPermutation> pool_;
    bool pool_truncated_ = false;
    bool prime_cycle_ = false;
    std::vector<double> t_samples_;
};

// Verdict pipeline: certificate search, then the exact prime-cycle reflection
// criterion for d=1 prime, then a sweep over sampled couplings where one
// clean witness (simple and nonvanishing) is enough for GoodNumerical.
Classification classify(const TorusGrid& grid, const Potential& v,
                        const ClassifyParams& params = {});

}  // namespace anderson
