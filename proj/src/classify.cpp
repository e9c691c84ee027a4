#include "anderson/classify.hpp"

#include <algorithm>
#include <cmath>

#include "anderson/rng.hpp"

namespace anderson {

bool is_odd_prime(int n) {
    if (n < 3 || n % 2 == 0) return false;
    for (int f = 3; static_cast<long long>(f) * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::GoodExact: return "GoodExact";
        case Verdict::GoodNumerical: return "GoodNumerical";
        case Verdict::BadCertified: return "BadCertified";
        case Verdict::BadNumerical: return "BadNumerical";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

std::vector<double> generic_t_samples(std::uint64_t seed, int count) {
    if (count < 1) throw std::invalid_argument("generic_t_samples: count must be positive");
    SplitMix64 rng(mix_seed(seed, 0x745f73616d706c65ull));
    std::vector<double> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        const double t = rng.uniform(0.5, 2.0);
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
}

ClassifyContext::ClassifyContext(TorusGrid grid, ClassifyParams params)
    : grid_(std::move(grid)), params_(params) {
    if (params_.t_sample_count < 1)
        throw std::invalid_argument("ClassifyContext: need at least one t sample");
    if (params_.ambiguity_margin < 1.0)
        throw std::invalid_argument("ClassifyContext: ambiguity margin must be >= 1");
    if (params_.use_certificate_search) {
        // A hit in a truncated pool is still a sound certificate; only a
        // miss becomes inconclusive.
        PoolResult built = automorphism_pool_capped(grid_, params_.pool_cap);
        pool_ = std::move(built.pool);
        pool_truncated_ = built.truncated;
    }
    prime_cycle_ = grid_.dim_count() == 1 && is_odd_prime(grid_.side(0));
    t_samples_ = generic_t_samples(params_.seed, params_.t_sample_count);
}

namespace {

enum class SampleKind { Witness, GapFail, EntryFail };

struct SampleOutcome {
    SampleKind kind;
    bool clean;
};

SampleOutcome judge(const ConditionReport& r, double margin) {
    if (!r.simple) return {SampleKind::GapFail, r.min_gap <= r.gap_tol / margin};
    if (!r.nonvanishing) return {SampleKind::EntryFail, r.min_entry <= r.entry_tol / margin};
    return {SampleKind::Witness,
            r.min_gap >= margin * r.gap_tol && r.min_entry >= margin * r.entry_tol};
}

}  // namespace

Classification ClassifyContext::classify(const Potential& v) const {
    v.validate(grid_);
    Classification result;

    if (params_.use_certificate_search) {
        CertificateSearch search = find_certificate(grid_, v, pool_, pool_truncated_);
        if (search.status == CertSearchStatus::Found) {
            result.verdict = Verdict::BadCertified;
            result.certificate = std::move(search.certificate);
            return result;
        }
        if (search.status == CertSearchStatus::PoolCapExceeded) {
            result.verdict = Verdict::Inconclusive;
            result.note = "certificate search aborted: automorphism pool cap exceeded";
            return result;
        }
    }

    if (params_.use_prime_exact && prime_cycle_) {
        result.prime_exact_applied = true;
        result.refl_center = reflection_center(v.values);
        if (!result.refl_center) {
            // No reflection symmetry on a prime cycle settles it exactly.
            result.verdict = Verdict::GoodExact;
            return result;
        }
        VertexPermutation perm = reflection_perm(grid_, {*result.refl_center});
        std::vector<int> fixed = perm.fixed_points();
        result.verdict = Verdict::BadCertified;
        result.certificate = SymmetryCertificate{std::move(perm), 2, std::move(fixed),
                                                 CertReason::VanishingAtFixedPoint};
        return result;
    }

    result.t_samples = t_samples_;
    bool clean_witness = false;
    bool all_clean_failures = true;
    for (double t : t_samples_) {
        ConditionReport report;
        try {
            report = condition_report(grid_, v, t, params_.gap_tol, params_.entry_tol);
        } catch (const EighError& e) {
            result.verdict = Verdict::Inconclusive;
            result.note = std::string("eigensolver failure at t sample: ") + e.what();
            return result;
        }
        const SampleOutcome outcome = judge(report, params_.ambiguity_margin);
        result.reports.push_back(report);
        if (outcome.kind == SampleKind::Witness) {
            all_clean_failures = false;
            if (outcome.clean) clean_witness = true;
        } else if (!outcome.clean) {
            all_clean_failures = false;
        }
    }
    if (clean_witness) {
        // One coupling with simple spectrum and nowhere-vanishing eigenvectors
        // is a witness: failures can then occur at only finitely many t.
        result.verdict = Verdict::GoodNumerical;
    } else if (all_clean_failures) {
        result.verdict = Verdict::BadNumerical;
    } else {
        result.verdict = Verdict::Inconclusive;
        result.note = "tolerance-ambiguous samples: no clean witness, not all clean failures";
    }
    return result;
}

Classification classify(const TorusGrid& grid, const Potential& v, const ClassifyParams& params) {
    return ClassifyContext(grid, params).classify(v);
}

}  // namespace anderson
