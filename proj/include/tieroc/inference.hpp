#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tieroc/auc.hpp"
#include "tieroc/dataset.hpp"

namespace tieroc {

// Placement value shared by every subject of one class at one score:
// (#opposite below + 1/2 #opposite tied) / n_opposite, held exactly as
// (2*below + tied) / (2*n_opposite).
struct Placement {
    double score = 0.0;
    Rational value;
    Count weight = 0;
};

struct ComponentVectors {
    std::vector<Placement> v10;  // one entry per score holding positives
    std::vector<Placement> v01;  // one entry per score holding negatives
    Count n_pos = 0;
    Count n_neg = 0;
};

// Weighted mean of grouped placements, exactly.
Rational placement_mean(std::span<const Placement> v, Count n);
// Sample variance (divisor n - 1) of grouped placements.
double placement_variance(std::span<const Placement> v, Count n);

// Throws InsufficientDataError when either class has fewer than 2 members.
ComponentVectors placement_components(const ScoreGroups& g);

struct AsymptoticResult {
    double auc = 0.0;
    double se = 0.0;
    double ci_lower = 0.0;
    double ci_upper = 0.0;
    double level = 0.95;
    // Always Linear: the normal approximation is only offered for half-ties.
    PathConvention convention = PathConvention::Linear;
};

// se^2 = S10/n_pos + S01/n_neg from the placement variances; interval
// auc +- z*se clamped to [0, 1].
AsymptoticResult asymptotic_normal_ci(const ScoreGroups& g, double level = 0.95);

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
};

struct BootstrapResult {
    double observed = 0.0;
    double bias = 0.0;  // mean(replicates) - observed
    double se = 0.0;    // sample sd of replicates
    Interval ci_normal;      // observed +- z*se, not clamped
    Interval ci_percentile;  // type-7 quantiles
    Interval ci_bc;          // bias-corrected percentile, no acceleration
    std::int64_t replicates = 0;
    std::uint64_t redraws = 0;  // resamples discarded because a class vanished
    std::uint64_t seed = 0;
    double level = 0.95;
    PathConvention convention = PathConvention::Linear;
    std::vector<double> values;  // replicate AUCs in replicate order
};

inline constexpr std::int64_t kMinBootstrapReplicates = 100;

// Paired bootstrap: each replicate resamples all n subjects with replacement,
// so class sizes vary. Replicate r draws from rng stream r of `seed`; a
// replicate missing a class is redrawn from the same stream. Results are
// identical for any thread count.
BootstrapResult bootstrap_auc(const ScoreGroups& g, PathConvention conv, std::int64_t replicates,
                              std::uint64_t seed, double level = 0.95, unsigned threads = 1);
BootstrapResult bootstrap_auc(const Dataset& d, PathConvention conv, std::int64_t replicates,
                              std::uint64_t seed, double level = 0.95, unsigned threads = 1);

// Hyndman-Fan type 7 quantile of sorted data, prob in [0, 1].
double quantile_type7(std::span<const double> sorted, double prob);

}  // namespace tieroc
