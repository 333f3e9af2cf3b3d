#include "tieroc/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tieroc/error.hpp"
#include "tieroc/normal.hpp"
#include "tieroc/parallel.hpp"
#include "tieroc/rng.hpp"

namespace tieroc {

namespace {

void check_level(double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw ArgumentError("confidence level must lie in (0, 1)");
    }
}

// Redraw cap per replicate; only reachable with a handful of subjects.
constexpr std::uint64_t kMaxRedrawsPerReplicate = 100000;

}  // namespace

Rational placement_mean(std::span<const Placement> v, Count n) {
    if (v.empty()) {
        return {0, 1};
    }
    unsigned __int128 num = 0;
    for (const Placement& p : v) {
        num += static_cast<unsigned __int128>(p.value.num) * p.weight;
    }
    // Every entry shares the denominator 2 * n_opposite.
    return {static_cast<Count>(num), v.front().value.den * n};
}

double placement_variance(std::span<const Placement> v, Count n) {
    if (n < 2) {
        throw InsufficientDataError("variance needs at least two subjects");
    }
    const long double mean = static_cast<long double>(placement_mean(v, n).value());
    long double ss = 0.0L;
    for (const Placement& p : v) {
        const long double d =
            static_cast<long double>(p.value.num) / static_cast<long double>(p.value.den) - mean;
        ss += static_cast<long double>(p.weight) * d * d;
    }
    return static_cast<double>(ss / static_cast<long double>(n - 1));
}

ComponentVectors placement_components(const ScoreGroups& g) {
    if (g.n_pos() < 2 || g.n_neg() < 2) {
        throw InsufficientDataError("placement variances need at least 2 subjects per class (n_pos=" +
                                    std::to_string(g.n_pos()) +
                                    ", n_neg=" + std::to_string(g.n_neg()) + ")");
    }
    ComponentVectors cv;
    cv.n_pos = g.n_pos();
    cv.n_neg = g.n_neg();
    Count neg_seen = 0;
    Count pos_seen = 0;
    for (const ScoreGroup& grp : g) {
        const Count neg_below = cv.n_neg - neg_seen - grp.neg;
        if (grp.pos > 0) {
            cv.v10.push_back({grp.score, {2 * neg_below + grp.neg, 2 * cv.n_neg}, grp.pos});
        }
        if (grp.neg > 0) {
            // A negative is "placed" by the positives scoring above it.
            cv.v01.push_back({grp.score, {2 * pos_seen + grp.pos, 2 * cv.n_pos}, grp.neg});
        }
        neg_seen += grp.neg;
        pos_seen += grp.pos;
    }
    return cv;
}

AsymptoticResult asymptotic_normal_ci(const ScoreGroups& g, double level) {
    check_level(level);
    const ComponentVectors cv = placement_components(g);
    const double s10 = placement_variance(cv.v10, cv.n_pos);
    const double s01 = placement_variance(cv.v01, cv.n_neg);

    AsymptoticResult r;
    r.level = level;
    r.auc = auc_half_ties(pair_statistics(g)).value;
    r.se = std::sqrt(s10 / static_cast<double>(cv.n_pos) + s01 / static_cast<double>(cv.n_neg));
    const double z = two_sided_z(level);
    r.ci_lower = std::clamp(r.auc - z * r.se, 0.0, 1.0);
    r.ci_upper = std::clamp(r.auc + z * r.se, 0.0, 1.0);
    return r;
}

double quantile_type7(std::span<const double> sorted, double prob) {
    if (sorted.empty()) {
        throw ArgumentError("quantile of empty data");
    }
    prob = std::clamp(prob, 0.0, 1.0);
    const double h = static_cast<double>(sorted.size() - 1) * prob;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BootstrapResult bootstrap_auc(const ScoreGroups& g, PathConvention conv, std::int64_t replicates,
                              std::uint64_t seed, double level, unsigned threads) {
    g.require_both_classes();
    check_level(level);
    if (replicates < kMinBootstrapReplicates) {
        throw ArgumentError("bootstrap needs at least " + std::to_string(kMinBootstrapReplicates) +
                            " replicates");
    }

    // Subjects laid out as [group0 neg | group0 pos | group1 neg | ...];
    // slot 2i is group i's negatives and slot 2i+1 its positives.
    const std::size_t n_groups = g.size();
    std::vector<Count> cumulative(2 * n_groups);
    Count running = 0;
    for (std::size_t i = 0; i < n_groups; ++i) {
        running += g[i].neg;
        cumulative[2 * i] = running;
        running += g[i].pos;
        cumulative[2 * i + 1] = running;
    }
    const Count n = running;

    const auto n_rep = static_cast<std::size_t>(replicates);
    std::vector<double> values(n_rep);
    std::vector<std::uint64_t> redraws(n_rep, 0);

    parallel_for(n_rep, threads, [&](std::size_t r) {
        auto gen = rng::Xoshiro256ss::for_stream(seed, r);
        std::vector<Count> slot_counts(2 * n_groups);
        for (;;) {
            std::fill(slot_counts.begin(), slot_counts.end(), 0);
            Count pos = 0;
            for (Count k = 0; k < n; ++k) {
                const Count u = rng::uniform_below(gen, n);
                const auto slot = static_cast<std::size_t>(
                    std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
                ++slot_counts[slot];
                pos += slot % 2;
            }
            if (pos > 0 && pos < n) {
                break;
            }
            if (++redraws[r] > kMaxRedrawsPerReplicate) {
                throw InsufficientDataError("bootstrap cannot draw both classes");
            }
        }
        std::vector<ScoreGroup> resampled;
        resampled.reserve(n_groups);
        for (std::size_t i = 0; i < n_groups; ++i) {
            const Count neg = slot_counts[2 * i];
            const Count pos = slot_counts[2 * i + 1];
            if (neg + pos > 0) {
                resampled.push_back({g[i].score, neg, pos});
            }
        }
        values[r] = auc_for(pair_statistics(ScoreGroups(std::move(resampled))), conv).value;
    });

    BootstrapResult res;
    res.observed = auc_for(pair_statistics(g), conv).value;
    res.replicates = replicates;
    res.redraws = std::accumulate(redraws.begin(), redraws.end(), std::uint64_t{0});
    res.seed = seed;
    res.level = level;
    res.convention = conv;

    const auto b = static_cast<double>(n_rep);
    // Summed in replicate order so the result does not depend on scheduling.
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / b;
    double ss = 0.0;
    std::size_t below = 0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
        below += v < res.observed ? 1 : 0;
    }
    res.bias = mean - res.observed;
    res.se = std::sqrt(ss / (b - 1.0));

    const double z = two_sided_z(level);
    const double alpha = (1.0 - level) / 2.0;
    res.ci_normal = {res.observed - z * res.se, res.observed + z * res.se};

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    res.ci_percentile = {quantile_type7(sorted, alpha), quantile_type7(sorted, 1.0 - alpha)};

    const double z0 = normal_quantile(static_cast<double>(below) / b);
    res.ci_bc = {quantile_type7(sorted, normal_cdf(2.0 * z0 - z)),
                 quantile_type7(sorted, normal_cdf(2.0 * z0 + z))};
    res.values = std::move(values);
    return res;
}

BootstrapResult bootstrap_auc(const Dataset& d, PathConvention conv, std::int64_t replicates,
                              std::uint64_t seed, double level, unsigned threads) {
    d.require_both_classes();
    return bootstrap_auc(group_by_score(d), conv, replicates, seed, level, threads);
}

}  // namespace tieroc
