#pragma once

#include <cstdint>

#include "tieroc/dataset.hpp"
#include "tieroc/rational.hpp"

namespace tieroc {

struct MonteCarloResult {
    double auc_definition = 0.0;  // fraction of draws with pos > neg
    double auc_wties = 0.0;       // auc_definition + half the tied fraction
    std::uint64_t n_draws = 0;
    std::uint64_t seed = 0;
    Count greater = 0;
    Count ties = 0;

    // greater / n_draws
    Rational definition_exact() const noexcept { return {greater, n_draws}; }
    // (2 * greater + ties) / (2 * n_draws)
    Rational wties_exact() const noexcept { return {2 * greater + ties, 2 * n_draws}; }
};

// Draws are split into blocks of this many; block b uses rng stream b.
inline constexpr std::uint64_t kMonteCarloBlock = 1u << 16;

// Draws n_draws positive and n_draws negative scores independently and
// uniformly with replacement, and compares each pair. Sampling picks score
// groups weighted by count, so memory is O(#groups). Deterministic in
// (data, n_draws, seed) for every thread count.
MonteCarloResult est_auc(const ScoreGroups& g, std::int64_t n_draws, std::uint64_t seed,
                         unsigned threads = 1);
MonteCarloResult est_auc(const Dataset& d, std::int64_t n_draws, std::uint64_t seed,
                         unsigned threads = 1);

}  // namespace tieroc
