#include "tieroc/monte_carlo.hpp"

#include <algorithm>
#include <vector>

#include "tieroc/error.hpp"
#include "tieroc/parallel.hpp"
#include "tieroc/rng.hpp"

namespace tieroc {

namespace {

// Maps a uniform draw in [0, total) to the index of the score group holding
// that member of one class.
class ClassSampler {
public:
    ClassSampler(const ScoreGroups& g, Label label) {
        Count running = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const Count c = label == Label::Positive ? g[i].pos : g[i].neg;
            if (c == 0) {
                continue;
            }
            running += c;
            cumulative_.push_back(running);
            group_.push_back(i);
        }
        total_ = running;
    }

    template <typename Gen>
    std::size_t draw(Gen& gen) const {
        const Count u = rng::uniform_below(gen, total_);
        const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
        return group_[static_cast<std::size_t>(it - cumulative_.begin())];
    }

private:
    std::vector<Count> cumulative_;
    std::vector<std::size_t> group_;
    Count total_ = 0;
};

struct BlockTally {
    Count greater = 0;
    Count ties = 0;
};

}  // namespace

MonteCarloResult est_auc(const ScoreGroups& g, std::int64_t n_draws, std::uint64_t seed,
                         unsigned threads) {
    g.require_both_classes();
    if (n_draws <= 0) {
        throw ArgumentError("n_draws must be positive");
    }
    const auto draws = static_cast<std::uint64_t>(n_draws);
    const ClassSampler positives(g, Label::Positive);
    const ClassSampler negatives(g, Label::Negative);

    const std::uint64_t n_blocks = (draws + kMonteCarloBlock - 1) / kMonteCarloBlock;
    std::vector<BlockTally> tallies(n_blocks);
    parallel_for(n_blocks, threads, [&](std::size_t b) {
        auto gen = rng::Xoshiro256ss::for_stream(seed, b);
        const std::uint64_t begin = b * kMonteCarloBlock;
        const std::uint64_t end = std::min(draws, begin + kMonteCarloBlock);
        BlockTally t;
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::size_t pos_group = positives.draw(gen);
            const std::size_t neg_group = negatives.draw(gen);
            // Groups are in descending score order.
            if (pos_group < neg_group) {
                ++t.greater;
            } else if (pos_group == neg_group) {
                ++t.ties;
            }
        }
        tallies[b] = t;
    });

    MonteCarloResult r;
    r.n_draws = draws;
    r.seed = seed;
    for (const BlockTally& t : tallies) {
        r.greater += t.greater;
        r.ties += t.ties;
    }
    r.auc_definition = r.definition_exact().value();
    r.auc_wties = r.wties_exact().value();
    return r;
}

MonteCarloResult est_auc(const Dataset& d, std::int64_t n_draws, std::uint64_t seed,
                         unsigned threads) {
    d.require_both_classes();
    return est_auc(group_by_score(d), n_draws, seed, threads);
}

}  // namespace tieroc
