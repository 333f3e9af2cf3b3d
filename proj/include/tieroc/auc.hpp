#pragma once

#include <optional>

#include "tieroc/dataset.hpp"
#include "tieroc/rational.hpp"
#include "tieroc/roc.hpp"

namespace tieroc {

// Counts over all n_pos * n_neg cross-class pairs of whether the positive's
// score is greater than, equal to, or less than the negative's.
struct PairCounts {
    Count gt = 0;
    Count eq = 0;
    Count lt = 0;
    Count n_pos = 0;
    Count n_neg = 0;

    Count pairs() const noexcept { return n_pos * n_neg; }
    // eq / pairs: the gap between the optimistic and strict AUCs.
    Rational tie_mass() const noexcept { return {eq, pairs()}; }

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

struct AucEstimate {
    double value = 0.0;
    PathConvention convention = PathConvention::Linear;
    std::optional<Rational> exact;
};

// Prefix-sum pass over the groups, O(#groups); never expands rows.
PairCounts pair_statistics(const ScoreGroups& g);

AucEstimate auc_strict(const PairCounts& p);
// Exact form is (2*gt + eq) / (2*pairs) so odd tie counts stay exact.
AucEstimate auc_half_ties(const PairCounts& p);
AucEstimate auc_optimistic(const PairCounts& p);
AucEstimate auc_for(const PairCounts& p, PathConvention c);

// Closed forms for a two-valued predictor thresholded at its upper value:
//   PessimisticStep  sens * spec
//   Linear           (sens + spec) / 2
//   OptimisticStep   sens*spec + sens*(1-spec) + (1-sens)*spec
// This overload trusts the caller that the table comes from a binary split.
AucEstimate auc_binary_closed_form(const ConfusionTable& ct, PathConvention c);
// Checks that the groups hold exactly two distinct scores (NotBinaryError
// otherwise) and applies the closed form at the upper score.
AucEstimate auc_binary_closed_form(const ScoreGroups& g, PathConvention c);

// Trapezoidal area under the polyline in floating point, from the fpr/tpr
// coordinates. No exact form is attached.
AucEstimate auc_from_polyline(const RocPolyline& pl);
// The same trapezoid sum carried out on the integer vertex counts:
// sum (fp' - fp) * (tp + tp') over 2 * n_pos * n_neg.
Rational auc_from_polyline_exact(const RocPolyline& pl);

// Strict AUC after swapping the outcome labels: lt / pairs.
AucEstimate reversed_label_strict(const PairCounts& p);

}  // namespace tieroc
