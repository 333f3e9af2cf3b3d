#include "tieroc/auc.hpp"

#include "tieroc/error.hpp"

namespace tieroc {

namespace {

AucEstimate from_rational(Rational r, PathConvention c) {
    return {r.value(), c, r};
}

}  // namespace

PairCounts pair_statistics(const ScoreGroups& g) {
    g.require_both_classes();
    PairCounts p;
    p.n_pos = g.n_pos();
    p.n_neg = g.n_neg();
    // Groups are descending, so negatives not yet seen all score below the
    // current group.
    Count neg_above_or_at = 0;
    for (const ScoreGroup& grp : g) {
        const Count neg_below = p.n_neg - neg_above_or_at - grp.neg;
        p.gt += grp.pos * neg_below;
        p.eq += grp.pos * grp.neg;
        p.lt += grp.pos * neg_above_or_at;
        neg_above_or_at += grp.neg;
    }
    return p;
}

AucEstimate auc_strict(const PairCounts& p) {
    return from_rational({p.gt, p.pairs()}, PathConvention::PessimisticStep);
}

AucEstimate auc_half_ties(const PairCounts& p) {
    return from_rational({2 * p.gt + p.eq, 2 * p.pairs()}, PathConvention::Linear);
}

AucEstimate auc_optimistic(const PairCounts& p) {
    return from_rational({p.gt + p.eq, p.pairs()}, PathConvention::OptimisticStep);
}

AucEstimate auc_for(const PairCounts& p, PathConvention c) {
    switch (c) {
        case PathConvention::PessimisticStep:
            return auc_strict(p);
        case PathConvention::Linear:
            return auc_half_ties(p);
        case PathConvention::OptimisticStep:
            return auc_optimistic(p);
    }
    throw ArgumentError("unknown convention");
}

AucEstimate reversed_label_strict(const PairCounts& p) {
    return from_rational({p.lt, p.pairs()}, PathConvention::PessimisticStep);
}

AucEstimate auc_binary_closed_form(const ConfusionTable& ct, PathConvention c) {
    const Count n_pos = ct.n_pos();
    const Count n_neg = ct.n_neg();
    if (n_pos == 0 || n_neg == 0) {
        throw DegenerateClassError("confusion table has an empty class");
    }
    // sens = tp/n_pos, spec = tn/n_neg, 1-sens = fn/n_pos, 1-spec = fp/n_neg.
    const Count denom = n_pos * n_neg;
    switch (c) {
        case PathConvention::PessimisticStep:
            return from_rational({ct.tp * ct.tn, denom}, c);
        case PathConvention::Linear:
            return from_rational({ct.tp * n_neg + ct.tn * n_pos, 2 * denom}, c);
        case PathConvention::OptimisticStep:
            return from_rational({ct.tp * ct.tn + ct.tp * ct.fp + ct.fn * ct.tn, denom}, c);
    }
    throw ArgumentError("unknown convention");
}

AucEstimate auc_binary_closed_form(const ScoreGroups& g, PathConvention c) {
    g.require_both_classes();
    if (g.size() != 2) {
        throw NotBinaryError("predictor has " + std::to_string(g.size()) +
                             " distinct values, expected 2");
    }
    return auc_binary_closed_form(confusion_at_threshold(g, g[0].score), c);
}

namespace {

void require_integrable(const RocPolyline& pl) {
    if (pl.points.size() < 2 || pl.n_pos == 0 || pl.n_neg == 0) {
        throw ArgumentError("polyline needs two points and both classes");
    }
}

}  // namespace

AucEstimate auc_from_polyline(const RocPolyline& pl) {
    require_integrable(pl);
    double area = 0.0;
    for (std::size_t k = 1; k < pl.points.size(); ++k) {
        const RocPoint& a = pl.points[k - 1];
        const RocPoint& b = pl.points[k];
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
    }
    return {area, pl.convention, std::nullopt};
}

Rational auc_from_polyline_exact(const RocPolyline& pl) {
    require_integrable(pl);
    Count twice_area = 0;
    for (std::size_t k = 1; k < pl.points.size(); ++k) {
        const RocPoint& a = pl.points[k - 1];
        const RocPoint& b = pl.points[k];
        twice_area += (b.fp - a.fp) * (a.tp + b.tp);
    }
    return {twice_area, 2 * pl.n_pos * pl.n_neg};
}

}  // namespace tieroc
