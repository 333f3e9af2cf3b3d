#include "tieroc/roc.hpp"

#include <limits>

#include "tieroc/error.hpp"

namespace tieroc {

std::string_view auc_name(PathConvention c) noexcept {
    switch (c) {
        case PathConvention::PessimisticStep:
            return "strict";
        case PathConvention::Linear:
            return "half_ties";
        case PathConvention::OptimisticStep:
            return "optimistic";
    }
    return "unknown";
}

std::string_view path_name(PathConvention c) noexcept {
    switch (c) {
        case PathConvention::PessimisticStep:
            return "pessimistic";
        case PathConvention::Linear:
            return "linear";
        case PathConvention::OptimisticStep:
            return "optimistic";
    }
    return "unknown";
}

std::optional<PathConvention> parse_auc_name(std::string_view s) noexcept {
    for (PathConvention c : kAllConventions) {
        if (s == auc_name(c)) {
            return c;
        }
    }
    return std::nullopt;
}

std::optional<PathConvention> parse_path_name(std::string_view s) noexcept {
    for (PathConvention c : kAllConventions) {
        if (s == path_name(c)) {
            return c;
        }
    }
    return std::nullopt;
}

namespace {

RocPoint make_point(Count fp, Count tp, Count n_neg, Count n_pos, std::optional<double> threshold) {
    return {fp, tp, static_cast<double>(fp) / static_cast<double>(n_neg),
            static_cast<double>(tp) / static_cast<double>(n_pos), threshold};
}

}  // namespace

std::vector<RocPoint> roc_vertices(const ScoreGroups& g) {
    g.require_both_classes();
    std::vector<RocPoint> out;
    out.reserve(g.size() + 1);
    out.push_back(make_point(0, 0, g.n_neg(), g.n_pos(), std::numeric_limits<double>::infinity()));
    Count fp = 0;
    Count tp = 0;
    for (const ScoreGroup& grp : g) {
        fp += grp.neg;
        tp += grp.pos;
        out.push_back(make_point(fp, tp, g.n_neg(), g.n_pos(), grp.score));
    }
    return out;
}

RocPolyline roc_path(const std::vector<RocPoint>& vertices, PathConvention c) {
    if (vertices.size() < 2) {
        throw ArgumentError("an ROC path needs at least two vertices");
    }
    const RocPoint& last = vertices.back();
    RocPolyline pl{c, last.tp, last.fp, {}};
    if (c == PathConvention::Linear) {
        pl.points = vertices;
        return pl;
    }
    pl.points.reserve(2 * vertices.size() - 1);
    pl.points.push_back(vertices.front());
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const RocPoint& a = vertices[i - 1];
        const RocPoint& b = vertices[i];
        if (c == PathConvention::PessimisticStep) {
            pl.points.push_back({b.fp, a.tp, b.fpr, a.tpr, std::nullopt});
        } else {
            pl.points.push_back({a.fp, b.tp, a.fpr, b.tpr, std::nullopt});
        }
        pl.points.push_back(b);
    }
    return pl;
}

}  // namespace tieroc
