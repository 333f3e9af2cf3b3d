#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tieroc/dataset.hpp"

namespace tieroc {

// How cross-class ties are credited. Each convention is both a curve shape
// and an AUC definition:
//   PessimisticStep  lower staircase, strict AUC (ties get no credit)
//   Linear           straight segments, half-credit AUC
//   OptimisticStep   upper staircase, full tie credit
enum class PathConvention { PessimisticStep, Linear, OptimisticStep };

// Report order: strict -> half -> optimistic.
inline constexpr std::array<PathConvention, 3> kAllConventions = {
    PathConvention::PessimisticStep, PathConvention::Linear, PathConvention::OptimisticStep};

// "strict" | "half_ties" | "optimistic"
std::string_view auc_name(PathConvention c) noexcept;
// "pessimistic" | "linear" | "optimistic"
std::string_view path_name(PathConvention c) noexcept;
std::optional<PathConvention> parse_auc_name(std::string_view s) noexcept;
std::optional<PathConvention> parse_path_name(std::string_view s) noexcept;

struct RocPoint {
    // Cumulative counts predicted positive; fpr = fp / n_neg, tpr = tp / n_pos.
    Count fp = 0;
    Count tp = 0;
    double fpr = 0.0;
    double tpr = 0.0;
    // +inf for the supra-maximum sentinel vertex, nullopt for corners inserted
    // by a step convention.
    std::optional<double> threshold;
};

struct RocPolyline {
    PathConvention convention = PathConvention::Linear;
    Count n_pos = 0;
    Count n_neg = 0;
    std::vector<RocPoint> points;
};

// (0,0) at the sentinel, then one vertex per score group in descending score
// order. Returns groups.size() + 1 points.
std::vector<RocPoint> roc_vertices(const ScoreGroups& g);

// Linear keeps the vertices; PessimisticStep inserts the corner (a', b)
// between (a, b) and (a', b'); OptimisticStep inserts (a, b'). Corners that
// coincide with an endpoint (vertical or horizontal runs) are still emitted.
RocPolyline roc_path(const std::vector<RocPoint>& vertices, PathConvention c);

}  // namespace tieroc
