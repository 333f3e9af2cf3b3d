#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tieroc/auc.hpp"
#include "tieroc/dataset.hpp"
#include "tieroc/inference.hpp"
#include "tieroc/roc.hpp"

namespace tieroc {

enum class WarningCode { BinaryPredictor, HighTieMass, DiscretePredictor };

// "BINARY_PREDICTOR" etc.
std::string_view warning_name(WarningCode c) noexcept;

struct Warning {
    WarningCode code;
    std::string message;
};

// Thresholds for the discreteness warnings. Both are policy, not theory.
struct DiagnosticPolicy {
    double high_tie_mass = 0.1;           // warn when tie mass is strictly above
    std::size_t discrete_max_distinct = 10;  // warn when n_distinct is at most
};

struct Diagnostics {
    std::size_t n_distinct = 0;
    Rational tie_mass;            // eq / pairs
    bool is_binary = false;
    Rational convention_spread;   // optimistic - strict, always equal to tie_mass
    std::vector<Warning> warnings;

    bool has(WarningCode c) const noexcept;
};

Diagnostics diagnose(const ScoreGroups& g, const DiagnosticPolicy& policy = {});

// The dichotomization "score >= threshold" with the largest sens + spec, i.e.
// the best binary predictor hidden inside a many-valued one.
struct BinarySplit {
    double threshold = 0.0;
    ConfusionTable confusion;
    AucEstimate half_ties;  // (sens + spec) / 2
};

// nullopt when the predictor has fewer than three distinct values.
std::optional<BinarySplit> best_binary_split(const ScoreGroups& g);

struct Note {
    std::string code;
    std::string message;
};

struct CiSelection {
    bool normal = true;
    bool percentile = true;
    bool bc = true;
};

struct ReportOptions {
    DiagnosticPolicy policy;
    // NEAR_BINARY_EQUIVALENT note when the half-ties AUC is this close to the
    // best binary split's.
    double near_binary_tolerance = 0.001;
    // Attempted by default; skipped with a note when a class has < 2 members.
    bool asymptotic = true;
    double level = 0.95;
    std::int64_t bootstrap_replicates = 0;  // 0 disables the bootstrap
    std::vector<PathConvention> bootstrap_conventions = {PathConvention::Linear};
    std::optional<std::uint64_t> seed;      // required when bootstrapping
    unsigned threads = 1;
    CiSelection ci;
    std::vector<PathConvention> curves;
};

struct Report {
    Count n = 0;
    Count n_pos = 0;
    Count n_neg = 0;
    PairCounts pairs;
    // strict, half_ties, optimistic
    std::array<AucEstimate, 3> auc;
    // Present for binary predictors only.
    std::optional<AucEstimate> reversed_strict;
    Diagnostics diagnostics;
    std::optional<BinarySplit> best_split;
    std::vector<Note> notes;
    std::optional<AsymptoticResult> asymptotic;
    std::vector<BootstrapResult> bootstrap;
    std::vector<RocPolyline> curves;
    CiSelection ci;
};

Report build_report(const Dataset& d, const ReportOptions& options = {});

// {"convention":"strict","path":"pessimistic","value":..,"num":..,"den":..}
nlohmann::ordered_json estimate_to_json(const AucEstimate& e);
nlohmann::ordered_json bootstrap_to_json(const BootstrapResult& b, const CiSelection& ci);
nlohmann::ordered_json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace tieroc
