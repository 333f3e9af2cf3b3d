#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "tieroc/rational.hpp"

namespace tieroc {

enum class Label : std::uint8_t { Negative = 0, Positive = 1 };

struct Sample {
    double score = 0.0;
    Label label = Label::Negative;
};

// One row of the grouped-counts form: how many negatives and positives share
// a score value.
struct CountRecord {
    double score = 0.0;
    Count neg = 0;
    Count pos = 0;
};

// Immutable scored binary-outcome data. Row-form input keeps its samples in
// input order; counts-form input keeps its records without expanding them.
class Dataset {
public:
    // Throws IngestError on empty input or a non-finite score.
    static Dataset from_rows(std::vector<Sample> samples);
    // Throws IngestError on duplicate scores, non-finite scores, or zero total.
    static Dataset from_counts(std::vector<CountRecord> records);

    Count n_pos() const noexcept { return n_pos_; }
    Count n_neg() const noexcept { return n_neg_; }
    Count size() const noexcept { return n_pos_ + n_neg_; }

    bool is_row_form() const noexcept { return std::holds_alternative<std::vector<Sample>>(data_); }
    // Empty unless is_row_form().
    std::span<const Sample> rows() const noexcept;
    // Empty unless !is_row_form().
    std::span<const CountRecord> count_records() const noexcept;

    // Throws DegenerateClassError unless both classes are present.
    void require_both_classes() const;

private:
    Dataset() = default;

    std::variant<std::vector<Sample>, std::vector<CountRecord>> data_;
    Count n_pos_ = 0;
    Count n_neg_ = 0;
};

struct ScoreGroup {
    double score = 0.0;
    Count neg = 0;
    Count pos = 0;

    friend bool operator==(const ScoreGroup&, const ScoreGroup&) = default;
};

// Distinct score values in strictly descending order with per-class counts.
class ScoreGroups {
public:
    ScoreGroups() = default;
    // Groups must already satisfy the ordering and nonempty-group invariants;
    // throws ArgumentError otherwise.
    explicit ScoreGroups(std::vector<ScoreGroup> groups);

    std::span<const ScoreGroup> groups() const noexcept { return groups_; }
    std::size_t size() const noexcept { return groups_.size(); }
    const ScoreGroup& operator[](std::size_t i) const { return groups_[i]; }
    auto begin() const noexcept { return groups_.begin(); }
    auto end() const noexcept { return groups_.end(); }

    Count n_pos() const noexcept { return n_pos_; }
    Count n_neg() const noexcept { return n_neg_; }

    void require_both_classes() const;

private:
    std::vector<ScoreGroup> groups_;
    Count n_pos_ = 0;
    Count n_neg_ = 0;
};

struct ConfusionTable {
    Count tp = 0;
    Count fp = 0;
    Count tn = 0;
    Count fn = 0;

    Count n_pos() const noexcept { return tp + fn; }
    Count n_neg() const noexcept { return tn + fp; }
    Rational sensitivity() const noexcept { return {tp, tp + fn}; }
    Rational specificity() const noexcept { return {tn, tn + fp}; }

    friend bool operator==(const ConfusionTable&, const ConfusionTable&) = default;
};

// Record sequence of (score, label) pairs where label must be exactly 0 or 1.
Dataset load_rows(std::span<const std::pair<double, double>> records);
Dataset load_counts(std::span<const CountRecord> records);

ScoreGroups group_by_score(const Dataset& d);

// Predicts positive when score >= threshold. Any non-NaN threshold is valid;
// +inf yields tp = fp = 0 and -inf yields tn = fn = 0.
ConfusionTable confusion_at_threshold(const ScoreGroups& g, double threshold);
ConfusionTable confusion_at_threshold(const Dataset& d, double threshold);

}  // namespace tieroc
