#include "tieroc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "tieroc/error.hpp"

namespace tieroc {

namespace {

constexpr unsigned __int128 kMaxPairs = static_cast<unsigned __int128>(1) << 62;

void check_pair_capacity(unsigned __int128 n_pos, unsigned __int128 n_neg) {
    if (n_pos > std::numeric_limits<Count>::max() || n_neg > std::numeric_limits<Count>::max() ||
        n_pos * n_neg > kMaxPairs) {
        throw IngestError("class counts exceed 2^62 cross-class pairs");
    }
}

std::string describe_score(double s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

}  // namespace

Dataset Dataset::from_rows(std::vector<Sample> samples) {
    if (samples.empty()) {
        throw IngestError("no rows");
    }
    Dataset d;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Sample& s = samples[i];
        if (!std::isfinite(s.score)) {
            throw IngestError("row " + std::to_string(i + 1) + ": score is not finite");
        }
        if (s.label == Label::Positive) {
            ++d.n_pos_;
        } else if (s.label == Label::Negative) {
            ++d.n_neg_;
        } else {
            throw IngestError("row " + std::to_string(i + 1) + ": label outside {0,1}");
        }
    }
    check_pair_capacity(d.n_pos_, d.n_neg_);
    d.data_ = std::move(samples);
    return d;
}

Dataset Dataset::from_counts(std::vector<CountRecord> records) {
    if (records.empty()) {
        throw IngestError("no count records");
    }
    unsigned __int128 n_pos = 0;
    unsigned __int128 n_neg = 0;
    std::vector<double> seen;
    seen.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const CountRecord& r = records[i];
        if (!std::isfinite(r.score)) {
            throw IngestError("record " + std::to_string(i + 1) + ": score is not finite");
        }
        if (r.neg == 0 && r.pos == 0) {
            throw IngestError("record " + std::to_string(i + 1) + ": empty group at score " +
                              describe_score(r.score));
        }
        n_pos += r.pos;
        n_neg += r.neg;
        seen.push_back(r.score);
    }
    std::sort(seen.begin(), seen.end());
    if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
        throw IngestError("duplicate score value " + describe_score(*dup));
    }
    check_pair_capacity(n_pos, n_neg);

    Dataset d;
    d.n_pos_ = static_cast<Count>(n_pos);
    d.n_neg_ = static_cast<Count>(n_neg);
    d.data_ = std::move(records);
    return d;
}

std::span<const Sample> Dataset::rows() const noexcept {
    if (const auto* v = std::get_if<std::vector<Sample>>(&data_)) {
        return *v;
    }
    return {};
}

std::span<const CountRecord> Dataset::count_records() const noexcept {
    if (const auto* v = std::get_if<std::vector<CountRecord>>(&data_)) {
        return *v;
    }
    return {};
}

void Dataset::require_both_classes() const {
    if (n_pos_ == 0 || n_neg_ == 0) {
        throw DegenerateClassError("need at least one positive and one negative (n_pos=" +
                                   std::to_string(n_pos_) + ", n_neg=" + std::to_string(n_neg_) +
                                   ")");
    }
}

ScoreGroups::ScoreGroups(std::vector<ScoreGroup> groups) : groups_(std::move(groups)) {
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        const ScoreGroup& g = groups_[i];
        if (!std::isfinite(g.score) || g.neg + g.pos == 0) {
            throw ArgumentError("invalid score group");
        }
        if (i > 0 && !(groups_[i - 1].score > g.score)) {
            throw ArgumentError("score groups must be strictly descending");
        }
        n_pos_ += g.pos;
        n_neg_ += g.neg;
    }
}

void ScoreGroups::require_both_classes() const {
    if (n_pos_ == 0 || n_neg_ == 0) {
        throw DegenerateClassError("need at least one positive and one negative (n_pos=" +
                                   std::to_string(n_pos_) + ", n_neg=" + std::to_string(n_neg_) +
                                   ")");
    }
}

Dataset load_rows(std::span<const std::pair<double, double>> records) {
    std::vector<Sample> samples;
    samples.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto [score, label] = records[i];
        if (label != 0.0 && label != 1.0) {
            throw IngestError("row " + std::to_string(i + 1) + ": label outside {0,1}");
        }
        samples.push_back({score, label == 1.0 ? Label::Positive : Label::Negative});
    }
    return Dataset::from_rows(std::move(samples));
}

Dataset load_counts(std::span<const CountRecord> records) {
    return Dataset::from_counts({records.begin(), records.end()});
}

ScoreGroups group_by_score(const Dataset& d) {
    std::map<double, ScoreGroup, std::greater<>> acc;
    auto add = [&acc](double score, Count neg, Count pos) {
        // -0.0 and 0.0 compare equal and land in one group.
        auto [it, inserted] = acc.try_emplace(score, ScoreGroup{score, 0, 0});
        it->second.neg += neg;
        it->second.pos += pos;
    };
    if (d.is_row_form()) {
        for (const Sample& s : d.rows()) {
            s.label == Label::Positive ? add(s.score, 0, 1) : add(s.score, 1, 0);
        }
    } else {
        for (const CountRecord& r : d.count_records()) {
            add(r.score, r.neg, r.pos);
        }
    }
    std::vector<ScoreGroup> out;
    out.reserve(acc.size());
    for (auto& [score, group] : acc) {
        out.push_back(group);
    }
    return ScoreGroups(std::move(out));
}

ConfusionTable confusion_at_threshold(const ScoreGroups& g, double threshold) {
    g.require_both_classes();
    if (std::isnan(threshold)) {
        throw ArgumentError("threshold is NaN");
    }
    ConfusionTable ct;
    for (const ScoreGroup& grp : g) {
        if (grp.score >= threshold) {
            ct.tp += grp.pos;
            ct.fp += grp.neg;
        } else {
            ct.fn += grp.pos;
            ct.tn += grp.neg;
        }
    }
    return ct;
}

ConfusionTable confusion_at_threshold(const Dataset& d, double threshold) {
    d.require_both_classes();
    return confusion_at_threshold(group_by_score(d), threshold);
}

}  // namespace tieroc
