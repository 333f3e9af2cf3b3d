#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "tieroc/error.hpp"
#include "tieroc/report.hpp"

using namespace tieroc;

namespace {

// Every object carrying an AUC-like number must say which convention it uses.
void expect_tagged(const nlohmann::ordered_json& j, const std::string& key = "") {
    if (j.is_object()) {
        const bool is_rational_field = key == "tie_mass" || key == "convention_spread";
        const bool looks_like_auc =
            (j.contains("value") && !is_rational_field) || j.contains("observed") ||
            j.contains("auc") && j["auc"].is_number();
        if (looks_like_auc) {
            EXPECT_TRUE(j.contains("convention")) << "untagged AUC under '" << key << "': " << j.dump();
        }
        for (auto it = j.begin(); it != j.end(); ++it) {
            expect_tagged(it.value(), it.key());
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            expect_tagged(e, key);
        }
    }
}

}  // namespace

TEST(Diagnose, Table1) {
    const Diagnostics d = diagnose(group_by_score(Dataset::from_counts(oracle::table1())));
    EXPECT_EQ(d.n_distinct, 2u);
    EXPECT_EQ(d.tie_mass, (Rational{3420, 7140}));
    EXPECT_NEAR(d.tie_mass.value(), 0.479, 5e-4);
    EXPECT_TRUE(d.is_binary);
    EXPECT_TRUE(d.has(WarningCode::BinaryPredictor));
    EXPECT_TRUE(d.has(WarningCode::HighTieMass));
}

TEST(Diagnose, Table2) {
    const Diagnostics d = diagnose(group_by_score(Dataset::from_counts(oracle::table2())));
    EXPECT_EQ(d.n_distinct, 4u);
    EXPECT_EQ(d.tie_mass, (Rational{1825, 7140}));
    EXPECT_NEAR(d.tie_mass.value(), 0.256, 5e-4);
    EXPECT_FALSE(d.is_binary);
    EXPECT_TRUE(d.has(WarningCode::DiscretePredictor));
    EXPECT_TRUE(d.has(WarningCode::HighTieMass));
    EXPECT_FALSE(d.has(WarningCode::BinaryPredictor));
}

TEST(Diagnose, ContinuousScoresNoWarnings) {
    std::mt19937_64 gen(3);
    std::normal_distribution<double> noise;
    std::vector<Sample> rows;
    for (int i = 0; i < 200; ++i) {
        rows.push_back({noise(gen) + i * 1e-9, i % 2 ? Label::Positive : Label::Negative});
    }
    const Diagnostics d = diagnose(group_by_score(Dataset::from_rows(rows)));
    EXPECT_EQ(d.n_distinct, 200u);
    EXPECT_EQ(d.tie_mass.num, 0u);
    EXPECT_TRUE(d.warnings.empty());
}

TEST(Diagnose, PolicyThresholdsAreConfigurable) {
    const auto g = group_by_score(Dataset::from_counts(oracle::table2()));
    const Diagnostics d = diagnose(g, DiagnosticPolicy{0.3, 3});
    EXPECT_FALSE(d.has(WarningCode::HighTieMass));
    EXPECT_FALSE(d.has(WarningCode::DiscretePredictor));
}

TEST(DiagnoseProperty, SpreadEqualsTieMass) {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = group_by_score(
            Dataset::from_rows(oracle::random_discrete(gen, 1 + trial % 12, 2 + trial)));
        const Diagnostics d = diagnose(g);
        ASSERT_EQ(d.convention_spread, d.tie_mass);
        ASSERT_EQ(d.is_binary, d.n_distinct == 2);
    }
}

TEST(BuildReport, Table1Defaults) {
    const Report r = build_report(Dataset::from_counts(oracle::table1()));
    EXPECT_EQ(r.n, 169u);
    EXPECT_NEAR(r.auc[0].value, 0.3641, 5e-5);
    EXPECT_NEAR(r.auc[1].value, 0.6036, 5e-5);
    EXPECT_NEAR(r.auc[2].value, 0.8431, 5e-5);
    ASSERT_TRUE(r.reversed_strict.has_value());
    EXPECT_NEAR(r.reversed_strict->value, 0.1569, 5e-5);
    EXPECT_EQ(r.auc[0].convention, PathConvention::PessimisticStep);
    EXPECT_EQ(r.auc[1].convention, PathConvention::Linear);
    EXPECT_EQ(r.auc[2].convention, PathConvention::OptimisticStep);
    ASSERT_TRUE(r.asymptotic.has_value());
    EXPECT_NEAR(r.asymptotic->se, 0.0378, 1e-4);
    EXPECT_FALSE(r.best_split.has_value());
    EXPECT_TRUE(r.bootstrap.empty());
}

TEST(BuildReport, Table2NotesNearBinaryEquivalence) {
    const Report r = build_report(Dataset::from_counts(oracle::table2()));
    EXPECT_NEAR(r.auc[1].value, 0.60357, 5e-6);
    EXPECT_FALSE(r.reversed_strict.has_value());
    ASSERT_TRUE(r.best_split.has_value());
    EXPECT_EQ(r.best_split->threshold, 3.0);
    EXPECT_EQ(*r.best_split->half_ties.exact, (Rational{4310, 7140}));
    ASSERT_EQ(r.notes.size(), 1u);
    EXPECT_EQ(r.notes[0].code, "NEAR_BINARY_EQUIVALENT");
    EXPECT_LT(std::abs(r.auc[1].value - r.best_split->half_ties.value), 0.001);
}

TEST(BuildReport, PerfectSeparation) {
    std::vector<Sample> rows;
    for (int i = 0; i < 30; ++i) {
        rows.push_back({static_cast<double>(i), i >= 12 ? Label::Positive : Label::Negative});
    }
    const Report r = build_report(Dataset::from_rows(rows));
    for (const auto& e : r.auc) {
        EXPECT_EQ(e.value, 1.0);
    }
    EXPECT_FALSE(r.diagnostics.has(WarningCode::HighTieMass));
    EXPECT_FALSE(r.diagnostics.has(WarningCode::BinaryPredictor));
    EXPECT_TRUE(r.diagnostics.warnings.empty());
}

TEST(BuildReport, TinyClassSkipsAsymptoticWithNote) {
    const Report r = build_report(Dataset::from_counts({{1, 1, 0}, {2, 0, 5}}));
    EXPECT_FALSE(r.asymptotic.has_value());
    ASSERT_FALSE(r.notes.empty());
    EXPECT_EQ(r.notes.back().code, "ASYMPTOTIC_UNAVAILABLE");
}

TEST(BuildReport, BootstrapNeedsSeed) {
    ReportOptions opts;
    opts.bootstrap_replicates = 200;
    EXPECT_THROW(build_report(Dataset::from_counts(oracle::table1()), opts), ArgumentError);
    opts.seed = 4;
    opts.bootstrap_conventions = {kAllConventions.begin(), kAllConventions.end()};
    const Report r = build_report(Dataset::from_counts(oracle::table1()), opts);
    ASSERT_EQ(r.bootstrap.size(), 3u);
    EXPECT_EQ(r.bootstrap[0].convention, PathConvention::PessimisticStep);
}

TEST(BuildReportProperty, BinaryClosedFormsExact) {
    std::mt19937_64 gen(55);
    for (int trial = 0; trial < 100; ++trial) {
        const Dataset d = Dataset::from_rows(oracle::random_discrete(gen, 2, 5 + trial));
        const Report r = build_report(d);
        const auto g = group_by_score(d);
        const ConfusionTable ct = confusion_at_threshold(g, g[0].score);
        const Rational sens = ct.sensitivity();
        const Rational spec = ct.specificity();
        // (sens + spec) / 2 and sens * spec over common denominators.
        ASSERT_EQ(*r.auc[1].exact,
                  (Rational{sens.num * spec.den + spec.num * sens.den, 2 * sens.den * spec.den}));
        ASSERT_EQ(*r.auc[0].exact, (Rational{sens.num * spec.num, sens.den * spec.den}));
    }
}

TEST(ReportJson, SchemaAndConventionTags) {
    ReportOptions opts;
    opts.bootstrap_replicates = 100;
    opts.seed = 1;
    opts.bootstrap_conventions = {kAllConventions.begin(), kAllConventions.end()};
    opts.curves = {PathConvention::Linear, PathConvention::PessimisticStep};
    for (const auto& table : {oracle::table1(), oracle::table2()}) {
        const auto j = report_to_json(build_report(Dataset::from_counts(table), opts));
        for (const char* key : {"n", "n_pos", "n_neg", "auc", "reversed_strict", "diagnostics",
                                "asymptotic", "bootstrap"}) {
            EXPECT_TRUE(j.contains(key)) << key;
        }
        for (const char* conv : {"strict", "half_ties", "optimistic"}) {
            EXPECT_TRUE(j["auc"][conv].contains("num"));
            EXPECT_TRUE(j["auc"][conv].contains("den"));
            EXPECT_EQ(j["auc"][conv]["convention"], conv);
        }
        EXPECT_EQ(j["curves"]["linear"][0]["threshold"], "+inf");
        EXPECT_TRUE(j["curves"]["pessimistic"][1]["threshold"].is_null());
        expect_tagged(j);
    }
    const auto j1 = report_to_json(build_report(Dataset::from_counts(oracle::table1())));
    EXPECT_EQ(j1["auc"]["strict"]["num"], 2600);
    EXPECT_EQ(j1["auc"]["strict"]["den"], 7140);
    EXPECT_EQ(j1["reversed_strict"]["num"], 1120);
    EXPECT_TRUE(j1["bootstrap"].is_null());
}

TEST(ReportText, MentionsEveryConvention) {
    const std::string text = report_to_text(build_report(Dataset::from_counts(oracle::table1())));
    for (const char* s : {"strict", "half_ties", "optimistic", "0.3641457", "0.6036415",
                          "0.8431373", "BINARY_PREDICTOR", "reversed-label"}) {
        EXPECT_NE(text.find(s), std::string::npos) << s;
    }
}
