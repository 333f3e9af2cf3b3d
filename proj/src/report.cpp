#include "tieroc/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "tieroc/error.hpp"

namespace tieroc {

using nlohmann::ordered_json;

std::string_view warning_name(WarningCode c) noexcept {
    switch (c) {
        case WarningCode::BinaryPredictor:
            return "BINARY_PREDICTOR";
        case WarningCode::HighTieMass:
            return "HIGH_TIE_MASS";
        case WarningCode::DiscretePredictor:
            return "DISCRETE_PREDICTOR";
    }
    return "UNKNOWN";
}

bool Diagnostics::has(WarningCode c) const noexcept {
    for (const Warning& w : warnings) {
        if (w.code == c) {
            return true;
        }
    }
    return false;
}

namespace {

std::string fixed(double v, int digits = 7) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

}  // namespace

Diagnostics diagnose(const ScoreGroups& g, const DiagnosticPolicy& policy) {
    const PairCounts p = pair_statistics(g);
    Diagnostics d;
    d.n_distinct = g.size();
    d.tie_mass = p.tie_mass();
    d.is_binary = d.n_distinct == 2;
    const Rational optimistic = *auc_optimistic(p).exact;
    const Rational strict = *auc_strict(p).exact;
    d.convention_spread = {optimistic.num - strict.num, optimistic.den};

    if (d.is_binary) {
        d.warnings.push_back(
            {WarningCode::BinaryPredictor,
             "predictor takes two values; the half-ties AUC equals (sensitivity + specificity) / 2 "
             "at its single operating point and the strict AUC equals sensitivity * "
             "specificity"});
    }
    if (d.tie_mass.value() > policy.high_tie_mass) {
        d.warnings.push_back({WarningCode::HighTieMass,
                              "tie mass " + fixed(d.tie_mass.value(), 4) +
                                  " of cross-class pairs are tied; the AUC spans [" +
                                  fixed(strict.value(), 4) + ", " + fixed(optimistic.value(), 4) +
                                  "] depending on the tie convention"});
    }
    if (d.n_distinct <= policy.discrete_max_distinct) {
        d.warnings.push_back({WarningCode::DiscretePredictor,
                              "predictor has only " + std::to_string(d.n_distinct) +
                                  " distinct values"});
    }
    return d;
}

std::optional<BinarySplit> best_binary_split(const ScoreGroups& g) {
    g.require_both_classes();
    if (g.size() < 3) {
        return std::nullopt;
    }
    std::optional<BinarySplit> best;
    Rational best_value;
    // Thresholds at every score but the lowest (which predicts all positive).
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        const ConfusionTable ct = confusion_at_threshold(g, g[i].score);
        const AucEstimate e = auc_binary_closed_form(ct, PathConvention::Linear);
        if (!best || *e.exact > best_value) {
            best = BinarySplit{g[i].score, ct, e};
            best_value = *e.exact;
        }
    }
    return best;
}

Report build_report(const Dataset& d, const ReportOptions& options) {
    d.require_both_classes();
    const ScoreGroups g = group_by_score(d);

    Report r;
    r.n = d.size();
    r.n_pos = d.n_pos();
    r.n_neg = d.n_neg();
    r.pairs = pair_statistics(g);
    r.auc = {auc_strict(r.pairs), auc_half_ties(r.pairs), auc_optimistic(r.pairs)};
    r.diagnostics = diagnose(g, options.policy);
    r.ci = options.ci;
    if (r.diagnostics.is_binary) {
        r.reversed_strict = reversed_label_strict(r.pairs);
    }

    r.best_split = best_binary_split(g);
    if (r.best_split) {
        const double gap = std::abs(r.auc[1].value - r.best_split->half_ties.value);
        if (gap <= options.near_binary_tolerance) {
            std::ostringstream msg;
            msg << "half-ties AUC " << fixed(r.auc[1].value) << " is within "
                << options.near_binary_tolerance << " of the binary predictor 'score >= "
                << r.best_split->threshold << "' (" << fixed(r.best_split->half_ties.value)
                << "); the extra score levels add almost no area under linear interpolation";
            r.notes.push_back({"NEAR_BINARY_EQUIVALENT", msg.str()});
        }
    }

    if (options.asymptotic) {
        try {
            r.asymptotic = asymptotic_normal_ci(g, options.level);
        } catch (const InsufficientDataError& e) {
            r.notes.push_back({"ASYMPTOTIC_UNAVAILABLE", e.what()});
        }
    }

    if (options.bootstrap_replicates > 0) {
        if (!options.seed) {
            throw ArgumentError("bootstrap requires an explicit seed");
        }
        for (PathConvention c : options.bootstrap_conventions) {
            r.bootstrap.push_back(bootstrap_auc(g, c, options.bootstrap_replicates, *options.seed,
                                                options.level, options.threads));
        }
    }

    if (!options.curves.empty()) {
        const auto vertices = roc_vertices(g);
        for (PathConvention c : options.curves) {
            r.curves.push_back(roc_path(vertices, c));
        }
    }
    return r;
}

namespace {

ordered_json rational_to_json(const Rational& q) {
    return {{"value", q.value()}, {"num", q.num}, {"den", q.den}};
}

ordered_json interval_json(const Interval& i) {
    return ordered_json::array({i.lower, i.upper});
}

ordered_json threshold_json(const std::optional<double>& t) {
    if (!t) {
        return nullptr;
    }
    if (std::isinf(*t)) {
        return "+inf";
    }
    return *t;
}

}  // namespace

ordered_json estimate_to_json(const AucEstimate& e) {
    ordered_json j;
    j["convention"] = auc_name(e.convention);
    j["path"] = path_name(e.convention);
    j["value"] = e.value;
    if (e.exact) {
        j["num"] = e.exact->num;
        j["den"] = e.exact->den;
    }
    return j;
}

ordered_json bootstrap_to_json(const BootstrapResult& b, const CiSelection& ci) {
    ordered_json j;
    j["convention"] = auc_name(b.convention);
    j["observed"] = b.observed;
    j["bias"] = b.bias;
    j["se"] = b.se;
    if (ci.normal) {
        j["ci_normal"] = interval_json(b.ci_normal);
    }
    if (ci.percentile) {
        j["ci_percentile"] = interval_json(b.ci_percentile);
    }
    if (ci.bc) {
        j["ci_bc"] = interval_json(b.ci_bc);
    }
    j["level"] = b.level;
    j["replicates"] = b.replicates;
    j["redraws"] = b.redraws;
    j["seed"] = b.seed;
    return j;
}

ordered_json report_to_json(const Report& r) {
    ordered_json j;
    j["n"] = r.n;
    j["n_pos"] = r.n_pos;
    j["n_neg"] = r.n_neg;
    j["pairs"] = {{"gt", r.pairs.gt}, {"eq", r.pairs.eq}, {"lt", r.pairs.lt},
                  {"total", r.pairs.pairs()}};

    ordered_json auc = ordered_json::object();
    for (const AucEstimate& e : r.auc) {
        auc[std::string(auc_name(e.convention))] = estimate_to_json(e);
    }
    j["auc"] = auc;
    j["reversed_strict"] = r.reversed_strict ? estimate_to_json(*r.reversed_strict) : nullptr;

    const Diagnostics& d = r.diagnostics;
    ordered_json warnings = ordered_json::array();
    for (const Warning& w : d.warnings) {
        warnings.push_back({{"code", warning_name(w.code)}, {"message", w.message}});
    }
    j["diagnostics"] = {{"n_distinct", d.n_distinct},
                        {"tie_mass", rational_to_json(d.tie_mass)},
                        {"is_binary", d.is_binary},
                        {"convention_spread", rational_to_json(d.convention_spread)},
                        {"warnings", warnings}};

    if (r.best_split) {
        const BinarySplit& s = *r.best_split;
        j["best_binary_split"] = {{"threshold", s.threshold},
                                  {"tp", s.confusion.tp},
                                  {"fp", s.confusion.fp},
                                  {"tn", s.confusion.tn},
                                  {"fn", s.confusion.fn},
                                  {"auc", estimate_to_json(s.half_ties)}};
    } else {
        j["best_binary_split"] = nullptr;
    }

    ordered_json notes = ordered_json::array();
    for (const Note& n : r.notes) {
        notes.push_back({{"code", n.code}, {"message", n.message}});
    }
    j["notes"] = notes;

    if (r.asymptotic) {
        const AsymptoticResult& a = *r.asymptotic;
        j["asymptotic"] = {{"convention", auc_name(a.convention)},
                           {"auc", a.auc},
                           {"se", a.se},
                           {"ci_lower", a.ci_lower},
                           {"ci_upper", a.ci_upper},
                           {"level", a.level}};
    } else {
        j["asymptotic"] = nullptr;
    }

    if (r.bootstrap.empty()) {
        j["bootstrap"] = nullptr;
    } else {
        ordered_json boot = ordered_json::object();
        for (const BootstrapResult& b : r.bootstrap) {
            boot[std::string(auc_name(b.convention))] = bootstrap_to_json(b, r.ci);
        }
        j["bootstrap"] = boot;
    }

    if (!r.curves.empty()) {
        ordered_json curves = ordered_json::object();
        for (const RocPolyline& pl : r.curves) {
            ordered_json pts = ordered_json::array();
            for (const RocPoint& p : pl.points) {
                pts.push_back({{"fpr", p.fpr}, {"tpr", p.tpr}, {"threshold", threshold_json(p.threshold)}});
            }
            curves[std::string(path_name(pl.convention))] = pts;
        }
        j["curves"] = curves;
    }
    return j;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "n = " << r.n << " (positives " << r.n_pos << ", negatives " << r.n_neg << ")\n";
    os << "cross-class pairs: " << r.pairs.pairs() << " (greater " << r.pairs.gt << ", tied "
       << r.pairs.eq << ", less " << r.pairs.lt << ")\n\n";

    os << std::left << std::setw(14) << "convention" << std::setw(14) << "path" << std::setw(12)
       << "AUC" << "exact\n";
    for (const AucEstimate& e : r.auc) {
        os << std::setw(14) << auc_name(e.convention) << std::setw(14) << path_name(e.convention)
           << std::setw(12) << fixed(e.value) << *e.exact << '\n';
    }
    if (r.reversed_strict) {
        os << std::setw(28) << "reversed-label strict" << std::setw(12)
           << fixed(r.reversed_strict->value) << *r.reversed_strict->exact << '\n';
    }

    const Diagnostics& d = r.diagnostics;
    os << "\ndistinct scores: " << d.n_distinct << "\ntie mass: " << fixed(d.tie_mass.value())
       << " (" << d.tie_mass << ")\n";
    for (const Warning& w : d.warnings) {
        os << "warning " << warning_name(w.code) << ": " << w.message << '\n';
    }
    for (const Note& n : r.notes) {
        os << "note " << n.code << ": " << n.message << '\n';
    }

    if (r.asymptotic) {
        const AsymptoticResult& a = *r.asymptotic;
        os << "\nasymptotic normal (" << auc_name(a.convention) << "): AUC " << fixed(a.auc, 4)
           << "  se " << fixed(a.se, 4) << "  " << fixed(a.level * 100, 0) << "% CI ["
           << fixed(a.ci_lower, 5) << ", " << fixed(a.ci_upper, 5) << "]\n";
    }
    for (const BootstrapResult& b : r.bootstrap) {
        os << "\nbootstrap (" << auc_name(b.convention) << ", " << b.replicates
           << " replicates, seed " << b.seed << ", " << b.redraws << " redraws)\n";
        os << "  observed " << fixed(b.observed) << "  bias " << fixed(b.bias) << "  se "
           << fixed(b.se) << '\n';
        if (r.ci.normal) {
            os << "  (N)  [" << fixed(b.ci_normal.lower) << ", " << fixed(b.ci_normal.upper) << "]\n";
        }
        if (r.ci.percentile) {
            os << "  (P)  [" << fixed(b.ci_percentile.lower) << ", " << fixed(b.ci_percentile.upper)
               << "]\n";
        }
        if (r.ci.bc) {
            os << "  (BC) [" << fixed(b.ci_bc.lower) << ", " << fixed(b.ci_bc.upper) << "]\n";
        }
    }
    return os.str();
}

}  // namespace tieroc
