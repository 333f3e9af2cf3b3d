#include "tieroc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tieroc/auc.hpp"
#include "tieroc/csv.hpp"
#include "tieroc/curve_export.hpp"
#include "tieroc/error.hpp"
#include "tieroc/monte_carlo.hpp"
#include "tieroc/report.hpp"
#include "tieroc/roc.hpp"

namespace tieroc::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string input;
    std::string mode = "rows";
    std::string convention = "half_ties";
    std::vector<std::string> paths;
    std::optional<std::int64_t> boot;
    std::optional<std::uint64_t> seed;
    double level = 0.95;
    std::string ci = "all";
    std::string format = "json";
    std::string out;
    bool svg = false;
    std::int64_t draws = 1000000;
    unsigned threads = 1;
    double tie_mass_threshold = 0.1;
    std::size_t discrete_max = 10;
};

void add_input_options(CLI::App& sub, Config& cfg) {
    sub.add_option("--input", cfg.input, "CSV file: score,label rows or value,neg,pos counts")
        ->required()
        ->check(CLI::ExistingFile);
    sub.add_option("--mode", cfg.mode, "Input layout")
        ->check(CLI::IsMember({"rows", "counts"}))
        ->capture_default_str();
}

void add_inference_options(CLI::App& sub, Config& cfg) {
    sub.add_option("--boot", cfg.boot, "Bootstrap replicates (>= 100); requires --seed");
    sub.add_option("--seed", cfg.seed, "Seed for every stochastic step");
    sub.add_option("--level", cfg.level, "Confidence level")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sub.add_option("--ci", cfg.ci, "Bootstrap intervals to print")
        ->check(CLI::IsMember({"normal", "percentile", "bc", "all"}))
        ->capture_default_str();
    sub.add_option("--threads", cfg.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
}

Dataset load(const Config& cfg) {
    return cfg.mode == "counts" ? csv::read_counts_file(cfg.input) : csv::read_rows_file(cfg.input);
}

std::vector<PathConvention> selected_conventions(const std::string& name) {
    if (name == "all") {
        return {kAllConventions.begin(), kAllConventions.end()};
    }
    return {*parse_auc_name(name)};
}

CiSelection ci_selection(const std::string& name) {
    if (name == "all") {
        return {};
    }
    return {name == "normal", name == "percentile", name == "bc"};
}

void require_seed_for_boot(const Config& cfg) {
    if (cfg.boot && !cfg.seed) {
        throw UsageError("--boot requires --seed");
    }
    if (cfg.boot && *cfg.boot < kMinBootstrapReplicates) {
        throw UsageError("--boot must be at least " + std::to_string(kMinBootstrapReplicates));
    }
}

// Writes to --out when given, otherwise to `out`.
void emit(const Config& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        throw IngestError("cannot write " + cfg.out);
    }
    f << text;
}

std::string json_text(const ordered_json& j) {
    return j.dump(2) + "\n";
}

std::string full_precision(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

int run_auc(const Config& cfg, std::ostream& out) {
    require_seed_for_boot(cfg);
    const Dataset d = load(cfg);
    d.require_both_classes();
    const ScoreGroups g = group_by_score(d);
    const PairCounts p = pair_statistics(g);
    const auto conventions = selected_conventions(cfg.convention);

    std::vector<BootstrapResult> boots;
    if (cfg.boot) {
        for (PathConvention c : conventions) {
            boots.push_back(bootstrap_auc(g, c, *cfg.boot, *cfg.seed, cfg.level, cfg.threads));
        }
    }
    const CiSelection ci = ci_selection(cfg.ci);

    if (cfg.format == "json") {
        ordered_json j;
        j["n"] = d.size();
        j["n_pos"] = d.n_pos();
        j["n_neg"] = d.n_neg();
        ordered_json auc = ordered_json::object();
        for (PathConvention c : conventions) {
            auc[std::string(auc_name(c))] = estimate_to_json(auc_for(p, c));
        }
        j["auc"] = auc;
        if (!boots.empty()) {
            ordered_json b = ordered_json::object();
            for (const auto& r : boots) {
                b[std::string(auc_name(r.convention))] = bootstrap_to_json(r, ci);
            }
            j["bootstrap"] = b;
        }
        emit(cfg, out, json_text(j));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "convention,path,value,num,den\n";
        for (PathConvention c : conventions) {
            const AucEstimate e = auc_for(p, c);
            os << auc_name(c) << ',' << path_name(c) << ',' << full_precision(e.value) << ','
               << e.exact->num << ',' << e.exact->den << '\n';
        }
        emit(cfg, out, os.str());
    } else {
        std::ostringstream os;
        os << std::fixed << std::setprecision(7);
        for (PathConvention c : conventions) {
            const AucEstimate e = auc_for(p, c);
            os << std::left << std::setw(12) << auc_name(c) << e.value << "  (" << *e.exact
               << ")\n";
        }
        for (const auto& r : boots) {
            os << "bootstrap " << auc_name(r.convention) << ": se " << r.se << '\n';
        }
        emit(cfg, out, os.str());
    }
    return kExitOk;
}

int run_curve(const Config& cfg, std::ostream& out) {
    const Dataset d = load(cfg);
    d.require_both_classes();
    const auto vertices = roc_vertices(group_by_score(d));
    const std::string path_arg = cfg.paths.empty() ? "linear" : cfg.paths.front();
    const RocPolyline pl = roc_path(vertices, *parse_path_name(path_arg));

    std::ostringstream text;
    if (cfg.format == "json") {
        ordered_json pts = ordered_json::array();
        for (const RocPoint& pt : pl.points) {
            ordered_json t = nullptr;
            if (pt.threshold) {
                t = std::isinf(*pt.threshold) ? ordered_json("+inf") : ordered_json(*pt.threshold);
            }
            pts.push_back({{"fpr", pt.fpr}, {"tpr", pt.tpr}, {"threshold", t}});
        }
        text << json_text({{"path", path_name(pl.convention)},
                           {"convention", auc_name(pl.convention)},
                           {"points", pts}});
    } else {
        write_curve_csv(text, pl);
    }

    if (cfg.svg) {
        std::ostringstream svg;
        write_curve_svg(svg, pl);
        if (cfg.out.empty()) {
            out << svg.str();
            return kExitOk;
        }
        std::filesystem::path svg_path(cfg.out);
        svg_path.replace_extension(".svg");
        std::ofstream f(svg_path, std::ios::binary);
        if (!f) {
            throw IngestError("cannot write " + svg_path.string());
        }
        f << svg.str();
    }
    emit(cfg, out, text.str());
    return kExitOk;
}

int run_report(const Config& cfg, std::ostream& out) {
    require_seed_for_boot(cfg);
    const Dataset d = load(cfg);

    ReportOptions opts;
    opts.policy.high_tie_mass = cfg.tie_mass_threshold;
    opts.policy.discrete_max_distinct = cfg.discrete_max;
    opts.level = cfg.level;
    opts.seed = cfg.seed;
    opts.threads = cfg.threads;
    opts.ci = ci_selection(cfg.ci);
    if (cfg.boot) {
        opts.bootstrap_replicates = *cfg.boot;
        opts.bootstrap_conventions = selected_conventions(cfg.convention);
    }
    for (const auto& p : cfg.paths) {
        opts.curves.push_back(*parse_path_name(p));
    }
    const Report r = build_report(d, opts);
    emit(cfg, out, cfg.format == "text" ? report_to_text(r) : json_text(report_to_json(r)));
    return kExitOk;
}

int run_simulate(const Config& cfg, std::ostream& out) {
    if (!cfg.seed) {
        throw UsageError("simulate requires --seed");
    }
    if (cfg.draws <= 0) {
        throw UsageError("--draws must be positive");
    }
    const Dataset d = load(cfg);
    const MonteCarloResult r = est_auc(d, cfg.draws, *cfg.seed, cfg.threads);
    if (cfg.format == "text") {
        std::ostringstream os;
        os << std::fixed << std::setprecision(6) << "auc.definition  auc.wties\n"
           << r.auc_definition << "        " << r.auc_wties << '\n';
        emit(cfg, out, os.str());
    } else {
        emit(cfg, out,
             json_text({{"auc_definition", {{"convention", "strict"}, {"value", r.auc_definition}}},
                        {"auc_wties", {{"convention", "half_ties"}, {"value", r.auc_wties}}},
                        {"n_draws", r.n_draws},
                        {"seed", r.seed},
                        {"greater", r.greater},
                        {"ties", r.ties}}));
    }
    return kExitOk;
}

void report_error(std::ostream& err, std::string_view code, std::string_view message) {
    err << ordered_json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Tie-aware ROC/AUC analysis", args.empty() ? "tieroc" : args.front()};
    app.require_subcommand(1);

    auto* auc = app.add_subcommand("auc", "AUC under one or all tie conventions");
    add_input_options(*auc, cfg);
    add_inference_options(*auc, cfg);
    auc->add_option("--convention", cfg.convention, "Tie convention")
        ->check(CLI::IsMember({"strict", "half_ties", "optimistic", "all"}))
        ->capture_default_str();
    auc->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    auc->add_option("--out", cfg.out, "Write output here instead of stdout");

    auto* curve = app.add_subcommand("curve", "ROC polyline for one path convention");
    add_input_options(*curve, cfg);
    curve->add_option("--path", cfg.paths, "Path convention (default linear)")
        ->check(CLI::IsMember({"linear", "pessimistic", "optimistic"}))
        ->expected(1);
    curve->add_option("--format", cfg.format, "Output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    curve->add_option("--out", cfg.out, "Curve file; with --svg the SVG goes next to it");
    curve->add_flag("--svg", cfg.svg, "Also render an SVG (to stdout when --out is absent)");

    auto* report = app.add_subcommand("report", "Full convention-disclosure report");
    add_input_options(*report, cfg);
    add_inference_options(*report, cfg);
    report->add_option("--convention", cfg.convention, "Conventions to bootstrap")
        ->check(CLI::IsMember({"strict", "half_ties", "optimistic", "all"}))
        ->capture_default_str();
    report->add_option("--path", cfg.paths, "Include curve geometry (repeatable)")
        ->check(CLI::IsMember({"linear", "pessimistic", "optimistic"}));
    report->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    report->add_option("--out", cfg.out, "Write output here instead of stdout");
    report->add_option("--tie-mass-threshold", cfg.tie_mass_threshold,
                       "HIGH_TIE_MASS when tie mass exceeds this")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    report->add_option("--discrete-max", cfg.discrete_max,
                       "DISCRETE_PREDICTOR when distinct scores are at most this")
        ->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo pair-sampling estimate");
    add_input_options(*simulate, cfg);
    simulate->add_option("--draws", cfg.draws, "Pairs to draw")->capture_default_str();
    simulate->add_option("--seed", cfg.seed, "Seed (required)");
    simulate->add_option("--threads", cfg.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    simulate->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    simulate->add_option("--out", cfg.out, "Write output here instead of stdout");

    try {
        // CLI11 consumes a reversed argument list without the program name.
        std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
        std::reverse(rest.begin(), rest.end());
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (cfg.format == "json" && curve->parsed() && curve->count("--format") == 0) {
        cfg.format = "csv";
    }

    try {
        if (auc->parsed()) {
            return run_auc(cfg, out);
        }
        if (curve->parsed()) {
            return run_curve(cfg, out);
        }
        if (report->parsed()) {
            return run_report(cfg, out);
        }
        return run_simulate(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        report_error(err, e.code(), e.what());
        return kExitDataError;
    }
}

}  // namespace tieroc::cli
