// Command-line front end: classify services from a comparison matrix,
// evaluate access requests, manage authentication history, and run the
// threshold / penalty simulation sweeps to CSV.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trustmodel/ahp.hpp"
#include "trustmodel/catalog.hpp"
#include "trustmodel/decision.hpp"
#include "trustmodel/history.hpp"
#include "trustmodel/matrix_io.hpp"
#include "trustmodel/sweep.hpp"
#include "trustmodel/trust.hpp"

namespace tm_ = trustmodel;
namespace fs = std::filesystem;

namespace {

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct CliConfig {
    std::string catalog_path;
    std::string history_path;
    double lower = 0.3;
    double upper = 0.7;
    int n_max = 5;
    std::string anomaly_mode = "demote";
    tm_::AnomalyConfig anomaly;
};

CliConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("config: cannot read " + path);
    }
    nlohmann::json j;
    in >> j;
    CliConfig cfg;
    cfg.catalog_path = j.value("catalog", cfg.catalog_path);
    cfg.history_path = j.value("history", cfg.history_path);
    cfg.lower = j.value("lower", cfg.lower);
    cfg.upper = j.value("upper", cfg.upper);
    cfg.n_max = j.value("n_max", cfg.n_max);
    if (j.contains("anomaly")) {
        const auto& a = j.at("anomaly");
        cfg.anomaly_mode = a.value("mode", cfg.anomaly_mode);
        cfg.anomaly.recent_window = a.value("recent_window", cfg.anomaly.recent_window);
        cfg.anomaly.min_events = a.value("min_events", cfg.anomaly.min_events);
        cfg.anomaly.good_threshold = a.value("good_threshold", cfg.anomaly.good_threshold);
        cfg.anomaly.drop_delta = a.value("delta", cfg.anomaly.drop_delta);
    }
    return cfg;
}

tm_::AnomalyMode parse_anomaly_mode(const std::string& text) {
    if (text == "off") return tm_::AnomalyMode::Off;
    if (text == "demote") return tm_::AnomalyMode::Demote;
    if (text == "force-low") return tm_::AnomalyMode::ForceLow;
    throw std::invalid_argument("anomaly mode must be off, demote or force-low");
}

std::vector<std::string> read_names_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("names: cannot read " + path);
    }
    std::vector<std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) names.push_back(line);
    }
    return names;
}

tm_::ServiceCatalog load_catalog_or_default(const std::string& path) {
    if (path.empty()) {
        return tm_::default_catalog();
    }
    return tm_::ServiceCatalog::load(path);
}

tm_::HistoryLog load_history_if_any(const std::string& path) {
    if (path.empty() || !fs::exists(path)) {
        return {};
    }
    return tm_::HistoryLog::load_file(path);
}

void print_consistency_report(const tm_::ConsistencyReport& r, std::size_t order) {
    std::cout << "order:       " << order << '\n'
              << "lambda_max:  " << fmt6(r.lambda_max) << '\n'
              << "CI:          " << fmt6(r.ci) << '\n'
              << "RI:          " << fmt6(r.ri) << '\n'
              << "CR:          " << fmt6(r.cr) << '\n'
              << "accepted:    " << (r.accepted ? "yes" : "no") << '\n';
}

int run_classify(const std::string& matrix_path, const std::string& names_path,
                 const std::string& out_path) {
    tm_::MatrixInput input = tm_::load_matrix_file(matrix_path);

    std::vector<std::string> names;
    if (!names_path.empty()) {
        names = read_names_file(names_path);
    } else {
        names = input.names;
    }
    if (names.empty()) {
        for (std::size_t i = 0; i < input.matrix.order(); ++i) {
            names.push_back("service-" + std::to_string(i + 1));
        }
    }

    const tm_::ValidationReport validation = tm_::validate_matrix(input.matrix);
    for (const auto& w : validation.warnings) {
        std::cerr << "warning: " << w.message << '\n';
    }
    if (!validation.ok()) {
        for (const auto& v : validation.violations) {
            std::cerr << "error: " << v.message << '\n';
        }
        return 1;
    }

    try {
        const tm_::ServiceCatalog catalog = tm_::classify(input.matrix, names);
        print_consistency_report(tm_::check_consistency(input.matrix), input.matrix.order());
        catalog.save(out_path);
        std::cout << "catalog written to " << out_path << '\n';
        return 0;
    } catch (const tm_::ConsistencyError& e) {
        print_consistency_report(e.report(), input.matrix.order());
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

void print_decision_text(const tm_::AuthDecision& d, const tm_::CatalogEntry& entry) {
    std::cout << "level:     " << entry.level << " (" << entry.name << ")\n"
              << "S:         " << fmt6(entry.sensitive_value) << '\n'
              << "S_prime:   " << fmt6(d.eval.s_prime) << '\n'
              << "Y:         " << fmt6(d.eval.y) << '\n'
              << "Y_prime:   " << fmt6(d.y_effective) << '\n'
              << "penalty:   P=" << fmt6(d.penalty.p) << " n=" << d.penalty.n_failures
              << " n_max=" << d.penalty.n_max << '\n'
              << "regions:   [0, " << fmt6(d.adjusted.lower_adj) << ") ["
              << fmt6(d.adjusted.lower_adj) << ", " << fmt6(d.adjusted.upper_adj) << ") ["
              << fmt6(d.adjusted.upper_adj) << ", 1]\n"
              << "rank:      " << tm_::to_string(d.rank.rank) << '\n'
              << "method:    " << tm_::to_string(d.rank.required_method) << '\n'
              << "anomaly:   " << (d.anomaly.flagged ? "yes" : "no") << " ("
              << d.anomaly.explanation << ")\n";
    if (d.terminal) {
        std::cout << "terminal:  yes (trial budget spent; biometric only)\n";
    }
}

nlohmann::json decision_json(const tm_::AuthDecision& d, const tm_::CatalogEntry& entry) {
    nlohmann::json j;
    j["level"] = entry.level;
    j["service"] = entry.name;
    j["s"] = entry.sensitive_value;
    j["s_prime"] = d.eval.s_prime;
    j["y_star"] = d.eval.y_star;
    j["calibration"] = d.eval.calibration;
    j["y"] = d.eval.y;
    j["y_prime"] = d.y_effective;
    j["p"] = d.penalty.p;
    j["n_failures"] = d.penalty.n_failures;
    j["n_max"] = d.penalty.n_max;
    j["lower_adj"] = d.adjusted.lower_adj;
    j["upper_adj"] = d.adjusted.upper_adj;
    j["region_rank"] = std::string(tm_::to_string(d.region_rank));
    j["rank"] = std::string(tm_::to_string(d.rank.rank));
    j["method"] = std::string(tm_::to_string(d.rank.required_method));
    j["anomaly"] = {{"flagged", d.anomaly.flagged}, {"explanation", d.anomaly.explanation}};
    j["terminal"] = d.terminal;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    // --config is applied first so explicit flags can override it.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                cfg = load_config(argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 1;
            }
        }
    }

    CLI::App app{"service-sensitivity classification and trust-based authentication decisions"};
    app.require_subcommand(1);
    std::string config_dummy;
    app.add_option("--config", config_dummy, "JSON config file (flags override it)");

    int exit_code = 0;

    // ---- classify ----
    auto* classify = app.add_subcommand(
        "classify", "rank services from a pairwise comparison matrix");
    std::string matrix_path, names_path, catalog_out = cfg.catalog_path;
    classify->add_option("--matrix", matrix_path, "comparison matrix (CSV or .json)")
        ->required();
    classify->add_option("--names", names_path, "service names, one per line");
    classify->add_option("--out", catalog_out, "catalog JSON to write")->required(
        cfg.catalog_path.empty());
    classify->callback(
        [&] { exit_code = run_classify(matrix_path, names_path, catalog_out); });

    // ---- evaluate ----
    auto* evaluate = app.add_subcommand("evaluate", "decide one access request");
    std::string eval_catalog = cfg.catalog_path;
    std::string eval_level;
    std::string eval_history = cfg.history_path;
    std::string eval_user;
    std::string eval_anomaly_mode = cfg.anomaly_mode;
    double eval_lower = cfg.lower, eval_upper = cfg.upper;
    int eval_failures = 0, eval_n_max = cfg.n_max;
    bool eval_json = false;
    evaluate->add_option("--catalog", eval_catalog, "catalog JSON (default: built-in table)");
    evaluate->add_option("--level", eval_level, "service level label")->required();
    evaluate->add_option("--lower", eval_lower, "lower threshold omega");
    evaluate->add_option("--upper", eval_upper, "upper threshold Omega");
    evaluate->add_option("--history", eval_history, "history JSONL file");
    evaluate->add_option("--user", eval_user, "user id for history lookup");
    evaluate->add_option("--failures", eval_failures, "failures already counted");
    evaluate->add_option("--n-max", eval_n_max, "allowed trials");
    evaluate->add_option("--anomaly-mode", eval_anomaly_mode, "off | demote | force-low");
    evaluate->add_flag("--json", eval_json, "structured output");
    evaluate->callback([&] {
        const tm_::ServiceCatalog catalog = load_catalog_or_default(eval_catalog);
        const tm_::HistoryLog log = load_history_if_any(eval_history);
        tm_::DecisionPolicy policy;
        policy.anomaly_mode = parse_anomaly_mode(eval_anomaly_mode);
        policy.anomaly = cfg.anomaly;
        const tm_::AccessRequest request{eval_user, eval_level,
                                         tm_::TrustThresholds(eval_lower, eval_upper),
                                         eval_n_max};
        const tm_::AuthDecision d =
            tm_::evaluate_access(request, catalog, log, eval_failures, policy);
        const tm_::CatalogEntry* entry = catalog.find_level(eval_level);
        if (eval_json) {
            std::cout << decision_json(d, *entry).dump(2) << '\n';
        } else {
            print_decision_text(d, *entry);
        }
    });

    // ---- simulate ----
    auto* simulate = app.add_subcommand("simulate", "run an experiment sweep to CSV");
    simulate->require_subcommand(1);

    std::string sim_catalog = cfg.catalog_path;
    std::string sim_out;
    double sim_lower = 0.3;
    double sim_upper_min = 0.51, sim_upper_max = 1.0, sim_step = 0.01;
    std::vector<double> sim_s = {0.1577, 0.0353, 0.0248};
    double sim_t1 = 0.4, sim_t2 = 0.9;
    int sim_n_max = 5;
    bool sim_no_history = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--catalog", sim_catalog, "catalog JSON (default: built-in table)");
        sub->add_option("--lower", sim_lower, "fixed lower threshold");
        sub->add_option("--upper-min", sim_upper_min, "sweep start (> 0.5)");
        sub->add_option("--upper-max", sim_upper_max, "sweep end (<= 1)");
        sub->add_option("--step", sim_step, "sweep step");
        sub->add_option("--s", sim_s, "sensitive values")->delimiter(',');
        sub->add_option("--out", sim_out, "CSV path (default: stdout)");
    };

    auto write_rows = [&](auto&& rows) {
        if (sim_out.empty()) {
            tm_::write_csv(std::cout, rows);
        } else {
            std::ofstream out(sim_out);
            if (!out) {
                throw std::runtime_error("cannot write " + sim_out);
            }
            tm_::write_csv(out, rows);
        }
    };

    auto* sim_thresholds = simulate->add_subcommand(
        "thresholds", "upper threshold effect on the trust value");
    add_common(sim_thresholds);
    auto* thr_t1 = sim_thresholds->add_option("--t1", sim_t1, "history ratio T1");
    auto* thr_t2 = sim_thresholds->add_option("--t2", sim_t2, "history ratio T2");
    thr_t1->needs(thr_t2);
    thr_t2->needs(thr_t1);
    sim_thresholds->callback([&] {
        tm_::ThresholdSweepParams params;
        params.lower = sim_lower;
        params.upper = {sim_upper_min, sim_upper_max, sim_step};
        params.s_values = sim_s;
        if (thr_t1->count() > 0) {
            params.history = tm_::AuthRatios{sim_t1, sim_t2};
        }
        write_rows(tm_::sweep_thresholds(load_catalog_or_default(sim_catalog), params));
    });

    auto* sim_penalty = simulate->add_subcommand(
        "penalty", "failure decay across the threshold sweep");
    add_common(sim_penalty);
    sim_penalty->add_option("--n-max", sim_n_max, "allowed trials");
    sim_penalty->add_option("--t1", sim_t1, "history ratio T1");
    sim_penalty->add_option("--t2", sim_t2, "history ratio T2");
    sim_penalty->add_flag("--no-history", sim_no_history, "drop the history adjustment");
    sim_penalty->callback([&] {
        tm_::PenaltySweepParams params;
        params.lower = sim_lower;
        params.upper = {sim_upper_min, sim_upper_max, sim_step};
        params.s_values = sim_s;
        params.n_max = sim_n_max;
        params.history = sim_no_history ? std::nullopt
                                        : std::optional(tm_::AuthRatios{sim_t1, sim_t2});
        write_rows(tm_::sweep_penalty(load_catalog_or_default(sim_catalog), params));
    });

    // ---- history ----
    auto* history = app.add_subcommand("history", "inspect or extend the event log");
    history->require_subcommand(1);

    std::string hist_file = cfg.history_path;
    std::string hist_user;

    auto* hist_add = history->add_subcommand("add", "append one event");
    std::string add_level, add_rank, add_method, add_outcome, add_ts;
    hist_add->add_option("--file", hist_file, "history JSONL file")->required(
        cfg.history_path.empty());
    hist_add->add_option("--user", hist_user, "user id")->required();
    hist_add->add_option("--level", add_level, "service level label")->required();
    hist_add->add_option("--rank", add_rank, "High | Medium | Low")->required();
    hist_add->add_option("--method", add_method, "None | PIN | Biometric (default: by rank)");
    hist_add->add_option("--outcome", add_outcome, "Success | Failure")->required();
    hist_add->add_option("--ts", add_ts, "ISO-8601 UTC timestamp (default: now)");
    hist_add->callback([&] {
        tm_::AuthEvent event;
        event.ts = add_ts.empty() ? tm_::utc_now_iso8601() : add_ts;
        event.user = hist_user;
        event.level = add_level;
        event.rank = tm_::rank_from_string(add_rank);
        event.method = add_method.empty() ? tm_::method_for(event.rank)
                                          : tm_::method_from_string(add_method);
        event.outcome = tm_::outcome_from_string(add_outcome);
        tm_::append_event_file(hist_file, event);
    });

    auto* hist_stats = history->add_subcommand("stats", "history ratios for a user");
    std::optional<std::size_t> stats_window;
    hist_stats->add_option("--file", hist_file, "history JSONL file")->required(
        cfg.history_path.empty());
    hist_stats->add_option("--user", hist_user, "user id")->required();
    hist_stats->add_option("--window", stats_window, "restrict to the most recent N events");
    hist_stats->callback([&] {
        if (!fs::exists(hist_file)) {
            std::cout << "no history\n";
            return;
        }
        const tm_::HistoryLog log = tm_::HistoryLog::load_file(hist_file);
        const auto stats = log.stats_for(hist_user, stats_window);
        if (!stats) {
            std::cout << "no history for user '" << hist_user << "'\n";
            return;
        }
        std::cout << "events:        " << stats->total_events << '\n'
                  << "high_rank:     " << stats->high_count << '\n'
                  << "T1:            " << fmt6(stats->t1) << '\n'
                  << "pin_attempts:  " << stats->pin_attempts << '\n'
                  << "T2:            " << (stats->t2 ? fmt6(*stats->t2) : "n/a") << '\n'
                  << "bio_attempts:  " << stats->bio_attempts << '\n'
                  << "T3:            " << (stats->t3 ? fmt6(*stats->t3) : "n/a") << '\n';
    });

    auto* hist_anomaly = history->add_subcommand("anomaly", "good-record-turned-bad check");
    tm_::AnomalyConfig anomaly_cfg = cfg.anomaly;
    hist_anomaly->add_option("--file", hist_file, "history JSONL file")->required(
        cfg.history_path.empty());
    hist_anomaly->add_option("--user", hist_user, "user id")->required();
    hist_anomaly->add_option("--recent-window", anomaly_cfg.recent_window,
                             "PIN events in the recent window");
    hist_anomaly->add_option("--min-events", anomaly_cfg.min_events,
                             "minimum PIN events per window");
    hist_anomaly->add_option("--good-threshold", anomaly_cfg.good_threshold,
                             "older-window T2 counting as good");
    hist_anomaly->add_option("--delta", anomaly_cfg.drop_delta, "flagging drop");
    hist_anomaly->callback([&] {
        const tm_::HistoryLog log = load_history_if_any(hist_file);
        const tm_::AnomalyReport report = log.detect_anomaly(hist_user, anomaly_cfg);
        std::cout << "flagged:  " << (report.flagged ? "yes" : "no") << '\n'
                  << "detail:   " << report.explanation << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const tm_::ConsistencyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
