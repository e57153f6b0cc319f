// hotelcast command-line interface: synthetic data generation, the full
// forecasting pipeline, hyperparameter search, gradient verification,
// and report re-rendering.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hotelcast/csv.hpp"
#include "hotelcast/errors.hpp"
#include "hotelcast/forecast.hpp"
#include "hotelcast/gradcheck.hpp"
#include "hotelcast/hpo.hpp"
#include "hotelcast/report.hpp"
#include "hotelcast/runconfig.hpp"
#include "hotelcast/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hotelcast;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1; // operational failures (series, trials, gradcheck)
constexpr int kExitUsage = 2;   // bad input, config, or IO

struct GlobalOptions {
    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    bool quiet = false;
};

std::string slugify(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        else if (!out.empty() && out.back() != '_')
            out += '_';
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out.empty() ? "series" : out;
}

RunConfig load_effective_config(const GlobalOptions& opts) {
    RunConfig config;
    if (!opts.config_path.empty()) config = load_run_config(opts.config_path);
    if (opts.seed) config.pipeline.training.seed = *opts.seed;
    return config;
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(Errc::IO_ERROR, "cannot create output directory " + dir);
}

std::vector<KpiSeries> load_input(const std::string& path, json& manifest_failures) {
    std::vector<KpiSeries> all;
    std::vector<std::string> files;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.path().extension() == ".csv") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(path);
    }
    if (files.empty())
        throw Error(Errc::IO_ERROR, "no .csv files under " + path);

    for (const auto& file : files) {
        try {
            auto series = load_dataset_csv(file);
            all.insert(all.end(), series.begin(), series.end());
        } catch (const Error& e) {
            manifest_failures.push_back({{"file", file}, {"error", e.what()}});
        }
    }
    return all;
}

int cmd_synth(const GlobalOptions& opts, std::size_t months, std::uint64_t seed) {
    ensure_out_dir(opts.out_dir);
    const MonthIndex start{2018, 1};
    for (const CityProfile& profile : default_archetypes(seed)) {
        CityDataset data = generate_city(profile, start, months);
        const std::string path =
            (fs::path(opts.out_dir) / (slugify(profile.name) + ".csv")).string();
        save_dataset_csv(path, data.as_vector());
        if (!opts.quiet)
            std::cout << "wrote " << path << " (" << months << " months x 3 KPIs)\n";
    }
    return kExitOk;
}

// Train-internal holdout MAPE in original units; the test split never
// enters this objective.
double hpo_objective(const KpiSeries& cleaned, const RunConfig& config,
                     const TrialParams& params) {
    auto [train_series, test_series] =
        chronological_split(cleaned, config.pipeline.train_fraction);
    (void)test_series;

    const std::vector<double> train_values = train_series.dense();
    ScalerParams scaler = fit_scaler(train_values, config.pipeline.scaling);
    const std::vector<double> scaled = apply_scaler(train_values, scaler);

    WindowedSamples samples = make_windows(scaled, params.lookback);
    TrainingConfig tc = config.pipeline.training;
    tc.lookback = params.lookback;
    tc.hidden_size = params.hidden_size;
    tc.learning_rate = params.learning_rate;
    tc.epochs = params.epochs;

    const std::size_t n = samples.size();
    std::size_t n_val =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * tc.val_fraction));
    if (n_val == 0) n_val = std::max<std::size_t>(1, n / 10);
    if (n_val >= n)
        throw Error(Errc::INSUFFICIENT_DATA, "not enough samples for a holdout");

    TrainResult trained = train(samples, tc);

    std::vector<double> actual, predicted;
    for (std::size_t i = n - n_val; i < n; ++i) {
        actual.push_back(train_values[i + params.lookback]);
        predicted.push_back(
            scaler.invert_one(predict(samples.inputs[i], trained.model.weights)));
    }
    return mape(actual, predicted);
}

int cmd_hpo(const GlobalOptions& opts, const std::string& input,
            const std::string& city, const std::string& kpi,
            const std::string& method, std::size_t budget, std::uint64_t seed) {
    RunConfig config = load_effective_config(opts);
    if (!method.empty()) config.hpo_method = method;
    if (budget > 0) config.hpo_budget = budget;
    ensure_out_dir(opts.out_dir);

    json ingestion_failures = json::array();
    std::vector<KpiSeries> all = load_input(input, ingestion_failures);
    if (!ingestion_failures.empty())
        throw Error(Errc::PARSE_ERROR, ingestion_failures[0]["error"].get<std::string>());

    const KpiKind kind = parse_kpi(kpi);
    const KpiSeries* target = nullptr;
    for (const auto& s : all)
        if (s.city == city && s.kind == kind) target = &s;
    if (!target)
        throw Error(Errc::CONFIG_ERROR, "no series for " + city + "/" + kpi + " in " + input);

    KpiSeries cleaned =
        filter_outliers(impute_missing(*target), config.pipeline.z_threshold).series;

    Objective objective = [&](const TrialParams& p) {
        return hpo_objective(cleaned, config, p);
    };

    SearchResult result = config.hpo_method == "grid"
                              ? grid_search(config.hpo_space, objective)
                              : bayesian_search(config.hpo_space, config.hpo_budget,
                                                seed, objective);

    const std::string trials_path =
        (fs::path(opts.out_dir) / ("hpo_trials_" + slugify(city) + "_" +
                                   slugify(kpi) + ".csv")).string();
    {
        std::ofstream out(trials_path);
        if (!out) throw Error(Errc::IO_ERROR, "cannot write " + trials_path);
        out << "index,lookback,hidden_size,learning_rate,epochs,score,status\n";
        for (const Trial& t : result.trials) {
            out << t.index << ',' << t.params.lookback << ',' << t.params.hidden_size
                << ',' << csv::format_double(t.params.learning_rate) << ','
                << t.params.epochs << ',';
            if (t.failed)
                out << ",failed";
            else
                out << csv::format_double(t.score) << ",ok";
            out << '\n';
        }
    }

    RunConfig best_config = config;
    best_config.pipeline.training.lookback = result.best.params.lookback;
    best_config.pipeline.training.hidden_size = result.best.params.hidden_size;
    best_config.pipeline.training.learning_rate = result.best.params.learning_rate;
    best_config.pipeline.training.epochs = result.best.params.epochs;
    const std::string best_path = (fs::path(opts.out_dir) / "best_config.json").string();
    save_run_config(best_path, best_config);

    if (!opts.quiet) {
        std::cout << "method " << config.hpo_method << ", " << result.trials.size()
                  << " trials\n";
        std::cout << "best: trial " << result.best.index << " score "
                  << result.best.score << " (lookback " << result.best.params.lookback
                  << ", hidden " << result.best.params.hidden_size << ", lr "
                  << result.best.params.learning_rate << ", epochs "
                  << result.best.params.epochs << ")\n";
        std::cout << "wrote " << trials_path << " and " << best_path << "\n";
    }
    return kExitOk;
}

int cmd_run(const GlobalOptions& opts, const std::string& input, bool use_synth,
            std::size_t synth_months, std::uint64_t synth_seed) {
    RunConfig config = load_effective_config(opts);
    ensure_out_dir(opts.out_dir);

    json manifest;
    manifest["command"] = "run";
    manifest["config"] = json::parse(run_config_to_json(config));
    manifest["seed"] = config.pipeline.training.seed;
    manifest["series"] = json::array();
    json ingestion_failures = json::array();

    std::vector<KpiSeries> all;
    if (use_synth) {
        for (const CityProfile& profile : default_archetypes(synth_seed)) {
            CityDataset data = generate_city(profile, MonthIndex{2018, 1}, synth_months);
            auto v = data.as_vector();
            all.insert(all.end(), v.begin(), v.end());
        }
        manifest["input"] = "synthetic";
    } else {
        all = load_input(input, ingestion_failures);
        manifest["input"] = input;
    }
    manifest["ingestion_failures"] = ingestion_failures;

    std::size_t failures = ingestion_failures.size();
    std::vector<SeriesEval> evals;

    for (const KpiSeries& series : all) {
        json entry;
        entry["city"] = series.city;
        entry["kpi"] = to_string(series.kind);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ForecastResult result = run_pipeline(series, config.pipeline);
            const std::string path =
                (fs::path(opts.out_dir) / (slugify(series.city) + "_" +
                                           slugify(to_string(series.kind)) +
                                           "_forecast.csv")).string();
            save_forecast_csv(path, result, series);

            SeriesEval eval;
            eval.city = series.city;
            eval.kind = series.kind;
            eval.actual = result.rolling_actuals;
            for (const auto& [month, value] : result.rolling)
                eval.forecast.push_back(value);
            evals.push_back(std::move(eval));

            entry["status"] = "ok";
            entry["output"] = path;
            entry["warnings"] = result.warnings;
        } catch (const Error& e) {
            entry["status"] = "failed";
            entry["error"] = e.what();
            ++failures;
        }
        const auto t1 = std::chrono::steady_clock::now();
        entry["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        manifest["series"].push_back(entry);
        if (!opts.quiet)
            std::cout << series.city << "/" << to_string(series.kind) << ": "
                      << entry["status"].get<std::string>() << "\n";
    }

    if (!evals.empty()) {
        EvalReport report = build_report(evals);
        save_report_csv((fs::path(opts.out_dir) / "eval_report.csv").string(), report);
        const std::string table = render_report_table(report);
        std::ofstream table_out(fs::path(opts.out_dir) / "eval_report.txt");
        table_out << table;
        if (!opts.quiet) std::cout << "\n" << table;
    }

    manifest["failed_series"] = failures;
    std::ofstream mf(fs::path(opts.out_dir) / "manifest.json");
    if (!mf) throw Error(Errc::IO_ERROR, "cannot write manifest");
    mf << manifest.dump(2) << "\n";

    return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_gradcheck(const GlobalOptions& opts, std::size_t models, std::uint64_t seed,
                  bool corrupt) {
    GradCheckReport report = run_gradient_suite(models, seed, 1e-5, corrupt);
    std::printf("max relative error %.3e over %zu models (%zu parameters)\n",
                report.max_rel_error, report.models_checked, report.params_checked);
    (void)opts;
    return report.max_rel_error < 1e-4 ? kExitOk : kExitFailure;
}

int cmd_report(const GlobalOptions& opts, const std::string& input) {
    EvalReport report = load_report_csv(input);
    (void)opts;
    std::cout << render_report_table(report);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hotel KPI forecasting engine"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--config", opts.config_path, "JSON run configuration file");
    app.add_option("--out", opts.out_dir, "output directory (default: out)");
    std::uint64_t seed_flag = 0;
    auto* seed_opt = app.add_option("--seed", seed_flag, "override the training seed");
    app.add_flag("--quiet", opts.quiet, "suppress progress output");

    auto* synth = app.add_subcommand("synth", "write the five default synthetic city datasets");
    std::size_t synth_months = 85;
    std::uint64_t synth_seed = 7;
    synth->add_option("--months", synth_months, "months per series (default 85)");
    synth->add_option("--synth-seed", synth_seed, "generator seed (default 7)");

    auto* run = app.add_subcommand("run", "run the full pipeline over a dataset");
    std::string run_input;
    bool run_synth = false;
    run->add_option("--input", run_input, "dataset CSV file or directory");
    run->add_flag("--synth", run_synth, "use the in-memory default synthetic dataset");

    auto* hpo = app.add_subcommand("hpo", "hyperparameter search for one (city, kpi)");
    std::string hpo_input, hpo_city, hpo_kpi = "OCC", hpo_method;
    std::size_t hpo_budget = 0;
    hpo->add_option("--input", hpo_input, "dataset CSV file or directory")->required();
    hpo->add_option("--city", hpo_city, "city name")->required();
    hpo->add_option("--kpi", hpo_kpi, "OCC | ADR | REVPAR");
    hpo->add_option("--method", hpo_method, "grid | bayes");
    hpo->add_option("--budget", hpo_budget, "bayes trial budget");

    auto* gradcheck = app.add_subcommand("gradcheck",
                                         "finite-difference check of the BPTT gradients");
    std::size_t gc_models = 20;
    bool gc_corrupt = false;
    gradcheck->add_option("--models", gc_models, "random models to check (default 20)");
    gradcheck->add_flag("--corrupt", gc_corrupt)->group(""); // negative-control hook

    auto* report = app.add_subcommand("report", "re-render a saved evaluation report");
    std::string report_input;
    report->add_option("--input", report_input, "eval report CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    if (seed_opt->count() > 0) opts.seed = seed_flag;

    try {
        if (synth->parsed()) {
            if (opts.seed) synth_seed = *opts.seed;
            return cmd_synth(opts, synth_months, synth_seed);
        }
        if (run->parsed()) {
            if (run_input.empty() && !run_synth)
                throw Error(Errc::CONFIG_ERROR, "run needs --input or --synth");
            std::uint64_t gen_seed = opts.seed.value_or(7);
            return cmd_run(opts, run_input, run_synth, 85, gen_seed);
        }
        if (hpo->parsed())
            return cmd_hpo(opts, hpo_input, hpo_city, hpo_kpi, hpo_method, hpo_budget,
                           opts.seed.value_or(1));
        if (gradcheck->parsed())
            return cmd_gradcheck(opts, gc_models, opts.seed.value_or(42), gc_corrupt);
        if (report->parsed()) return cmd_report(opts, report_input);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::NO_VALID_TRIAL:
                return kExitFailure;
            default:
                return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
