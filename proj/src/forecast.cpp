#include "hotelcast/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "hotelcast/csv.hpp"
#include "hotelcast/errors.hpp"
#include "hotelcast/preprocess.hpp"

namespace hotelcast {

namespace {

// Rethrows stage failures with a label so pipeline callers can tell
// which step rejected the series.
template <typename F>
auto stage(const char* label, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.code(), std::string(label) + ": " + e.what());
    }
}

void check_unit_range(const ForecastResult& result, KpiKind kind,
                      const std::vector<double>& values, const char* which,
                      std::vector<std::string>& warnings) {
    for (double v : values) {
        bool bad = kind == KpiKind::OCC ? (v <= 0.0 || v > 100.0) : (v <= 0.0);
        if (bad) {
            warnings.push_back(std::string(which) + " prediction " +
                               csv::format_double(v) + " outside the valid " +
                               to_string(kind) + " range for " + result.city);
            return; // one warning per prediction kind is enough
        }
    }
}

} // namespace

std::vector<double> rolling_forecast(const LstmModel& model,
                                     const std::vector<double>& scaled_full,
                                     std::size_t test_begin,
                                     const ScalerParams& scaler) {
    const std::size_t L = model.config.lookback;
    if (test_begin < L)
        throw Error(Errc::INSUFFICIENT_HISTORY,
                    "first test month has only " + std::to_string(test_begin) +
                        " preceding observations, lookback is " + std::to_string(L));
    if (test_begin >= scaled_full.size())
        throw Error(Errc::INSUFFICIENT_DATA, "test range is empty");

    std::vector<double> out;
    out.reserve(scaled_full.size() - test_begin);
    std::vector<double> window(L);
    for (std::size_t t = test_begin; t < scaled_full.size(); ++t) {
        std::copy(scaled_full.begin() + static_cast<long>(t - L),
                  scaled_full.begin() + static_cast<long>(t), window.begin());
        out.push_back(scaler.invert_one(predict(window, model.weights)));
    }
    return out;
}

std::vector<double> multi_step_forecast(const LstmModel& model,
                                        const std::vector<double>& scaled_series,
                                        std::size_t horizon,
                                        const ScalerParams& scaler) {
    if (horizon < 1)
        throw Error(Errc::INVALID_HORIZON, "horizon must be >= 1");
    const std::size_t L = model.config.lookback;
    if (scaled_series.size() < L)
        throw Error(Errc::INSUFFICIENT_HISTORY,
                    "series shorter than lookback " + std::to_string(L));

    std::vector<double> window(scaled_series.end() - static_cast<long>(L),
                               scaled_series.end());
    std::vector<double> out;
    out.reserve(horizon);
    for (std::size_t step = 0; step < horizon; ++step) {
        double next = predict(window, model.weights);
        out.push_back(scaler.invert_one(next));
        window.erase(window.begin());
        window.push_back(next);
    }
    return out;
}

std::vector<double> fitted_values(const LstmModel& model,
                                  const WindowedSamples& samples,
                                  const ScalerParams& scaler) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        out.push_back(scaler.invert_one(predict(samples.inputs[i], model.weights)));
    return out;
}

ForecastResult run_pipeline(const KpiSeries& series, const PipelineConfig& config) {
    config.training.validate();
    const std::size_t L = config.training.lookback;

    ForecastResult result;
    result.city = series.city;
    result.kind = series.kind;
    result.config = config;

    KpiSeries imputed = stage("impute", [&] { return impute_missing(series); });
    KpiSeries cleaned =
        stage("outlier-filter", [&] { return filter_outliers(imputed, config.z_threshold); })
            .series;

    auto [train_series, test_series] = stage("split/window", [&] {
        auto parts = chronological_split(cleaned, config.train_fraction);
        if (parts.first.size() <= L)
            throw Error(Errc::INSUFFICIENT_DATA,
                        "training split of " + std::to_string(parts.first.size()) +
                            " months cannot produce windows at lookback " +
                            std::to_string(L));
        return parts;
    });

    const std::vector<double> train_values = train_series.dense();
    const std::vector<double> full_values = cleaned.dense();

    result.scaler =
        stage("scale", [&] { return fit_scaler(train_values, config.scaling); });
    const std::vector<double> scaled_full = apply_scaler(full_values, result.scaler);
    const std::vector<double> scaled_train(scaled_full.begin(),
                                           scaled_full.begin() +
                                               static_cast<long>(train_values.size()));

    WindowedSamples samples =
        stage("split/window", [&] { return make_windows(scaled_train, L); });

    TrainResult trained = stage("train", [&] { return train(samples, config.training); });
    LstmModel model = trained.model;

    // in-sample fitted values, aligned to their target months
    const std::vector<double> fitted = fitted_values(model, samples, result.scaler);
    for (std::size_t i = 0; i < fitted.size(); ++i)
        result.fitted.emplace_back(cleaned.month_at(L + i), fitted[i]);

    // walk-forward over the test suffix
    const std::size_t test_begin = train_values.size();
    std::vector<double> rolling;
    if (config.retrain_every == 0) {
        rolling = stage("rolling", [&] {
            return rolling_forecast(model, scaled_full, test_begin, result.scaler);
        });
    } else {
        // periodic refit on all observations preceding the forecast origin
        rolling = stage("rolling", [&] {
            std::vector<double> out;
            LstmModel current = model;
            for (std::size_t t = test_begin; t < scaled_full.size(); ++t) {
                std::size_t into_test = t - test_begin;
                if (into_test > 0 && into_test % config.retrain_every == 0) {
                    std::vector<double> history(scaled_full.begin(),
                                                scaled_full.begin() + static_cast<long>(t));
                    current.weights =
                        train(make_windows(history, L), config.training).model.weights;
                }
                std::vector<double> window(scaled_full.begin() + static_cast<long>(t - L),
                                           scaled_full.begin() + static_cast<long>(t));
                out.push_back(result.scaler.invert_one(predict(window, current.weights)));
            }
            return out;
        });
    }
    for (std::size_t i = 0; i < rolling.size(); ++i)
        result.rolling.emplace_back(test_series.month_at(i), rolling[i]);
    result.rolling_actuals = test_series.dense();

    result.future_start = cleaned.last_month() + 1;
    for (std::size_t h : config.horizons) {
        if (h != 3 && h != 6 && h != 12)
            result.warnings.push_back("non-standard horizon " + std::to_string(h));
        result.future[h] = stage("multi-step", [&] {
            return multi_step_forecast(model, scaled_full, h, result.scaler);
        });
    }

    check_unit_range(result, series.kind, rolling, "rolling", result.warnings);
    check_unit_range(result, series.kind, fitted, "fitted", result.warnings);
    for (const auto& [h, path] : result.future)
        check_unit_range(result, series.kind, path, "multi-step", result.warnings);

    return result;
}

void write_forecast_csv(std::ostream& out, const ForecastResult& result,
                        const KpiSeries& observed) {
    out << "month,kind,value\n";
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!observed.values[i]) continue;
        out << to_string(observed.month_at(i)) << ",actual,"
            << csv::format_double(*observed.values[i]) << "\n";
    }
    for (const auto& [month, value] : result.fitted)
        out << to_string(month) << ",fitted," << csv::format_double(value) << "\n";
    for (const auto& [month, value] : result.rolling)
        out << to_string(month) << ",rolling," << csv::format_double(value) << "\n";
    for (const auto& [h, path] : result.future) {
        for (std::size_t i = 0; i < path.size(); ++i)
            out << to_string(result.future_start + static_cast<int>(i)) << ",future"
                << h << "," << csv::format_double(path[i]) << "\n";
    }
}

void save_forecast_csv(const std::string& path, const ForecastResult& result,
                       const KpiSeries& observed) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::IO_ERROR, "cannot write " + path);
    write_forecast_csv(out, result, observed);
    out.flush();
    if (!out) throw Error(Errc::IO_ERROR, "write failed for " + path);
}

} // namespace hotelcast
