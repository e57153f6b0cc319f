#ifndef HOTELCAST_FORECAST_HPP
#define HOTELCAST_FORECAST_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hotelcast/lstm.hpp"
#include "hotelcast/scaler.hpp"
#include "hotelcast/series.hpp"
#include "hotelcast/train.hpp"

namespace hotelcast {

/// Per-series pipeline settings on top of the training configuration.
struct PipelineConfig {
    ScalingMethod scaling = ScalingMethod::MINMAX;
    double z_threshold = 3.0;
    double train_fraction = 0.8;
    TrainingConfig training;
    std::vector<std::size_t> horizons = {3, 6, 12};
    std::size_t retrain_every = 0; // 0 = walk-forward with actuals, no retraining
};

/**
 * Everything the pipeline produces for one series, in original units:
 * in-sample fitted values, rolling one-step test predictions, and
 * recursive multi-step paths per horizon.
 */
struct ForecastResult {
    std::string city;
    KpiKind kind = KpiKind::OCC;

    std::vector<std::pair<MonthIndex, double>> fitted;
    std::vector<std::pair<MonthIndex, double>> rolling;
    std::vector<double> rolling_actuals; // test-month observations, for scoring
    std::map<std::size_t, std::vector<double>> future; // horizon -> path
    MonthIndex future_start; // first month after the last observation

    ScalerParams scaler;
    PipelineConfig config;
    std::vector<std::string> warnings; // out-of-range predictions, non-standard horizons
};

/**
 * Walk-forward one-step predictions over the test suffix: the window for
 * test month t is the lookback actual (scaled) observations preceding t.
 * Output is inverse-scaled, one prediction per test month.
 * Throws Error(INSUFFICIENT_HISTORY) if any window would start before
 * the series does.
 */
std::vector<double> rolling_forecast(const LstmModel& model,
                                     const std::vector<double>& scaled_full,
                                     std::size_t test_begin,
                                     const ScalerParams& scaler);

/**
 * Recursive multi-step path: the window starts as the last lookback
 * scaled observations; each prediction is appended and the window
 * slides. Returns exactly `horizon` inverse-scaled values.
 * Throws Error(INVALID_HORIZON) when horizon < 1 and
 * Error(INSUFFICIENT_HISTORY) when the series is shorter than lookback.
 */
std::vector<double> multi_step_forecast(const LstmModel& model,
                                        const std::vector<double>& scaled_series,
                                        std::size_t horizon,
                                        const ScalerParams& scaler);

/// One-step in-sample prediction per training sample, inverse-scaled.
/// Fitted value i corresponds to the month of target i.
std::vector<double> fitted_values(const LstmModel& model,
                                  const WindowedSamples& samples,
                                  const ScalerParams& scaler);

/**
 * Full per-series pipeline:
 *   impute -> filter outliers -> split -> fit scaler on train ->
 *   train -> fitted + rolling + multi-step futures.
 * Stage failures are rethrown with a stage label prefix.
 */
ForecastResult run_pipeline(const KpiSeries& series, const PipelineConfig& config);

/// Plot-data serialization: month,kind,value with kind in
/// {actual, fitted, rolling, future3, future6, future12}.
void write_forecast_csv(std::ostream& out, const ForecastResult& result,
                        const KpiSeries& observed);
void save_forecast_csv(const std::string& path, const ForecastResult& result,
                       const KpiSeries& observed);

} // namespace hotelcast

#endif // HOTELCAST_FORECAST_HPP
