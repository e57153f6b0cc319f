#ifndef HOTELCAST_METRICS_HPP
#define HOTELCAST_METRICS_HPP

#include <string>
#include <vector>

namespace hotelcast {

/// Mean squared error. Throws Error(SHAPE_ERROR) on length mismatch,
/// Error(EMPTY_INPUT) on empty vectors.
double mse(const std::vector<double>& actual, const std::vector<double>& forecast);

/// Mean absolute error; same error contract as mse.
double mae(const std::vector<double>& actual, const std::vector<double>& forecast);

/// Mean absolute percentage error: 100 * mean(|a - f| / a).
/// Any actual <= 0 throws Error(MAPE_UNDEFINED) — the KPIs are strictly
/// positive, so a non-positive actual signals data corruption.
double mape(const std::vector<double>& actual, const std::vector<double>& forecast);

/**
 * MAPE accuracy bands:
 *   [0, 10)  HIGHLY_ACCURATE
 *   [10, 20) GOOD
 *   [20, 50] REASONABLE
 *   (50, oo) INACCURATE
 * The source table's ranges overlap at their endpoints; 10 and 20 are
 * assigned to the worse side, 50 stays REASONABLE.
 */
enum class AccuracyCategory { HIGHLY_ACCURATE, GOOD, REASONABLE, INACCURATE };

const char* to_string(AccuracyCategory c);
AccuracyCategory parse_accuracy_category(const std::string& text);

/// Throws Error(INVALID_MAPE) on negative input.
AccuracyCategory categorize_mape(double mape_percent);

struct EvalMetrics {
    double mse = 0.0;
    double mae = 0.0;
    double mape = 0.0;
};

} // namespace hotelcast

#endif // HOTELCAST_METRICS_HPP
