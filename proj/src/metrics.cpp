#include "hotelcast/metrics.hpp"

#include <cmath>

#include "hotelcast/errors.hpp"

namespace hotelcast {

namespace {

void check_shapes(const std::vector<double>& actual, const std::vector<double>& forecast) {
    if (actual.size() != forecast.size())
        throw Error(Errc::SHAPE_ERROR,
                    "length mismatch: " + std::to_string(actual.size()) + " vs " +
                        std::to_string(forecast.size()));
    if (actual.empty())
        throw Error(Errc::EMPTY_INPUT, "metrics need at least one value");
}

} // namespace

double mse(const std::vector<double>& actual, const std::vector<double>& forecast) {
    check_shapes(actual, forecast);
    double acc = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        double e = actual[i] - forecast[i];
        acc += e * e;
    }
    return acc / static_cast<double>(actual.size());
}

double mae(const std::vector<double>& actual, const std::vector<double>& forecast) {
    check_shapes(actual, forecast);
    double acc = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i)
        acc += std::abs(actual[i] - forecast[i]);
    return acc / static_cast<double>(actual.size());
}

double mape(const std::vector<double>& actual, const std::vector<double>& forecast) {
    check_shapes(actual, forecast);
    double acc = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (!(actual[i] > 0.0))
            throw Error(Errc::MAPE_UNDEFINED,
                        "actual value " + std::to_string(actual[i]) +
                            " at index " + std::to_string(i) + " is not positive");
        acc += std::abs(actual[i] - forecast[i]) / actual[i];
    }
    return 100.0 * acc / static_cast<double>(actual.size());
}

const char* to_string(AccuracyCategory c) {
    switch (c) {
        case AccuracyCategory::HIGHLY_ACCURATE: return "HIGHLY_ACCURATE";
        case AccuracyCategory::GOOD: return "GOOD";
        case AccuracyCategory::REASONABLE: return "REASONABLE";
        case AccuracyCategory::INACCURATE: return "INACCURATE";
    }
    return "INACCURATE";
}

AccuracyCategory parse_accuracy_category(const std::string& text) {
    if (text == "HIGHLY_ACCURATE") return AccuracyCategory::HIGHLY_ACCURATE;
    if (text == "GOOD") return AccuracyCategory::GOOD;
    if (text == "REASONABLE") return AccuracyCategory::REASONABLE;
    if (text == "INACCURATE") return AccuracyCategory::INACCURATE;
    throw Error(Errc::PARSE_ERROR, "unknown accuracy category '" + text + "'");
}

AccuracyCategory categorize_mape(double mape_percent) {
    if (mape_percent < 0.0 || !std::isfinite(mape_percent))
        throw Error(Errc::INVALID_MAPE,
                    "MAPE must be a non-negative finite percentage");
    if (mape_percent < 10.0) return AccuracyCategory::HIGHLY_ACCURATE;
    if (mape_percent < 20.0) return AccuracyCategory::GOOD;
    if (mape_percent <= 50.0) return AccuracyCategory::REASONABLE;
    return AccuracyCategory::INACCURATE;
}

} // namespace hotelcast
