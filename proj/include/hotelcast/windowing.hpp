#ifndef HOTELCAST_WINDOWING_HPP
#define HOTELCAST_WINDOWING_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hotelcast/series.hpp"

namespace hotelcast {

/**
 * Chronological train/test split: train = first floor(n * train_fraction)
 * months, test = remainder. No shuffling; concatenation reproduces s.
 * Throws Error(SPLIT_EMPTY) if either side would be empty.
 */
std::pair<KpiSeries, KpiSeries> chronological_split(const KpiSeries& s,
                                                    double train_fraction);

/**
 * Supervised one-step-ahead framing: sample i pairs the window
 * values[i, i+lookback) with target values[i+lookback].
 */
struct WindowedSamples {
    std::size_t lookback = 0;
    std::vector<std::vector<double>> inputs;
    std::vector<double> targets;

    std::size_t size() const { return targets.size(); }
};

/// Throws Error(INSUFFICIENT_HISTORY) when values.size() <= lookback.
WindowedSamples make_windows(const std::vector<double>& values, std::size_t lookback);

} // namespace hotelcast

#endif // HOTELCAST_WINDOWING_HPP
