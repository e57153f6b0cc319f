#ifndef HOTELCAST_DECOMPOSE_HPP
#define HOTELCAST_DECOMPOSE_HPP

#include <array>
#include <optional>
#include <vector>

#include "hotelcast/series.hpp"

namespace hotelcast {

/**
 * Classical additive decomposition with period 12.
 *
 * trend    centered 12-month moving average (2x12 MA); missing at the
 *          first 6 and last 6 positions
 * seasonal per-calendar-month mean of (value - trend), recentered so the
 *          12 components sum to 0; seasonal[0] is January
 * residual value - trend - seasonal wherever trend is present
 */
struct Decomposition {
    std::vector<std::optional<double>> trend;
    std::array<double, 12> seasonal{};
    std::vector<std::optional<double>> residual;
};

/// Requires a fully imputed series of length >= 24 (two seasonal periods);
/// throws Error(SERIES_TOO_SHORT) otherwise.
Decomposition decompose(const KpiSeries& s);

} // namespace hotelcast

#endif // HOTELCAST_DECOMPOSE_HPP
