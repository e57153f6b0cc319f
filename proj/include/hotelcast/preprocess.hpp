#ifndef HOTELCAST_PREPROCESS_HPP
#define HOTELCAST_PREPROCESS_HPP

#include <vector>

#include "hotelcast/series.hpp"

namespace hotelcast {

/**
 * Fills every missing marker: interior gaps by linear interpolation
 * between the nearest present neighbours, leading/trailing gaps by the
 * nearest present value. Present values are never touched.
 * Throws Error(UNIMPUTABLE) when fewer than 2 values are present.
 */
KpiSeries impute_missing(const KpiSeries& s);

struct OutlierFilterResult {
    KpiSeries series;
    std::vector<bool> flags; // true exactly at replaced positions
};

/**
 * Replaces values whose |z-score| against the series mean/std exceeds
 * z_threshold by linear interpolation of the unflagged neighbours.
 * A constant series (std = 0) is returned unchanged with no flags.
 * Requires a fully imputed series and z_threshold > 0.
 */
OutlierFilterResult filter_outliers(const KpiSeries& s, double z_threshold);

} // namespace hotelcast

#endif // HOTELCAST_PREPROCESS_HPP
