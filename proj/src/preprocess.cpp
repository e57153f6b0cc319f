#include "hotelcast/preprocess.hpp"

#include <cmath>
#include <cstddef>

#include "hotelcast/errors.hpp"

namespace hotelcast {

namespace {

// Linear interpolation of positions where keep[i] is false, using the
// nearest kept neighbours; edges take the nearest kept value.
std::vector<double> interpolate_masked(const std::vector<double>& values,
                                       const std::vector<bool>& keep) {
    const std::size_t n = values.size();
    std::vector<double> out = values;

    std::size_t i = 0;
    while (i < n) {
        if (keep[i]) { ++i; continue; }
        std::size_t gap_begin = i;
        while (i < n && !keep[i]) ++i;
        std::size_t gap_end = i; // one past the gap

        bool has_left = gap_begin > 0;
        bool has_right = gap_end < n;
        if (has_left && has_right) {
            double left = out[gap_begin - 1];
            double right = out[gap_end];
            double span = static_cast<double>(gap_end - (gap_begin - 1));
            for (std::size_t k = gap_begin; k < gap_end; ++k) {
                double frac = static_cast<double>(k - (gap_begin - 1)) / span;
                out[k] = left + (right - left) * frac;
            }
        } else if (has_left) {
            for (std::size_t k = gap_begin; k < gap_end; ++k) out[k] = out[gap_begin - 1];
        } else if (has_right) {
            for (std::size_t k = gap_begin; k < gap_end; ++k) out[k] = out[gap_end];
        }
        // neither side kept cannot happen: callers guarantee >= 1 kept value
    }
    return out;
}

} // namespace

KpiSeries impute_missing(const KpiSeries& s) {
    if (s.present_count() < 2)
        throw Error(Errc::UNIMPUTABLE,
                    s.city + "/" + to_string(s.kind) +
                        ": need at least 2 present values to impute");
    if (s.fully_present()) return s;

    const std::size_t n = s.size();
    std::vector<double> values(n, 0.0);
    std::vector<bool> present(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (s.values[i].has_value()) {
            values[i] = *s.values[i];
            present[i] = true;
        }
    }

    std::vector<double> filled = interpolate_masked(values, present);

    KpiSeries out = s;
    for (std::size_t i = 0; i < n; ++i) out.values[i] = filled[i];
    return out;
}

OutlierFilterResult filter_outliers(const KpiSeries& s, double z_threshold) {
    if (!s.fully_present())
        throw Error(Errc::INSUFFICIENT_DATA,
                    s.city + "/" + to_string(s.kind) +
                        ": outlier filter requires an imputed series");
    if (!(z_threshold > 0.0))
        throw Error(Errc::CONFIG_ERROR, "z_threshold must be positive");

    std::vector<double> values = s.dense();
    const std::size_t n = values.size();

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    double sd = std::sqrt(var);

    OutlierFilterResult result;
    result.series = s;
    result.flags.assign(n, false);
    if (sd == 0.0) return result; // constant series: nothing to flag

    std::vector<bool> keep(n, true);
    std::size_t flagged = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs((values[i] - mean) / sd) > z_threshold) {
            result.flags[i] = true;
            keep[i] = false;
            ++flagged;
        }
    }
    if (flagged == 0) return result;
    if (flagged == n) {
        // every value beyond threshold: nothing left to interpolate from
        result.flags.assign(n, false);
        return result;
    }

    std::vector<double> repaired = interpolate_masked(values, keep);
    for (std::size_t i = 0; i < n; ++i) result.series.values[i] = repaired[i];
    return result;
}

} // namespace hotelcast
