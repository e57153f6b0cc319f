#include "hotelcast/decompose.hpp"

#include <cstddef>

#include "hotelcast/errors.hpp"

namespace hotelcast {

Decomposition decompose(const KpiSeries& s) {
    if (!s.fully_present())
        throw Error(Errc::INSUFFICIENT_DATA,
                    s.city + "/" + to_string(s.kind) +
                        ": decomposition requires an imputed series");
    const std::vector<double> y = s.dense();
    const std::size_t n = y.size();
    if (n < 24)
        throw Error(Errc::SERIES_TOO_SHORT,
                    "decomposition needs >= 24 months, got " + std::to_string(n));

    Decomposition d;
    d.trend.assign(n, std::nullopt);
    d.residual.assign(n, std::nullopt);

    // 2x12 centered moving average: half weight on the two endpoints.
    for (std::size_t t = 6; t + 6 < n; ++t) {
        double acc = 0.5 * y[t - 6] + 0.5 * y[t + 6];
        for (std::size_t k = t - 5; k <= t + 5; ++k) acc += y[k];
        d.trend[t] = acc / 12.0;
    }

    // Per-calendar-month mean of the detrended values.
    std::array<double, 12> sums{};
    std::array<std::size_t, 12> counts{};
    for (std::size_t t = 0; t < n; ++t) {
        if (!d.trend[t]) continue;
        std::size_t m = static_cast<std::size_t>(s.month_at(t).month - 1);
        sums[m] += y[t] - *d.trend[t];
        counts[m] += 1;
    }
    for (std::size_t m = 0; m < 12; ++m)
        d.seasonal[m] = counts[m] ? sums[m] / static_cast<double>(counts[m]) : 0.0;

    double season_mean = 0.0;
    for (double v : d.seasonal) season_mean += v;
    season_mean /= 12.0;
    for (double& v : d.seasonal) v -= season_mean;

    // residual = value - (trend + seasonal); summing the three components
    // in that association reconstructs the value.
    for (std::size_t t = 0; t < n; ++t) {
        if (!d.trend[t]) continue;
        std::size_t m = static_cast<std::size_t>(s.month_at(t).month - 1);
        d.residual[t] = y[t] - (*d.trend[t] + d.seasonal[m]);
    }
    return d;
}

} // namespace hotelcast
