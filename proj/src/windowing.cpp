#include "hotelcast/windowing.hpp"

#include <cmath>

#include "hotelcast/errors.hpp"

namespace hotelcast {

std::pair<KpiSeries, KpiSeries> chronological_split(const KpiSeries& s,
                                                    double train_fraction) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw Error(Errc::CONFIG_ERROR, "train_fraction must lie in (0, 1)");

    const std::size_t n = s.size();
    const std::size_t n_train =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * train_fraction));
    if (n_train < 1 || n_train >= n)
        throw Error(Errc::SPLIT_EMPTY,
                    s.city + "/" + to_string(s.kind) + ": split of " +
                        std::to_string(n) + " months leaves an empty side");

    KpiSeries train = s;
    train.values.assign(s.values.begin(), s.values.begin() + static_cast<long>(n_train));

    KpiSeries test = s;
    test.start = s.start + static_cast<int>(n_train);
    test.values.assign(s.values.begin() + static_cast<long>(n_train), s.values.end());

    return {std::move(train), std::move(test)};
}

WindowedSamples make_windows(const std::vector<double>& values, std::size_t lookback) {
    if (lookback < 1)
        throw Error(Errc::CONFIG_ERROR, "lookback must be >= 1");
    if (values.size() <= lookback)
        throw Error(Errc::INSUFFICIENT_HISTORY,
                    "need more than " + std::to_string(lookback) +
                        " values to window, got " + std::to_string(values.size()));

    WindowedSamples samples;
    samples.lookback = lookback;
    const std::size_t count = values.size() - lookback;
    samples.inputs.reserve(count);
    samples.targets.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        samples.inputs.emplace_back(values.begin() + static_cast<long>(i),
                                    values.begin() + static_cast<long>(i + lookback));
        samples.targets.push_back(values[i + lookback]);
    }
    return samples;
}

} // namespace hotelcast
