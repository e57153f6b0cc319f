#include "hotelcast/scaler.hpp"

#include <algorithm>
#include <cmath>

#include "hotelcast/errors.hpp"

namespace hotelcast {

const char* to_string(ScalingMethod m) {
    return m == ScalingMethod::MINMAX ? "minmax" : "zscore";
}

ScalingMethod parse_scaling_method(const std::string& text) {
    if (text == "minmax" || text == "MINMAX") return ScalingMethod::MINMAX;
    if (text == "zscore" || text == "ZSCORE") return ScalingMethod::ZSCORE;
    throw Error(Errc::PARSE_ERROR, "unknown scaling method '" + text + "'");
}

ScalerParams fit_scaler(const std::vector<double>& values, ScalingMethod method) {
    if (values.empty())
        throw Error(Errc::EMPTY_INPUT, "cannot fit a scaler on an empty sequence");

    ScalerParams p;
    p.method = method;
    if (method == ScalingMethod::MINMAX) {
        auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        p.a = *lo;
        p.b = *hi;
        if (!(p.b > p.a))
            throw Error(Errc::DEGENERATE_SCALE, "min-max fit on a constant sequence");
    } else {
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        var /= static_cast<double>(values.size());
        p.a = mean;
        p.b = std::sqrt(var);
        if (!(p.b > 0.0))
            throw Error(Errc::DEGENERATE_SCALE, "z-score fit on a constant sequence");
    }
    return p;
}

std::vector<double> apply_scaler(const std::vector<double>& values, const ScalerParams& p) {
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(p.apply_one(v));
    return out;
}

std::vector<double> invert_scaler(const std::vector<double>& values, const ScalerParams& p) {
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(p.invert_one(v));
    return out;
}

} // namespace hotelcast
