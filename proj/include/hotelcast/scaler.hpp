#ifndef HOTELCAST_SCALER_HPP
#define HOTELCAST_SCALER_HPP

#include <string>
#include <vector>

namespace hotelcast {

enum class ScalingMethod { MINMAX, ZSCORE };

const char* to_string(ScalingMethod m);
ScalingMethod parse_scaling_method(const std::string& text);

/**
 * Fitted normalization parameters with an exact algebraic inverse.
 * MINMAX: a = min, b = max, maps x -> (x - a) / (b - a).
 * ZSCORE: a = mean, b = population std, maps x -> (x - a) / b.
 */
struct ScalerParams {
    ScalingMethod method = ScalingMethod::MINMAX;
    double a = 0.0;
    double b = 1.0;

    double apply_one(double x) const { return (x - a) / denom(); }
    double invert_one(double y) const { return y * denom() + a; }

private:
    double denom() const { return method == ScalingMethod::MINMAX ? b - a : b; }
};

/// Fit over the training portion only. Throws Error(DEGENERATE_SCALE)
/// on constant input (max == min, or std == 0).
ScalerParams fit_scaler(const std::vector<double>& values, ScalingMethod method);

std::vector<double> apply_scaler(const std::vector<double>& values, const ScalerParams& p);
std::vector<double> invert_scaler(const std::vector<double>& values, const ScalerParams& p);

} // namespace hotelcast

#endif // HOTELCAST_SCALER_HPP
