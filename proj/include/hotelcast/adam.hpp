#ifndef HOTELCAST_ADAM_HPP
#define HOTELCAST_ADAM_HPP

#include <cstddef>
#include <vector>

#include "hotelcast/lstm.hpp"

namespace hotelcast {

/// First/second-moment accumulators mirroring the flattened weights.
struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    std::size_t t = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    AdamState() = default;
    explicit AdamState(std::size_t param_count)
        : m(param_count, 0.0), v(param_count, 0.0) {}
};

/// Rescales g in place so its global L2 norm is at most max_norm.
/// max_norm <= 0 disables clipping. Returns the pre-clip norm.
double clip_global_norm(std::vector<double>& g, double max_norm);

/**
 * Standard Adam update with bias correction, applied to the flattened
 * parameter vector. Gradients are clipped to global norm <= clip first.
 */
void adam_step(LstmWeights& w, const LstmWeights& gradients, AdamState& opt,
               double learning_rate, double clip);

} // namespace hotelcast

#endif // HOTELCAST_ADAM_HPP
