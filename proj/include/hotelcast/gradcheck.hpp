#ifndef HOTELCAST_GRADCHECK_HPP
#define HOTELCAST_GRADCHECK_HPP

#include <cstdint>
#include <vector>

#include "hotelcast/lstm.hpp"

namespace hotelcast {

/**
 * Central finite-difference gradient of the batch MSE with respect to
 * every parameter. Uses only the forward/loss path, so it is an
 * independent check on the analytic BPTT gradients.
 */
std::vector<double> finite_difference_gradient(const WindowedSamples& batch,
                                               const LstmWeights& w, double eps);

/// Batch MSE via forward passes alone (no gradient code involved).
double forward_loss(const WindowedSamples& batch, const LstmWeights& w);

struct GradCheckReport {
    double max_rel_error = 0.0;
    std::size_t models_checked = 0;
    std::size_t params_checked = 0;
};

/**
 * Runs `n_models` random small configurations (H <= 4, L <= 6, <= 8
 * samples) and compares analytic BPTT gradients against central finite
 * differences (default eps 1e-5). Relative error per parameter is
 * |a - n| / max(|a| + |n|, 1e-6). Deterministic given the seed.
 *
 * `corrupt` perturbs one analytic gradient entry before comparison —
 * a negative control hook for the CLI exit-code contract.
 */
GradCheckReport run_gradient_suite(std::size_t n_models, std::uint64_t seed,
                                   double eps = 1e-5, bool corrupt = false);

} // namespace hotelcast

#endif // HOTELCAST_GRADCHECK_HPP
