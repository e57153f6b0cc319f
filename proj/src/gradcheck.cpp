#include "hotelcast/gradcheck.hpp"

#include <cmath>

#include "hotelcast/rng.hpp"

namespace hotelcast {

double forward_loss(const WindowedSamples& batch, const LstmWeights& w) {
    double acc = 0.0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        double err = predict(batch.inputs[i], w) - batch.targets[i];
        acc += err * err;
    }
    return acc / static_cast<double>(batch.size());
}

std::vector<double> finite_difference_gradient(const WindowedSamples& batch,
                                               const LstmWeights& w, double eps) {
    std::vector<double> flat = w.flatten();
    std::vector<double> grad(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const double saved = flat[i];
        flat[i] = saved + eps;
        double loss_plus = forward_loss(batch, LstmWeights::unflatten(w.hidden, flat));
        flat[i] = saved - eps;
        double loss_minus = forward_loss(batch, LstmWeights::unflatten(w.hidden, flat));
        flat[i] = saved;
        grad[i] = (loss_plus - loss_minus) / (2.0 * eps);
    }
    return grad;
}

GradCheckReport run_gradient_suite(std::size_t n_models, std::uint64_t seed,
                                   double eps, bool corrupt) {
    Rng rng(seed);
    GradCheckReport report;

    for (std::size_t m = 0; m < n_models; ++m) {
        const std::size_t hidden = 1 + rng.index(4);   // H in 1..4
        const std::size_t lookback = 1 + rng.index(6); // L in 1..6
        const std::size_t n_samples = 1 + rng.index(8);

        LstmWeights w = init_weights(hidden, seed * 1000 + m);

        WindowedSamples batch;
        batch.lookback = lookback;
        for (std::size_t s = 0; s < n_samples; ++s) {
            std::vector<double> window(lookback);
            for (double& x : window) x = rng.uniform(-1.0, 1.0);
            batch.inputs.push_back(std::move(window));
            batch.targets.push_back(rng.uniform(-1.0, 1.0));
        }

        std::vector<double> analytic = backward(batch, w).gradients.flatten();
        if (corrupt && m == 0 && !analytic.empty()) analytic[0] += 1.0;
        std::vector<double> numeric = finite_difference_gradient(batch, w, eps);

        for (std::size_t i = 0; i < analytic.size(); ++i) {
            double denom = std::abs(analytic[i]) + std::abs(numeric[i]);
            if (denom < 1e-6) denom = 1e-6;
            double rel = std::abs(analytic[i] - numeric[i]) / denom;
            if (rel > report.max_rel_error) report.max_rel_error = rel;
        }
        report.params_checked += analytic.size();
        report.models_checked += 1;
    }
    return report;
}

} // namespace hotelcast
