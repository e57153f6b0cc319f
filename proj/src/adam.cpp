#include "hotelcast/adam.hpp"

#include <cmath>

#include "hotelcast/errors.hpp"

namespace hotelcast {

double clip_global_norm(std::vector<double>& g, double max_norm) {
    double sq = 0.0;
    for (double v : g) sq += v * v;
    double norm = std::sqrt(sq);
    if (max_norm > 0.0 && norm > max_norm) {
        double scale = max_norm / norm;
        for (double& v : g) v *= scale;
    }
    return norm;
}

void adam_step(LstmWeights& w, const LstmWeights& gradients, AdamState& opt,
               double learning_rate, double clip) {
    if (!w.same_shape(gradients))
        throw Error(Errc::SHAPE_ERROR, "gradient shape does not match weights");

    std::vector<double> params = w.flatten();
    std::vector<double> grads = gradients.flatten();
    if (opt.m.empty()) {
        opt.m.assign(params.size(), 0.0);
        opt.v.assign(params.size(), 0.0);
    }
    if (opt.m.size() != params.size())
        throw Error(Errc::SHAPE_ERROR, "optimizer state does not match weights");

    clip_global_norm(grads, clip);

    opt.t += 1;
    const double bc1 = 1.0 - std::pow(opt.beta1, static_cast<double>(opt.t));
    const double bc2 = 1.0 - std::pow(opt.beta2, static_cast<double>(opt.t));
    for (std::size_t i = 0; i < params.size(); ++i) {
        opt.m[i] = opt.beta1 * opt.m[i] + (1.0 - opt.beta1) * grads[i];
        opt.v[i] = opt.beta2 * opt.v[i] + (1.0 - opt.beta2) * grads[i] * grads[i];
        const double m_hat = opt.m[i] / bc1;
        const double v_hat = opt.v[i] / bc2;
        params[i] -= learning_rate * m_hat / (std::sqrt(v_hat) + opt.epsilon);
    }
    w = LstmWeights::unflatten(w.hidden, params);
}

} // namespace hotelcast
