#include "hotelcast/train.hpp"

#include <cmath>
#include <limits>

#include "hotelcast/adam.hpp"
#include "hotelcast/errors.hpp"

namespace hotelcast {

namespace {

double eval_mse(const WindowedSamples& samples, std::size_t begin, std::size_t end,
                const LstmWeights& w) {
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        double err = predict(samples.inputs[i], w) - samples.targets[i];
        acc += err * err;
    }
    return acc / static_cast<double>(end - begin);
}

} // namespace

TrainResult train(const WindowedSamples& samples, const TrainingConfig& config) {
    config.validate();
    const std::size_t n = samples.size();
    const std::size_t n_val =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * config.val_fraction));
    const std::size_t n_train = n - n_val;
    if (n_train == 0)
        throw Error(Errc::INSUFFICIENT_DATA, "no training samples left after holdout");

    WindowedSamples train_part;
    train_part.lookback = samples.lookback;
    train_part.inputs.assign(samples.inputs.begin(),
                             samples.inputs.begin() + static_cast<long>(n_train));
    train_part.targets.assign(samples.targets.begin(),
                              samples.targets.begin() + static_cast<long>(n_train));

    LstmWeights weights = init_weights(config.hidden_size, config.seed);
    AdamState opt(weights.param_count());

    TrainResult result;
    result.model.config = config;
    LstmWeights best_weights = weights;
    double best_metric = std::numeric_limits<double>::infinity();
    std::size_t bad_streak = 0;

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        BackwardResult bw = backward(train_part, weights);
        adam_step(weights, bw.gradients, opt, config.learning_rate, config.gradient_clip);

        EpochLoss entry;
        entry.train_mse = eval_mse(samples, 0, n_train, weights);
        entry.val_mse = n_val > 0 ? eval_mse(samples, n_train, n, weights) : entry.train_mse;
        result.loss_history.push_back(entry);

        // when there is no holdout, the training MSE drives early stopping
        const double monitored = entry.val_mse;
        if (monitored < best_metric) {
            best_metric = monitored;
            best_weights = weights;
            result.best_epoch = epoch;
            bad_streak = 0;
        } else {
            ++bad_streak;
            if (bad_streak > config.patience) break;
        }
    }

    result.model.weights = std::move(best_weights);
    return result;
}

} // namespace hotelcast
