#ifndef HOTELCAST_TRAIN_HPP
#define HOTELCAST_TRAIN_HPP

#include <vector>

#include "hotelcast/lstm.hpp"

namespace hotelcast {

struct EpochLoss {
    double train_mse = 0.0;
    double val_mse = 0.0;
};

struct TrainResult {
    LstmModel model;                     // weights with the best validation MSE
    std::vector<EpochLoss> loss_history; // one entry per executed epoch
    std::size_t best_epoch = 0;          // index into loss_history
};

/**
 * Full-batch Adam training with early stopping.
 *
 * The final floor(val_fraction * n) samples (chronologically) are held
 * out for validation; training stops once validation MSE has failed to
 * improve for more than `patience` consecutive epochs, and the weights
 * from the best epoch are returned. With an empty validation split the
 * training MSE is monitored instead. Deterministic given the seed.
 *
 * Throws Error(INSUFFICIENT_DATA) if the training portion is empty.
 */
TrainResult train(const WindowedSamples& samples, const TrainingConfig& config);

} // namespace hotelcast

#endif // HOTELCAST_TRAIN_HPP
