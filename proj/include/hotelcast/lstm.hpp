#ifndef HOTELCAST_LSTM_HPP
#define HOTELCAST_LSTM_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "hotelcast/windowing.hpp"

namespace hotelcast {

/// Gate indices into the per-gate weight arrays.
enum : std::size_t { GATE_INPUT = 0, GATE_FORGET = 1, GATE_OUTPUT = 2, GATE_CANDIDATE = 3 };
inline constexpr std::size_t kNumGates = 4;

/**
 * Single-layer LSTM parameters for univariate input, plus a scalar
 * dense head. For each gate: input weights (H), recurrent matrix
 * (H x H, row-major), bias (H).
 */
struct LstmWeights {
    std::size_t hidden = 0;
    std::array<std::vector<double>, kNumGates> w_in;
    std::array<std::vector<double>, kNumGates> u_rec;
    std::array<std::vector<double>, kNumGates> bias;
    std::vector<double> w_out;
    double b_out = 0.0;

    LstmWeights() = default;
    explicit LstmWeights(std::size_t hidden_size); // zero-initialized

    std::size_t param_count() const { return hidden * (kNumGates * (hidden + 2) + 1) + 1; }

    /// Parameters in a fixed documented order: per gate (i, f, o, g~)
    /// w_in, then u_rec, then bias; then w_out; then b_out.
    std::vector<double> flatten() const;
    static LstmWeights unflatten(std::size_t hidden_size, const std::vector<double>& flat);

    bool same_shape(const LstmWeights& other) const;
};

struct LstmState {
    std::vector<double> h;
    std::vector<double> c;

    explicit LstmState(std::size_t hidden_size = 0)
        : h(hidden_size, 0.0), c(hidden_size, 0.0) {}
};

struct TrainingConfig {
    std::size_t lookback = 12;
    std::size_t hidden_size = 16;
    std::size_t epochs = 800;
    double learning_rate = 0.005;
    std::uint64_t seed = 1;
    std::size_t patience = 50;
    double val_fraction = 0.1;
    double gradient_clip = 5.0;

    /// Throws Error(CONFIG_ERROR) on invalid field values.
    void validate() const;
};

/**
 * Weight initialization: every matrix entry uniform in [-1/sqrt(H), +1/sqrt(H)]
 * from the seeded generator; forget-gate bias 1.0, all other biases 0.
 * Identical (hidden_size, seed) gives bit-identical weights.
 */
LstmWeights init_weights(std::size_t hidden_size, std::uint64_t seed);

/**
 * One LSTM cell step:
 *   i = sigmoid(W_i x + U_i h + b_i)     f = sigmoid(W_f x + U_f h + b_f)
 *   o = sigmoid(W_o x + U_o h + b_o)     g~ = tanh(W_g x + U_g h + b_g)
 *   c' = f.c + i.g~                      h' = o.tanh(c')
 */
LstmState cell_forward(double x, const LstmState& state, const LstmWeights& w);

/// Per-step activations cached by the forward pass for BPTT.
struct SequenceCache {
    std::size_t steps = 0;
    std::size_t hidden = 0;
    std::vector<double> inputs;       // steps
    std::vector<double> gate_i;       // steps x H
    std::vector<double> gate_f;
    std::vector<double> gate_o;
    std::vector<double> gate_g;
    std::vector<double> cell;         // (steps + 1) x H, row 0 = initial zeros
    std::vector<double> cell_tanh;    // steps x H
    std::vector<double> hidden_state; // (steps + 1) x H, row 0 = initial zeros
};

struct ForwardResult {
    double prediction = 0.0;
    SequenceCache cache;
};

/// Runs the cell over a window from the zero state and applies the dense
/// head: prediction = w_out . h_last + b_out.
/// Throws Error(NUMERIC_OVERFLOW) if the prediction is not finite.
ForwardResult sequence_forward(const std::vector<double>& window, const LstmWeights& w);

/// Forward pass without cache allocation, for inference-heavy paths.
double predict(const std::vector<double>& window, const LstmWeights& w);

struct BackwardResult {
    double loss = 0.0;      // mean squared error over the batch
    LstmWeights gradients;  // d(loss)/d(parameter), batch-averaged
};

/**
 * Exact backpropagation through time for the full batch.
 * Loss is the MSE of the dense-head predictions against the targets;
 * gradients are analytic derivatives averaged over the batch.
 */
BackwardResult backward(const WindowedSamples& batch, const LstmWeights& w);

/// Trained model: weights plus the configuration that produced them.
struct LstmModel {
    LstmWeights weights;
    TrainingConfig config;
};

} // namespace hotelcast

#endif // HOTELCAST_LSTM_HPP
