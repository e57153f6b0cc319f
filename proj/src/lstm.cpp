#include "hotelcast/lstm.hpp"

#include <algorithm>
#include <cmath>

#include "hotelcast/errors.hpp"
#include "hotelcast/rng.hpp"

namespace hotelcast {

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

} // namespace

LstmWeights::LstmWeights(std::size_t hidden_size) : hidden(hidden_size) {
    for (std::size_t g = 0; g < kNumGates; ++g) {
        w_in[g].assign(hidden, 0.0);
        u_rec[g].assign(hidden * hidden, 0.0);
        bias[g].assign(hidden, 0.0);
    }
    w_out.assign(hidden, 0.0);
}

std::vector<double> LstmWeights::flatten() const {
    std::vector<double> flat;
    flat.reserve(param_count());
    for (std::size_t g = 0; g < kNumGates; ++g) {
        flat.insert(flat.end(), w_in[g].begin(), w_in[g].end());
        flat.insert(flat.end(), u_rec[g].begin(), u_rec[g].end());
        flat.insert(flat.end(), bias[g].begin(), bias[g].end());
    }
    flat.insert(flat.end(), w_out.begin(), w_out.end());
    flat.push_back(b_out);
    return flat;
}

LstmWeights LstmWeights::unflatten(std::size_t hidden_size, const std::vector<double>& flat) {
    LstmWeights w(hidden_size);
    if (flat.size() != w.param_count())
        throw Error(Errc::SHAPE_ERROR,
                    "flat parameter vector has " + std::to_string(flat.size()) +
                        " entries, expected " + std::to_string(w.param_count()));
    std::size_t pos = 0;
    for (std::size_t g = 0; g < kNumGates; ++g) {
        std::copy(flat.begin() + pos, flat.begin() + pos + hidden_size, w.w_in[g].begin());
        pos += hidden_size;
        std::copy(flat.begin() + pos, flat.begin() + pos + hidden_size * hidden_size,
                  w.u_rec[g].begin());
        pos += hidden_size * hidden_size;
        std::copy(flat.begin() + pos, flat.begin() + pos + hidden_size, w.bias[g].begin());
        pos += hidden_size;
    }
    std::copy(flat.begin() + pos, flat.begin() + pos + hidden_size, w.w_out.begin());
    pos += hidden_size;
    w.b_out = flat[pos];
    return w;
}

bool LstmWeights::same_shape(const LstmWeights& other) const {
    return hidden == other.hidden;
}

void TrainingConfig::validate() const {
    if (lookback < 1) throw Error(Errc::CONFIG_ERROR, "lookback must be >= 1");
    if (hidden_size < 1) throw Error(Errc::CONFIG_ERROR, "hidden_size must be >= 1");
    if (epochs < 1) throw Error(Errc::CONFIG_ERROR, "epochs must be >= 1");
    if (!(learning_rate > 0.0))
        throw Error(Errc::CONFIG_ERROR, "learning_rate must be positive");
    if (!(val_fraction >= 0.0 && val_fraction < 0.5))
        throw Error(Errc::CONFIG_ERROR, "val_fraction must lie in [0, 0.5)");
    if (!(gradient_clip > 0.0))
        throw Error(Errc::CONFIG_ERROR, "gradient_clip must be positive");
}

LstmWeights init_weights(std::size_t hidden_size, std::uint64_t seed) {
    if (hidden_size < 1)
        throw Error(Errc::CONFIG_ERROR, "hidden_size must be >= 1");
    LstmWeights w(hidden_size);
    Rng rng(seed);
    const double bound = 1.0 / std::sqrt(static_cast<double>(hidden_size));
    for (std::size_t g = 0; g < kNumGates; ++g) {
        for (double& v : w.w_in[g]) v = rng.uniform(-bound, bound);
        for (double& v : w.u_rec[g]) v = rng.uniform(-bound, bound);
    }
    for (double& v : w.w_out) v = rng.uniform(-bound, bound);
    for (double& v : w.bias[GATE_FORGET]) v = 1.0;
    return w;
}

LstmState cell_forward(double x, const LstmState& state, const LstmWeights& w) {
    const std::size_t H = w.hidden;
    LstmState next(H);
    std::array<double, kNumGates> act{};
    for (std::size_t j = 0; j < H; ++j) {
        for (std::size_t g = 0; g < kNumGates; ++g) {
            double a = w.w_in[g][j] * x + w.bias[g][j];
            const double* row = &w.u_rec[g][j * H];
            for (std::size_t k = 0; k < H; ++k) a += row[k] * state.h[k];
            act[g] = a;
        }
        double i = sigmoid(act[GATE_INPUT]);
        double f = sigmoid(act[GATE_FORGET]);
        double o = sigmoid(act[GATE_OUTPUT]);
        double g = std::tanh(act[GATE_CANDIDATE]);
        double c = f * state.c[j] + i * g;
        if (!std::isfinite(c))
            throw Error(Errc::NUMERIC_OVERFLOW, "non-finite cell state");
        next.c[j] = c;
        next.h[j] = o * std::tanh(c);
    }
    return next;
}

namespace {

// Shared forward kernel: fills the cache when one is supplied.
double forward_impl(const std::vector<double>& window, const LstmWeights& w,
                    SequenceCache* cache) {
    const std::size_t H = w.hidden;
    const std::size_t L = window.size();
    if (L == 0)
        throw Error(Errc::INSUFFICIENT_HISTORY, "empty input window");

    if (cache) {
        cache->steps = L;
        cache->hidden = H;
        cache->inputs = window;
        cache->gate_i.assign(L * H, 0.0);
        cache->gate_f.assign(L * H, 0.0);
        cache->gate_o.assign(L * H, 0.0);
        cache->gate_g.assign(L * H, 0.0);
        cache->cell.assign((L + 1) * H, 0.0);
        cache->cell_tanh.assign(L * H, 0.0);
        cache->hidden_state.assign((L + 1) * H, 0.0);
    }

    std::vector<double> h(H, 0.0), c(H, 0.0), h_next(H), c_next(H);
    for (std::size_t t = 0; t < L; ++t) {
        const double x = window[t];
        for (std::size_t j = 0; j < H; ++j) {
            std::array<double, kNumGates> act{};
            for (std::size_t g = 0; g < kNumGates; ++g) {
                double a = w.w_in[g][j] * x + w.bias[g][j];
                const double* row = &w.u_rec[g][j * H];
                for (std::size_t k = 0; k < H; ++k) a += row[k] * h[k];
                act[g] = a;
            }
            double gi = sigmoid(act[GATE_INPUT]);
            double gf = sigmoid(act[GATE_FORGET]);
            double go = sigmoid(act[GATE_OUTPUT]);
            double gg = std::tanh(act[GATE_CANDIDATE]);
            double cj = gf * c[j] + gi * gg;
            double tc = std::tanh(cj);
            c_next[j] = cj;
            h_next[j] = go * tc;
            if (cache) {
                cache->gate_i[t * H + j] = gi;
                cache->gate_f[t * H + j] = gf;
                cache->gate_o[t * H + j] = go;
                cache->gate_g[t * H + j] = gg;
                cache->cell[(t + 1) * H + j] = cj;
                cache->cell_tanh[t * H + j] = tc;
                cache->hidden_state[(t + 1) * H + j] = h_next[j];
            }
        }
        h.swap(h_next);
        c.swap(c_next);
    }

    double pred = w.b_out;
    for (std::size_t j = 0; j < H; ++j) pred += w.w_out[j] * h[j];
    if (!std::isfinite(pred))
        throw Error(Errc::NUMERIC_OVERFLOW, "non-finite prediction");
    return pred;
}

} // namespace

ForwardResult sequence_forward(const std::vector<double>& window, const LstmWeights& w) {
    ForwardResult result;
    result.prediction = forward_impl(window, w, &result.cache);
    return result;
}

double predict(const std::vector<double>& window, const LstmWeights& w) {
    return forward_impl(window, w, nullptr);
}

BackwardResult backward(const WindowedSamples& batch, const LstmWeights& w) {
    if (batch.size() == 0)
        throw Error(Errc::EMPTY_INPUT, "backward on an empty batch");

    const std::size_t H = w.hidden;
    const std::size_t N = batch.size();

    BackwardResult result;
    result.gradients = LstmWeights(H);
    LstmWeights& grad = result.gradients;

    SequenceCache cache;
    std::vector<double> dh(H), dc(H), dh_prev(H), dc_prev(H);
    std::array<std::vector<double>, kNumGates> da;
    for (auto& v : da) v.assign(H, 0.0);

    double loss = 0.0;
    for (std::size_t s = 0; s < N; ++s) {
        const double pred = forward_impl(batch.inputs[s], w, &cache);
        const double err = pred - batch.targets[s];
        loss += err * err;
        const double dpred = 2.0 * err / static_cast<double>(N);
        const std::size_t L = cache.steps;

        // dense head
        const double* h_last = &cache.hidden_state[L * H];
        for (std::size_t j = 0; j < H; ++j) {
            grad.w_out[j] += dpred * h_last[j];
            dh[j] = dpred * w.w_out[j];
            dc[j] = 0.0;
        }
        grad.b_out += dpred;

        for (std::size_t t = L; t-- > 0;) {
            const double x = cache.inputs[t];
            const double* gi = &cache.gate_i[t * H];
            const double* gf = &cache.gate_f[t * H];
            const double* go = &cache.gate_o[t * H];
            const double* gg = &cache.gate_g[t * H];
            const double* tc = &cache.cell_tanh[t * H];
            const double* c_prev = &cache.cell[t * H];
            const double* h_prev = &cache.hidden_state[t * H];

            for (std::size_t j = 0; j < H; ++j) {
                const double do_j = dh[j] * tc[j];
                const double dc_j = dc[j] + dh[j] * go[j] * (1.0 - tc[j] * tc[j]);
                const double di_j = dc_j * gg[j];
                const double df_j = dc_j * c_prev[j];
                const double dg_j = dc_j * gi[j];

                da[GATE_INPUT][j] = di_j * gi[j] * (1.0 - gi[j]);
                da[GATE_FORGET][j] = df_j * gf[j] * (1.0 - gf[j]);
                da[GATE_OUTPUT][j] = do_j * go[j] * (1.0 - go[j]);
                da[GATE_CANDIDATE][j] = dg_j * (1.0 - gg[j] * gg[j]);

                dc_prev[j] = dc_j * gf[j];
            }

            for (std::size_t k = 0; k < H; ++k) dh_prev[k] = 0.0;
            for (std::size_t g = 0; g < kNumGates; ++g) {
                const std::vector<double>& dag = da[g];
                for (std::size_t j = 0; j < H; ++j) {
                    const double d = dag[j];
                    grad.w_in[g][j] += d * x;
                    grad.bias[g][j] += d;
                    double* grow = &grad.u_rec[g][j * H];
                    const double* urow = &w.u_rec[g][j * H];
                    for (std::size_t k = 0; k < H; ++k) {
                        grow[k] += d * h_prev[k];
                        dh_prev[k] += urow[k] * d;
                    }
                }
            }
            dh.swap(dh_prev);
            dc.swap(dc_prev);
        }
    }

    result.loss = loss / static_cast<double>(N);
    if (!std::isfinite(result.loss))
        throw Error(Errc::NUMERIC_OVERFLOW, "non-finite training loss");
    return result;
}

} // namespace hotelcast
