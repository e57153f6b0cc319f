#ifndef HOTELCAST_HPO_HPP
#define HOTELCAST_HPO_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hotelcast {

/**
 * Hyperparameter search space. Integer parameters are finite sets;
 * the learning rate is an interval searched in log10 space.
 */
struct SearchSpace {
    std::vector<std::size_t> lookback = {6, 12};
    std::vector<std::size_t> hidden_size = {8, 16, 32};
    double lr_min = 1e-3;
    double lr_max = 2e-2;
    std::size_t lr_grid_points = 3; // grid search discretization, log-spaced
    std::vector<std::size_t> epochs = {800};

    void validate() const; // throws Error(CONFIG_ERROR)
};

struct TrialParams {
    std::size_t lookback = 12;
    std::size_t hidden_size = 16;
    double learning_rate = 0.005;
    std::size_t epochs = 800;

    bool operator==(const TrialParams&) const = default;
};

struct Trial {
    std::size_t index = 0;
    TrialParams params;
    double score = 0.0; // validation MAPE, lower is better
    bool failed = false;
    std::string message; // failure description when failed
};

struct SearchResult {
    Trial best;
    std::vector<Trial> trials;
};

/// Objective to minimize; a throw marks the trial as failed.
using Objective = std::function<double(const TrialParams&)>;

/**
 * Exhaustive grid search in lexicographic parameter order
 * (lookback, hidden_size, learning_rate, epochs), learning rate
 * discretized to lr_grid_points log-spaced values. Best = minimal
 * score, ties broken by lowest index. Throws Error(NO_VALID_TRIAL)
 * when every point failed.
 */
SearchResult grid_search(const SearchSpace& space, const Objective& objective);

/// Grid cardinality, for logs and tests.
std::size_t grid_size(const SearchSpace& space);

/// The concrete learning-rate grid values (log-spaced, inclusive endpoints).
std::vector<double> lr_grid(const SearchSpace& space);

/**
 * GP-EI Bayesian search: the first min(5, budget) trials are sampled
 * uniformly from the seeded generator (learning rate log-uniform);
 * each later trial evaluates the expected-improvement maximizer over a
 * fixed 256-point seeded candidate pool. Deterministic given the seed.
 * Requires budget >= 5.
 */
SearchResult bayesian_search(const SearchSpace& space, std::size_t budget,
                             std::uint64_t seed, const Objective& objective);

/// Affine embedding of a concrete point into the unit hypercube
/// (lookback, hidden, log10 lr, epochs); degenerate axes map to 0.
std::vector<double> embed_params(const TrialParams& p, const SearchSpace& space);

/// Inverse of embed_params up to rounding: each integer coordinate is
/// rounded to the nearest member of its set at evaluation time.
TrialParams snap_to_space(const std::vector<double>& x, const SearchSpace& space);

} // namespace hotelcast

#endif // HOTELCAST_HPO_HPP
