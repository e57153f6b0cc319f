#include "hotelcast/hpo.hpp"

#include <algorithm>
#include <cmath>

#include "hotelcast/errors.hpp"
#include "hotelcast/gp.hpp"
#include "hotelcast/rng.hpp"

namespace hotelcast {

namespace {

double axis_embed(double value, double lo, double hi) {
    return hi > lo ? (value - lo) / (hi - lo) : 0.0;
}

std::size_t nearest_member(const std::vector<std::size_t>& set, double value) {
    std::size_t best = set.front();
    double best_dist = std::abs(static_cast<double>(best) - value);
    for (std::size_t v : set) {
        double dist = std::abs(static_cast<double>(v) - value);
        if (dist < best_dist) {
            best = v;
            best_dist = dist;
        }
    }
    return best;
}

Trial evaluate_trial(std::size_t index, const TrialParams& params,
                     const Objective& objective) {
    Trial trial;
    trial.index = index;
    trial.params = params;
    try {
        trial.score = objective(params);
        if (!std::isfinite(trial.score) || trial.score < 0.0) {
            trial.failed = true;
            trial.message = "objective returned an invalid score";
        }
    } catch (const std::exception& e) {
        trial.failed = true;
        trial.message = e.what();
    }
    return trial;
}

SearchResult finalize(std::vector<Trial> trials) {
    SearchResult result;
    const Trial* best = nullptr;
    for (const auto& t : trials)
        if (!t.failed && (!best || t.score < best->score)) best = &t; // ties keep lowest index
    if (!best)
        throw Error(Errc::NO_VALID_TRIAL, "every trial failed");
    result.best = *best;
    result.trials = std::move(trials);
    return result;
}

} // namespace

void SearchSpace::validate() const {
    if (lookback.empty() || hidden_size.empty() || epochs.empty())
        throw Error(Errc::CONFIG_ERROR, "search space sets must be nonempty");
    if (!(lr_min > 0.0) || !(lr_max >= lr_min))
        throw Error(Errc::CONFIG_ERROR, "learning-rate interval must be positive and ordered");
    if (lr_grid_points < 1)
        throw Error(Errc::CONFIG_ERROR, "lr_grid_points must be >= 1");
}

std::vector<double> lr_grid(const SearchSpace& space) {
    if (space.lr_max == space.lr_min || space.lr_grid_points == 1)
        return {space.lr_min};
    std::vector<double> grid;
    const double lo = std::log10(space.lr_min);
    const double hi = std::log10(space.lr_max);
    for (std::size_t i = 0; i < space.lr_grid_points; ++i) {
        double frac = static_cast<double>(i) / static_cast<double>(space.lr_grid_points - 1);
        grid.push_back(std::pow(10.0, lo + (hi - lo) * frac));
    }
    return grid;
}

std::size_t grid_size(const SearchSpace& space) {
    return space.lookback.size() * space.hidden_size.size() * lr_grid(space).size() *
           space.epochs.size();
}

SearchResult grid_search(const SearchSpace& space, const Objective& objective) {
    space.validate();
    const std::vector<double> lrs = lr_grid(space);

    std::vector<Trial> trials;
    std::size_t index = 0;
    for (std::size_t lb : space.lookback)
        for (std::size_t h : space.hidden_size)
            for (double lr : lrs)
                for (std::size_t ep : space.epochs) {
                    TrialParams p{lb, h, lr, ep};
                    trials.push_back(evaluate_trial(index++, p, objective));
                }
    return finalize(std::move(trials));
}

std::vector<double> embed_params(const TrialParams& p, const SearchSpace& space) {
    auto set_bounds = [](const std::vector<std::size_t>& set) {
        auto [lo, hi] = std::minmax_element(set.begin(), set.end());
        return std::pair<double, double>(static_cast<double>(*lo),
                                         static_cast<double>(*hi));
    };
    auto [lb_lo, lb_hi] = set_bounds(space.lookback);
    auto [h_lo, h_hi] = set_bounds(space.hidden_size);
    auto [ep_lo, ep_hi] = set_bounds(space.epochs);
    return {
        axis_embed(static_cast<double>(p.lookback), lb_lo, lb_hi),
        axis_embed(static_cast<double>(p.hidden_size), h_lo, h_hi),
        axis_embed(std::log10(p.learning_rate), std::log10(space.lr_min),
                   std::log10(space.lr_max)),
        axis_embed(static_cast<double>(p.epochs), ep_lo, ep_hi),
    };
}

TrialParams snap_to_space(const std::vector<double>& x, const SearchSpace& space) {
    if (x.size() != 4)
        throw Error(Errc::SHAPE_ERROR, "embedded point must be 4-dimensional");
    auto snap_axis = [](const std::vector<std::size_t>& set, double coord) {
        auto [lo, hi] = std::minmax_element(set.begin(), set.end());
        double value = static_cast<double>(*lo) +
                       coord * (static_cast<double>(*hi) - static_cast<double>(*lo));
        return nearest_member(set, value);
    };
    TrialParams p;
    p.lookback = snap_axis(space.lookback, x[0]);
    p.hidden_size = snap_axis(space.hidden_size, x[1]);
    const double log_lo = std::log10(space.lr_min);
    const double log_hi = std::log10(space.lr_max);
    p.learning_rate = std::pow(10.0, log_lo + x[2] * (log_hi - log_lo));
    p.epochs = snap_axis(space.epochs, x[3]);
    return p;
}

SearchResult bayesian_search(const SearchSpace& space, std::size_t budget,
                             std::uint64_t seed, const Objective& objective) {
    space.validate();
    if (budget < 5)
        throw Error(Errc::CONFIG_ERROR, "bayesian search needs a budget of at least 5");

    Rng rng(seed);
    auto random_params = [&]() {
        TrialParams p;
        p.lookback = space.lookback[rng.index(space.lookback.size())];
        p.hidden_size = space.hidden_size[rng.index(space.hidden_size.size())];
        p.learning_rate =
            std::pow(10.0, rng.uniform(std::log10(space.lr_min), std::log10(space.lr_max)));
        p.epochs = space.epochs[rng.index(space.epochs.size())];
        return p;
    };

    std::vector<Trial> trials;
    const std::size_t n_init = std::min<std::size_t>(5, budget);
    for (std::size_t i = 0; i < n_init; ++i)
        trials.push_back(evaluate_trial(i, random_params(), objective));

    // fixed candidate pool shared by every EI round
    constexpr std::size_t kPoolSize = 256;
    std::vector<std::vector<double>> pool;
    pool.reserve(kPoolSize);
    for (std::size_t i = 0; i < kPoolSize; ++i)
        pool.push_back({rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()});

    for (std::size_t i = n_init; i < budget; ++i) {
        std::vector<std::vector<double>> observed;
        std::vector<double> scores;
        for (const auto& t : trials) {
            if (t.failed) continue;
            observed.push_back(embed_params(t.params, space));
            scores.push_back(t.score);
        }

        TrialParams next;
        if (scores.empty()) {
            next = random_params();
        } else {
            const double best_score = *std::min_element(scores.begin(), scores.end());
            GpSurrogate surrogate = GpSurrogate::with_default_kernel(observed, scores);

            double best_ei = -1.0;
            double best_ei_any = -1.0;
            bool found = false;
            TrialParams fallback;
            for (const auto& candidate : pool) {
                TrialParams snapped = snap_to_space(candidate, space);
                // score the configuration actually evaluated, not the raw point
                GpPosterior post = surrogate.posterior(embed_params(snapped, space));
                double ei = expected_improvement(post.mean, post.variance, best_score);
                if (ei > best_ei_any) {
                    best_ei_any = ei;
                    fallback = snapped;
                }
                bool duplicate =
                    std::any_of(trials.begin(), trials.end(), [&](const Trial& t) {
                        return t.params == snapped;
                    });
                if (!duplicate && ei > best_ei) {
                    best_ei = ei;
                    next = snapped;
                    found = true;
                }
            }
            if (!found) next = fallback; // pool exhausted by duplicates
        }
        trials.push_back(evaluate_trial(i, next, objective));
    }
    return finalize(std::move(trials));
}

} // namespace hotelcast
