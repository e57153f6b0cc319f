#ifndef HOTELCAST_GP_HPP
#define HOTELCAST_GP_HPP

#include <cstddef>
#include <vector>

namespace hotelcast {

struct GpPosterior {
    double mean = 0.0;
    double variance = 0.0;
};

/**
 * Gaussian-process regression surrogate over the unit hypercube with an
 * RBF kernel k(x, x') = sigma_f2 * exp(-|x - x'|^2 / (2 l^2)) and noise
 * sigma_n2 on the diagonal. The prior mean is the mean of the observed
 * scores. Solved via Cholesky with jitter escalation up to 1e-6; a
 * factorization that still fails throws Error(SURROGATE_SINGULAR).
 */
class GpSurrogate {
public:
    GpSurrogate(std::vector<std::vector<double>> points, std::vector<double> scores,
                double sigma_f2, double length_scale, double sigma_n2);

    /// Default kernel rule: sigma_f2 = population variance of scores
    /// (floored at 1e-12), l = 0.2, sigma_n2 = 1e-4 * sigma_f2.
    static GpSurrogate with_default_kernel(std::vector<std::vector<double>> points,
                                           std::vector<double> scores);

    GpPosterior posterior(const std::vector<double>& x) const;

    std::size_t observation_count() const { return scores_.size(); }
    double sigma_f2() const { return sigma_f2_; }
    double prior_mean() const { return prior_mean_; }

private:
    double kernel(const std::vector<double>& a, const std::vector<double>& b) const;

    std::vector<std::vector<double>> points_;
    std::vector<double> scores_;
    double sigma_f2_;
    double length_scale_;
    double sigma_n2_;
    double prior_mean_;
    std::vector<double> chol_;   // lower-triangular factor of K + sigma_n2 I, row-major
    std::vector<double> alpha_;  // (K + sigma_n2 I)^-1 (y - prior_mean)
};

/**
 * Expected improvement for minimization:
 *   EI = (best - mu) * Phi(z) + sigma * phi(z),  z = (best - mu) / sigma
 * with EI = max(best - mu, 0) when sigma = 0. Always >= 0.
 */
double expected_improvement(double mean, double variance, double best_score);

/// Standard normal density and CDF.
double normal_pdf(double z);
double normal_cdf(double z);

} // namespace hotelcast

#endif // HOTELCAST_GP_HPP
