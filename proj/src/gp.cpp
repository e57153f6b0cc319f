#include "hotelcast/gp.hpp"

#include <cmath>

#include "hotelcast/errors.hpp"

namespace hotelcast {

namespace {

// Cholesky factorization of a symmetric matrix, row-major, in place into
// the lower triangle. Returns false if a pivot is not positive.
bool cholesky(std::vector<double>& a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) sum -= a[i * n + k] * a[j * n + k];
            if (i == j) {
                if (!(sum > 0.0)) return false;
                a[i * n + i] = std::sqrt(sum);
            } else {
                a[i * n + j] = sum / a[j * n + j];
            }
        }
        for (std::size_t j = i + 1; j < n; ++j) a[i * n + j] = 0.0;
    }
    return true;
}

// Solves L y = b in place (forward substitution).
void solve_lower(const std::vector<double>& chol, std::size_t n, std::vector<double>& b) {
    for (std::size_t i = 0; i < n; ++i) {
        double sum = b[i];
        for (std::size_t k = 0; k < i; ++k) sum -= chol[i * n + k] * b[k];
        b[i] = sum / chol[i * n + i];
    }
}

// Solves L^T x = b in place (back substitution).
void solve_upper_t(const std::vector<double>& chol, std::size_t n, std::vector<double>& b) {
    for (std::size_t i = n; i-- > 0;) {
        double sum = b[i];
        for (std::size_t k = i + 1; k < n; ++k) sum -= chol[k * n + i] * b[k];
        b[i] = sum / chol[i * n + i];
    }
}

} // namespace

GpSurrogate::GpSurrogate(std::vector<std::vector<double>> points,
                         std::vector<double> scores, double sigma_f2,
                         double length_scale, double sigma_n2)
    : points_(std::move(points)),
      scores_(std::move(scores)),
      sigma_f2_(sigma_f2),
      length_scale_(length_scale),
      sigma_n2_(sigma_n2) {
    const std::size_t n = scores_.size();
    if (n == 0 || points_.size() != n)
        throw Error(Errc::SHAPE_ERROR, "surrogate needs matching points and scores");
    if (!(sigma_f2_ > 0.0) || !(length_scale_ > 0.0) || sigma_n2_ < 0.0)
        throw Error(Errc::CONFIG_ERROR, "invalid GP kernel hyperparameters");

    prior_mean_ = 0.0;
    for (double s : scores_) prior_mean_ += s;
    prior_mean_ /= static_cast<double>(n);

    std::vector<double> base(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double k = kernel(points_[i], points_[j]);
            base[i * n + j] = k;
            base[j * n + i] = k;
        }
        base[i * n + i] += sigma_n2_;
    }

    // jitter escalation: retry with growing diagonal boost until 1e-6
    double jitter = 0.0;
    for (;;) {
        chol_ = base;
        if (jitter > 0.0)
            for (std::size_t i = 0; i < n; ++i) chol_[i * n + i] += jitter;
        if (cholesky(chol_, n)) break;
        jitter = jitter == 0.0 ? 1e-12 : jitter * 10.0;
        if (jitter > 1e-6)
            throw Error(Errc::SURROGATE_SINGULAR,
                        "kernel matrix not positive definite after jitter escalation");
    }

    alpha_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) alpha_[i] = scores_[i] - prior_mean_;
    solve_lower(chol_, n, alpha_);
    solve_upper_t(chol_, n, alpha_);
}

GpSurrogate GpSurrogate::with_default_kernel(std::vector<std::vector<double>> points,
                                             std::vector<double> scores) {
    double mean = 0.0;
    for (double s : scores) mean += s;
    mean /= static_cast<double>(scores.empty() ? 1 : scores.size());
    double var = 0.0;
    for (double s : scores) var += (s - mean) * (s - mean);
    var /= static_cast<double>(scores.empty() ? 1 : scores.size());
    if (var < 1e-12) var = 1e-12;
    return GpSurrogate(std::move(points), std::move(scores), var, 0.2, 1e-4 * var);
}

double GpSurrogate::kernel(const std::vector<double>& a, const std::vector<double>& b) const {
    double sq = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        double diff = a[d] - b[d];
        sq += diff * diff;
    }
    return sigma_f2_ * std::exp(-sq / (2.0 * length_scale_ * length_scale_));
}

GpPosterior GpSurrogate::posterior(const std::vector<double>& x) const {
    const std::size_t n = scores_.size();
    std::vector<double> k_star(n);
    for (std::size_t i = 0; i < n; ++i) k_star[i] = kernel(x, points_[i]);

    GpPosterior post;
    post.mean = prior_mean_;
    for (std::size_t i = 0; i < n; ++i) post.mean += k_star[i] * alpha_[i];

    std::vector<double> v = k_star;
    solve_lower(chol_, n, v);
    double reduction = 0.0;
    for (double e : v) reduction += e * e;
    post.variance = sigma_f2_ - reduction;
    if (post.variance < 0.0) post.variance = 0.0;
    return post;
}

double normal_pdf(double z) {
    return 0.3989422804014326779 * std::exp(-0.5 * z * z);
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z * 0.7071067811865475244);
}

double expected_improvement(double mean, double variance, double best_score) {
    if (variance < 0.0) variance = 0.0;
    const double improvement = best_score - mean;
    const double sigma = std::sqrt(variance);
    if (sigma == 0.0) return improvement > 0.0 ? improvement : 0.0;
    const double z = improvement / sigma;
    double ei = improvement * normal_cdf(z) + sigma * normal_pdf(z);
    return ei > 0.0 ? ei : 0.0;
}

} // namespace hotelcast
