#pragma once

#include <Eigen/Core>

#include "rkhsinfo/sample.hpp"

namespace rkhsinfo {

// Location/variance pair for a univariate Gaussian model; sigma2 > 0.
struct GaussianParams {
    GaussianParams(double mu_, double sigma2_);

    double mu;
    double sigma2;
};

// Componentwise (1/N) sum x_i.
Eigen::VectorXd sample_mean(const Sample& s);

// Componentwise (1/N) sum (x_i - mean)^2; the unbiased flag switches to
// 1/(N-1) and requires N >= 2.
Eigen::VectorXd sample_variance(const Sample& s, bool unbiased = false);

// (1/N) sum (x_i - mean_x)(y_i - mean_y) for two 1-D samples of equal length.
double sample_covariance(const Sample& x, const Sample& y);

// Shifts and scales a 1-D sample to mean 0 and variance 1 (1/N convention).
// Zero variance is a degenerate_input error.
Sample standardize(const Sample& s);

// -(N/2) log(2 pi sigma2) - (1/(2 sigma2)) sum (x_i - mu)^2, natural log.
double gaussian_log_likelihood(const Sample& s, const GaussianParams& p);

// Maximizer of the Gaussian log-likelihood in mu; identical to sample_mean.
double gaussian_mle_mean(const Sample& s);

}  // namespace rkhsinfo
