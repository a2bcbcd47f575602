#include "rkhsinfo/estimation.hpp"

#include <cmath>
#include <numbers>

namespace rkhsinfo {

GaussianParams::GaussianParams(double mu_, double sigma2_) : mu(mu_), sigma2(sigma2_) {
    if (!std::isfinite(mu) || !std::isfinite(sigma2))
        throw invalid_input("Gaussian parameters must be finite");
    if (sigma2 <= 0.0)
        throw invalid_input("Gaussian variance must be positive");
}

// Sums run left to right over the points so results are reproducible.

Eigen::VectorXd sample_mean(const Sample& s) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(s.dim());
    for (Eigen::Index i = 0; i < s.size(); ++i)
        acc += s.points().row(i).transpose();
    return acc / static_cast<double>(s.size());
}

Eigen::VectorXd sample_variance(const Sample& s, bool unbiased) {
    if (unbiased && s.size() < 2)
        throw invalid_input("unbiased variance requires at least two points");
    const Eigen::VectorXd mean = sample_mean(s);
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(s.dim());
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        const Eigen::VectorXd dev = s.points().row(i).transpose() - mean;
        acc += dev.cwiseProduct(dev);
    }
    const double denom = unbiased ? static_cast<double>(s.size() - 1)
                                  : static_cast<double>(s.size());
    return acc / denom;
}

double sample_covariance(const Sample& x, const Sample& y) {
    const Eigen::VectorXd xs = x.column();
    const Eigen::VectorXd ys = y.column();
    if (xs.size() != ys.size())
        throw invalid_input("covariance requires samples of equal length");
    const double xbar = sample_mean(x)(0);
    const double ybar = sample_mean(y)(0);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < xs.size(); ++i)
        acc += (xs(i) - xbar) * (ys(i) - ybar);
    return acc / static_cast<double>(xs.size());
}

Sample standardize(const Sample& s) {
    const Eigen::VectorXd xs = s.column();
    const double mean = sample_mean(s)(0);
    const double var = sample_variance(s)(0);
    if (var <= 0.0)
        throw degenerate_input("cannot standardize a zero-variance sample");
    const double sd = std::sqrt(var);
    Eigen::MatrixXd out(xs.size(), 1);
    for (Eigen::Index i = 0; i < xs.size(); ++i)
        out(i, 0) = (xs(i) - mean) / sd;
    return Sample(std::move(out));
}

double gaussian_log_likelihood(const Sample& s, const GaussianParams& p) {
    const Eigen::VectorXd xs = s.column();
    double sq = 0.0;
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        const double d = xs(i) - p.mu;
        sq += d * d;
    }
    const double n = static_cast<double>(xs.size());
    return -0.5 * n * std::log(2.0 * std::numbers::pi * p.sigma2) - sq / (2.0 * p.sigma2);
}

double gaussian_mle_mean(const Sample& s) {
    if (s.dim() != 1)
        throw invalid_input("gaussian_mle_mean requires a 1-D sample");
    return sample_mean(s)(0);
}

}  // namespace rkhsinfo
