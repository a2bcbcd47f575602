#pragma once

#include <Eigen/Core>

#include "rkhsinfo/information.hpp"
#include "rkhsinfo/kernels.hpp"
#include "rkhsinfo/sample.hpp"

namespace rkhsinfo {

// Finite kernel expansion f = sum_i coeffs[i] * k(centers.row(i), .).
// An empty expansion (no terms) is the zero function.
class RkhsExpansion {
public:
    RkhsExpansion(KernelSpec kernel, Eigen::MatrixXd centers, Eigen::VectorXd coeffs);

    static RkhsExpansion zero(KernelSpec kernel);

    const KernelSpec& kernel() const noexcept { return kernel_; }
    const Eigen::MatrixXd& centers() const noexcept { return centers_; }
    const Eigen::VectorXd& coeffs() const noexcept { return coeffs_; }
    Eigen::Index terms() const noexcept { return coeffs_.size(); }
    Eigen::Index dim() const noexcept { return centers_.cols(); }

private:
    KernelSpec kernel_;
    Eigen::MatrixXd centers_;
    Eigen::VectorXd coeffs_;
};

// Gaussian KDE bandwidth: either a fixed sigma > 0 or Silverman's rule
// sigma = 1.06 * std * N^(-1/5) (1/(N-1) std; 1-D samples with N >= 2 only).
class BandwidthSpec {
public:
    static BandwidthSpec fixed(double sigma);
    static BandwidthSpec silverman() { return BandwidthSpec(true, 0.0); }

    bool is_silverman() const noexcept { return silverman_; }
    double sigma() const noexcept { return sigma_; }

private:
    BandwidthSpec(bool silverman, double sigma) : silverman_(silverman), sigma_(sigma) {}

    bool silverman_;
    double sigma_;
};

// biased: the V-statistic, an exact squared embedding distance (nonnegative
// up to rounding). unbiased: the U-statistic with off-diagonal within-sample
// averages; needs N, M >= 2 and may be legitimately negative.
enum class MmdVariant { biased, unbiased };

// f(x) = sum_i coeffs[i] * k(centers[i], x).
double expansion_eval(const RkhsExpansion& f, const Eigen::VectorXd& x);

// <f,g> = sum_i sum_j alpha_i beta_j k(x_i, x'_j); requires identical kernels.
double rkhs_inner_product(const RkhsExpansion& f, const RkhsExpansion& g);

// sqrt(<f,f>). Rounding residues in [-1e-12, 0) clamp to 0; anything more
// negative raises numerical_failure (the kernel is not PSD).
double rkhs_norm(const RkhsExpansion& f);

// Empirical mean embedding: centers = sample points, all coefficients 1/N.
RkhsExpansion mean_embedding(const Sample& s, const KernelSpec& k);

// MMD^2(X,Y) = (1/N^2) sum k(x,x') + (1/M^2) sum k(y,y') - (2/NM) sum k(x,y),
// the within-sample terms replaced by off-diagonal averages when unbiased.
double mmd_squared(const Sample& x, const Sample& y, const KernelSpec& k, MmdVariant v);

// Resolved bandwidth for a sample (fixed value or Silverman's rule).
double kde_bandwidth(const Sample& s, const BandwidthSpec& bw);

// Parzen window estimate (1/N) sum_n (2 pi s^2)^(-d/2) exp(-|x-x_n|^2/(2s^2)).
double kde_density(const Sample& s, const BandwidthSpec& bw, const Eigen::VectorXd& x);

// Quadratic entropy estimate -log_b( (1/N^2) sum_nm k(x_n, x_m) ) with the
// normalized Gaussian kernel at bandwidth sqrt(2)*sigma; equals
// -log_b |mean embedding|^2 under that kernel.
double renyi2_entropy_estimate(const Sample& s, double sigma, const LogBase& b);

// Empirical covariance operator applied to f: the expansion with centers at
// the sample points and coefficients a_n = (f(x_n) - fbar)/N, where fbar is
// the sample mean of f. The centered-embedding term drops out because the
// coefficients sum to zero.
RkhsExpansion covariance_operator_apply(const Sample& s, const KernelSpec& k,
                                        const RkhsExpansion& f);

// Hilbert-Schmidt norm of the kernel integral operator under the empirical
// measure: sqrt( (1/N^2) sum_ij k(x_i, x_j)^2 ).
double hs_norm_empirical(const KernelSpec& k, const Sample& s);

}  // namespace rkhsinfo
