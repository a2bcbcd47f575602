#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>

#include "rkhsinfo/sample.hpp"

namespace rkhsinfo {

// Kernel family plus parameters, fixed at construction.
//
//   linear      k(x,y) = <x,y>
//   polynomial  k(x,y) = (<x,y> + c)^p        c >= 0, integer p >= 1
//   gaussian    k(x,y) = exp(-|x-y|^2 / 2s^2)
//   laplacian   k(x,y) = exp(-|x-y|_1 / s)
//
// The optional normalized flag (Gaussian only) multiplies by
// (2 pi s^2)^(-d/2), the density normalization used for KDE.
class KernelSpec {
public:
    enum class Family { linear, polynomial, gaussian, laplacian };

    static KernelSpec linear();
    static KernelSpec polynomial(double c, int degree);
    static KernelSpec gaussian(double sigma, bool normalized = false);
    static KernelSpec laplacian(double sigma);

    Family family() const noexcept { return family_; }
    double sigma() const noexcept { return sigma_; }
    double offset() const noexcept { return c_; }
    int degree() const noexcept { return degree_; }
    bool normalized() const noexcept { return normalized_; }

    friend bool operator==(const KernelSpec&, const KernelSpec&) = default;

private:
    KernelSpec(Family f, double sigma, double c, int degree, bool normalized)
        : family_(f), sigma_(sigma), c_(c), degree_(degree), normalized_(normalized) {}

    Family family_;
    double sigma_;
    double c_;
    int degree_;
    bool normalized_;
};

namespace detail {

inline double ipow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Kernel formulas on any pair of equal-length Eigen vectors (row or column).
// Dimension agreement is the caller's responsibility.
template <typename XT, typename YT>
double kernel_eval_unchecked(const KernelSpec& k, const XT& x, const YT& y) {
    switch (k.family()) {
        case KernelSpec::Family::linear:
            return x.dot(y);
        case KernelSpec::Family::polynomial:
            return ipow(x.dot(y) + k.offset(), k.degree());
        case KernelSpec::Family::gaussian: {
            const double s2 = k.sigma() * k.sigma();
            double v = std::exp(-(x - y).squaredNorm() / (2.0 * s2));
            if (k.normalized())
                v *= std::pow(2.0 * std::numbers::pi * s2, -0.5 * static_cast<double>(x.size()));
            return v;
        }
        case KernelSpec::Family::laplacian:
            return std::exp(-(x - y).template lpNorm<1>() / k.sigma());
    }
    return 0.0;  // unreachable
}

}  // namespace detail

// Dense symmetric matrix of pairwise kernel values. Symmetry is exact:
// gram_matrix computes the upper triangle and mirrors it, and the raw
// constructor rejects any matrix that is not bitwise symmetric.
class GramMatrix {
public:
    explicit GramMatrix(Eigen::MatrixXd values);

    Eigen::Index size() const noexcept { return values_.rows(); }
    const Eigen::MatrixXd& values() const noexcept { return values_; }

private:
    Eigen::MatrixXd values_;
};

struct PsdReport {
    double min_eigenvalue;
    bool is_psd;
};

// k(x, y); x and y must share a dimension.
double kernel_eval(const KernelSpec& k, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// K[i][j] = k(x_i, x_j) over the sample points.
GramMatrix gram_matrix(const KernelSpec& k, const Sample& s);

// Minimum eigenvalue via a symmetric eigensolver; is_psd = (min >= -tol).
PsdReport psd_check(const GramMatrix& K, double tol);

// 1e-8 * N * max(1, max diagonal entry): eigensolver error grows with N.
double default_psd_tolerance(const GramMatrix& K);

}  // namespace rkhsinfo
