#pragma once

#include <Eigen/Core>
#include <vector>

#include "rkhsinfo/sample.hpp"

namespace rkhsinfo {

// Regression design: N predictor rows (X_1..X_d) plus the response values.
class DesignMatrix {
public:
    DesignMatrix(Eigen::MatrixXd predictors, Eigen::VectorXd response);

    Eigen::Index size() const noexcept { return predictors_.rows(); }
    Eigen::Index dim() const noexcept { return predictors_.cols(); }
    const Eigen::MatrixXd& predictors() const noexcept { return predictors_; }
    const Eigen::VectorXd& response() const noexcept { return response_; }

private:
    Eigen::MatrixXd predictors_;
    Eigen::VectorXd response_;
};

// Centered (intercept) form: yhat = mean_y + sum_j betas[j] (x_j - mean_x[j]).
struct RegressionFit {
    double mean_y;
    Eigen::VectorXd mean_x;
    Eigen::VectorXd betas;
    Eigen::VectorXd fitted;
    Eigen::VectorXd residuals;
};

// Least-squares fit via the normal equations on centered data. The centered
// predictor covariance must be nonsingular: min singular value
// > 1e-10 * max singular value, else degenerate_input.
RegressionFit ols_fit(const DesignMatrix& dm);

// mu_k = (1/N) sum (x_i - mean)^k for a 1-D sample; k >= 2.
double central_moment(const Sample& s, int k);

// mu_k / variance^(k/2); k = 3 is skewness, k = 4 kurtosis. Requires
// positive variance and k >= 3.
double standardized_moment(const Sample& s, int k);

// Dense symmetric tensor of order k: every entry is invariant under index
// permutation, computed once per sorted multi-index and broadcast.
class MomentTensor {
public:
    MomentTensor(int order, Eigen::Index dim, std::vector<double> values);

    int order() const noexcept { return order_; }
    Eigen::Index dim() const noexcept { return dim_; }
    double at(const std::vector<Eigen::Index>& indices) const;
    const std::vector<double>& values() const noexcept { return values_; }

private:
    int order_;
    Eigen::Index dim_;
    std::vector<double> values_;  // row-major over the k indices
};

// Centered moment tensor, entry (i_1..i_k) = (1/N) sum_n prod_j
// (x_n[i_j] - mean[i_j]); k in {2,3,4}, d <= 16 (dense storage guard).
MomentTensor moment_tensor(const Sample& s, int k);

}  // namespace rkhsinfo
