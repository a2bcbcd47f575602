#include "rkhsinfo/l2_geometry.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "rkhsinfo/estimation.hpp"
#include "rkhsinfo/kernels.hpp"

namespace rkhsinfo {

namespace {

constexpr double kSingularityTolerance = 1e-10;
constexpr int kMaxTensorDim = 16;

}  // namespace

DesignMatrix::DesignMatrix(Eigen::MatrixXd predictors, Eigen::VectorXd response)
    : predictors_(std::move(predictors)), response_(std::move(response)) {
    if (predictors_.rows() < 1 || predictors_.cols() < 1)
        throw invalid_input("design matrix needs at least one row and one predictor");
    if (predictors_.rows() != response_.size())
        throw invalid_input("design matrix and response lengths differ");
    if (!predictors_.allFinite() || !response_.allFinite())
        throw invalid_input("design matrix entries must be finite");
}

RegressionFit ols_fit(const DesignMatrix& dm) {
    const Eigen::Index n = dm.size();
    const Eigen::Index d = dm.dim();
    const double dn = static_cast<double>(n);

    Eigen::VectorXd mean_x = Eigen::VectorXd::Zero(d);
    for (Eigen::Index i = 0; i < n; ++i)
        mean_x += dm.predictors().row(i).transpose();
    mean_x /= dn;
    double mean_y = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) mean_y += dm.response()(i);
    mean_y /= dn;

    const Eigen::MatrixXd xc = dm.predictors().rowwise() - mean_x.transpose();
    const Eigen::VectorXd yc = dm.response().array() - mean_y;

    const Eigen::MatrixXd cov = (xc.adjoint() * xc) / dn;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(cov);
    const double sv_max = svd.singularValues()(0);
    const double sv_min = svd.singularValues()(d - 1);
    if (sv_max <= 0.0 || sv_min <= kSingularityTolerance * sv_max) {
        std::ostringstream msg;
        msg << "collinear design: min/max singular value ratio "
            << (sv_max > 0.0 ? sv_min / sv_max : 0.0) << " is below the tolerance "
            << kSingularityTolerance;
        throw degenerate_input(msg.str());
    }

    const Eigen::VectorXd rhs = (xc.adjoint() * yc) / dn;
    const Eigen::VectorXd betas = cov.ldlt().solve(rhs);

    RegressionFit fit;
    fit.mean_y = mean_y;
    fit.mean_x = mean_x;
    fit.betas = betas;
    fit.fitted = (xc * betas).array() + mean_y;
    fit.residuals = dm.response() - fit.fitted;
    return fit;
}

double central_moment(const Sample& s, int k) {
    if (k < 2)
        throw invalid_input("central moment order must be >= 2");
    const Eigen::VectorXd xs = s.column();
    const double mean = sample_mean(s)(0);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < xs.size(); ++i)
        acc += detail::ipow(xs(i) - mean, k);
    return acc / static_cast<double>(xs.size());
}

double standardized_moment(const Sample& s, int k) {
    if (k < 3)
        throw invalid_input("standardized moment order must be >= 3");
    const double var = central_moment(s, 2);
    if (var <= 0.0)
        throw degenerate_input("standardized moment of a zero-variance sample");
    return central_moment(s, k) / std::pow(var, 0.5 * static_cast<double>(k));
}

MomentTensor::MomentTensor(int order, Eigen::Index dim, std::vector<double> values)
    : order_(order), dim_(dim), values_(std::move(values)) {
    std::size_t expected = 1;
    for (int i = 0; i < order_; ++i) expected *= static_cast<std::size_t>(dim_);
    if (values_.size() != expected)
        throw invalid_input("moment tensor storage size does not match order and dimension");
}

double MomentTensor::at(const std::vector<Eigen::Index>& indices) const {
    if (static_cast<int>(indices.size()) != order_)
        throw invalid_input("moment tensor index count does not match its order");
    std::size_t flat = 0;
    for (Eigen::Index ix : indices) {
        if (ix < 0 || ix >= dim_)
            throw invalid_input("moment tensor index out of range");
        flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(ix);
    }
    return values_[flat];
}

MomentTensor moment_tensor(const Sample& s, int k) {
    if (k < 2 || k > 4)
        throw invalid_input("moment tensor order must be 2, 3 or 4");
    if (s.dim() > kMaxTensorDim)
        throw invalid_input("moment tensor dimension exceeds the dense storage guard (16)");

    const Eigen::Index n = s.size();
    const Eigen::Index d = s.dim();
    const Eigen::VectorXd mean = sample_mean(s);
    const Eigen::MatrixXd centered = s.points().rowwise() - mean.transpose();

    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::size_t>(d);
    std::vector<double> values(total, 0.0);

    const auto flat_index = [d](const std::vector<Eigen::Index>& idx) {
        std::size_t f = 0;
        for (Eigen::Index ix : idx) f = f * static_cast<std::size_t>(d) + static_cast<std::size_t>(ix);
        return f;
    };

    // One pass per sorted multi-index; the value is copied to every
    // permutation so symmetry is exact by construction.
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(k), 0);
    const auto advance_sorted = [&idx, d]() {
        for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
            if (idx[static_cast<std::size_t>(pos)] + 1 < d) {
                const Eigen::Index next = idx[static_cast<std::size_t>(pos)] + 1;
                for (std::size_t j = static_cast<std::size_t>(pos); j < idx.size(); ++j)
                    idx[j] = next;
                return true;
            }
        }
        return false;
    };

    bool more = true;
    while (more) {
        double acc = 0.0;
        for (Eigen::Index row = 0; row < n; ++row) {
            double prod = 1.0;
            for (Eigen::Index ix : idx) prod *= centered(row, ix);
            acc += prod;
        }
        const double value = acc / static_cast<double>(n);

        std::vector<Eigen::Index> perm = idx;
        do {
            values[flat_index(perm)] = value;
        } while (std::next_permutation(perm.begin(), perm.end()));

        more = advance_sorted();
    }

    return MomentTensor(k, d, std::move(values));
}

}  // namespace rkhsinfo
