#pragma once

#include <Eigen/Core>
#include <vector>

#include "rkhsinfo/errors.hpp"

namespace rkhsinfo {

// N points in R^d, one per row. N >= 1, d >= 1, all coordinates finite.
class Sample {
public:
    explicit Sample(Eigen::MatrixXd points);

    // 1-D sample from a plain list of values.
    static Sample univariate(const std::vector<double>& values);

    Eigen::Index size() const noexcept { return points_.rows(); }
    Eigen::Index dim() const noexcept { return points_.cols(); }

    const Eigen::MatrixXd& points() const noexcept { return points_; }
    Eigen::RowVectorXd point(Eigen::Index i) const { return points_.row(i); }

    // The single column of a 1-D sample.
    const Eigen::VectorXd column() const;

private:
    Eigen::MatrixXd points_;
};

}  // namespace rkhsinfo
