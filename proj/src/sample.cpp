#include "rkhsinfo/sample.hpp"

namespace rkhsinfo {

Sample::Sample(Eigen::MatrixXd points) : points_(std::move(points)) {
    if (points_.rows() < 1)
        throw invalid_input("sample must contain at least one point");
    if (points_.cols() < 1)
        throw invalid_input("sample points must have dimension >= 1");
    if (!points_.allFinite())
        throw invalid_input("sample contains non-finite coordinates");
}

Sample Sample::univariate(const std::vector<double>& values) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(values.size()), 1);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        m(i, 0) = values[static_cast<std::size_t>(i)];
    return Sample(std::move(m));
}

const Eigen::VectorXd Sample::column() const {
    if (dim() != 1)
        throw invalid_input("operation requires a 1-D sample, got dimension " +
                            std::to_string(dim()));
    return points_.col(0);
}

}  // namespace rkhsinfo
