#include "rkhsinfo/kernels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "rkhsinfo/errors.hpp"

namespace rkhsinfo {

KernelSpec KernelSpec::linear() {
    return KernelSpec(Family::linear, 0.0, 0.0, 0, false);
}

KernelSpec KernelSpec::polynomial(double c, int degree) {
    if (!std::isfinite(c) || c < 0.0)
        throw invalid_input("polynomial kernel offset c must be >= 0");
    if (degree < 1)
        throw invalid_input("polynomial kernel degree must be a positive integer");
    return KernelSpec(Family::polynomial, 0.0, c, degree, false);
}

KernelSpec KernelSpec::gaussian(double sigma, bool normalized) {
    if (!std::isfinite(sigma) || sigma <= 0.0)
        throw invalid_input("gaussian kernel bandwidth sigma must be positive");
    return KernelSpec(Family::gaussian, sigma, 0.0, 0, normalized);
}

KernelSpec KernelSpec::laplacian(double sigma) {
    if (!std::isfinite(sigma) || sigma <= 0.0)
        throw invalid_input("laplacian kernel bandwidth sigma must be positive");
    return KernelSpec(Family::laplacian, sigma, 0.0, 0, false);
}

GramMatrix::GramMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
    if (values_.rows() < 1 || values_.rows() != values_.cols())
        throw invalid_input("Gram matrix must be square and nonempty");
    for (Eigen::Index i = 0; i < values_.rows(); ++i)
        for (Eigen::Index j = i + 1; j < values_.cols(); ++j)
            if (values_(i, j) != values_(j, i))
                throw invalid_input("Gram matrix must be symmetric");
}

double kernel_eval(const KernelSpec& k, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size())
        throw invalid_input("kernel arguments must share a dimension");
    return detail::kernel_eval_unchecked(k, x, y);
}

GramMatrix gram_matrix(const KernelSpec& k, const Sample& s) {
    const Eigen::Index n = s.size();
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) {
            const double v =
                detail::kernel_eval_unchecked(k, s.points().row(i), s.points().row(j));
            m(i, j) = v;
            m(j, i) = v;
        }
    return GramMatrix(std::move(m));
}

PsdReport psd_check(const GramMatrix& K, double tol) {
    if (!std::isfinite(tol) || tol < 0.0)
        throw invalid_input("psd tolerance must be finite and nonnegative");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(K.values(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numerical_failure("eigenvalue computation did not converge");
    const double min_ev = solver.eigenvalues().minCoeff();
    return PsdReport{min_ev, min_ev >= -tol};
}

double default_psd_tolerance(const GramMatrix& K) {
    const double max_diag = K.values().diagonal().maxCoeff();
    return 1e-8 * static_cast<double>(K.size()) * std::max(1.0, max_diag);
}

}  // namespace rkhsinfo
