#include "rkhsinfo/rkhs.hpp"

#include <cmath>
#include <numbers>

#include "rkhsinfo/estimation.hpp"

namespace rkhsinfo {

namespace {

constexpr double kClampThreshold = 1e-12;

}  // namespace

RkhsExpansion::RkhsExpansion(KernelSpec kernel, Eigen::MatrixXd centers,
                             Eigen::VectorXd coeffs)
    : kernel_(kernel), centers_(std::move(centers)), coeffs_(std::move(coeffs)) {
    if (centers_.rows() != coeffs_.size())
        throw invalid_input("expansion needs one coefficient per center");
    if (centers_.rows() > 0 && centers_.cols() < 1)
        throw invalid_input("expansion centers must have dimension >= 1");
    if (!centers_.allFinite() || !coeffs_.allFinite())
        throw invalid_input("expansion centers and coefficients must be finite");
}

RkhsExpansion RkhsExpansion::zero(KernelSpec kernel) {
    return RkhsExpansion(kernel, Eigen::MatrixXd(0, 0), Eigen::VectorXd(0));
}

BandwidthSpec BandwidthSpec::fixed(double sigma) {
    if (!std::isfinite(sigma) || sigma <= 0.0)
        throw invalid_input("fixed bandwidth must be positive");
    return BandwidthSpec(false, sigma);
}

double expansion_eval(const RkhsExpansion& f, const Eigen::VectorXd& x) {
    if (f.terms() == 0) return 0.0;
    if (x.size() != f.dim())
        throw invalid_input("evaluation point dimension does not match the expansion");
    const Eigen::RowVectorXd xr = x.transpose();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < f.terms(); ++i)
        acc += f.coeffs()(i) *
               detail::kernel_eval_unchecked(f.kernel(), f.centers().row(i), xr);
    return acc;
}

double rkhs_inner_product(const RkhsExpansion& f, const RkhsExpansion& g) {
    if (!(f.kernel() == g.kernel()))
        throw invalid_input("inner product requires expansions over the same kernel");
    if (f.terms() == 0 || g.terms() == 0) return 0.0;
    if (f.dim() != g.dim())
        throw invalid_input("expansion center dimensions do not match");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < f.terms(); ++i) {
        const double ai = f.coeffs()(i);
        for (Eigen::Index j = 0; j < g.terms(); ++j)
            acc += ai * g.coeffs()(j) *
                   detail::kernel_eval_unchecked(f.kernel(), f.centers().row(i),
                                                 g.centers().row(j));
    }
    return acc;
}

double rkhs_norm(const RkhsExpansion& f) {
    double sq = rkhs_inner_product(f, f);
    if (sq < -kClampThreshold)
        throw numerical_failure("squared norm is negative beyond rounding; kernel not PSD");
    if (sq < 0.0) sq = 0.0;
    return std::sqrt(sq);
}

RkhsExpansion mean_embedding(const Sample& s, const KernelSpec& k) {
    const double w = 1.0 / static_cast<double>(s.size());
    return RkhsExpansion(k, s.points(), Eigen::VectorXd::Constant(s.size(), w));
}

double mmd_squared(const Sample& x, const Sample& y, const KernelSpec& k, MmdVariant v) {
    if (x.dim() != y.dim())
        throw invalid_input("mmd requires samples of equal dimension");
    const Eigen::Index n = x.size();
    const Eigen::Index m = y.size();
    if (v == MmdVariant::unbiased && (n < 2 || m < 2))
        throw invalid_input("unbiased mmd requires at least two points per sample");

    const auto within = [&k](const Sample& s, bool include_diagonal) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            for (Eigen::Index j = 0; j < s.size(); ++j) {
                if (!include_diagonal && i == j) continue;
                acc += detail::kernel_eval_unchecked(k, s.points().row(i), s.points().row(j));
            }
        return acc;
    };

    double cross = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            cross += detail::kernel_eval_unchecked(k, x.points().row(i), y.points().row(j));

    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    if (v == MmdVariant::biased) {
        const double t1 = within(x, true) / (dn * dn);
        const double t2 = within(y, true) / (dm * dm);
        const double t3 = cross / (dn * dm);
        double mmd2 = t1 + t2 - 2.0 * t3;
        if (mmd2 < -kClampThreshold)
            throw numerical_failure("biased mmd below -1e-12; kernel not PSD");
        if (mmd2 < 0.0) mmd2 = 0.0;
        return mmd2;
    }
    const double t1 = within(x, false) / (dn * (dn - 1.0));
    const double t2 = within(y, false) / (dm * (dm - 1.0));
    const double t3 = cross / (dn * dm);
    return t1 + t2 - 2.0 * t3;
}

double kde_bandwidth(const Sample& s, const BandwidthSpec& bw) {
    if (!bw.is_silverman()) return bw.sigma();
    if (s.dim() != 1)
        throw invalid_input("silverman bandwidth is defined for 1-D samples only");
    if (s.size() < 2)
        throw invalid_input("silverman bandwidth requires at least two points");
    const double sd = std::sqrt(sample_variance(s, true)(0));
    if (sd == 0.0)
        throw degenerate_input("silverman bandwidth is zero for a constant sample");
    return 1.06 * sd * std::pow(static_cast<double>(s.size()), -0.2);
}

double kde_density(const Sample& s, const BandwidthSpec& bw, const Eigen::VectorXd& x) {
    if (x.size() != s.dim())
        throw invalid_input("query point dimension does not match the sample");
    const double sigma = kde_bandwidth(s, bw);
    const KernelSpec k = KernelSpec::gaussian(sigma, true);
    const Eigen::RowVectorXd xr = x.transpose();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        acc += detail::kernel_eval_unchecked(k, xr, s.points().row(i));
    return acc / static_cast<double>(s.size());
}

double renyi2_entropy_estimate(const Sample& s, double sigma, const LogBase& b) {
    if (!std::isfinite(sigma) || sigma <= 0.0)
        throw invalid_input("renyi2 bandwidth sigma must be positive");
    // Convolving the KDE with itself doubles the variance, hence sqrt(2)*sigma.
    const KernelSpec k = KernelSpec::gaussian(std::numbers::sqrt2 * sigma, true);
    const Eigen::Index n = s.size();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            acc += detail::kernel_eval_unchecked(k, s.points().row(i), s.points().row(j));
    const double dn = static_cast<double>(n);
    return -b.log(acc / (dn * dn));
}

RkhsExpansion covariance_operator_apply(const Sample& s, const KernelSpec& k,
                                        const RkhsExpansion& f) {
    if (!(f.kernel() == k))
        throw invalid_input("expansion kernel does not match the operator kernel");
    const Eigen::Index n = s.size();
    Eigen::VectorXd fvals(n);
    for (Eigen::Index i = 0; i < n; ++i)
        fvals(i) = expansion_eval(f, s.points().row(i).transpose());
    double fbar = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) fbar += fvals(i);
    fbar /= static_cast<double>(n);
    Eigen::VectorXd coeffs(n);
    for (Eigen::Index i = 0; i < n; ++i)
        coeffs(i) = (fvals(i) - fbar) / static_cast<double>(n);
    return RkhsExpansion(k, s.points(), std::move(coeffs));
}

double hs_norm_empirical(const KernelSpec& k, const Sample& s) {
    const Eigen::Index n = s.size();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v =
                detail::kernel_eval_unchecked(k, s.points().row(i), s.points().row(j));
            acc += v * v;
        }
    const double dn = static_cast<double>(n);
    return std::sqrt(acc / (dn * dn));
}

}  // namespace rkhsinfo
