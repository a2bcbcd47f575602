#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rkhsinfo/rkhs.hpp"

using namespace rkhsinfo;

namespace {

Eigen::VectorXd vec1(double x) {
    Eigen::VectorXd v(1);
    v(0) = x;
    return v;
}

RkhsExpansion atom(const KernelSpec& k, const Eigen::VectorXd& center, double coeff = 1.0) {
    Eigen::MatrixXd c(1, center.size());
    c.row(0) = center.transpose();
    return RkhsExpansion(k, c, Eigen::VectorXd::Constant(1, coeff));
}

Sample random_points(std::mt19937_64& rng, int n, int d, double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    Eigen::MatrixXd m(n, d);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = dist(rng);
    return Sample(m);
}

RkhsExpansion random_expansion(std::mt19937_64& rng, const KernelSpec& k, int max_terms,
                               int d) {
    std::normal_distribution<double> dist;
    const int n = 1 + int(rng() % static_cast<unsigned>(max_terms));
    Eigen::MatrixXd centers(n, d);
    Eigen::VectorXd coeffs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) centers(i, j) = dist(rng);
        coeffs(i) = 2.0 * dist(rng);
    }
    return RkhsExpansion(k, centers, coeffs);
}

// Sum of all Gram entries, the direct route to |mean embedding|^2 * N^2.
double gram_total(const KernelSpec& k, const Sample& s) {
    const GramMatrix gm = gram_matrix(k, s);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < gm.size(); ++i)
        for (Eigen::Index j = 0; j < gm.size(); ++j) acc += gm.values()(i, j);
    return acc;
}

}  // namespace

TEST_CASE("expansion_eval") {
    const KernelSpec k = KernelSpec::gaussian(1.0);
    CHECK(expansion_eval(RkhsExpansion::zero(k), vec1(0.3)) == 0.0);
    CHECK(expansion_eval(RkhsExpansion::zero(k), Eigen::VectorXd::Zero(5)) == 0.0);

    const RkhsExpansion one = atom(k, vec1(0.7));
    CHECK(expansion_eval(one, vec1(0.7)) == doctest::Approx(1.0).epsilon(1e-15));

    // f = 2 k(0,.) - k(1,.) evaluated at 0: 2 - e^{-1/2}.
    Eigen::MatrixXd centers(2, 1);
    centers << 0.0, 1.0;
    Eigen::VectorXd coeffs(2);
    coeffs << 2.0, -1.0;
    const RkhsExpansion f(k, centers, coeffs);
    CHECK(expansion_eval(f, vec1(0.0)) ==
          doctest::Approx(2.0 - std::exp(-0.5)).epsilon(1e-15));

    CHECK_THROWS_AS(expansion_eval(f, Eigen::VectorXd::Zero(2)), invalid_input);
}

TEST_CASE("rkhs_inner_product reproduces the kernel on sections") {
    std::mt19937_64 rng(37);
    std::normal_distribution<double> dist;
    const KernelSpec k = KernelSpec::gaussian(0.8);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::VectorXd x(2), y(2);
        for (int i = 0; i < 2; ++i) {
            x(i) = dist(rng);
            y(i) = dist(rng);
        }
        CHECK(rkhs_inner_product(atom(k, x), atom(k, y)) ==
              doctest::Approx(kernel_eval(k, x, y)).epsilon(1e-15));
    }
    CHECK(rkhs_inner_product(atom(k, vec1(1.0)), RkhsExpansion::zero(k)) == 0.0);
    CHECK_THROWS_AS(
        rkhs_inner_product(atom(k, vec1(1.0)), atom(KernelSpec::gaussian(0.9), vec1(1.0))),
        invalid_input);
}

TEST_CASE("reproducing property on random expansions") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> dist;
    const KernelSpec k = KernelSpec::gaussian(1.1);
    for (int trial = 0; trial < 200; ++trial) {
        const RkhsExpansion f = random_expansion(rng, k, 20, 2);
        Eigen::VectorXd x(2);
        x << dist(rng), dist(rng);
        CHECK(std::abs(rkhs_inner_product(f, atom(k, x)) - expansion_eval(f, x)) <= 1e-12);
    }
}

TEST_CASE("rkhs_norm closed forms") {
    const KernelSpec k = KernelSpec::gaussian(1.0);
    CHECK(rkhs_norm(atom(k, vec1(2.0))) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rkhs_norm(RkhsExpansion::zero(k)) == 0.0);

    Eigen::MatrixXd centers(2, 1);
    centers << 0.0, 1.0;
    const RkhsExpansion f(k, centers, Eigen::VectorXd::Ones(2));
    CHECK(rkhs_norm(f) ==
          doctest::Approx(std::sqrt(2.0 + 2.0 * std::exp(-0.5))).epsilon(1e-15));
}

TEST_CASE("norm geometry: Cauchy-Schwarz, parallelogram, Pythagoras") {
    std::mt19937_64 rng(43);
    const KernelSpec k = KernelSpec::gaussian(0.9);
    for (int trial = 0; trial < 60; ++trial) {
        const RkhsExpansion f = random_expansion(rng, k, 8, 2);
        const RkhsExpansion g = random_expansion(rng, k, 8, 2);

        const double fg = rkhs_inner_product(f, g);
        const double nf = rkhs_norm(f);
        const double ng = rkhs_norm(g);
        CHECK(std::abs(fg) <= nf * ng + 1e-10);

        // Combined expansions share the centers of both terms.
        Eigen::MatrixXd centers(f.terms() + g.terms(), 2);
        centers << f.centers(), g.centers();
        Eigen::VectorXd plus(f.terms() + g.terms());
        plus << f.coeffs(), g.coeffs();
        Eigen::VectorXd minus(f.terms() + g.terms());
        minus << f.coeffs(), -g.coeffs();
        const double norm_plus = rkhs_norm(RkhsExpansion(k, centers, plus));
        const double norm_minus = rkhs_norm(RkhsExpansion(k, centers, minus));
        CHECK(norm_plus * norm_plus + norm_minus * norm_minus ==
              doctest::Approx(2.0 * nf * nf + 2.0 * ng * ng).epsilon(1e-10));

        // Orthogonalize g against f and verify the right-triangle identity.
        if (nf > 1e-6) {
            const double proj = fg / (nf * nf);
            Eigen::VectorXd orth(f.terms() + g.terms());
            orth << -proj * f.coeffs(), g.coeffs();
            const RkhsExpansion gperp(k, centers, orth);
            Eigen::VectorXd sum(f.terms() + g.terms());
            sum << (1.0 - proj) * f.coeffs(), g.coeffs();
            const double lhs = rkhs_norm(RkhsExpansion(k, centers, sum));
            const double rhs = nf * nf + rkhs_norm(gperp) * rkhs_norm(gperp);
            CHECK(lhs * lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("mean_embedding") {
    const KernelSpec k = KernelSpec::gaussian(1.0);
    const RkhsExpansion single = mean_embedding(Sample::univariate({0.4}), k);
    CHECK(single.terms() == 1);
    CHECK(single.coeffs()(0) == 1.0);

    const RkhsExpansion dup = mean_embedding(Sample::univariate({0.4, 0.4}), k);
    CHECK(dup.coeffs()(0) == 0.5);
    CHECK(dup.coeffs()(1) == 0.5);
    CHECK(expansion_eval(dup, vec1(1.3)) ==
          doctest::Approx(expansion_eval(single, vec1(1.3))).epsilon(1e-15));

    // |mu_hat|^2 equals the Gram-sum average.
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const Sample s = random_points(rng, 2 + int(rng() % 30), 2);
        const RkhsExpansion mu = mean_embedding(s, k);
        const double n = static_cast<double>(s.size());
        CHECK(std::abs(rkhs_inner_product(mu, mu) - gram_total(k, s) / (n * n)) <= 1e-12);
    }
}

TEST_CASE("mmd_squared closed forms and identities") {
    const KernelSpec k = KernelSpec::gaussian(1.0);
    const Sample same = Sample::univariate({0.1, 0.5, 0.9});
    CHECK(mmd_squared(same, same, k, MmdVariant::biased) <= 1e-12);

    // Singletons: 2 - 2 k(a,b).
    const Sample a = Sample::univariate({0.0});
    const Sample b = Sample::univariate({1.5});
    CHECK(mmd_squared(a, b, k, MmdVariant::biased) ==
          doctest::Approx(2.0 - 2.0 * std::exp(-1.5 * 1.5 / 2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(mmd_squared(a, b, k, MmdVariant::unbiased), invalid_input);
    const Sample flat2 = Sample::univariate({0.0, 1.0});
    CHECK_THROWS_AS(
        mmd_squared(flat2, Sample(Eigen::MatrixXd::Zero(2, 2)), k, MmdVariant::biased),
        invalid_input);
}

TEST_CASE("biased mmd equals the squared embedding distance") {
    std::mt19937_64 rng(53);
    const KernelSpec k = KernelSpec::gaussian(0.8);
    for (int trial = 0; trial < 30; ++trial) {
        const Sample x = random_points(rng, 2 + int(rng() % 20), 2);
        const Sample y = random_points(rng, 2 + int(rng() % 20), 2, 1.5);
        const double direct = mmd_squared(x, y, k, MmdVariant::biased);

        // Independent route: the difference expansion through rkhs_norm.
        Eigen::MatrixXd centers(x.size() + y.size(), 2);
        centers << x.points(), y.points();
        Eigen::VectorXd coeffs(x.size() + y.size());
        coeffs << Eigen::VectorXd::Constant(x.size(), 1.0 / double(x.size())),
            Eigen::VectorXd::Constant(y.size(), -1.0 / double(y.size()));
        const double nrm = rkhs_norm(RkhsExpansion(k, centers, coeffs));
        CHECK(std::abs(direct - nrm * nrm) <= 1e-12);

        // Symmetry is exact for equal-size samples and near-exact otherwise.
        CHECK(mmd_squared(y, x, k, MmdVariant::biased) ==
              doctest::Approx(direct).epsilon(1e-14));
    }
}

TEST_CASE("unbiased mmd matches a direct off-diagonal oracle") {
    std::mt19937_64 rng(59);
    const KernelSpec k = KernelSpec::gaussian(1.0);
    const Sample x = random_points(rng, 12, 1);
    const Sample y = random_points(rng, 9, 1, 2.0);

    double xx = 0.0, yy = 0.0, xy = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        for (Eigen::Index j = 0; j < x.size(); ++j)
            if (i != j)
                xx += kernel_eval(k, x.point(i).transpose(), x.point(j).transpose());
    for (Eigen::Index i = 0; i < y.size(); ++i)
        for (Eigen::Index j = 0; j < y.size(); ++j)
            if (i != j)
                yy += kernel_eval(k, y.point(i).transpose(), y.point(j).transpose());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        for (Eigen::Index j = 0; j < y.size(); ++j)
            xy += kernel_eval(k, x.point(i).transpose(), y.point(j).transpose());
    const double nx = 12.0, ny = 9.0;
    const double oracle = xx / (nx * (nx - 1.0)) + yy / (ny * (ny - 1.0)) -
                          2.0 * xy / (nx * ny);
    CHECK(mmd_squared(x, y, k, MmdVariant::unbiased) ==
          doctest::Approx(oracle).epsilon(1e-13));
}

TEST_CASE("kde_density closed form and positivity") {
    const Sample one = Sample::univariate({0.25});
    CHECK(kde_density(one, BandwidthSpec::fixed(1.0), vec1(0.25)) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));

    std::mt19937_64 rng(61);
    std::normal_distribution<double> dist;
    const Sample s = random_points(rng, 25, 1);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(kde_density(s, BandwidthSpec::fixed(0.5), vec1(3.0 * dist(rng))) >= 0.0);
}

TEST_CASE("kde integrates to one (trapezoid quadrature oracle)") {
    std::mt19937_64 rng(67);
    const Sample s = random_points(rng, 40, 1, 1.3);
    const BandwidthSpec bw = BandwidthSpec::fixed(0.6);
    const double sigma = kde_bandwidth(s, bw);
    const double lo = s.points().minCoeff() - 8.0 * sigma;
    const double hi = s.points().maxCoeff() + 8.0 * sigma;
    const int nodes = 10000;
    const double h = (hi - lo) / (nodes - 1);
    double integral = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double w = (i == 0 || i == nodes - 1) ? 0.5 : 1.0;
        integral += w * kde_density(s, bw, vec1(lo + i * h));
    }
    integral *= h;
    CHECK(std::abs(integral - 1.0) <= 1e-3);
}

TEST_CASE("silverman bandwidth") {
    const Sample s = Sample::univariate({1.0, 2.0, 3.0, 4.0, 5.0});
    const double sd = std::sqrt(2.5);  // 1/(N-1) variance of {1..5}
    CHECK(kde_bandwidth(s, BandwidthSpec::silverman()) ==
          doctest::Approx(1.06 * sd * std::pow(5.0, -0.2)).epsilon(1e-14));
    CHECK_THROWS_AS(kde_bandwidth(Sample::univariate({2, 2, 2}), BandwidthSpec::silverman()),
                    degenerate_input);
    CHECK_THROWS_AS(kde_bandwidth(Sample::univariate({2}), BandwidthSpec::silverman()),
                    invalid_input);
    CHECK_THROWS_AS(
        kde_bandwidth(Sample(Eigen::MatrixXd::Zero(3, 2)), BandwidthSpec::silverman()),
        invalid_input);
    CHECK_THROWS_AS(BandwidthSpec::fixed(0.0), invalid_input);
}

TEST_CASE("renyi2 estimate: closed form, identity, monotone spreading") {
    // Single point: -log of the normalized kernel at zero distance with
    // bandwidth sqrt(2): log(2 sqrt(pi)).
    const double h1 = renyi2_entropy_estimate(Sample::univariate({0.0}), 1.0,
                                              LogBase::nats());
    CHECK(h1 == doctest::Approx(std::log(2.0 * std::sqrt(std::numbers::pi)))
                    .epsilon(1e-14));
    CHECK(h1 == doctest::Approx(1.2655121234846454).epsilon(1e-13));

    CHECK_THROWS_AS(renyi2_entropy_estimate(Sample::univariate({0.0}), 0.0,
                                            LogBase::nats()),
                    invalid_input);

    // Gram-sum route equals the embedding-norm route.
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const Sample s = random_points(rng, 2 + int(rng() % 40), 1 + int(rng() % 3));
        const double sigma = 0.5 + 0.1 * double(rng() % 16);
        const double direct = renyi2_entropy_estimate(s, sigma, LogBase::nats());
        const KernelSpec k = KernelSpec::gaussian(std::numbers::sqrt2 * sigma, true);
        const RkhsExpansion mu = mean_embedding(s, k);
        const double via_norm = -std::log(rkhs_inner_product(mu, mu));
        CHECK(std::abs(direct - via_norm) <= 1e-12);
    }

    // Spreading three points apart strictly increases the estimate.
    double prev = -1e300;
    for (double gap : {0.5, 1.0, 2.0, 4.0}) {
        const double h = renyi2_entropy_estimate(
            Sample::univariate({-gap, 0.0, gap}), 1.0, LogBase::nats());
        CHECK(h > prev);
        prev = h;
    }
}

TEST_CASE("covariance_operator_apply") {
    const KernelSpec k = KernelSpec::gaussian(1.0);

    // Single point: centering kills the only coefficient.
    const RkhsExpansion f1 = atom(k, vec1(0.0), 2.0);
    const RkhsExpansion out1 =
        covariance_operator_apply(Sample::univariate({1.0}), k, f1);
    CHECK(out1.terms() == 1);
    CHECK(out1.coeffs()(0) == 0.0);

    // f constant on the sample (symmetric points, centered bump).
    const Sample sym = Sample::univariate({-1.0, 1.0});
    const RkhsExpansion bump = atom(k, vec1(0.0));
    const RkhsExpansion out2 = covariance_operator_apply(sym, k, bump);
    CHECK(out2.coeffs()(0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(out2.coeffs()(1) == doctest::Approx(0.0).epsilon(1e-15));

    CHECK_THROWS_AS(
        covariance_operator_apply(sym, KernelSpec::gaussian(2.0), bump), invalid_input);
}

TEST_CASE("covariance operator: coefficients sum to zero, self-adjoint witness") {
    std::mt19937_64 rng(73);
    const KernelSpec k = KernelSpec::gaussian(1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const Sample s = random_points(rng, 2 + int(rng() % 20), 2);
        const RkhsExpansion f = random_expansion(rng, k, 6, 2);
        const RkhsExpansion g = random_expansion(rng, k, 6, 2);
        const RkhsExpansion cf = covariance_operator_apply(s, k, f);

        double coeff_sum = 0.0;
        for (Eigen::Index i = 0; i < cf.terms(); ++i) coeff_sum += cf.coeffs()(i);
        CHECK(std::abs(coeff_sum) <= 1e-14);

        // <g, C f> equals the centered empirical covariance of f and g values.
        const double n = static_cast<double>(s.size());
        double fbar = 0.0, gbar = 0.0;
        for (Eigen::Index i = 0; i < s.size(); ++i) {
            fbar += expansion_eval(f, s.point(i).transpose());
            gbar += expansion_eval(g, s.point(i).transpose());
        }
        fbar /= n;
        gbar /= n;
        double oracle = 0.0;
        for (Eigen::Index i = 0; i < s.size(); ++i) {
            oracle += (expansion_eval(f, s.point(i).transpose()) - fbar) *
                      (expansion_eval(g, s.point(i).transpose()) - gbar);
        }
        oracle /= n;
        CHECK(std::abs(rkhs_inner_product(g, cf) - oracle) <= 1e-12);
    }
}

TEST_CASE("hs_norm_empirical") {
    CHECK(hs_norm_empirical(KernelSpec::gaussian(1.0), Sample::univariate({0.7})) ==
          doctest::Approx(1.0).epsilon(1e-15));

    // Linear kernel on {e1, e2}: entries {1,0,0,1}, norm sqrt(2/4).
    Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(2, 2);
    CHECK(hs_norm_empirical(KernelSpec::linear(), Sample(basis)) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    // Equals the Frobenius norm of the Gram matrix over N.
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        const Sample s = random_points(rng, 2 + int(rng() % 25), 3);
        const KernelSpec k = KernelSpec::laplacian(1.2);
        const double frob = gram_matrix(k, s).values().norm();
        CHECK(std::abs(hs_norm_empirical(k, s) - frob / double(s.size())) <= 1e-12);
    }
}
