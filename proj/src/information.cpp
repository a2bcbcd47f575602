#include "rkhsinfo/information.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace rkhsinfo {

namespace {

constexpr double kPmfSumTolerance = 1e-9;
constexpr double kOrderOneDispatch = 1e-9;
constexpr double kClampThreshold = 1e-12;

void check_probs(const std::vector<double>& probs, bool renormalize,
                 std::vector<double>& out) {
    if (probs.empty())
        throw invalid_input("pmf must have at least one outcome");
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p) || p < 0.0)
            throw invalid_input("pmf probabilities must be finite and nonnegative");
        sum += p;
    }
    if (renormalize) {
        if (sum <= 0.0)
            throw invalid_input("cannot renormalize a pmf with zero total mass");
        out = probs;
        for (double& p : out) p /= sum;
        return;
    }
    if (std::abs(sum - 1.0) > kPmfSumTolerance) {
        std::ostringstream msg;
        msg << "probabilities sum to " << sum << ", expected 1 within 1e-9";
        throw invalid_input(msg.str());
    }
    out = probs;
}

void check_distinct(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw invalid_input(std::string("duplicate ") + what + " label: " + l);
}

}  // namespace

LogBase::LogBase(double base) : base_(base) {
    if (!std::isfinite(base) || base <= 0.0 || base == 1.0)
        throw invalid_input("log base must be positive and different from 1");
    inv_ln_base_ = 1.0 / std::log(base);
}

LogBase LogBase::nats() { return LogBase(std::numbers::e); }

DiscretePmf::DiscretePmf(std::vector<std::string> outcomes, std::vector<double> probs,
                         bool renormalize)
    : outcomes_(std::move(outcomes)) {
    if (outcomes_.size() != probs.size())
        throw invalid_input("pmf outcome and probability counts differ");
    check_distinct(outcomes_, "outcome");
    check_probs(probs, renormalize, probs_);
}

JointPmf::JointPmf(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                   Eigen::MatrixXd probs)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      probs_(std::move(probs)) {
    if (probs_.rows() < 1 || probs_.cols() < 1)
        throw invalid_input("joint pmf must be at least 1x1");
    if (static_cast<Eigen::Index>(row_labels_.size()) != probs_.rows() ||
        static_cast<Eigen::Index>(col_labels_.size()) != probs_.cols())
        throw invalid_input("joint pmf label counts do not match the matrix");
    check_distinct(row_labels_, "row");
    check_distinct(col_labels_, "column");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < probs_.rows(); ++i)
        for (Eigen::Index j = 0; j < probs_.cols(); ++j) {
            const double p = probs_(i, j);
            if (!std::isfinite(p) || p < 0.0)
                throw invalid_input("joint pmf entries must be finite and nonnegative");
            sum += p;
        }
    if (std::abs(sum - 1.0) > kPmfSumTolerance) {
        std::ostringstream msg;
        msg << "joint probabilities sum to " << sum << ", expected 1 within 1e-9";
        throw invalid_input(msg.str());
    }
}

KnGenerator KnGenerator::power(double rho) {
    if (!std::isfinite(rho) || rho == 0.0)
        throw invalid_input("power generator requires a nonzero exponent");
    return KnGenerator(Family::power, rho);
}

KnGenerator KnGenerator::exponential(double lambda) {
    if (!std::isfinite(lambda) || lambda == 0.0)
        throw invalid_input("exponential generator requires a nonzero rate");
    return KnGenerator(Family::exponential, lambda);
}

std::pair<DiscretePmf, DiscretePmf> marginals(const JointPmf& j) {
    std::vector<double> rows(static_cast<std::size_t>(j.rows()), 0.0);
    std::vector<double> cols(static_cast<std::size_t>(j.cols()), 0.0);
    for (Eigen::Index r = 0; r < j.rows(); ++r)
        for (Eigen::Index c = 0; c < j.cols(); ++c) {
            rows[static_cast<std::size_t>(r)] += j.probs()(r, c);
            cols[static_cast<std::size_t>(c)] += j.probs()(r, c);
        }
    // Renormalize so the marginals satisfy the pmf invariant even when the
    // joint sits at the edge of its 1e-9 tolerance.
    return {DiscretePmf(j.row_labels(), rows, true), DiscretePmf(j.col_labels(), cols, true)};
}

namespace {

// -sum p log_b p with the 0 log 0 = 0 convention.
double entropy_of_terms(const double* p, std::size_t n, const LogBase& b) {
    double h = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] > 0.0) h -= p[i] * b.log(p[i]);
    return h;
}

}  // namespace

double shannon_entropy(const DiscretePmf& p, const LogBase& b) {
    return entropy_of_terms(p.probs().data(), p.size(), b);
}

double joint_entropy(const JointPmf& j, const LogBase& b) {
    double h = 0.0;
    for (Eigen::Index r = 0; r < j.rows(); ++r)
        for (Eigen::Index c = 0; c < j.cols(); ++c) {
            const double p = j.probs()(r, c);
            if (p > 0.0) h -= p * b.log(p);
        }
    return h;
}

double conditional_entropy(const JointPmf& j, const LogBase& b) {
    return joint_entropy(j, b) - shannon_entropy(marginals(j).first, b);
}

double mutual_information(const JointPmf& j, const LogBase& b) {
    const auto [px, py] = marginals(j);
    double mi = shannon_entropy(px, b) + shannon_entropy(py, b) - joint_entropy(j, b);
    if (mi < 0.0 && mi >= -kClampThreshold) mi = 0.0;
    return mi;
}

double kl_divergence(const DiscretePmf& p, const DiscretePmf& q, const LogBase& b) {
    if (p.size() != q.size())
        throw invalid_input("KL divergence requires the same outcome set");
    std::unordered_map<std::string, double> qmap;
    for (std::size_t i = 0; i < q.size(); ++i)
        qmap.emplace(q.outcomes()[i], q.prob(i));
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double pi = p.prob(i);
        if (pi == 0.0) continue;
        const auto it = qmap.find(p.outcomes()[i]);
        if (it == qmap.end())
            throw invalid_input("KL divergence: outcome '" + p.outcomes()[i] +
                                "' missing from the second pmf");
        const double qi = it->second;
        if (qi == 0.0) return std::numeric_limits<double>::infinity();
        d += pi * b.log(pi / qi);
    }
    return d;
}

double renyi_entropy(const DiscretePmf& p, double alpha, const LogBase& b) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw invalid_input("Renyi order alpha must be positive");
    if (std::abs(alpha - 1.0) <= kOrderOneDispatch)
        return shannon_entropy(p, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.prob(i) > 0.0) sum += std::pow(p.prob(i), alpha);
    return b.log(sum) / (1.0 - alpha);
}

double tsallis_entropy(const DiscretePmf& p, double q) {
    if (!std::isfinite(q) || q <= 0.0)
        throw invalid_input("Tsallis order q must be positive");
    if (std::abs(q - 1.0) <= kOrderOneDispatch)
        return shannon_entropy(p, LogBase::nats());
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.prob(i) > 0.0) sum += std::pow(p.prob(i), q);
    return (1.0 - sum) / (q - 1.0);
}

namespace {

bool is_integer(double x) { return std::floor(x) == x; }

// Strict monotonicity of a^rho on the convex hull of the values.
void check_power_domain(const std::vector<double>& values, double rho) {
    const bool odd_positive_int = is_integer(rho) && rho > 0.0 &&
                                  static_cast<long long>(rho) % 2 != 0;
    if (odd_positive_int) return;  // monotone on all of R
    for (double v : values) {
        if (v < 0.0)
            throw invalid_input(
                "power generator is not invertible over mixed-sign or negative values");
        if (v == 0.0 && rho < 0.0)
            throw invalid_input("negative power generator requires strictly positive values");
    }
}

}  // namespace

double kn_mean(const std::vector<double>& values, const DiscretePmf& p,
               const KnGenerator& g) {
    if (values.size() != p.size())
        throw invalid_input("kn_mean requires one value per pmf outcome");
    for (double v : values)
        if (!std::isfinite(v)) throw invalid_input("kn_mean values must be finite");

    switch (g.family()) {
        case KnGenerator::Family::identity: {
            double acc = 0.0;
            for (std::size_t i = 0; i < values.size(); ++i)
                acc += p.prob(i) * values[i];
            return acc;
        }
        case KnGenerator::Family::power: {
            const double rho = g.parameter();
            check_power_domain(values, rho);
            double acc = 0.0;
            for (std::size_t i = 0; i < values.size(); ++i)
                acc += p.prob(i) * std::pow(values[i], rho);
            // Signed root handles the odd-integer case over negative values.
            return std::copysign(std::pow(std::abs(acc), 1.0 / rho), acc);
        }
        case KnGenerator::Family::exponential: {
            const double lambda = g.parameter();
            double acc = 0.0;
            for (std::size_t i = 0; i < values.size(); ++i)
                acc += p.prob(i) * std::exp(lambda * values[i]);
            return std::log(acc) / lambda;
        }
    }
    throw invalid_input("unknown generator family");
}

}  // namespace rkhsinfo
