#pragma once

#include <Eigen/Core>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "rkhsinfo/errors.hpp"

namespace rkhsinfo {

// Logarithm base for information measures: b = 2 for bits, b = e for nats.
// Any base > 0, != 1 is accepted.
class LogBase {
public:
    explicit LogBase(double base);

    static LogBase bits() { return LogBase(2.0); }
    static LogBase nats();

    double base() const noexcept { return base_; }
    double log(double x) const { return std::log(x) * inv_ln_base_; }

private:
    double base_;
    double inv_ln_base_;
};

// Finite discrete distribution: distinct outcome labels with probabilities
// that are nonnegative and sum to 1 within 1e-9. Pass renormalize = true to
// rescale an off-by-a-bit table instead of rejecting it.
class DiscretePmf {
public:
    DiscretePmf(std::vector<std::string> outcomes, std::vector<double> probs,
                bool renormalize = false);

    std::size_t size() const noexcept { return probs_.size(); }
    const std::vector<std::string>& outcomes() const noexcept { return outcomes_; }
    const std::vector<double>& probs() const noexcept { return probs_; }
    double prob(std::size_t i) const { return probs_[i]; }

private:
    std::vector<std::string> outcomes_;
    std::vector<double> probs_;
};

// Joint distribution of a pair (X, Y): entries p(x, y) >= 0 summing to 1
// within 1e-9. Rows index X outcomes, columns index Y outcomes.
class JointPmf {
public:
    JointPmf(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
             Eigen::MatrixXd probs);

    Eigen::Index rows() const noexcept { return probs_.rows(); }
    Eigen::Index cols() const noexcept { return probs_.cols(); }
    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
    const Eigen::MatrixXd& probs() const noexcept { return probs_; }

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    Eigen::MatrixXd probs_;
};

// Generator g for quasi-arithmetic means: identity, power (g(a) = a^rho,
// rho != 0) or exponential (g(a) = exp(lambda a), lambda != 0).
class KnGenerator {
public:
    enum class Family { identity, power, exponential };

    static KnGenerator identity() { return KnGenerator(Family::identity, 0.0); }
    static KnGenerator power(double rho);
    static KnGenerator exponential(double lambda);

    Family family() const noexcept { return family_; }
    double parameter() const noexcept { return param_; }

private:
    KnGenerator(Family f, double p) : family_(f), param_(p) {}

    Family family_;
    double param_;
};

// Marginal distributions of X (row sums) and Y (column sums).
std::pair<DiscretePmf, DiscretePmf> marginals(const JointPmf& j);

// H(X) = -sum p(x) log_b p(x), with 0 log 0 = 0.
double shannon_entropy(const DiscretePmf& p, const LogBase& b);

// H(X,Y) = -sum p(x,y) log_b p(x,y).
double joint_entropy(const JointPmf& j, const LogBase& b);

// H(Y|X) = H(X,Y) - H(X).
double conditional_entropy(const JointPmf& j, const LogBase& b);

// I(X;Y) = H(X) + H(Y) - H(X,Y); rounding residues in [-1e-12, 0) clamp to 0.
double mutual_information(const JointPmf& j, const LogBase& b);

// KL(P||Q) = sum p log_b (p/q) after aligning q to p's outcome labels.
// Terms with p = 0 contribute 0; any outcome with p > 0, q = 0 yields +inf.
double kl_divergence(const DiscretePmf& p, const DiscretePmf& q, const LogBase& b);

// Renyi entropy of order alpha > 0: (1/(1-alpha)) log_b sum p^alpha.
// |alpha - 1| <= 1e-9 dispatches to shannon_entropy (the alpha -> 1 limit).
double renyi_entropy(const DiscretePmf& p, double alpha, const LogBase& b);

// Tsallis entropy (1 - sum p^q)/(q - 1) for q > 0; |q - 1| <= 1e-9
// dispatches to Shannon entropy in nats. The value itself is base-free.
double tsallis_entropy(const DiscretePmf& p, double q);

// Kolmogorov-Nagumo mean g^{-1}( sum p(a) g(a) ) of `values` weighted by p.
// Requires g strictly monotone on the range of the values; the identity
// generator returns the plain weighted mean exactly.
double kn_mean(const std::vector<double>& values, const DiscretePmf& p,
               const KnGenerator& g);

}  // namespace rkhsinfo
