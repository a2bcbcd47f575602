#include "rkhsinfo/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <exception>

#include "rkhsinfo/csv_io.hpp"
#include "rkhsinfo/estimation.hpp"
#include "rkhsinfo/information.hpp"
#include "rkhsinfo/kernels.hpp"
#include "rkhsinfo/l2_geometry.hpp"
#include "rkhsinfo/result_document.hpp"
#include "rkhsinfo/rkhs.hpp"
#include "rkhsinfo/sample.hpp"

namespace rkhsinfo {

namespace {

std::optional<double> parse_number(const std::string& s) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

LogBase parse_base(const std::string& s) {
    if (s == "e") return LogBase::nats();
    const auto v = parse_number(s);
    if (!v) throw invalid_input("invalid log base '" + s + "'");
    return LogBase(*v);
}

BandwidthSpec parse_bandwidth(const std::string& s) {
    if (s == "silverman") return BandwidthSpec::silverman();
    const auto v = parse_number(s);
    if (!v) throw invalid_input("invalid bandwidth '" + s + "' (expected a real or 'silverman')");
    return BandwidthSpec::fixed(*v);
}

KernelSpec kernel_from_config(const CliConfig& cfg) {
    if (cfg.kernel == "linear") return KernelSpec::linear();
    if (cfg.kernel == "poly") return KernelSpec::polynomial(cfg.poly_c, cfg.degree);
    if (cfg.kernel == "gaussian") return KernelSpec::gaussian(cfg.sigma, cfg.normalized);
    if (cfg.kernel == "laplacian") return KernelSpec::laplacian(cfg.sigma);
    throw invalid_input("unknown kernel family '" + cfg.kernel + "'");
}

void echo_kernel_params(ResultDocument& doc, const CliConfig& cfg) {
    doc.add_param("kernel", cfg.kernel);
    if (cfg.kernel == "gaussian" || cfg.kernel == "laplacian")
        doc.add_param("sigma", cfg.sigma);
    if (cfg.kernel == "poly") {
        doc.add_param("c", cfg.poly_c);
        doc.add_param("degree", static_cast<std::int64_t>(cfg.degree));
    }
    if (cfg.kernel == "gaussian") doc.add_param("normalized", cfg.normalized);
}

void require_inputs(const CliConfig& cfg, std::size_t lo, std::size_t hi) {
    if (cfg.inputs.size() < lo || cfg.inputs.size() > hi)
        throw invalid_input("command '" + cfg.command + "' expects " + std::to_string(lo) +
                            (hi > lo ? "-" + std::to_string(hi) : "") + " input file(s), got " +
                            std::to_string(cfg.inputs.size()));
}

ResultDocument run_gram(const CliConfig& cfg) {
    require_inputs(cfg, 1, 1);
    const Sample s = read_sample_csv(cfg.inputs[0]);
    const KernelSpec k = kernel_from_config(cfg);
    const GramMatrix gm = gram_matrix(k, s);
    ResultDocument doc("gram");
    echo_kernel_params(doc, cfg);
    doc.add_param("seed", cfg.seed);
    doc.add_result("n", static_cast<std::int64_t>(s.size()));
    doc.add_result("gram", gm.values());
    return doc;
}

ResultDocument run_psd(const CliConfig& cfg) {
    require_inputs(cfg, 1, 1);
    const Sample s = read_sample_csv(cfg.inputs[0]);
    const KernelSpec k = kernel_from_config(cfg);
    const GramMatrix gm = gram_matrix(k, s);
    const double tol = default_psd_tolerance(gm);
    const PsdReport report = psd_check(gm, tol);
    ResultDocument doc("psd");
    echo_kernel_params(doc, cfg);
    doc.add_param("seed", cfg.seed);
    doc.add_result("n", static_cast<std::int64_t>(s.size()));
    doc.add_result("tol", tol);
    doc.add_result("min_eigenvalue", report.min_eigenvalue);
    doc.add_result("is_psd", report.is_psd);
    return doc;
}

ResultDocument run_kde(const CliConfig& cfg) {
    require_inputs(cfg, 1, 2);
    const Sample data = read_sample_csv(cfg.inputs[0]);
    const BandwidthSpec bw = parse_bandwidth(cfg.bandwidth);
    const Sample queries =
        cfg.inputs.size() == 2 ? read_sample_csv(cfg.inputs[1]) : data;
    ResultDocument doc("kde");
    doc.add_param("bandwidth", cfg.bandwidth);
    doc.add_param("seed", cfg.seed);
    doc.add_result("sigma", kde_bandwidth(data, bw));
    Eigen::VectorXd density(queries.size());
    for (Eigen::Index i = 0; i < queries.size(); ++i)
        density(i) = kde_density(data, bw, queries.point(i).transpose());
    doc.add_result("density", density);
    return doc;
}

ResultDocument run_entropy_discrete(const CliConfig& cfg) {
    require_inputs(cfg, 1, 1);
    const LogBase base = parse_base(cfg.base);
    ResultDocument doc("entropy-discrete");
    doc.add_param("base", cfg.base);
    if (cfg.joint) {
        doc.add_param("joint", true);
        doc.add_param("seed", cfg.seed);
        const JointPmf j = read_joint_pmf_csv(cfg.inputs[0]);
        const auto [px, py] = marginals(j);
        doc.add_result("entropy_x", shannon_entropy(px, base));
        doc.add_result("entropy_y", shannon_entropy(py, base));
        doc.add_result("joint_entropy", joint_entropy(j, base));
        doc.add_result("conditional_entropy", conditional_entropy(j, base));
        doc.add_result("mutual_information", mutual_information(j, base));
        return doc;
    }
    if (cfg.alpha && cfg.q)
        throw invalid_input("--alpha and --q are mutually exclusive");
    const DiscretePmf p = read_discrete_pmf_csv(cfg.inputs[0]);
    if (cfg.alpha) {
        doc.add_param("alpha", *cfg.alpha);
        doc.add_param("seed", cfg.seed);
        doc.add_result("renyi_entropy", renyi_entropy(p, *cfg.alpha, base));
    } else if (cfg.q) {
        doc.add_param("q", *cfg.q);
        doc.add_param("seed", cfg.seed);
        doc.add_result("tsallis_entropy", tsallis_entropy(p, *cfg.q));
    } else {
        doc.add_param("seed", cfg.seed);
        doc.add_result("entropy", shannon_entropy(p, base));
    }
    return doc;
}

ResultDocument run_renyi2(const CliConfig& cfg) {
    require_inputs(cfg, 1, 1);
    const Sample s = read_sample_csv(cfg.inputs[0]);
    ResultDocument doc("renyi2");
    doc.add_param("sigma", cfg.sigma);
    doc.add_param("base", cfg.base);
    doc.add_param("seed", cfg.seed);
    doc.add_result("renyi2", renyi2_entropy_estimate(s, cfg.sigma, parse_base(cfg.base)));
    return doc;
}

ResultDocument run_mmd(const CliConfig& cfg) {
    require_inputs(cfg, 2, 2);
    const Sample x = read_sample_csv(cfg.inputs[0]);
    const Sample y = read_sample_csv(cfg.inputs[1]);
    const KernelSpec k = kernel_from_config(cfg);
    MmdVariant variant;
    if (cfg.variant == "biased")
        variant = MmdVariant::biased;
    else if (cfg.variant == "unbiased")
        variant = MmdVariant::unbiased;
    else
        throw invalid_input("unknown mmd variant '" + cfg.variant + "'");
    ResultDocument doc("mmd");
    echo_kernel_params(doc, cfg);
    doc.add_param("variant", cfg.variant);
    doc.add_param("seed", cfg.seed);
    doc.add_result("mmd2", mmd_squared(x, y, k, variant));
    return doc;
}

ResultDocument run_regress(const CliConfig& cfg) {
    require_inputs(cfg, 1, 1);
    const DesignMatrix dm = read_design_matrix_csv(cfg.inputs[0]);
    const RegressionFit fit = ols_fit(dm);
    ResultDocument doc("regress");
    doc.add_param("seed", cfg.seed);
    doc.add_result("n", static_cast<std::int64_t>(dm.size()));
    doc.add_result("mean_y", fit.mean_y);
    doc.add_result("betas", fit.betas);
    doc.add_result("residual_norm", fit.residuals.norm());
    return doc;
}

ResultDocument run_moments(const CliConfig& cfg) {
    require_inputs(cfg, 1, 1);
    const Sample s = read_sample_csv(cfg.inputs[0]);
    ResultDocument doc("moments");
    if (cfg.tensor_order != 0)
        doc.add_param("tensor", static_cast<std::int64_t>(cfg.tensor_order));
    doc.add_param("seed", cfg.seed);
    doc.add_result("n", static_cast<std::int64_t>(s.size()));
    doc.add_result("dim", static_cast<std::int64_t>(s.dim()));
    doc.add_result("mean", Eigen::VectorXd(sample_mean(s)));
    const Eigen::VectorXd variance = sample_variance(s);
    doc.add_result("variance", variance);
    if (s.dim() == 1) {
        if (variance(0) > 0.0) {
            doc.add_result("skewness", standardized_moment(s, 3));
            doc.add_result("kurtosis", standardized_moment(s, 4));
        } else {
            doc.add_warning("zero variance: skewness and kurtosis omitted");
        }
    }
    if (cfg.tensor_order != 0) {
        const MomentTensor t = moment_tensor(s, cfg.tensor_order);
        doc.add_result("tensor_order", static_cast<std::int64_t>(t.order()));
        doc.add_result("tensor_dim", static_cast<std::int64_t>(t.dim()));
        Eigen::VectorXd flat(static_cast<Eigen::Index>(t.values().size()));
        for (Eigen::Index i = 0; i < flat.size(); ++i)
            flat(i) = t.values()[static_cast<std::size_t>(i)];
        doc.add_result("moment_tensor", flat);
    }
    return doc;
}

ResultDocument run_knmean(const CliConfig& cfg) {
    require_inputs(cfg, 1, 1);
    const DiscretePmf p = read_discrete_pmf_csv(cfg.inputs[0]);
    std::vector<double> values;
    values.reserve(p.size());
    for (const auto& label : p.outcomes()) {
        const auto v = parse_number(label);
        if (!v)
            throw invalid_input("knmean requires numeric outcome labels, got '" + label + "'");
        values.push_back(*v);
    }
    KnGenerator g = KnGenerator::identity();
    ResultDocument doc("knmean");
    doc.add_param("generator", cfg.generator);
    if (cfg.generator == "identity") {
        g = KnGenerator::identity();
    } else if (cfg.generator == "power") {
        g = KnGenerator::power(cfg.rho);
        doc.add_param("rho", cfg.rho);
    } else if (cfg.generator == "exp") {
        g = KnGenerator::exponential(cfg.lambda);
        doc.add_param("lambda", cfg.lambda);
    } else {
        throw invalid_input("unknown generator '" + cfg.generator + "'");
    }
    doc.add_param("seed", cfg.seed);
    doc.add_result("kn_mean", kn_mean(values, p, g));
    return doc;
}

ResultDocument dispatch(const CliConfig& cfg) {
    if (cfg.command == "gram") return run_gram(cfg);
    if (cfg.command == "psd") return run_psd(cfg);
    if (cfg.command == "kde") return run_kde(cfg);
    if (cfg.command == "entropy-discrete") return run_entropy_discrete(cfg);
    if (cfg.command == "renyi2") return run_renyi2(cfg);
    if (cfg.command == "mmd") return run_mmd(cfg);
    if (cfg.command == "regress") return run_regress(cfg);
    if (cfg.command == "moments") return run_moments(cfg);
    if (cfg.command == "knmean") return run_knmean(cfg);
    throw invalid_input("unknown command '" + cfg.command + "'");
}

}  // namespace

std::unique_ptr<CLI::App> build_cli(CliConfig& cfg) {
    auto app = std::make_unique<CLI::App>(
        "Kernel and information-theoretic estimators over CSV data", "rkhsinfo");
    app->require_subcommand(1);

    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Seed for any derived randomness")
            ->envname("RKHSINFO_SEED")
            ->capture_default_str();
        sub->add_option("--output", cfg.output, "Output format")
            ->check(CLI::IsMember({"json", "tsv"}))
            ->capture_default_str();
    };
    const auto add_kernel = [&cfg](CLI::App* sub) {
        sub->add_option("--kernel", cfg.kernel, "Kernel family")
            ->check(CLI::IsMember({"linear", "poly", "gaussian", "laplacian"}))
            ->capture_default_str();
        sub->add_option("--sigma", cfg.sigma, "Gaussian/Laplacian bandwidth")
            ->capture_default_str();
        sub->add_option("--c", cfg.poly_c, "Polynomial offset c >= 0")->capture_default_str();
        sub->add_option("--degree", cfg.degree, "Polynomial degree")->capture_default_str();
        sub->add_flag("--normalized", cfg.normalized,
                      "Normalize the Gaussian kernel as a density");
    };
    const auto name_cb = [&cfg](CLI::App* sub) {
        sub->callback([&cfg, name = sub->get_name()] { cfg.command = name; });
    };

    CLI::App* gram = app->add_subcommand("gram", "Gram matrix of a sample under a kernel");
    gram->add_option("input", cfg.inputs, "Sample CSV (one point per row)")
        ->required()
        ->expected(1);
    add_kernel(gram);
    add_common(gram);
    name_cb(gram);

    CLI::App* psd = app->add_subcommand(
        "psd", "Positive-semidefiniteness report for a sample's Gram matrix");
    psd->add_option("input", cfg.inputs, "Sample CSV")->required()->expected(1);
    add_kernel(psd);
    add_common(psd);
    name_cb(psd);

    CLI::App* kde = app->add_subcommand(
        "kde", "Gaussian kernel density estimate at the sample (or query) points");
    kde->add_option("input", cfg.inputs, "Data CSV and optional query CSV")
        ->required()
        ->expected(1, 2);
    kde->add_option("--bandwidth", cfg.bandwidth, "Bandwidth: a real or 'silverman'")
        ->capture_default_str();
    add_common(kde);
    name_cb(kde);

    CLI::App* ent = app->add_subcommand(
        "entropy-discrete", "Entropy of a discrete pmf (Shannon, Renyi or Tsallis)");
    ent->add_option("input", cfg.inputs, "Pmf CSV label,prob (or joint matrix with --joint)")
        ->required()
        ->expected(1);
    ent->add_option("--base", cfg.base, "Log base: 2, e or any real > 0, != 1")
        ->capture_default_str();
    ent->add_option("--alpha", cfg.alpha, "Renyi order");
    ent->add_option("--q", cfg.q, "Tsallis order");
    ent->add_flag("--joint", cfg.joint,
                  "Treat the input as a joint pmf; reports joint/conditional "
                  "entropies and mutual information");
    add_common(ent);
    name_cb(ent);

    CLI::App* renyi2 = app->add_subcommand(
        "renyi2", "Kernel estimate of the order-2 Renyi entropy of a sample");
    renyi2->add_option("input", cfg.inputs, "Sample CSV")->required()->expected(1);
    renyi2->add_option("--sigma", cfg.sigma, "KDE bandwidth")->capture_default_str();
    renyi2->add_option("--base", cfg.base, "Log base")->capture_default_str();
    add_common(renyi2);
    name_cb(renyi2);

    CLI::App* mmd = app->add_subcommand(
        "mmd", "Squared maximum mean discrepancy between two samples");
    mmd->add_option("input", cfg.inputs, "Two sample CSVs")->required()->expected(2);
    add_kernel(mmd);
    mmd->add_option("--variant", cfg.variant, "Estimator variant")
        ->check(CLI::IsMember({"biased", "unbiased"}))
        ->capture_default_str();
    add_common(mmd);
    name_cb(mmd);

    CLI::App* regress = app->add_subcommand(
        "regress", "Least-squares fit; last CSV column is the response");
    regress->add_option("input", cfg.inputs, "Design CSV")->required()->expected(1);
    add_common(regress);
    name_cb(regress);

    CLI::App* moments = app->add_subcommand(
        "moments", "Sample mean, variance and standardized moments");
    moments->add_option("input", cfg.inputs, "Sample CSV")->required()->expected(1);
    moments->add_option("--tensor", cfg.tensor_order,
                        "Also emit the central moment tensor of this order (2-4)")
        ->check(CLI::Range(2, 4));
    add_common(moments);
    name_cb(moments);

    CLI::App* knmean = app->add_subcommand(
        "knmean", "Kolmogorov-Nagumo mean of numeric outcomes under a pmf");
    knmean->add_option("input", cfg.inputs, "Pmf CSV value,prob")->required()->expected(1);
    knmean->add_option("--generator", cfg.generator, "Generator family")
        ->check(CLI::IsMember({"identity", "power", "exp"}))
        ->capture_default_str();
    knmean->add_option("--rho", cfg.rho, "Power generator exponent")->capture_default_str();
    knmean->add_option("--lambda", cfg.lambda, "Exponential generator rate")
        ->capture_default_str();
    add_common(knmean);
    name_cb(knmean);

    return app;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const ResultDocument doc = dispatch(cfg);
        if (cfg.output == "json")
            doc.write_json(out);
        else if (cfg.output == "tsv")
            doc.write_tsv(out);
        else
            throw invalid_input("unknown output format '" + cfg.output + "'");
        return 0;
    } catch (const numerical_failure& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const degenerate_input& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace rkhsinfo
