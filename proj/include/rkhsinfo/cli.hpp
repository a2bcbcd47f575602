#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace rkhsinfo {

// Parsed command line. Defaults mirror the flag defaults echoed in the
// output document.
struct CliConfig {
    std::string command;
    std::vector<std::string> inputs;

    std::string kernel = "gaussian";  // linear|poly|gaussian|laplacian
    double sigma = 1.0;
    double poly_c = 1.0;
    int degree = 3;
    bool normalized = false;

    std::optional<double> alpha;  // entropy-discrete: Renyi order
    std::optional<double> q;      // entropy-discrete: Tsallis order
    bool joint = false;           // entropy-discrete: input is a joint pmf
    std::string base = "e";       // 2 | e | <real>

    std::string bandwidth = "silverman";  // kde: <real> | silverman
    std::string variant = "biased";       // mmd: biased | unbiased

    std::string generator = "identity";  // knmean: identity|power|exp
    double rho = 2.0;
    double lambda = 1.0;

    int tensor_order = 0;  // moments: 0 = none, else 2|3|4

    std::uint64_t seed = 42;
    std::string output = "json";  // json | tsv
};

// CLI11 application wired to fill `cfg`; `cfg` must outlive the app.
std::unique_ptr<CLI::App> build_cli(CliConfig& cfg);

// Dispatches a validated config to the library, writing the result document
// to `out` and diagnostics to `err`. Returns the process exit code:
// 0 success, 1 invalid input, 2 numerical failure.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace rkhsinfo
