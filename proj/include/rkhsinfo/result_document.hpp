#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rkhsinfo {

// Machine-readable command output: the command name, an echo of the
// parameters that shaped the computation, the numeric results and any
// warnings. Serialization is deterministic: keys keep insertion order and
// reals are printed with 17 significant digits, so identical inputs and
// flags produce byte-identical documents.
class ResultDocument {
public:
    using Value = std::variant<double, std::int64_t, std::uint64_t, bool, std::string,
                               Eigen::VectorXd, Eigen::MatrixXd>;

    explicit ResultDocument(std::string command) : command_(std::move(command)) {}

    const std::string& command() const noexcept { return command_; }

    void add_param(std::string name, Value v);
    void add_result(std::string name, Value v);
    void add_warning(std::string text);

    const std::vector<std::pair<std::string, Value>>& results() const noexcept {
        return results_;
    }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    void write_json(std::ostream& out) const;
    void write_tsv(std::ostream& out) const;

private:
    std::string command_;
    std::vector<std::pair<std::string, Value>> params_;
    std::vector<std::pair<std::string, Value>> results_;
    std::vector<std::string> warnings_;
};

// %.17g rendering shared by both output modes.
std::string format_real(double v);

}  // namespace rkhsinfo
