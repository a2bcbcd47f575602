#include "rkhsinfo/result_document.hpp"

#include <cmath>
#include <cstdio>

namespace rkhsinfo {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void ResultDocument::add_param(std::string name, Value v) {
    params_.emplace_back(std::move(name), std::move(v));
}

void ResultDocument::add_result(std::string name, Value v) {
    results_.emplace_back(std::move(name), std::move(v));
}

void ResultDocument::add_warning(std::string text) {
    warnings_.push_back(std::move(text));
}

namespace {

void json_escape(std::ostream& out, const std::string& s) {
    out << '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out << "\\\""; break;
            case '\\': out << "\\\\"; break;
            case '\n': out << "\\n"; break;
            case '\t': out << "\\t"; break;
            case '\r': out << "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out << buf;
                } else {
                    out << ch;
                }
        }
    }
    out << '"';
}

// Non-finite reals have no JSON representation; emit them as strings.
void json_real(std::ostream& out, double v) {
    if (std::isfinite(v))
        out << format_real(v);
    else
        json_escape(out, format_real(v));
}

void json_value(std::ostream& out, const ResultDocument::Value& v) {
    std::visit(
        [&out](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                json_real(out, x);
            } else if constexpr (std::is_same_v<T, std::int64_t> ||
                                 std::is_same_v<T, std::uint64_t>) {
                out << x;
            } else if constexpr (std::is_same_v<T, bool>) {
                out << (x ? "true" : "false");
            } else if constexpr (std::is_same_v<T, std::string>) {
                json_escape(out, x);
            } else if constexpr (std::is_same_v<T, Eigen::VectorXd>) {
                out << '[';
                for (Eigen::Index i = 0; i < x.size(); ++i) {
                    if (i) out << ',';
                    json_real(out, x(i));
                }
                out << ']';
            } else {
                out << '[';
                for (Eigen::Index r = 0; r < x.rows(); ++r) {
                    if (r) out << ',';
                    out << '[';
                    for (Eigen::Index c = 0; c < x.cols(); ++c) {
                        if (c) out << ',';
                        json_real(out, x(r, c));
                    }
                    out << ']';
                }
                out << ']';
            }
        },
        v);
}

void json_map(std::ostream& out,
              const std::vector<std::pair<std::string, ResultDocument::Value>>& entries) {
    out << '{';
    bool first = true;
    for (const auto& [name, value] : entries) {
        if (!first) out << ',';
        first = false;
        json_escape(out, name);
        out << ':';
        json_value(out, value);
    }
    out << '}';
}

void tsv_value(std::ostream& out, const std::string& name,
               const ResultDocument::Value& v) {
    std::visit(
        [&out, &name](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                out << name << '\t' << format_real(x) << '\n';
            } else if constexpr (std::is_same_v<T, std::int64_t> ||
                                 std::is_same_v<T, std::uint64_t>) {
                out << name << '\t' << x << '\n';
            } else if constexpr (std::is_same_v<T, bool>) {
                out << name << '\t' << (x ? "true" : "false") << '\n';
            } else if constexpr (std::is_same_v<T, std::string>) {
                out << name << '\t' << x << '\n';
            } else if constexpr (std::is_same_v<T, Eigen::VectorXd>) {
                out << name;
                for (Eigen::Index i = 0; i < x.size(); ++i)
                    out << '\t' << format_real(x(i));
                out << '\n';
            } else {
                for (Eigen::Index r = 0; r < x.rows(); ++r) {
                    out << name << '[' << r << ']';
                    for (Eigen::Index c = 0; c < x.cols(); ++c)
                        out << '\t' << format_real(x(r, c));
                    out << '\n';
                }
            }
        },
        v);
}

}  // namespace

void ResultDocument::write_json(std::ostream& out) const {
    out << "{\"command\":";
    json_escape(out, command_);
    out << ",\"params\":";
    json_map(out, params_);
    out << ",\"results\":";
    json_map(out, results_);
    out << ",\"warnings\":[";
    for (std::size_t i = 0; i < warnings_.size(); ++i) {
        if (i) out << ',';
        json_escape(out, warnings_[i]);
    }
    out << "]}\n";
}

void ResultDocument::write_tsv(std::ostream& out) const {
    out << "command\t" << command_ << '\n';
    for (const auto& [name, value] : params_) tsv_value(out, "param." + name, value);
    for (const auto& [name, value] : results_) tsv_value(out, name, value);
    for (const auto& w : warnings_) out << "warning\t" << w << '\n';
}

}  // namespace rkhsinfo
