#include "rkhsinfo/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <vector>

namespace rkhsinfo {

namespace {

struct Row {
    std::size_t line;  // 1-based
    std::vector<std::string> cells;
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::optional<double> parse_number(const std::string& cell) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

std::vector<Row> read_rows(std::istream& in) {
    std::vector<Row> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        Row row{lineno, {}};
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            row.cells.push_back(trim(line.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty input file", lineno == 0 ? 1 : lineno);
    return rows;
}

double require_number(const Row& row, std::size_t col) {
    const auto v = parse_number(row.cells[col]);
    if (!v)
        throw parse_error("non-numeric cell '" + row.cells[col] + "' in column " +
                              std::to_string(col + 1),
                          row.line);
    return *v;
}

void require_width(const Row& row, std::size_t width) {
    if (row.cells.size() != width)
        throw parse_error("expected " + std::to_string(width) + " columns, got " +
                              std::to_string(row.cells.size()),
                          row.line);
}

bool all_numeric(const Row& row) {
    for (const auto& c : row.cells)
        if (!parse_number(c)) return false;
    return true;
}

Eigen::MatrixXd numeric_table(const std::vector<Row>& rows) {
    // Header row: any non-numeric token in the first row.
    std::size_t first = all_numeric(rows[0]) ? 0 : 1;
    if (first >= rows.size())
        throw parse_error("no data rows after the header", rows[0].line);
    const std::size_t width = rows[first].cells.size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size() - first),
                      static_cast<Eigen::Index>(width));
    for (std::size_t r = first; r < rows.size(); ++r) {
        require_width(rows[r], width);
        for (std::size_t c = 0; c < width; ++c)
            m(static_cast<Eigen::Index>(r - first), static_cast<Eigen::Index>(c)) =
                require_number(rows[r], c);
    }
    return m;
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open input file: " + path);
    return in;
}

}  // namespace

Sample parse_sample_csv(std::istream& in) {
    return Sample(numeric_table(read_rows(in)));
}

Sample read_sample_csv(const std::string& path) {
    auto in = open_file(path);
    return parse_sample_csv(in);
}

DiscretePmf parse_discrete_pmf_csv(std::istream& in, bool renormalize) {
    const auto rows = read_rows(in);
    // Header iff the probability column of the first row is non-numeric.
    std::size_t first = 0;
    if (rows[0].cells.size() == 2 && !parse_number(rows[0].cells[1])) first = 1;
    if (first >= rows.size())
        throw parse_error("no data rows after the header", rows[0].line);
    std::vector<std::string> labels;
    std::vector<double> probs;
    for (std::size_t r = first; r < rows.size(); ++r) {
        require_width(rows[r], 2);
        labels.push_back(rows[r].cells[0]);
        probs.push_back(require_number(rows[r], 1));
    }
    return DiscretePmf(std::move(labels), std::move(probs), renormalize);
}

DiscretePmf read_discrete_pmf_csv(const std::string& path, bool renormalize) {
    auto in = open_file(path);
    return parse_discrete_pmf_csv(in, renormalize);
}

JointPmf parse_joint_pmf_csv(std::istream& in) {
    const auto rows = read_rows(in);
    if (rows.size() < 2)
        throw parse_error("joint pmf needs a label row plus at least one data row",
                          rows[0].line);
    const std::size_t width = rows[0].cells.size();
    if (width < 2)
        throw parse_error("joint pmf needs a corner cell plus column labels", rows[0].line);
    std::vector<std::string> col_labels(rows[0].cells.begin() + 1, rows[0].cells.end());
    std::vector<std::string> row_labels;
    Eigen::MatrixXd probs(static_cast<Eigen::Index>(rows.size() - 1),
                          static_cast<Eigen::Index>(width - 1));
    for (std::size_t r = 1; r < rows.size(); ++r) {
        require_width(rows[r], width);
        row_labels.push_back(rows[r].cells[0]);
        for (std::size_t c = 1; c < width; ++c)
            probs(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(c - 1)) =
                require_number(rows[r], c);
    }
    return JointPmf(std::move(row_labels), std::move(col_labels), std::move(probs));
}

JointPmf read_joint_pmf_csv(const std::string& path) {
    auto in = open_file(path);
    return parse_joint_pmf_csv(in);
}

DesignMatrix parse_design_matrix_csv(std::istream& in) {
    const Eigen::MatrixXd table = numeric_table(read_rows(in));
    if (table.cols() < 2)
        throw invalid_input("regression input needs at least one predictor column "
                            "plus the response column");
    return DesignMatrix(table.leftCols(table.cols() - 1), table.col(table.cols() - 1));
}

DesignMatrix read_design_matrix_csv(const std::string& path) {
    auto in = open_file(path);
    return parse_design_matrix_csv(in);
}

}  // namespace rkhsinfo
