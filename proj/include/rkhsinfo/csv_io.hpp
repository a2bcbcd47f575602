#pragma once

#include <istream>
#include <string>

#include "rkhsinfo/information.hpp"
#include "rkhsinfo/l2_geometry.hpp"
#include "rkhsinfo/sample.hpp"

namespace rkhsinfo {

// Comma-separated ingestion. Lines that are empty after stripping a trailing
// '\r' are skipped; an optional header row is auto-detected where the format
// allows it. Ragged rows, non-numeric cells and empty files raise parse_error
// with the offending 1-based line number.

// One point per row, d numeric columns. A first row containing any
// non-numeric token is treated as a header.
Sample parse_sample_csv(std::istream& in);
Sample read_sample_csv(const std::string& path);

// Two columns label,prob. A first row whose prob column is non-numeric is
// treated as a header.
DiscretePmf parse_discrete_pmf_csv(std::istream& in, bool renormalize = false);
DiscretePmf read_discrete_pmf_csv(const std::string& path, bool renormalize = false);

// Probability matrix with column labels in the first row (corner cell
// ignored) and row labels in the first column.
JointPmf parse_joint_pmf_csv(std::istream& in);
JointPmf read_joint_pmf_csv(const std::string& path);

// Like a sample with >= 2 numeric columns; the last column is the response.
DesignMatrix parse_design_matrix_csv(std::istream& in);
DesignMatrix read_design_matrix_csv(const std::string& path);

}  // namespace rkhsinfo
