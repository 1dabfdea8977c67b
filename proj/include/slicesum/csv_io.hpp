#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace slicesum {

// Plain CSV, no header, one point per row. Lines starting with '#' and
// blank lines are skipped. Rejects NaN/Inf and ragged rows with the
// offending line number. expected_cols < 0 accepts any consistent width.
Eigen::MatrixXd read_csv_matrix(const std::string& path, int expected_cols = -1);

// Single column (one value per row).
Eigen::VectorXd read_csv_vector(const std::string& path);

// Writes one value per row; `comments` go first, each as a '#' line.
void write_csv_vector(const std::string& path, const std::vector<double>& values,
                      const std::vector<std::string>& comments = {});

}  // namespace slicesum
