#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "slicesum/sliceop.hpp"

namespace slicesum {

// Samples (rows) with weights; `scale` is the dilation already applied.
struct PointCloud {
  Eigen::MatrixXd X;  // N x d
  Eigen::MatrixXd Y;  // M x d
  Eigen::VectorXd w;  // N
  double scale = 1.0;
};

enum class DirectionMode { Iid, OrthogonalBlocks };

struct DirectionSet {
  Eigen::MatrixXd xi;  // P x d, unit rows
  DirectionMode mode = DirectionMode::Iid;
  std::uint64_t seed = 0;
};

// Iid: normalized Gaussian rows. OrthogonalBlocks: consecutive blocks of
// <= d rows taken from Haar-distributed orthogonal matrices (QR of a
// Gaussian matrix, sign-corrected by diag(R)).
DirectionSet sample_directions(int d, int P, DirectionMode mode,
                               std::uint64_t seed);

// Divides by scale = max_n ||X_n|| + max_m ||Y_m|| (1 if zero), so that
// ||x - y|| <= 1 and every projection difference lies in [-1, 1].
PointCloud normalize_data(Eigen::MatrixXd X, Eigen::MatrixXd Y,
                          Eigen::VectorXd w);

// 1D Fourier summation t_m = sum_n f_a(|x_n - y_m|) w_n for the truncated
// series f_a, via the trigonometric moments of (x_n, w_n). Exact (up to
// roundoff) for the truncated series; O((N+M) K). Inputs in [-1, 1].
std::vector<double> fastsum_1d(std::span<const double> xp,
                               std::span<const double> yp,
                               std::span<const double> w,
                               std::span<const double> a);

// Gaussian-window gridding NUFFT path, O(N + M + K log K); agrees with
// fastsum_1d to ~1e-8 relative.
std::vector<double> fastsum_1d_accelerated(std::span<const double> xp,
                                           std::span<const double> yp,
                                           std::span<const double> w,
                                           std::span<const double> a);

// s_m ~ (1/P) sum_p sum_n f_a(|<x_n - y_m, xi_p>|) w_n. Slices run in
// parallel; partial sums are reduced in a fixed block order so results do
// not depend on the thread count.
std::vector<double> sliced_sum(const PointCloud& pc,
                               const CosineCoefficients& coeffs,
                               const DirectionSet& dirs, int threads = 0,
                               bool accelerated = false);

// Exact O(N M d) reference: s_m = sum_n F(||X_n - Y_m||) w_n.
std::vector<double> brute_force_sum(const Eigen::MatrixXd& X,
                                    const Eigen::MatrixXd& Y,
                                    const Eigen::VectorXd& w,
                                    const std::function<double(double)>& F,
                                    int threads = 0);
std::vector<double> brute_force_sum(const PointCloud& pc,
                                    const std::function<double(double)>& F,
                                    int threads = 0);

}  // namespace slicesum
