#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "slicesum/quadrature.hpp"
#include "slicesum/sliceop.hpp"

namespace slicesum {

struct ErrorReport {
  std::vector<double> grid;
  std::vector<double> forward_abs;   // |S_d[f_a](s) - F(s)|
  double forward_max = 0.0;
  double forward_l2 = 0.0;           // trapezoidal L2 norm on the grid
  std::vector<double> variance;      // V_d[f_a] on the grid (optional)
  double decomposition_residual = 0.0;
};

// The uniform grid {n / (n_points-1)}; default 1001 points.
std::vector<double> uniform_grid(int n_points = 1001);

// Forward error on `grid`, evaluated with `rule2L` (use a rule with twice
// the fit's node count to avoid an inverse crime).
ErrorReport forward_error(const CosineCoefficients& coeffs,
                          const std::function<double(double)>& F,
                          std::span<const double> grid,
                          const QuadratureRule& rule2L, int threads = 0,
                          bool with_variance = false);

struct MsePoint {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
};

// Monte Carlo estimate of E[((1/P) sum_p f_a(|<xi_p, x>|) - F(||x||))^2]
// over `trials` independent draws of P iid directions, x = ||x|| e_1.
std::vector<MsePoint> empirical_mse(const CosineCoefficients& coeffs,
                                    const std::function<double(double)>& F,
                                    std::span<const double> x_norms, int P,
                                    int trials, std::uint64_t seed,
                                    int threads = 0);

// Checks empirical MSE = forward^2 + V/P at each point.
struct DecompositionPoint {
  double x_norm = 0.0;
  double empirical = 0.0;
  double stderr_of_mean = 0.0;
  double predicted = 0.0;   // forward^2 + V/P
  double residual = 0.0;    // empirical - predicted
};
std::vector<DecompositionPoint> decomposition_check(
    const CosineCoefficients& coeffs, const std::function<double(double)>& F,
    std::span<const double> x_norms, int P, int trials, std::uint64_t seed,
    const QuadratureRule& rule2L, int threads = 0);

// ||ref - hat||_2 / ||ref||_2; ref must not be identically zero.
double relative_l2(std::span<const double> ref, std::span<const double> hat);

}  // namespace slicesum
