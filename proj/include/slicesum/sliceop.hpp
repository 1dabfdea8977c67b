#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "slicesum/quadrature.hpp"

namespace slicesum {

struct CoeffMeta {
  std::string method = "custom";       // S-L2-H1 | F-L2-H1 | F-H1-H1 | direct | analytic | custom
  double tau = 0.0;
  std::string domain_norm = "L2";      // L2 | H1
  std::string range_norm = "L2";       // L2 | H1
  std::string kernel = "custom";       // catalog name or "custom"
  double kernel_c = 1.0;
  double scale = 1.0;                  // dilation baked into the fit target
  int L = 0;
  int J = 0;
};

// Coefficients a of f_a(t) = a_0 + sqrt(2) sum_{k>=1} a_k cos(pi k t)
// in the orthonormal cosine basis on [0, 1].
struct CosineCoefficients {
  std::vector<double> a;
  int d = 3;
  CoeffMeta meta;

  int modes() const { return static_cast<int>(a.size()); }
};

// f_a at a single point t.
double eval_cosine_series(std::span<const double> a, double t);

// S_d[f](s) = sum_l w_l rho_d(t_l) f(t_l s) for each s in s_points.
// Requires s_points within [0, 1].
std::vector<double> apply_sd(const std::function<double(double)>& f, int d,
                             std::span<const double> s_points,
                             const QuadratureRule& rule);

// Coefficient form; uses the basis-image expansion S_d[f_a] = sum a_k h_k.
std::vector<double> apply_sd(const CosineCoefficients& coeffs,
                             std::span<const double> s_points,
                             const QuadratureRule& rule, int threads = 0);

// Row k holds hhat_{k,i} = sum_l w_l rho_d(t_l) g_k(s_i t_l); K x |s_points|.
Eigen::MatrixXd basis_images(int d, int K, std::span<const double> s_points,
                             const QuadratureRule& rule, int threads = 0);

// Matrix of S_d in the cosine basis: S_{j,k} = <g_j, S_d[g_k]>_{L2}.
struct DisplayMatrix {
  Eigen::MatrixXd S;  // J x K
  int d = 3;
};

DisplayMatrix assemble_display_matrix(int d, int J, int K,
                                      const QuadratureRule& rule,
                                      int threads = 0);

// b_k ~ int_0^1 F(t) g_k(t) dt via a type-II DCT of midpoint samples
// (m + 1/2) / (oversample * J). Never touches t = 0 or t = 1.
std::vector<double> cosine_analysis(const std::function<double(double)>& F,
                                    int J, int oversample = 4);

// Same coefficients by Gauss-Legendre quadrature (reference path).
std::vector<double> cosine_analysis_quadrature(
    const std::function<double(double)>& F, int J, const QuadratureRule& rule);

std::vector<double> cosine_synthesis(const CosineCoefficients& coeffs,
                                     std::span<const double> t_points);

// V_d[f_a](s) = S_d[f_a^2](s) - S_d[f_a](s)^2, clamped to 0 on [-1e-12, 0).
std::vector<double> variance_vd(const CosineCoefficients& coeffs,
                                std::span<const double> s_points,
                                const QuadratureRule& rule, int threads = 0);

}  // namespace slicesum
