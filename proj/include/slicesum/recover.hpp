#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "slicesum/kernels.hpp"
#include "slicesum/sliceop.hpp"

namespace slicesum {

enum class Norm { L2, H1 };
std::string norm_name(Norm n);

enum class FitMethod { SpatialL2H1, FrequencyL2H1, FrequencyH1H1, Direct };
FitMethod parse_method(const std::string& name);   // "s-l2-h1", ...
std::string method_label(FitMethod m);             // "S-L2-H1", ...
double default_tau(FitMethod m);                   // 1e-6 / 1e-7 / 1e-4 / 0

enum class AnalysisPath { Quadrature, Dct };

struct FitConfig {
  int K = 256;
  int J = 1024;
  int L = 1024;
  double tau = 1e-6;
  Norm range_norm = Norm::L2;
  Norm domain_norm = Norm::H1;
  AnalysisPath analysis = AnalysisPath::Quadrature;
  int oversample = 4;   // DCT path only
  int threads = 0;
};

// D diagonal: ones (L2) or sqrt(1 + pi^2 k^2) (H1).
Eigen::VectorXd regularizer_diagonal(int K, Norm norm);

// Algorithm "spatial domain": collocation at the quadrature nodes.
// range_norm must be L2.
CosineCoefficients fit_spatial(const std::function<double(double)>& F, int d,
                               const FitConfig& cfg);

// Algorithm "frequency domain": display matrix + cosine analysis of F.
CosineCoefficients fit_frequency(const std::function<double(double)>& F, int d,
                                 const FitConfig& cfg);

// Cosine coefficients of the closed-form preimage (catalog kernels only).
// `scale` dilates the target: coefficients of t -> f(scale * t).
CosineCoefficients direct_coefficients(const KernelSpec& spec, int d, int K,
                                       double scale = 1.0, int oversample = 4);

// Integer table a_{m,k}, m,k = 0..n, n = (d-1)/2, for odd d.
using BigInt = boost::multiprecision::cpp_int;
std::vector<std::vector<BigInt>> recursion_table(int d);

// f(t) = (2^n n!/(2n)!) sum_k a_{n,k} t^k F^(k)(t); odd d in [3, 11].
// derivatives[k] evaluates F^(k).
std::vector<double> analytic_inverse_odd(
    const std::vector<std::function<double(double)>>& derivatives, int d,
    std::span<const double> t_points);

// Convenience: derivatives from F alone by order-8 central differences
// (Fornberg weights, step eps^(1/(k+8))). F must be evaluable on a
// neighborhood of [0, 1] of width ~5 * step.
std::vector<std::function<double(double)>> finite_difference_derivatives(
    const std::function<double(double)>& F, int max_order);

}  // namespace slicesum
