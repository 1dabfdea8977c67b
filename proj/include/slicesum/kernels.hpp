#pragma once

#include <functional>
#include <string>
#include <vector>

namespace slicesum {

enum class KernelId { Gauss, Laplace, Imq, Mq, Tps, Log, Bump };

struct KernelSpec {
  KernelId id = KernelId::Gauss;
  double c = 1.0;
};

KernelSpec parse_kernel(const std::string& name, double c);
std::string kernel_name(KernelId id);
const std::vector<KernelId>& all_kernels();

// True for gauss, laplace, imq, tps, log; bump and mq have no closed form.
bool has_known_preimage(KernelId id);

// F(s) for s >= 0. LOG at s = 0 returns -inf (rejected by fitting paths
// that would sample it; midpoint sampling never does).
double eval_kernel(const KernelSpec& spec, double s);

// The slicing preimage f(t) on [0, 1] with S_d[f] = F. Throws for bump/mq.
// Laplace capped at d <= 200 (series route); LOG at t = 0 returns -inf.
double eval_preimage(const KernelSpec& spec, int d, double t);

// beta_d = -int_0^1 log(r) rho_d(r) dr, by quadrature (cached per d).
double log_kernel_beta(int d);

// alpha_d = (d/2) (H_{d/2} - 2 + log 4), H_x = digamma(x+1) + gamma.
double tps_alpha(int d);

// F(scale * s) = amplitude * F_{spec}(s) for the transformed spec.
struct ScaledKernel {
  KernelSpec spec;
  double amplitude = 1.0;
};
ScaledKernel rescale(const KernelSpec& spec, double scale);

// Closed-form derivative evaluators [F, F', ..., F^(max_order)] for
// gauss / imq / mq (the smooth catalog entries used by the analytic
// inversion route). Throws argument_error for other kernels.
std::vector<std::function<double(double)>> kernel_derivatives(
    const KernelSpec& spec, int max_order);

}  // namespace slicesum
