#include "slicesum/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "slicesum/errors.hpp"

namespace slicesum {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Legendre P_L and P_L' at x by the three-term recurrence.
void legendre(int L, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int n = 2; n <= L; ++n) {
    const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = L * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(int L) {
  if (L < 1 || L > 65536) throw argument_error("gauss_legendre: L out of range [1, 65536]");
  QuadratureRule rule;
  rule.nodes.resize(L);
  rule.weights.resize(L);
  const int half = (L + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-angle start, converging to the i-th largest root.
    double x = std::cos(kPi * (i + 0.75) / (L + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(L, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    if (2 * i + 1 == L) x = 0.0;  // middle root of odd L
    legendre(L, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1,1] -> [0,1]; mirror so symmetry is exact by construction.
    rule.nodes[L - 1 - i] = 0.5 * (1.0 + x);
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[L - 1 - i] = 0.5 * w;
    rule.weights[i] = 0.5 * w;
  }
  return rule;
}

const QuadratureRule& cached_gauss_legendre(int L) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(L);
  if (it == cache.end()) {
    it = cache.emplace(L, std::make_unique<QuadratureRule>(gauss_legendre(L))).first;
  }
  return *it->second;
}

}  // namespace slicesum
