#include "slicesum/specfun.hpp"

#include <cmath>

#include "slicesum/errors.hpp"
#include "slicesum/quadrature.hpp"

namespace slicesum {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln(sqrt(2 pi))
constexpr double kHalfLogPi = 0.57236494292470008707;   // ln(sqrt(pi))

int next_pow2(double x) {
  int n = 1;
  while (n < x && n < (1 << 30)) n <<= 1;
  return n;
}

}  // namespace

int check_dimension(int d) {
  if (d < 3) throw argument_error("dimension must be >= 3, got " + std::to_string(d));
  return d;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw argument_error("log_gamma requires x > 0");
  // Lanczos, g = 7, 9 terms.
  static const double coef[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double z = x - 1.0;
  double series = coef[0];
  for (int i = 1; i < 9; ++i) series += coef[i] / (z + i);
  const double t = z + 7.5;
  return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

double digamma(double x) {
  if (!(x > 0.0)) throw argument_error("digamma requires x > 0");
  double acc = 0.0;
  while (x < 6.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Asymptotic series with Bernoulli coefficients up to x^-14.
  double series = std::log(x) - 0.5 * inv
      - inv2 * (1.0 / 12.0
      - inv2 * (1.0 / 120.0
      - inv2 * (1.0 / 252.0
      - inv2 * (1.0 / 240.0
      - inv2 * (1.0 / 132.0
      - inv2 * (691.0 / 32760.0
      - inv2 * (1.0 / 12.0)))))));
  return acc + series;
}

double normalization_c(int d) {
  check_dimension(d);
  return std::exp(M_LN2 + log_gamma(0.5 * d) - kHalfLogPi - log_gamma(0.5 * (d - 1)));
}

double density_rho(int d, double t) {
  check_dimension(d);
  if (!(t >= 0.0 && t <= 1.0)) throw argument_error("density_rho requires t in [0, 1]");
  const double cd = normalization_c(d);
  if (d == 3) return cd;  // exponent 0; avoids 0 * log1p(-1) at t = 1
  if (t == 1.0) return 0.0;
  // (1 - t^2)^((d-3)/2) in log space; underflow to 0 is the correct limit.
  return cd * std::exp(0.5 * (d - 3) * std::log1p(-t * t));
}

double monomial_eigenvalue(int d, double k) {
  check_dimension(d);
  if (!(k > -1.0)) throw argument_error("monomial_eigenvalue requires k > -1");
  return std::exp(log_gamma(0.5 * d) + log_gamma(0.5 * (k + 1.0)) - kHalfLogPi -
                  log_gamma(0.5 * (k + d)));
}

double eta_series(int d, double s) {
  check_dimension(d);
  const double q = 0.25 * s * s;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 40; ++k) {
    term *= -q / ((k + 1.0) * (k + 0.5 * d));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double eta_quadrature(int d, double s, int nodes) {
  check_dimension(d);
  const QuadratureRule& rule = cached_gauss_legendre(nodes);
  double acc = 0.0;
  for (int l = 0; l < rule.size(); ++l) {
    acc += rule.weights[l] * density_rho(d, rule.nodes[l]) * std::cos(rule.nodes[l] * s);
  }
  return acc;
}

double eta(int d, double s) {
  check_dimension(d);
  if (!(s >= 0.0)) throw argument_error("eta requires s >= 0");
  const double s_switch = std::max(8.0, std::sqrt(static_cast<double>(d)));
  if (s <= s_switch) return eta_series(d, s);
  // cos(ts) oscillates s/(2 pi) times over [0,1]; scale the rule with s.
  return eta_quadrature(d, s, std::max(128, next_pow2(s)));
}

double sinc(double x) {
  const double z = kPi * x;
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

}  // namespace slicesum
