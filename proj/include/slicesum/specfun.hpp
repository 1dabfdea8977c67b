#pragma once

namespace slicesum {

// Throws argument_error unless d >= 3; returns d.
int check_dimension(int d);

// ln Gamma(x) for x > 0, Lanczos approximation, relative error ~1e-14.
double log_gamma(double x);

// Digamma psi(x) for x > 0 (recurrence + asymptotic series).
double digamma(double x);

// c_d = 2 Gamma(d/2) / (sqrt(pi) Gamma((d-1)/2)); normalizes rho_d.
double normalization_c(int d);

// rho_d(t) = c_d (1 - t^2)^((d-3)/2) on [0, 1].
double density_rho(int d, double t);

// lambda_{k,d} in (0,1] with S_d[t^k] = lambda_{k,d} s^k; defined for real
// k > -1. The inversion multiplier gamma_{k,d} is its reciprocal.
double monomial_eigenvalue(int d, double k);

// eta_d(s) = S_d[cos](s) for s >= 0; |eta_d| <= 1, eta_d(0) = 1.
// Power series below s_switch = max(8, sqrt(d)), quadrature beyond.
double eta(int d, double s);
double eta_series(int d, double s);           // valid for moderate s
double eta_quadrature(int d, double s, int nodes);

// sin(pi x) / (pi x) with sinc(0) = 1.
double sinc(double x);

}  // namespace slicesum
