#pragma once

// Special functions and quadrature primitives: generalized Laguerre
// polynomials with real upper index, log-gamma, Gauss-Laguerre rules,
// adaptive quadrature on [0, inf) and an oscillatory-safe half-line
// Fourier transform.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "dqm/errors.hpp"

namespace dqm {

/// Generalized Laguerre polynomial L_n^(alpha_idx)(x) by the stable upward
/// three-term recurrence in n. Requires n >= 0 and alpha_idx > -1.
double laguerre(int n, double alpha_idx, double x);

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms),
/// relative accuracy better than 1e-13 over [0.5, 1e3].
double log_gamma(double x);

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

/// Nodes and weights of the n-point Gauss-Laguerre rule (weight e^{-x}),
/// computed once per n and cached.
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLaguerreRule& gauss_laguerre_rule(int n);

/// Integral of f over [0, inf) for integrands that decay at infinity.
/// Tries a Gauss-Laguerre fast path, falls back to adaptive Gauss-Kronrod
/// on the mapped interval. Throws ConvergenceFailure when the error estimate
/// cannot reach tol within the evaluation budget.
QuadratureResult integrate_semiline(const std::function<double(double)>& f,
                                    double tol = 1e-10);

/// Integral of f over [lo, hi] by adaptive Gauss-Kronrod 7-15.
QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double lo, double hi, double tol = 1e-10);

/// (1/sqrt(2 pi)) * integral_0^inf g(r) e^{-i p r} dr for absolutely
/// integrable g, with panel sizes tied to the oscillation period.
std::complex<double> fourier_transform_semiline(
    const std::function<double(double)>& g, double p, double tol = 1e-10);

}  // namespace dqm
