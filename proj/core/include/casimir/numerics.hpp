#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

// Thin numerical plumbing shared by the physics modules: adaptive
// quadrature, bracketing and bisection. Backed by Boost.Math.

namespace casimir::numerics {

using RealFn = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Globally adaptive 61-point Gauss-Kronrod quadrature of f over [a, b].
/// Stops once the summed error estimate is below max(rel_tol |I|, abs_tol)
/// or max_panels panels are in use.
QuadratureResult integrate(const RealFn& f, double a, double b,
                           double rel_tol = 1e-12, double abs_tol = 0.0,
                           int max_panels = 2000);

/// Integral of f over [a, inf) for integrands decaying at least like
/// exp(-rate x): the substitution x = a - ln(u)/rate maps the tail onto (0, 1].
QuadratureResult integrate_tail(const RealFn& f, double a, double rate,
                                double rel_tol = 1e-12);

/// Integral of f over (-inf, a] with the mirrored substitution.
QuadratureResult integrate_head(const RealFn& f, double a, double rate,
                                double rel_tol = 1e-12);

/// Integral of f over [a, inf) for integrands decaying at least like 1/x^2,
/// via x = a + s / (1 - s).
QuadratureResult integrate_to_infinity(const RealFn& f, double a,
                                       double rel_tol = 1e-12);

/// Bisection on [lo, hi]; f(lo) and f(hi) must have opposite signs (a zero
/// at an endpoint is returned as-is). Stops when the bracket is narrower
/// than abs_tol or cannot be split further.
double bisect(const RealFn& f, double lo, double hi, double abs_tol = 1e-14);

/// Consecutive grid cells [g_i, g_{i+1}] over which f changes sign.
/// Cells with a non-finite endpoint value are skipped.
std::vector<std::pair<double, double>> sign_change_brackets(
    const RealFn& f, std::span<const double> grid);

std::vector<double> linspace(double a, double b, std::size_t n);
std::vector<double> logspace(double a, double b, std::size_t n);

}  // namespace casimir::numerics
