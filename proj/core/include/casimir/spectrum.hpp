#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "casimir/condensate.hpp"
#include "casimir/meanfield.hpp"
#include "casimir/models.hpp"

// Vacuum energy of the fluctuations around a background on the
// Robin-Dirichlet interval [0, L]. The mode-generating function on the
// imaginary axis is Phi(i xi) = 2 u~(L), where u = exp(xi x) u~ solves
// (-d^2 + xi^2 + V) u = 0 with the Robin data u(0) = 1, u'(0) = -kappa.
// The Minkowski factor exp(xi L) is removed by construction.

namespace casimir {

/// V(x) = 3 lambda phi(x)^2 for the chosen background on [0, L].
class FluctuationPotential {
 public:
  enum class Source { Zero, ExactCondensate, ApproxBoundState };

  static FluctuationPotential zero(double L);
  /// Robin condensate only.
  static FluctuationPotential from_condensate(const CondensateSolution& sol);
  /// phi = mu phi_bs; Robin bound state only.
  static FluctuationPotential from_bound_state(const BoundStateSolution& bs);

  double operator()(double x) const { return eval_(x); }
  double length() const noexcept { return L_; }
  /// Integral of V over [0, L], computed once at construction.
  double integral() const noexcept { return integral_; }
  Source source() const noexcept { return source_; }
  /// Interior points where V is not smooth; the ODE is split there.
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

 private:
  FluctuationPotential(std::function<double(double)> eval, double L, Source src);

  std::function<double(double)> eval_;
  double L_;
  double integral_ = 0.0;
  Source source_;
  std::vector<double> breakpoints_;
};

/// Analytic mode function without potential and its split logarithm:
///   Phi   = 2 cosh(xi L) - (2 kappa / xi) sinh(xi L)
///   lnPhi1 = ln(1 - kappa/xi) + kappa/xi
///   lnPhi2 = ln(1 + (xi + kappa)/(xi - kappa) exp(-2 xi L))
/// so that ln Phi = xi L + lnPhi1 - kappa/xi + lnPhi2.
struct SubcriticalModeValues {
  double Phi;
  double lnPhi1;
  double lnPhi2;
};

/// Throws Singularity at xi == kappa and DomainError for xi <= 0.
SubcriticalModeValues mode_fn_subcritical(double xi, double kappa, double L);

/// Phi(i xi) = 2 u~(L) from an adaptive Dormand-Prince integration of
///   u~'' = -2 xi u~' + V u~,  u~(0) = 1,  u~'(0) = -kappa - xi.
/// Throws IntegrationFailure when the integrator produces a non-finite state.
double mode_fn_numeric(double xi, const FluctuationPotential& V, double kappa,
                       double tol = 1e-10);

/// Heat-kernel coefficients of -d^2 + V on the interval.
struct HeatKernelCoefficients {
  double a0;
  double a_half;
  double a1;
};

/// a0 = L, a_half = 0, a1 = 2 kappa - int V.
HeatKernelCoefficients heat_kernel_coefficients(const FluctuationPotential& V,
                                                double kappa);

/// Large-xi asymptotics of ln Phi(i xi) with the Minkowski term dropped:
/// -a1 / (2 xi).
double asym_subtraction(double xi, const FluctuationPotential& V, double kappa);

/// Phi(i xi) for one background and kappa, with its asymptotic form.
class ModeFunction {
 public:
  ModeFunction(FluctuationPotential V, double kappa, double tol = 1e-10);

  double phi(double xi) const;
  /// ln Phi; NaN when Phi <= 0 (an unstable mode lies above xi).
  double ln_phi(double xi) const;
  double ln_phi_as(double xi) const;
  /// ln Phi - ln Phi^as.
  double subtracted(double xi) const;

  const FluctuationPotential& potential() const noexcept { return V_; }
  double kappa() const noexcept { return kappa_; }
  const HeatKernelCoefficients& coefficients() const noexcept { return coeffs_; }

 private:
  FluctuationPotential V_;
  double kappa_;
  double tol_;
  HeatKernelCoefficients coeffs_;
};

struct VacuumEnergyReport {
  double E0_ren = 0.0;
  /// (E0^(1), E0^(2)) from the analytic split; subcritical pipeline only.
  std::optional<std::pair<double, double>> parts;
  double tail_estimate = 0.0;
  double quadrature_error = 0.0;
};

struct VacuumEnergyOptions {
  /// Upper cutoff in units of m.
  double cutoff = 200.0;
  /// Relative and absolute tolerance of the outer quadrature.
  double rel_tol = 1e-9;
  double abs_tol = 1e-11;
  /// Local tolerance of the ODE integrator. Tighter than the 1e-10 used for
  /// sign scans: the integrand noise must sit below abs_tol.
  double ode_tol = 1e-12;
  /// Run stability_scan before integrating.
  bool check_stability = true;
};

/// E0^(i) = (1/2 pi) int_0^inf lnPhi_i(sqrt(m^2 + t^2)) dt.
/// Throws CriticalWithoutCondensate for kappa >= kappa_c(L), and Singularity
/// when m <= kappa < kappa_c(L) (lnPhi1 is singular at xi = kappa >= m).
VacuumEnergyReport vacuum_energy_subcritical(const PhysicalParams& params,
                                             double kappa, double L,
                                             double rel_tol = 1e-12);

/// E0^ren = (1/2 pi) int_0^T (ln Phi - ln Phi^as)(sqrt(m^2 + t^2)) dt plus a
/// power-law tail fitted over the last decade below T = sqrt(Lambda^2 - m^2).
/// Throws UnstableSpectrum when Phi has a zero on [m, Lambda] or is not
/// positive at a quadrature node.
VacuumEnergyReport vacuum_energy_renormalized(const FluctuationPotential& V,
                                              const PhysicalParams& params,
                                              double kappa,
                                              const VacuumEnergyOptions& opts = {});

/// Zeros of Phi(i xi) on [m (1 + 1e-9), cutoff m]: sign changes on a
/// log-spaced grid, each bisected.
std::vector<double> stability_scan(const FluctuationPotential& V,
                                   const PhysicalParams& params, double kappa,
                                   double cutoff = 200.0, int points = 500,
                                   double ode_tol = 1e-10);

}  // namespace casimir
