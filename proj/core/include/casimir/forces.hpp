#pragma once

#include <functional>
#include <vector>

#include "casimir/models.hpp"
#include "casimir/spectrum.hpp"

// Casimir forces F = -dE/dL on the Robin-Dirichlet interval. F > 0 is
// repulsive: the energy decreases as the interval widens.

namespace casimir {

struct ForceOptions {
  /// Base step relative to L.
  double h_rel = 1e-4;
  /// Lengths the stencil must not reach (branch edges). The step is reduced
  /// so that L +- 2h stays at least 5h away from each of them.
  std::vector<double> avoid;
};

struct ForceEstimate {
  double F;
  double error;
  double step;
};

/// -dE/dL from central differences at h and 2h combined by one Richardson
/// step. The error estimate is the Richardson correction plus a roundoff
/// term. BranchCrossing, KGapError and NoCriticalMode raised by E at a
/// stencil point are reported as BranchCrossing.
ForceEstimate force_of(const std::function<double(double)>& E, double L,
                       const ForceOptions& opts = {});

enum class Background { Exact, Approx };

struct ForceReport {
  double F_cond = 0.0;
  double F_fluct = 0.0;
  double F_total = 0.0;
  double step_used = 0.0;
  /// Sum of the component error estimates.
  double richardson_error = 0.0;
  double cond_error = 0.0;
  double fluct_error = 0.0;
};

/// Condensate energy of the Robin model at length L: the exact solution for
/// Background::Exact, the mean-field energy E_bs for Background::Approx, and
/// 0 below kappa_c(L).
double robin_condensate_energy(const ModelConfig& cfg, const PhysicalParams& params,
                               Background background);

/// Renormalized vacuum energy around the chosen background; subcritical
/// configurations use V = 0.
double robin_vacuum_energy(const ModelConfig& cfg, const PhysicalParams& params,
                           Background background, const VacuumEnergyOptions& opts = {});

/// Force components with the background re-solved at every stencil point.
/// The stencil is kept away from kappa_c, L0, L1 and L2; if the regime still
/// changes between stencil points BranchCrossing is thrown.
ForceReport total_force(const ModelConfig& cfg, const PhysicalParams& params,
                        Background background, const VacuumEnergyOptions& vopts = {},
                        double h_rel = 1e-4);

}  // namespace casimir
