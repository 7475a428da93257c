#include "casimir/forces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "casimir/condensate.hpp"
#include "casimir/errors.hpp"
#include "casimir/meanfield.hpp"

namespace casimir {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

ModelConfig with_length(const ModelConfig& cfg, double L) {
  auto r = std::get<RobinDirichletModel>(cfg);
  r.L = L;
  return r;
}

bool critical(double kappa, double L, double m) {
  return kappa > robin_critical_kappa(L, m);
}

// L at which kappa_c(L) = kappa, i.e. where the regime changes at fixed kappa.
double critical_length(double kappa, double m) { return std::atanh(m / kappa) / m; }

}  // namespace

ForceEstimate force_of(const std::function<double(double)>& E, double L,
                       const ForceOptions& opts) {
  if (!(L > 0.0)) throw DomainError("force_of: L must be positive");
  double h = opts.h_rel * L;
  for (double a : opts.avoid) {
    const double d = std::abs(L - a);
    if (d == 0.0) throw BranchCrossing("force_of: L sits on a branch edge");
    h = std::min(h, d / 7.0);
  }
  const auto eval = [&](double x) {
    try {
      return E(x);
    } catch (const KGapError& e) {
      throw BranchCrossing(std::string("force_of: k-gap inside the stencil: ") + e.what());
    } catch (const NoCriticalMode& e) {
      throw BranchCrossing(std::string("force_of: regime change inside the stencil: ") +
                           e.what());
    }
  };
  const double em2 = eval(L - 2 * h);
  const double em1 = eval(L - h);
  const double ep1 = eval(L + h);
  const double ep2 = eval(L + 2 * h);
  const double d1 = (ep1 - em1) / (2 * h);
  const double d2 = (ep2 - em2) / (4 * h);
  const double deriv = (4 * d1 - d2) / 3;
  const double scale = std::max({std::abs(em2), std::abs(em1), std::abs(ep1), std::abs(ep2)});
  const double roundoff = 4 * kEps * scale / h;
  return {-deriv, std::abs(d1 - d2) / 3 + roundoff, h};
}

double robin_condensate_energy(const ModelConfig& cfg, const PhysicalParams& params,
                               Background background) {
  const auto& r = std::get<RobinDirichletModel>(cfg);
  if (!critical(r.kappa, r.L, params.m)) return 0.0;
  if (background == Background::Approx) return meanfield_energy(bound_state(cfg, params));
  return condensate_energy(solve_condensate(cfg, params));
}

double robin_vacuum_energy(const ModelConfig& cfg, const PhysicalParams& params,
                           Background background, const VacuumEnergyOptions& opts) {
  const auto& r = std::get<RobinDirichletModel>(cfg);
  if (!critical(r.kappa, r.L, params.m)) {
    return vacuum_energy_renormalized(FluctuationPotential::zero(r.L), params, r.kappa, opts)
        .E0_ren;
  }
  if (background == Background::Approx) {
    const auto V = FluctuationPotential::from_bound_state(bound_state(cfg, params));
    return vacuum_energy_renormalized(V, params, r.kappa, opts).E0_ren;
  }
  const auto V = FluctuationPotential::from_condensate(solve_condensate(cfg, params));
  return vacuum_energy_renormalized(V, params, r.kappa, opts).E0_ren;
}

ForceReport total_force(const ModelConfig& cfg, const PhysicalParams& params,
                        Background background, const VacuumEnergyOptions& vopts,
                        double h_rel) {
  params.validate();
  validate(cfg);
  const auto& r = std::get<RobinDirichletModel>(cfg);
  const double m = params.m;
  const bool crit = critical(r.kappa, r.L, m);

  ForceOptions fopts;
  fopts.h_rel = h_rel;
  if (r.kappa > m) {
    fopts.avoid.push_back(critical_length(r.kappa, m));
    if (background == Background::Exact) {
      const RobinThresholds t = robin_thresholds(r.kappa, m);
      if (t.L1) fopts.avoid.push_back(*t.L1);
      if (t.L2) fopts.avoid.push_back(*t.L2);
    }
  }

  const auto check_regime = [&](double L) {
    if (critical(r.kappa, L, m) != crit) {
      std::ostringstream os;
      os << "total_force: kappa_c(L) crosses kappa inside the stencil at L = " << L;
      throw BranchCrossing(os.str());
    }
  };

  // One stability scan at the centre; stencil points only guard Phi > 0.
  robin_vacuum_energy(cfg, params, background, vopts);
  VacuumEnergyOptions stencil_opts = vopts;
  stencil_opts.check_stability = false;

  ForceReport rep;
  if (crit) {
    const auto cond = force_of(
        [&](double L) {
          check_regime(L);
          return robin_condensate_energy(with_length(cfg, L), params, background);
        },
        r.L, fopts);
    rep.F_cond = cond.F;
    rep.cond_error = cond.error;
    rep.step_used = cond.step;
  }
  const auto fluct = force_of(
      [&](double L) {
        check_regime(L);
        return robin_vacuum_energy(with_length(cfg, L), params, background, stencil_opts);
      },
      r.L, fopts);
  rep.F_fluct = fluct.F;
  rep.fluct_error = fluct.error;
  rep.step_used = fluct.step;
  rep.F_total = rep.F_cond + rep.F_fluct;
  rep.richardson_error = rep.cond_error + rep.fluct_error;
  return rep;
}

}  // namespace casimir
