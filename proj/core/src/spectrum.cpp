#include "casimir/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"

namespace casimir {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double robin_length(const ModelConfig& cfg, const char* who) {
  const auto* r = std::get_if<RobinDirichletModel>(&cfg);
  if (r == nullptr) {
    throw DomainError(std::string(who) + ": only the Robin-Dirichlet interval is supported");
  }
  return r->L;
}

// Least-squares power law |g| = A t^s through samples of one sign; the tail
// integral of A t^s beyond T. Falls back to s = -2 when the fit is unusable.
double power_law_tail(const std::vector<double>& t, const std::vector<double>& g) {
  const double gT = g.back();
  const double T = t.back();
  const bool same_sign = std::all_of(g.begin(), g.end(), [&](double v) {
    return v != 0.0 && std::signbit(v) == std::signbit(gT);
  });
  double s = -2.0;
  if (same_sign) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double x = std::log(t[i]);
      const double y = std::log(std::abs(g[i]));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double fit = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    if (std::isfinite(fit) && fit < -1.5) s = fit;
  }
  return gT * T / (-(s + 1.0));
}

}  // namespace

FluctuationPotential::FluctuationPotential(std::function<double(double)> eval,
                                           double L, Source src)
    : eval_(std::move(eval)), L_(L), source_(src) {
  if (source_ != Source::Zero) {
    integral_ = numerics::integrate(eval_, 0.0, L_, 1e-13).value;
  }
}

FluctuationPotential FluctuationPotential::zero(double L) {
  if (!(L > 0.0)) throw DomainError("FluctuationPotential: L must be positive");
  return FluctuationPotential([](double) { return 0.0; }, L, Source::Zero);
}

FluctuationPotential FluctuationPotential::from_condensate(const CondensateSolution& sol) {
  const double L = robin_length(sol.model(), "FluctuationPotential::from_condensate");
  const double three_lambda = 3.0 * sol.params().lambda;
  return FluctuationPotential(
      [sol, three_lambda](double x) {
        const double phi = sol.value(x);
        return three_lambda * phi * phi;
      },
      L, Source::ExactCondensate);
}

FluctuationPotential FluctuationPotential::from_bound_state(const BoundStateSolution& bs) {
  const double L = robin_length(bs.model(), "FluctuationPotential::from_bound_state");
  const double c = 3.0 * bs.params().lambda * bs.mu() * bs.mu();
  return FluctuationPotential(
      [bs, c](double x) {
        const double phi = bs.value(x);
        return c * phi * phi;
      },
      L, Source::ApproxBoundState);
}

SubcriticalModeValues mode_fn_subcritical(double xi, double kappa, double L) {
  if (!(xi > 0.0)) throw DomainError("mode_fn_subcritical: xi must be positive");
  if (xi == kappa) throw Singularity("mode_fn_subcritical: lnPhi1 is singular at xi = kappa");
  const double r = kappa / xi;
  SubcriticalModeValues v{};
  v.Phi = 2.0 * std::cosh(xi * L) - 2.0 * r * std::sinh(xi * L);
  v.lnPhi1 = std::log1p(-r) + r;
  v.lnPhi2 = std::log1p((xi + kappa) / (xi - kappa) * std::exp(-2.0 * xi * L));
  return v;
}

double mode_fn_numeric(double xi, const FluctuationPotential& V, double kappa,
                       double tol) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 2>;
  if (!(xi > 0.0)) throw DomainError("mode_fn_numeric: xi must be positive");

  const auto rhs = [&](const State& y, State& dy, double x) {
    dy[0] = y[1];
    dy[1] = -2.0 * xi * y[1] + V(x) * y[0];
  };
  State y{1.0, -kappa - xi};
  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<State>());

  std::vector<double> nodes{0.0};
  for (double b : V.breakpoints()) {
    if (b > 0.0 && b < V.length()) nodes.push_back(b);
  }
  nodes.push_back(V.length());
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double a = nodes[i];
    const double b = nodes[i + 1];
    const double dt = std::min(0.5 / xi, 0.1 * (b - a));
    odeint::integrate_adaptive(stepper, rhs, y, a, b, dt);
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
      std::ostringstream os;
      os << "mode_fn_numeric: non-finite state at x = " << b << " for xi = " << xi;
      throw IntegrationFailure(os.str());
    }
  }
  return 2.0 * y[0];
}

HeatKernelCoefficients heat_kernel_coefficients(const FluctuationPotential& V,
                                                double kappa) {
  return {V.length(), 0.0, 2.0 * kappa - V.integral()};
}

double asym_subtraction(double xi, const FluctuationPotential& V, double kappa) {
  return -heat_kernel_coefficients(V, kappa).a1 / (2.0 * xi);
}

ModeFunction::ModeFunction(FluctuationPotential V, double kappa, double tol)
    : V_(std::move(V)),
      kappa_(kappa),
      tol_(tol),
      coeffs_(heat_kernel_coefficients(V_, kappa)) {}

double ModeFunction::phi(double xi) const { return mode_fn_numeric(xi, V_, kappa_, tol_); }

double ModeFunction::ln_phi(double xi) const {
  const double p = phi(xi);
  return p > 0.0 ? std::log(p) : std::numeric_limits<double>::quiet_NaN();
}

double ModeFunction::ln_phi_as(double xi) const { return -coeffs_.a1 / (2.0 * xi); }

double ModeFunction::subtracted(double xi) const { return ln_phi(xi) - ln_phi_as(xi); }

VacuumEnergyReport vacuum_energy_subcritical(const PhysicalParams& params,
                                             double kappa, double L,
                                             double rel_tol) {
  params.validate();
  if (!(L > 0.0)) throw DomainError("vacuum_energy_subcritical: L must be positive");
  const double m = params.m;
  if (kappa >= robin_critical_kappa(L, m)) {
    throw CriticalWithoutCondensate(
        "vacuum_energy_subcritical: kappa >= kappa_c(L), the background must carry a condensate");
  }
  if (kappa >= m) {
    throw Singularity("vacuum_energy_subcritical: kappa >= m puts the lnPhi1 singularity on the contour");
  }
  const auto xi = [m](double t) { return std::hypot(m, t); };
  const auto q1 = numerics::integrate_to_infinity(
      [&](double t) { return mode_fn_subcritical(xi(t), kappa, L).lnPhi1; }, 0.0, rel_tol);
  const auto q2 = numerics::integrate_tail(
      [&](double t) { return mode_fn_subcritical(xi(t), kappa, L).lnPhi2; }, 0.0,
      2.0 * L, rel_tol);
  VacuumEnergyReport rep;
  const double e1 = q1.value / kTwoPi;
  const double e2 = q2.value / kTwoPi;
  rep.parts = std::make_pair(e1, e2);
  rep.E0_ren = e1 + e2;
  rep.quadrature_error = (q1.error + q2.error) / kTwoPi;
  return rep;
}

std::vector<double> stability_scan(const FluctuationPotential& V,
                                   const PhysicalParams& params, double kappa,
                                   double cutoff, int points, double ode_tol) {
  params.validate();
  const double m = params.m;
  const auto grid = numerics::logspace(m * (1.0 + 1e-9), cutoff * m,
                                       static_cast<std::size_t>(points));
  const numerics::RealFn f = [&](double xi) { return mode_fn_numeric(xi, V, kappa, ode_tol); };
  std::vector<double> zeros;
  for (const auto& [lo, hi] : numerics::sign_change_brackets(f, grid)) {
    zeros.push_back(lo == hi ? lo : numerics::bisect(f, lo, hi, 1e-12 * hi));
  }
  return zeros;
}

VacuumEnergyReport vacuum_energy_renormalized(const FluctuationPotential& V,
                                              const PhysicalParams& params,
                                              double kappa,
                                              const VacuumEnergyOptions& opts) {
  params.validate();
  const double m = params.m;
  if (!(opts.cutoff > 1.0)) throw DomainError("vacuum_energy_renormalized: cutoff must exceed 1");
  if (opts.check_stability) {
    auto zeros = stability_scan(V, params, kappa, opts.cutoff);
    if (!zeros.empty()) {
      std::ostringstream os;
      os << "vacuum_energy_renormalized: Phi(i xi) vanishes at xi = " << zeros.front();
      throw UnstableSpectrum(os.str(), std::move(zeros));
    }
  }
  const ModeFunction mf(V, kappa, opts.ode_tol);
  const numerics::RealFn g = [&](double t) {
    const double xi = std::hypot(m, t);
    const double p = mf.phi(xi);
    if (!(p > 0.0)) {
      throw UnstableSpectrum("vacuum_energy_renormalized: Phi(i xi) <= 0 inside the contour",
                             {xi});
    }
    return std::log(p) - mf.ln_phi_as(xi);
  };

  const double Lambda = opts.cutoff * m;
  const double T = std::sqrt(Lambda * Lambda - m * m);
  std::vector<double> nodes{0.0};
  for (double c : {1.0, 4.0, 16.0, 64.0}) {
    if (c * m < T) nodes.push_back(c * m);
  }
  nodes.push_back(T);
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto q = numerics::integrate(g, nodes[i], nodes[i + 1], opts.rel_tol,
                                      opts.abs_tol / (nodes.size() - 1), 200);
    value += q.value;
    error += q.error;
  }

  std::vector<double> ts;
  std::vector<double> gs;
  for (int j = 8; j >= 0; --j) {
    const double t = T * std::pow(10.0, -j / 8.0);
    ts.push_back(t);
    gs.push_back(g(t));
  }
  const double tail = power_law_tail(ts, gs);

  VacuumEnergyReport rep;
  rep.E0_ren = (value + tail) / kTwoPi;
  rep.tail_estimate = tail / kTwoPi;
  rep.quadrature_error = error / kTwoPi;
  return rep;
}

}  // namespace casimir
