#include "casimir/condensate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/meanfield.hpp"
#include "casimir/numerics.hpp"
#include "hyperbolic.hpp"

namespace casimir {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRootTol = 1e-15;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double tail_value(double x, double x1, double m, double lambda) {
  return std::sqrt(2.0 / lambda) * m / std::sinh(m * (x + x1));
}

double tail_derivative(double x, double x1, double m, double lambda) {
  const double s = std::sinh(m * (x + x1));
  return -std::sqrt(2.0 / lambda) * m * m * std::cosh(m * (x + x1)) / (s * s);
}

struct RobinShape {
  double beta;
  double amplitude;
  EllipticModulus modulus;
};

RobinShape robin_shape(double k, double m, double lambda) {
  const double s = std::sqrt(1.0 + k * k);
  return {m / s, std::sqrt(2.0 / lambda) * m * k / s,
          EllipticModulus::from_complement(k)};
}

struct HoleShape {
  double beta;
  double amplitude;
};

HoleShape hole_shape(double k, double U0, double m, double lambda) {
  const double P = std::sqrt(U0 - m * m);
  const double s = std::sqrt(1.0 + k * k);
  return {P / s, std::sqrt(2.0 / lambda) * P * k / s};
}

// No sc pole in (0, L]: the argument beta (x - L) stays inside (-K, 0].
bool robin_regular(double k, double L, double m) {
  if (k == 0.0) return true;
  const RobinShape s = robin_shape(k, m, 1.0);
  return s.beta * L < complete_K(s.modulus);
}

// sn(beta x) has no zero in (0, R].
bool hole_nodeless(double k, double R, double U0, double m) {
  if (k == 1.0) return true;
  const HoleShape s = hole_shape(k, U0, m, 1.0);
  return s.beta * R < 2.0 * complete_K(EllipticModulus::from_k(k));
}

double pole_safe(const numerics::RealFn& f, double k) {
  try {
    return f(k);
  } catch (const PoleProximity&) {
    return kInf;
  }
}

// Every root of f on the k-grid, bisected; exact grid zeros are kept once.
std::vector<double> scan_roots(const numerics::RealFn& f, int points) {
  const auto grid = numerics::linspace(0.0, 1.0, static_cast<std::size_t>(points));
  const numerics::RealFn safe = [&](double k) { return pole_safe(f, k); };
  std::vector<double> roots;
  for (const auto& [lo, hi] : numerics::sign_change_brackets(safe, grid)) {
    const double r = lo == hi ? lo : numerics::bisect(safe, lo, hi, kRootTol);
    if (roots.empty() || std::abs(roots.back() - r) > 1e-13) roots.push_back(r);
  }
  return roots;
}

std::vector<std::pair<double, double>> residual_trace(const numerics::RealFn& f,
                                                      int points) {
  std::vector<std::pair<double, double>> trace;
  for (double k : numerics::linspace(0.0, 1.0, static_cast<std::size_t>(points))) {
    trace.emplace_back(k, pole_safe(f, k));
  }
  return trace;
}

}  // namespace

CondensateSolution::CondensateSolution(ModelConfig model, PhysicalParams params,
                                       Kind kind, RootDiagnostics diagnostics)
    : model_(std::move(model)),
      params_(params),
      kind_(std::move(kind)),
      diagnostics_(std::move(diagnostics)) {
  params_.validate();
  validate(model_);
  const double m = params_.m;
  const double lambda = params_.lambda;
  std::visit(overloaded{
                 [](const TrivialCondensate&) {},
                 [](const DeltaDs&) {},
                 [&](const RobinSc& r) {
                   const RobinShape s = robin_shape(r.k.k(), m, lambda);
                   amplitude_ = s.amplitude;
                   scale_ = s.beta;
                 },
                 [&](const HoleSnPlusTail& h) {
                   const auto& hole = std::get<PotentialHoleModel>(model_);
                   const HoleShape s = hole_shape(h.k.k(), hole.U0, m, lambda);
                   amplitude_ = s.amplitude;
                   scale_ = s.beta;
                 },
             },
             kind_);
}

std::optional<double> CondensateSolution::elliptic_k() const {
  if (const auto* r = std::get_if<RobinSc>(&kind_)) return r->k.k();
  if (const auto* h = std::get_if<HoleSnPlusTail>(&kind_)) return h->k.k();
  return std::nullopt;
}

double CondensateSolution::value(double x, Side side) const {
  const double m = params_.m;
  const double lambda = params_.lambda;
  return std::visit(
      overloaded{
          [](const TrivialCondensate&) { return 0.0; },
          [&](const DeltaDs& d) { return tail_value(std::abs(x), d.x1, m, lambda); },
          [&](const RobinSc& r) {
            if (r.k.k() == 0.0) return 0.0;
            const double L = std::get<RobinDirichletModel>(model_).L;
            return amplitude_ *
                   jacobi_sc(scale_ * (x - L), EllipticModulus::from_complement(r.k.k()));
          },
          [&](const HoleSnPlusTail& h) {
            const double R = std::get<PotentialHoleModel>(model_).R;
            if (x < R || (x == R && side == Side::Left)) {
              return amplitude_ * jacobi_triple(scale_ * x, h.k).sn;
            }
            return tail_value(x, h.x1, m, lambda);
          },
      },
      kind_);
}

double CondensateSolution::derivative(double x, Side side) const {
  const double m = params_.m;
  const double lambda = params_.lambda;
  return std::visit(
      overloaded{
          [](const TrivialCondensate&) { return 0.0; },
          [&](const DeltaDs& d) {
            const double dphi = tail_derivative(std::abs(x), d.x1, m, lambda);
            const bool left = x < 0.0 || (x == 0.0 && side == Side::Left);
            return left ? -dphi : dphi;
          },
          [&](const RobinSc& r) {
            if (r.k.k() == 0.0) return 0.0;
            const double L = std::get<RobinDirichletModel>(model_).L;
            return amplitude_ * scale_ *
                   jacobi_sc_derivative(scale_ * (x - L),
                                        EllipticModulus::from_complement(r.k.k()));
          },
          [&](const HoleSnPlusTail& h) {
            const double R = std::get<PotentialHoleModel>(model_).R;
            if (x < R || (x == R && side == Side::Left)) {
              const JacobiTriple t = jacobi_triple(scale_ * x, h.k);
              return amplitude_ * scale_ * t.cn * t.dn;
            }
            return tail_derivative(x, h.x1, m, lambda);
          },
      },
      kind_);
}

RobinThresholds robin_thresholds(double kappa, double m) {
  if (!(m > 0.0)) throw DomainError("robin_thresholds: m must be positive");
  if (!(kappa > m)) {
    throw NoCriticalRegime("robin_thresholds: kappa <= m, no critical regime");
  }
  RobinThresholds t{std::atanh(m / kappa) / m, std::nullopt, std::nullopt};
  // At k = 1 the profile is tan(m (x - L) / sqrt 2) and the Robin condition
  // becomes sin(2 m L / sqrt 2) = sqrt 2 m / kappa.
  const double ratio = std::sqrt(2.0) * m / kappa;
  if (ratio <= 1.0) {
    const double a = std::asin(ratio);
    t.L1 = a / (std::sqrt(2.0) * m);
    t.L2 = (std::numbers::pi - a) / (std::sqrt(2.0) * m);
  }
  return t;
}

double hole_threshold(double R, double m) {
  if (!(R > 0.0) || !(m > 0.0)) {
    throw DomainError("hole_threshold: R and m must be positive");
  }
  const numerics::RealFn f = [&](double p) {
    return p * std::cos(p * R) + m * std::sin(p * R);
  };
  const double p = numerics::bisect(f, std::numbers::pi / (2.0 * R), std::numbers::pi / R, 1e-15);
  return p * p + m * m;
}

CondensateSolution solve_delta(const ModelConfig& cfg, const PhysicalParams& params) {
  params.validate();
  const auto& d = std::get<DeltaModel>(cfg);
  if (!(d.kappa > params.m)) {
    throw NoCriticalMode("solve_delta: kappa <= m, no critical mode");
  }
  const double x1 = std::atanh(params.m / d.kappa) / params.m;
  return CondensateSolution(cfg, params, DeltaDs{x1});
}

double robin_reduced_residual(double k, const ModelConfig& cfg,
                              const PhysicalParams& params) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("robin_reduced_residual: k outside [0, 1]");
  }
  const auto& r = std::get<RobinDirichletModel>(cfg);
  const RobinShape s = robin_shape(k, params.m, params.lambda);
  const double z0 = -s.beta * r.L;
  return r.kappa * jacobi_sc(z0, s.modulus) +
         s.beta * jacobi_sc_derivative(z0, s.modulus);
}

double robin_matching_residual(double k, const ModelConfig& cfg,
                               const PhysicalParams& params) {
  const RobinShape s = robin_shape(k, params.m, params.lambda);
  return s.amplitude * robin_reduced_residual(k, cfg, params);
}

RobinOutcome solve_robin(const ModelConfig& cfg, const PhysicalParams& params) {
  params.validate();
  validate(cfg);
  const auto& r = std::get<RobinDirichletModel>(cfg);
  const double kc = robin_critical_kappa(r.L, params.m);
  if (!(r.kappa > kc)) {
    throw NoCriticalMode("solve_robin: kappa <= kappa_c(L), no critical mode");
  }
  const numerics::RealFn f = [&](double k) {
    return robin_reduced_residual(k, cfg, params);
  };
  RootDiagnostics diag;
  for (double k : scan_roots(f, kRobinScanPoints)) {
    (robin_regular(k, r.L, params.m) ? diag.accepted : diag.rejected).push_back(k);
  }
  if (diag.accepted.empty()) return KGap{r.L, diag.rejected};
  const double k = diag.accepted.front();
  return CondensateSolution(cfg, params, RobinSc{EllipticModulus::from_k(k)},
                            std::move(diag));
}

double hole_reduced_residual(double k, const ModelConfig& cfg,
                             const PhysicalParams& params) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("hole_reduced_residual: k outside [0, 1]");
  }
  const auto& h = std::get<PotentialHoleModel>(cfg);
  const double m = params.m;
  const HoleShape s = hole_shape(k, h.U0, m, params.lambda);
  const JacobiTriple t = jacobi_triple(s.beta * h.R, EllipticModulus::from_k(k));
  const double phi = s.amplitude * t.sn;
  return s.beta * t.cn * t.dn +
         t.sn * std::sqrt(m * m + 0.5 * params.lambda * phi * phi);
}

CondensateSolution solve_hole(const ModelConfig& cfg, const PhysicalParams& params) {
  params.validate();
  validate(cfg);
  const auto& h = std::get<PotentialHoleModel>(cfg);
  const double m = params.m;
  if (!(h.U0 > hole_threshold(h.R, m))) {
    throw NoCriticalMode("solve_hole: U0 below the hole threshold");
  }
  const numerics::RealFn f = [&](double k) {
    return hole_reduced_residual(k, cfg, params);
  };
  RootDiagnostics diag;
  for (double k : scan_roots(f, kRobinScanPoints)) {
    if (k > 0.0 && hole_nodeless(k, h.R, h.U0, m)) {
      diag.accepted.push_back(k);
    } else {
      diag.rejected.push_back(k);
    }
  }
  if (diag.accepted.empty()) {
    throw NoSolution("solve_hole: no nodeless root of the matching condition",
                     residual_trace(f, 101));
  }
  const double k = diag.accepted.front();
  const EllipticModulus mod = EllipticModulus::from_k(k);
  const HoleShape s = hole_shape(k, h.U0, m, params.lambda);
  const double phiR = s.amplitude * jacobi_triple(s.beta * h.R, mod).sn;
  const double x1 = std::asinh(std::sqrt(2.0 / params.lambda) * m / phiR) / m - h.R;
  return CondensateSolution(cfg, params, HoleSnPlusTail{mod, x1}, std::move(diag));
}

CondensateSolution solve_condensate(const ModelConfig& cfg,
                                    const PhysicalParams& params) {
  return std::visit(
      overloaded{
          [&](const DeltaModel&) { return solve_delta(cfg, params); },
          [&](const RobinDirichletModel& r) {
            RobinOutcome out = solve_robin(cfg, params);
            if (auto* gap = std::get_if<KGap>(&out)) {
              std::ostringstream os;
              os << "solve_robin: no regular solution at L = " << r.L << " (k-gap)";
              throw KGapError(os.str(), gap->rejected_roots);
            }
            return std::get<CondensateSolution>(std::move(out));
          },
          [&](const PotentialHoleModel&) { return solve_hole(cfg, params); },
      },
      cfg);
}

double condensate_energy(const CondensateSolution& sol, double rel_tol) {
  if (std::holds_alternative<TrivialCondensate>(sol.kind())) return 0.0;
  const double m = sol.params().m;
  const double lambda = sol.params().lambda;
  const numerics::RealFn phi4 = [&](double x) {
    const double v = sol.value(x);
    return v * v * v * v;
  };
  const numerics::RealFn phi4_inner = [&](double x) {
    const double v = sol.value(x, Side::Left);
    return v * v * v * v;
  };
  double integral = 0.0;
  std::visit(overloaded{
                 [&](const DeltaModel&) {
                   integral = 2.0 * numerics::integrate_tail(phi4, 0.0, m, rel_tol).value;
                 },
                 [&](const RobinDirichletModel& r) {
                   integral = numerics::integrate(phi4, 0.0, r.L, rel_tol).value;
                 },
                 [&](const PotentialHoleModel& h) {
                   integral = numerics::integrate(phi4_inner, 0.0, h.R, rel_tol).value +
                              numerics::integrate_tail(phi4, h.R, m, rel_tol).value;
                 },
             },
             sol.model());
  return -0.25 * lambda * integral;
}

double gp_residual(const CondensateSolution& sol, int grid_size, double h) {
  if (std::holds_alternative<TrivialCondensate>(sol.kind())) return 0.0;
  const ModelConfig& cfg = sol.model();
  const double m = sol.params().m;
  const double lambda = sol.params().lambda;
  const Domain dom = domain_of(cfg);
  const auto matches = matching_points(cfg);
  const double reach = 10.0 / m;
  double lo = dom.lower;
  double hi = dom.upper;
  if (!std::isfinite(lo)) lo = (matches.empty() ? 0.0 : matches.front()) - reach;
  if (!std::isfinite(hi)) hi = (matches.empty() ? 0.0 : matches.back()) + reach;

  std::vector<double> breaks{lo};
  for (double p : matches) {
    if (p > lo && p < hi) breaks.push_back(p);
  }
  breaks.push_back(hi);
  const double margin = 3.0 * h;

  double worst = 0.0;
  const auto grid = numerics::linspace(lo, hi, static_cast<std::size_t>(grid_size));
  for (double x : grid) {
    // Keep the stencil inside one smooth piece.
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
    const double left = it == breaks.begin() ? breaks.front() : *(it - 1);
    const double right = it == breaks.end() ? breaks.back() : *it;
    if (right - left <= 2.0 * margin) continue;
    x = std::clamp(x, left + margin, right - margin);
    const double f0 = sol.value(x);
    const double d2 = (-sol.value(x + 2 * h) + 16 * sol.value(x + h) - 30 * f0 +
                       16 * sol.value(x - h) - sol.value(x - 2 * h)) /
                      (12 * h * h);
    const double V = potential_eval(cfg, x);
    const double res = -d2 + (m * m + V) * f0 + lambda * f0 * f0 * f0;
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

std::vector<double> boundary_defects(const CondensateSolution& sol) {
  std::vector<double> out;
  for (const BoundaryCondition& bc : boundary_conditions(sol.model())) {
    const double x = bc.location;
    const double value = sol.value(x, Side::Right);
    const double dl = std::holds_alternative<MatchingJump>(bc.kind)
                          ? sol.derivative(x, Side::Left)
                          : sol.derivative(x, Side::Right);
    out.push_back(boundary_residual(bc, value, dl, sol.derivative(x, Side::Right)));
  }
  if (const auto* h = std::get_if<PotentialHoleModel>(&sol.model())) {
    out.push_back(sol.value(h->R, Side::Left) - sol.value(h->R, Side::Right));
    out.push_back(sol.derivative(h->R, Side::Left) - sol.derivative(h->R, Side::Right));
  }
  return out;
}

double near_threshold_modulus(const ModelConfig& cfg, const PhysicalParams& params) {
  params.validate();
  const auto& r = std::get<RobinDirichletModel>(cfg);
  const double m = params.m;
  const double x = m * r.L;
  // S4 / sinh^2 with S4 = e^{4x} scaled_s4 and sinh^2 = e^{2x} (1 - e^{-2x})^2 / 4.
  const double one_minus = -std::expm1(-2.0 * x);
  return -m * detail::scaled_s4(x) * std::exp(2.0 * x) /
         (4.0 * one_minus * one_minus);
}

}  // namespace casimir
