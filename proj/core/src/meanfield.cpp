#include "casimir/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "casimir/condensate.hpp"
#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"
#include "hyperbolic.hpp"

namespace casimir {
namespace {

using detail::scaled_s4;
using detail::scaled_sinh_excess;

NormConstants closed_form_norms(const ModelConfig& cfg, double q, double p) {
  if (const auto* d = std::get_if<DeltaModel>(&cfg)) {
    return {1.0 / d->kappa, 0.5 / d->kappa};
  }
  if (const auto* r = std::get_if<RobinDirichletModel>(&cfg)) {
    const double x = q * r->L;
    return {scaled_sinh_excess(x) / q, scaled_s4(x) / (2.0 * q)};
  }
  const auto& h = std::get<PotentialHoleModel>(cfg);
  const double R = h.R;
  const double s = std::sin(p * R);
  const double e2 = std::exp(-2.0 * q * R);
  const double inner2 = 0.5 * R - std::sin(2.0 * p * R) / (4.0 * p);
  const double inner4 = 3.0 * R / 8.0 - std::sin(2.0 * p * R) / (4.0 * p) +
                        std::sin(4.0 * p * R) / (32.0 * p);
  return {e2 * inner2 + s * s * e2 / (2.0 * q),
          e2 * e2 * inner4 + s * s * s * s * e2 * e2 / (4.0 * q)};
}

std::vector<double> epsilon_grid(double m, double upper) {
  std::vector<double> grid{0.0};
  if (upper > 1e-6 * m) {
    const auto lg = numerics::logspace(1e-6 * m, upper, 400);
    grid.insert(grid.end(), lg.begin(), lg.end());
  }
  const auto lin = numerics::linspace(0.0, upper, 400);
  grid.insert(grid.end(), lin.begin(), lin.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

[[noreturn]] void throw_subcritical(const ModelConfig& cfg, const char* why) {
  std::ostringstream os;
  os << "bound_state: " << model_name(cfg) << " model is subcritical (" << why
     << ")";
  throw NoCriticalMode(os.str());
}

// Integral over [lo, hi] split at breakpoints, with exponentially mapped
// infinite ends.
double integrate_split(const numerics::RealFn& f, double lo, double hi,
                       std::vector<double> breaks, double rate, double tol) {
  if (!(hi > lo)) return 0.0;
  std::vector<double> pts;
  for (double b : breaks) {
    if (b > lo && b < hi) pts.push_back(b);
  }
  std::sort(pts.begin(), pts.end());
  if (std::isinf(lo)) {
    if (pts.empty()) pts.push_back(std::isinf(hi) ? 0.0 : hi);
  }
  if (std::isinf(hi)) {
    if (pts.empty()) pts.push_back(lo);
  }
  double total = 0.0;
  double start = lo;
  if (std::isinf(lo)) {
    total += numerics::integrate_head(f, pts.front(), rate, tol).value;
    start = pts.front();
  }
  for (double b : pts) {
    if (b > start) total += numerics::integrate(f, start, b, tol).value;
    start = std::max(start, b);
  }
  if (std::isinf(hi)) {
    total += numerics::integrate_tail(f, start, rate, tol).value;
  } else if (hi > start) {
    total += numerics::integrate(f, start, hi, tol).value;
  }
  return total;
}

}  // namespace

double robin_critical_kappa(double L, double m) { return m / std::tanh(m * L); }

BoundStateSolution::BoundStateSolution(ModelConfig model, PhysicalParams params,
                                       double epsilon)
    : model_(std::move(model)), params_(params), epsilon_(epsilon) {
  params_.validate();
  validate(model_);
  if (!(epsilon_ >= 0.0)) throw DomainError("binding energy must be >= 0");
  q_ = std::sqrt(epsilon_ * epsilon_ + params_.m * params_.m);
  if (const auto* h = std::get_if<PotentialHoleModel>(&model_)) {
    const double p2 = h->U0 - q_ * q_;
    if (!(p2 > 0.0)) throw DomainError("hole bound state requires U0 > q^2");
    p_ = std::sqrt(p2);
  }
  const NormConstants n = closed_form_norms(model_, q_, p_);
  a_ = n.a;
  b_ = n.b;
  mu_ = variational_mu(a_, b_, epsilon_, params_.lambda);
}

double BoundStateSolution::value(double x) const {
  if (const auto* d = std::get_if<DeltaModel>(&model_)) {
    return std::exp(-d->kappa * std::abs(x));
  }
  if (const auto* r = std::get_if<RobinDirichletModel>(&model_)) {
    return std::exp(-q_ * x) - std::exp(q_ * (x - 2.0 * r->L));
  }
  const auto& h = std::get<PotentialHoleModel>(model_);
  if (x < h.R) return std::exp(-q_ * h.R) * std::sin(p_ * x);
  return std::sin(p_ * h.R) * std::exp(-q_ * x);
}

double BoundStateSolution::derivative(double x) const {
  if (const auto* d = std::get_if<DeltaModel>(&model_)) {
    const double sign = x < 0.0 ? -1.0 : 1.0;
    return -sign * d->kappa * std::exp(-d->kappa * std::abs(x));
  }
  if (const auto* r = std::get_if<RobinDirichletModel>(&model_)) {
    return -q_ * std::exp(-q_ * x) - q_ * std::exp(q_ * (x - 2.0 * r->L));
  }
  const auto& h = std::get<PotentialHoleModel>(model_);
  if (x < h.R) return p_ * std::exp(-q_ * h.R) * std::cos(p_ * x);
  return -q_ * std::sin(p_ * h.R) * std::exp(-q_ * x);
}

BoundStateSolution bound_state(const ModelConfig& cfg, const PhysicalParams& params) {
  params.validate();
  validate(cfg);
  const double m = params.m;

  if (const auto* d = std::get_if<DeltaModel>(&cfg)) {
    if (!(d->kappa > m)) throw_subcritical(cfg, "kappa <= m");
    return {cfg, params, std::sqrt((d->kappa - m) * (d->kappa + m))};
  }

  if (const auto* r = std::get_if<RobinDirichletModel>(&cfg)) {
    if (!(r->kappa * std::tanh(m * r->L) > m)) {
      throw_subcritical(cfg, "kappa <= kappa_c(L)");
    }
    // q = kappa tanh(qL) has at most one root; q < kappa bounds eps.
    const double upper = std::sqrt((r->kappa - m) * (r->kappa + m));
    const auto f = [&](double eps) {
      const double q = std::sqrt(eps * eps + m * m);
      return q - r->kappa * std::tanh(q * r->L);
    };
    const auto grid = epsilon_grid(m, upper);
    const auto brackets = numerics::sign_change_brackets(f, grid);
    if (brackets.empty()) throw_subcritical(cfg, "no root of q = kappa tanh(qL)");
    const double eps = numerics::bisect(f, brackets.front().first,
                                        brackets.front().second, 1e-15);
    if (!(eps > 0.0)) throw_subcritical(cfg, "binding energy is zero");
    return {cfg, params, eps};
  }

  const auto& h = std::get<PotentialHoleModel>(cfg);
  if (!(h.U0 > m * m)) throw_subcritical(cfg, "U0 <= m^2");
  const double upper = std::sqrt(h.U0 - m * m) * (1.0 - 1e-12) - 1e-9;
  if (!(upper > 0.0)) throw_subcritical(cfg, "hole too shallow");
  // tan(pR) = -p/q, written without the poles of tan.
  const auto f = [&](double eps) {
    const double q = std::sqrt(eps * eps + m * m);
    const double p = std::sqrt(h.U0 - q * q);
    return p * std::cos(p * h.R) + q * std::sin(p * h.R);
  };
  const auto grid = epsilon_grid(m, upper);
  const auto brackets = numerics::sign_change_brackets(f, grid);
  if (brackets.empty()) throw_subcritical(cfg, "U0 below the hole threshold");
  // The deepest level (largest eps, nodeless inside the hole) is the one that
  // seeds the condensate.
  const auto& br = brackets.back();
  const double eps = numerics::bisect(f, br.first, br.second, 1e-15);
  if (!(eps > 0.0)) throw_subcritical(cfg, "binding energy is zero");
  return {cfg, params, eps};
}

NormConstants norm_constants(const BoundStateSolution& bs) {
  return {bs.a(), bs.b()};
}

NormConstants norm_constants_quadrature(const BoundStateSolution& bs,
                                        double rel_tol) {
  const Domain dom = domain_of(bs.model());
  const auto breaks = matching_points(bs.model());
  const double rate = bs.q();
  const auto sq = [&](double x) {
    const double v = bs.value(x);
    return v * v;
  };
  const auto quart = [&](double x) {
    const double v = bs.value(x);
    return v * v * v * v;
  };
  return {integrate_split(sq, dom.lower, dom.upper, breaks, rate, rel_tol),
          integrate_split(quart, dom.lower, dom.upper, breaks, rate, rel_tol)};
}

double meanfield_energy_at(double mu, double a, double b, double eps,
                           double lambda) {
  return -0.5 * eps * eps * mu * mu * a + 0.25 * lambda * mu * mu * mu * mu * b;
}

double variational_mu(double a, double b, double eps, double lambda) {
  if (!(a > 0.0 && b > 0.0 && lambda > 0.0)) {
    throw DomainError("variational_mu requires a, b, lambda > 0");
  }
  return std::abs(eps) * std::sqrt(a / (lambda * b));
}

double meanfield_energy(const BoundStateSolution& bs) {
  const double e2 = bs.epsilon() * bs.epsilon();
  return -e2 * e2 * bs.a() * bs.a() / (4.0 * bs.params().lambda * bs.b());
}

double meanfield_energy_closed_form(const BoundStateSolution& bs) {
  const double lambda = bs.params().lambda;
  const double m = bs.params().m;
  const double eps2 = bs.epsilon() * bs.epsilon();
  const double eps4 = eps2 * eps2;
  if (const auto* d = std::get_if<DeltaModel>(&bs.model())) {
    const double k2m2 = d->kappa * d->kappa - m * m;
    return -k2m2 * k2m2 / (2.0 * lambda * d->kappa);
  }
  if (const auto* r = std::get_if<RobinDirichletModel>(&bs.model())) {
    const double q = bs.q();
    const double x = q * r->L;
    if (x < 150.0) {
      const double num = 2.0 * x - std::sinh(2.0 * x);
      const double den = 12.0 * x - 8.0 * std::sinh(2.0 * x) + std::sinh(4.0 * x);
      return -num * num / (2.0 * lambda * q * den) * eps4;
    }
    return -eps4 / (4.0 * lambda * q);  // sinh ratio saturates at 1/2
  }
  const auto& h = std::get<PotentialHoleModel>(bs.model());
  const double q = bs.q();
  const double p = bs.p();
  const double qr = 1.0 + q * h.R;
  return -eps4 * h.U0 * qr * qr /
         (2.0 * lambda * q * (3.0 * q * q * qr + p * p * (2.0 + 3.0 * q * h.R)));
}

GreensFunction::GreensFunction(const ModelConfig& cfg, const PhysicalParams& params)
    : model_(cfg), params_(params) {
  const double m = params_.m;
  if (const auto* d = std::get_if<DeltaModel>(&model_)) {
    wronskian_ = 2.0 * (d->kappa - m);
  } else if (const auto* r = std::get_if<RobinDirichletModel>(&model_)) {
    wronskian_ = -(std::cosh(m * r->L) - r->kappa / m * std::sinh(m * r->L));
  } else {
    const auto& h = std::get<PotentialHoleModel>(model_);
    if (!(h.U0 > m * m)) {
      throw DomainError("GreensFunction: hole requires U0 > m^2");
    }
    const double P = std::sqrt(h.U0 - m * m);
    wronskian_ = -(m * std::sin(P * h.R) / P + std::cos(P * h.R));
  }
}

double GreensFunction::left(double x) const {
  const double m = params_.m;
  if (const auto* d = std::get_if<DeltaModel>(&model_)) {
    if (x <= 0.0) return std::exp(m * x);
    return std::cosh(m * x) + (1.0 - 2.0 * d->kappa / m) * std::sinh(m * x);
  }
  if (const auto* r = std::get_if<RobinDirichletModel>(&model_)) {
    return std::cosh(m * x) - r->kappa / m * std::sinh(m * x);
  }
  const auto& h = std::get<PotentialHoleModel>(model_);
  const double P = std::sqrt(h.U0 - m * m);
  if (x < h.R) return std::sin(P * x) / P;
  const double y = x - h.R;
  return std::sin(P * h.R) / P * std::cosh(m * y) +
         std::cos(P * h.R) / m * std::sinh(m * y);
}

double GreensFunction::left_derivative(double x) const {
  const double m = params_.m;
  if (const auto* d = std::get_if<DeltaModel>(&model_)) {
    if (x <= 0.0) return m * std::exp(m * x);
    return m * std::sinh(m * x) + (m - 2.0 * d->kappa) * std::cosh(m * x);
  }
  if (const auto* r = std::get_if<RobinDirichletModel>(&model_)) {
    return m * std::sinh(m * x) - r->kappa * std::cosh(m * x);
  }
  const auto& h = std::get<PotentialHoleModel>(model_);
  const double P = std::sqrt(h.U0 - m * m);
  if (x < h.R) return std::cos(P * x);
  const double y = x - h.R;
  return m * std::sin(P * h.R) / P * std::sinh(m * y) +
         std::cos(P * h.R) * std::cosh(m * y);
}

double GreensFunction::right(double x) const {
  const double m = params_.m;
  if (std::holds_alternative<DeltaModel>(model_)) return left(-x);
  if (const auto* r = std::get_if<RobinDirichletModel>(&model_)) {
    return std::sinh(m * (r->L - x)) / m;
  }
  const auto& h = std::get<PotentialHoleModel>(model_);
  if (x >= h.R) return std::exp(-m * (x - h.R));
  const double P = std::sqrt(h.U0 - m * m);
  const double y = x - h.R;
  return std::cos(P * y) - m / P * std::sin(P * y);
}

double GreensFunction::right_derivative(double x) const {
  const double m = params_.m;
  if (std::holds_alternative<DeltaModel>(model_)) return -left_derivative(-x);
  if (const auto* r = std::get_if<RobinDirichletModel>(&model_)) {
    return -std::cosh(m * (r->L - x));
  }
  const auto& h = std::get<PotentialHoleModel>(model_);
  if (x >= h.R) return -m * std::exp(-m * (x - h.R));
  const double P = std::sqrt(h.U0 - m * m);
  const double y = x - h.R;
  return -P * std::sin(P * y) - m * std::cos(P * y);
}

double GreensFunction::operator()(double x, double xp) const {
  const double lo = std::min(x, xp);
  const double hi = std::max(x, xp);
  return -left(lo) * right(hi) / wronskian_;
}

double GreensFunction::dx(double x, double xp) const {
  if (x < xp) return -left_derivative(x) * right(xp) / wronskian_;
  return -left(xp) * right_derivative(x) / wronskian_;
}

FirstOrderCorrection::FirstOrderCorrection(BoundStateSolution bs, double rel_tol)
    : bs_(std::move(bs)), green_(bs_.model(), bs_.params()), rel_tol_(rel_tol) {
  if (std::abs(green_.wronskian()) < 1e-12) {
    throw SingularOperator(
        "first_order_correction: Wronskian vanishes, operator not invertible",
        green_.wronskian());
  }
}

double FirstOrderCorrection::operator()(double x) const {
  const double eps2 = bs_.epsilon() * bs_.epsilon();
  if (eps2 == 0.0) return 0.0;
  const double mu = bs_.mu();
  const double lambda = bs_.params().lambda;
  const auto source = [&](double xp) {
    const double v = bs_.value(xp);
    return -eps2 * mu * v - lambda * mu * mu * mu * v * v * v;
  };
  const Domain dom = domain_of(bs_.model());
  const auto breaks = matching_points(bs_.model());
  const double rate = bs_.params().m;
  const double below = integrate_split(
      [&](double xp) { return green_.left(xp) * source(xp); }, dom.lower, x,
      breaks, rate, rel_tol_);
  const double above = integrate_split(
      [&](double xp) { return green_.right(xp) * source(xp); }, x, dom.upper,
      breaks, rate, rel_tol_);
  return -(green_.right(x) * below + green_.left(x) * above) / green_.wronskian();
}

FirstOrderCorrection first_order_correction(const BoundStateSolution& bs,
                                            double rel_tol) {
  return FirstOrderCorrection(bs, rel_tol);
}

ThresholdExpansion threshold_expansion(const ModelConfig& cfg,
                                       const PhysicalParams& params) {
  params.validate();
  const double m = params.m;
  const double lambda = params.lambda;
  if (std::holds_alternative<DeltaModel>(cfg)) {
    return {2.0 * m / lambda, m};
  }
  if (const auto* r = std::get_if<RobinDirichletModel>(&cfg)) {
    const double x = m * r->L;
    const double half = 0.5 * (1.0 - std::exp(-2.0 * x));  // e^{-x} sinh(x)
    const double s4 = half * half * half * half;
    return {8.0 * m * s4 / (lambda * scaled_s4(x)), robin_critical_kappa(r->L, m)};
  }
  const auto& h = std::get<PotentialHoleModel>(cfg);
  const double U0 = hole_threshold(h.R, m);
  const double R = h.R;
  const double num = m * (m + R * U0) * (m + R * U0);
  const double den = 2.0 * lambda * U0 * (m * m + 2.0 * U0 + 3.0 * m * R * U0);
  return {num / den, U0};
}

}  // namespace casimir
