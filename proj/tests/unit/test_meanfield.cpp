#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "casimir/errors.hpp"
#include "casimir/meanfield.hpp"
#include "casimir/numerics.hpp"

namespace casimir {
namespace {

const PhysicalParams kUnit{1.0, 1.0};

// Richardson-extrapolated -E(delta)/delta^2 at delta -> 0.
double fitted_coefficient(const std::function<double(double)>& energy, double d) {
  const double c1 = -energy(d) / (d * d);
  const double c2 = -energy(d / 2) / (d * d / 4);
  return 2.0 * c2 - c1;
}

double robin_a_closed(double q, double L) {
  const double e2 = std::exp(-2 * q * L);
  return (1 - e2) / (2 * q) - 2 * L * e2 + (e2 - e2 * e2) / (2 * q);
}

double robin_b_closed(double q, double L) {
  // (A - B)^4 with A B = c constant.
  const double c = std::exp(-2 * q * L);
  const double a4 = (1 - c * c) / (4 * q);
  const double a2 = (1 - c) / (2 * q);
  const double b2 = (c - c * c) / (2 * q);
  const double b4 = (c * c - c * c * c * c) / (4 * q);
  return a4 - 4 * c * a2 + 6 * c * c * L - 4 * c * b2 + b4;
}

TEST(BoundState, DeltaIsClosedForm) {
  const auto bs = bound_state(DeltaModel{2.0}, kUnit);
  EXPECT_NEAR(bs.epsilon(), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(bs.q(), 2.0, 1e-15);
}

TEST(BoundState, RobinSolvesTanhCondition) {
  const auto bs = bound_state(RobinDirichletModel{2.0, 1.0}, kUnit);
  EXPECT_NEAR(bs.q(), 1.9150, 1e-4);
  EXPECT_NEAR(bs.epsilon(), 1.6332, 1e-4);
  EXPECT_NEAR(bs.q() - 2.0 * std::tanh(bs.q()), 0.0, 1e-12);
}

TEST(BoundState, HoleBindingEnergy) {
  const auto bs = bound_state(PotentialHoleModel{6.0, 1.0}, kUnit);
  EXPECT_NEAR(bs.epsilon(), 0.750, 1e-3);
  EXPECT_NEAR(bs.q() * bs.q() + bs.p() * bs.p(), 6.0, 1e-12);
  // Derivative continuity at R: p cot(pR) = -q.
  EXPECT_NEAR(bs.p() / std::tan(bs.p()) + bs.q(), 0.0, 1e-10);
}

TEST(BoundState, SubcriticalIsRejected) {
  EXPECT_THROW(bound_state(DeltaModel{0.9}, kUnit), NoCriticalMode);
  EXPECT_THROW(bound_state(RobinDirichletModel{1.0, 2.2}, kUnit), NoCriticalMode);
  EXPECT_THROW(bound_state(PotentialHoleModel{5.0, 1.0}, kUnit), NoCriticalMode);
}

TEST(BoundState, OdeResidualIsSmall) {
  for (const ModelConfig& cfg : {ModelConfig{DeltaModel{2.0}},
                                 ModelConfig{RobinDirichletModel{2.0, 1.0}},
                                 ModelConfig{PotentialHoleModel{6.0, 1.0}}}) {
    const auto bs = bound_state(cfg, kUnit);
    const auto dom = domain_of(cfg);
    const double lo = std::isfinite(dom.lower) ? dom.lower : -5.0;
    const double hi = std::isfinite(dom.upper) ? dom.upper : 5.0;
    const double h = 1e-3;
    const double eps2 = bs.epsilon() * bs.epsilon();
    for (double x : numerics::linspace(lo + 3 * h, hi - 3 * h, 200)) {
      bool near_matching = false;
      for (double xm : matching_points(cfg)) near_matching |= std::abs(x - xm) < 3 * h;
      if (near_matching) continue;
      // Exact derivative differenced once: O(h^2) truncation only.
      const double d2 = (bs.derivative(x + h) - bs.derivative(x - h)) / (2 * h);
      const double res = -d2 + (1.0 + potential_eval(cfg, x) + eps2) * bs.value(x);
      EXPECT_LT(std::abs(res), 1e-5 * std::max(1.0, eps2)) << model_name(cfg) << " x=" << x;
      const double d2_4 = (-bs.derivative(x + 2 * h) + 8 * bs.derivative(x + h) -
                           8 * bs.derivative(x - h) + bs.derivative(x - 2 * h)) /
                          (12 * h);
      const double res4 = -d2_4 + (1.0 + potential_eval(cfg, x) + eps2) * bs.value(x);
      EXPECT_LT(std::abs(res4), 1e-8) << model_name(cfg) << " x=" << x;
    }
  }
}

TEST(BoundState, BoundaryConditionsHold) {
  const auto d = bound_state(DeltaModel{2.0}, kUnit);
  EXPECT_NEAR(d.derivative(1e-14) - d.derivative(-1e-14) + 4.0 * d.value(0.0), 0.0, 1e-12);
  const auto r = bound_state(RobinDirichletModel{2.0, 1.0}, kUnit);
  EXPECT_NEAR(2.0 * r.value(0.0) + r.derivative(0.0), 0.0, 1e-12);
  EXPECT_NEAR(r.value(1.0), 0.0, 1e-15);
  const auto h = bound_state(PotentialHoleModel{6.0, 1.0}, kUnit);
  EXPECT_EQ(h.value(0.0), 0.0);
  EXPECT_NEAR(h.value(std::nextafter(1.0, 0.0)), h.value(1.0), 1e-12);
}

TEST(NormConstants, DeltaClosedForm) {
  const auto nc = norm_constants(bound_state(DeltaModel{2.0}, kUnit));
  EXPECT_DOUBLE_EQ(nc.a, 0.5);
  EXPECT_DOUBLE_EQ(nc.b, 0.25);
}

TEST(NormConstants, RobinMatchesIndependentAntiderivative) {
  const auto bs = bound_state(RobinDirichletModel{2.0, 1.0}, kUnit);
  const auto nc = norm_constants(bs);
  const auto nq = norm_constants_quadrature(bs);
  EXPECT_NEAR(nc.a / robin_a_closed(bs.q(), 1.0), 1.0, 1e-12);
  EXPECT_NEAR(nc.b / robin_b_closed(bs.q(), 1.0), 1.0, 1e-12);
  EXPECT_NEAR(nq.a / nc.a, 1.0, 1e-10);
  EXPECT_NEAR(nq.b / nc.b, 1.0, 1e-10);
}

TEST(NormConstants, QuadratureAgreesEverywhere) {
  for (const ModelConfig& cfg :
       {ModelConfig{DeltaModel{1.3}}, ModelConfig{RobinDirichletModel{1.3, 3.0}},
        ModelConfig{RobinDirichletModel{2.0, 0.552}}, ModelConfig{PotentialHoleModel{6.0, 1.0}},
        ModelConfig{PotentialHoleModel{20.0, 0.7}}}) {
    const auto bs = bound_state(cfg, kUnit);
    const auto nc = norm_constants(bs);
    const auto nq = norm_constants_quadrature(bs);
    EXPECT_GT(nc.a, 0.0);
    EXPECT_GT(nc.b, 0.0);
    EXPECT_NEAR(nq.a / nc.a, 1.0, 1e-10) << model_name(cfg);
    EXPECT_NEAR(nq.b / nc.b, 1.0, 1e-10) << model_name(cfg);
  }
}

TEST(VariationalMu, DeltaValue) {
  EXPECT_NEAR(variational_mu(0.5, 0.25, std::sqrt(3.0), 1.0), std::sqrt(6.0), 1e-14);
  EXPECT_EQ(variational_mu(0.5, 0.25, 0.0, 1.0), 0.0);
}

TEST(VariationalMu, IsTheMinimizer) {
  for (double eps : {0.1, 0.8, 2.5}) {
    for (double a : {0.3, 1.7}) {
      for (double b : {0.05, 0.9}) {
        const double mu = variational_mu(a, b, eps, 0.7);
        const double e0 = meanfield_energy_at(mu, a, b, eps, 0.7);
        EXPECT_GT(meanfield_energy_at(mu * (1 + 1e-3), a, b, eps, 0.7), e0);
        EXPECT_GT(meanfield_energy_at(mu * (1 - 1e-3), a, b, eps, 0.7), e0);
        EXPECT_NEAR(e0, -std::pow(eps, 4) * a * a / (4 * 0.7 * b), 1e-12 * std::abs(e0));
      }
    }
  }
}

TEST(MeanfieldEnergy, DeltaValue) {
  EXPECT_NEAR(meanfield_energy(bound_state(DeltaModel{2.0}, kUnit)), -2.25, 1e-14);
}

TEST(MeanfieldEnergy, GenericFormMatchesModelClosedForms) {
  for (const ModelConfig& cfg :
       {ModelConfig{DeltaModel{1.01}}, ModelConfig{DeltaModel{3.0}},
        ModelConfig{RobinDirichletModel{2.0, 1.0}}, ModelConfig{RobinDirichletModel{1.3, 3.0}},
        ModelConfig{RobinDirichletModel{5.0, 0.3}}, ModelConfig{PotentialHoleModel{6.0, 1.0}},
        ModelConfig{PotentialHoleModel{12.0, 2.0}}}) {
    for (const PhysicalParams& p : {kUnit, PhysicalParams{1.0, 0.3}}) {
      const auto bs = bound_state(cfg, p);
      const double e = meanfield_energy(bs);
      EXPECT_LT(e, 0.0);
      EXPECT_NEAR(e / meanfield_energy_closed_form(bs), 1.0, 1e-10) << model_name(cfg);
    }
  }
}

TEST(MeanfieldEnergy, VanishesAtThreshold) {
  const double e1 = meanfield_energy(bound_state(DeltaModel{1.001}, kUnit));
  const double e2 = meanfield_energy(bound_state(DeltaModel{1.0001}, kUnit));
  EXPECT_LT(std::abs(e2), std::abs(e1));
  EXPECT_LT(std::abs(e2), 1e-7);
}

TEST(ThresholdExpansion, DeltaAndLongRobin) {
  EXPECT_DOUBLE_EQ(threshold_expansion(DeltaModel{1.0}, kUnit).coefficient, 2.0);
  EXPECT_NEAR(threshold_expansion(RobinDirichletModel{1.0, 20.0}, kUnit).coefficient, 1.0,
              1e-12);
  EXPECT_NEAR(threshold_expansion(RobinDirichletModel{1.0, 2.2}, kUnit).threshold,
              1.0 / std::tanh(2.2), 1e-14);
}

TEST(ThresholdExpansion, MatchesParabolaFits) {
  const auto delta_te = threshold_expansion(DeltaModel{1.0}, kUnit);
  const double c_delta = fitted_coefficient(
      [](double d) { return meanfield_energy(bound_state(DeltaModel{1.0 + d}, kUnit)); }, 0.01);
  EXPECT_NEAR(c_delta / delta_te.coefficient, 1.0, 1e-3);

  for (double L : {1.0, 2.0, 3.0}) {
    const auto te = threshold_expansion(RobinDirichletModel{1.0, L}, kUnit);
    const double c = fitted_coefficient(
        [&](double d) {
          return meanfield_energy(bound_state(RobinDirichletModel{te.threshold + d, L}, kUnit));
        },
        0.01);
    EXPECT_NEAR(c / te.coefficient, 1.0, 1e-2) << "L=" << L;
  }

  const auto hole_te = threshold_expansion(PotentialHoleModel{1.0, 1.0}, kUnit);
  EXPECT_NEAR(hole_te.threshold, 5.1158583657, 1e-8);
  const double c_hole = fitted_coefficient(
      [&](double d) {
        return meanfield_energy(bound_state(PotentialHoleModel{hole_te.threshold + d, 1.0}, kUnit));
      },
      0.01);
  EXPECT_NEAR(c_hole / hole_te.coefficient, 1.0, 1e-2);
}

TEST(RobinCriticalKappa, Values) {
  EXPECT_NEAR(robin_critical_kappa(2.2, 1.0), 1.0 / std::tanh(2.2), 1e-15);
  EXPECT_NEAR(robin_critical_kappa(2.2, 1.0), 1.025, 1e-3);
  EXPECT_GT(robin_critical_kappa(0.5, 1.0), robin_critical_kappa(1.0, 1.0));
}

TEST(GreensFunction, DerivativeJumpIsMinusOne) {
  for (const ModelConfig& cfg :
       {ModelConfig{DeltaModel{2.0}}, ModelConfig{RobinDirichletModel{2.0, 1.0}},
        ModelConfig{PotentialHoleModel{6.0, 1.0}}}) {
    const GreensFunction g(cfg, kUnit);
    for (double xp : {0.2, 0.5, 1.5}) {
      if (!domain_of(cfg).contains(xp) || xp >= domain_of(cfg).upper) continue;
      const double jump = g.dx(xp, xp) - g.dx(std::nextafter(xp, -1.0), xp);
      EXPECT_NEAR(jump, -1.0, 1e-8) << model_name(cfg) << " x'=" << xp;
      EXPECT_NEAR(g(xp + 0.1, xp), g(xp, xp + 0.1), 1e-14);
    }
  }
}

TEST(GreensFunction, InvertsTheOperatorOnTheBoundState) {
  // (-d^2 + m^2 + V) phi_bs = -eps^2 phi_bs, so int G phi_bs = -phi_bs / eps^2.
  for (const ModelConfig& cfg :
       {ModelConfig{RobinDirichletModel{2.0, 1.0}}, ModelConfig{RobinDirichletModel{1.3, 3.0}}}) {
    const auto bs = bound_state(cfg, kUnit);
    const GreensFunction g(cfg, kUnit);
    const double L = domain_of(cfg).upper;
    const double eps2 = bs.epsilon() * bs.epsilon();
    for (double x : {0.1 * L, 0.5 * L, 0.9 * L}) {
      const double lhs =
          numerics::integrate([&](double xp) { return g(x, xp) * bs.value(xp); }, 0.0, x).value +
          numerics::integrate([&](double xp) { return g(x, xp) * bs.value(xp); }, x, L).value;
      EXPECT_NEAR(lhs, -bs.value(x) / eps2, 1e-10);
    }
  }
}

TEST(GreensFunction, VanishingWronskianAtThreshold) {
  const double kc = robin_critical_kappa(2.0, 1.0);
  const GreensFunction g(RobinDirichletModel{kc, 2.0}, kUnit);
  EXPECT_LT(std::abs(g.wronskian()), 1e-12);
  const auto bs = bound_state(RobinDirichletModel{kc * (1 + 1e-15), 2.0}, kUnit);
  EXPECT_THROW(first_order_correction(bs), SingularOperator);
}

TEST(FirstOrderCorrection, LinearTermReturnsTheBoundState) {
  // The eps^2 source inverts to +mu phi_bs, so the correction is mu phi_bs
  // plus the cubic contribution; it shrinks with eps like mu does.
  double previous = 1e300;
  for (double kappa : {1.5, 1.1, 1.01}) {
    const auto bs = bound_state(DeltaModel{kappa}, kUnit);
    const auto dphi = first_order_correction(bs);
    double peak = 0.0;
    for (double x : numerics::linspace(-5.0, 5.0, 201)) peak = std::max(peak, std::abs(dphi(x)));
    EXPECT_LT(peak, previous);
    EXPECT_GT(dphi(0.0), bs.mu() * bs.value(0.0));
    previous = peak;
  }
}

TEST(FirstOrderCorrection, ScalesLinearlyInTheSource) {
  // Halving lambda at fixed eps scales mu by sqrt(2); the source
  // eps^2 mu phi + lambda mu^3 phi^3 scales by sqrt(2) as a whole.
  const auto bs1 = bound_state(RobinDirichletModel{2.0, 1.0}, kUnit);
  const auto bs2 = bound_state(RobinDirichletModel{2.0, 1.0}, PhysicalParams{1.0, 0.5});
  const auto d1 = first_order_correction(bs1);
  const auto d2 = first_order_correction(bs2);
  for (double x : {0.1, 0.4, 0.8}) {
    EXPECT_NEAR(d2(x) / d1(x), std::sqrt(2.0), 1e-7) << "x=" << x;
  }
}

}  // namespace
}  // namespace casimir
