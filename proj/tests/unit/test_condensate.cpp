#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "casimir/condensate.hpp"
#include "casimir/errors.hpp"
#include "casimir/meanfield.hpp"
#include "casimir/numerics.hpp"

namespace casimir {
namespace {

const PhysicalParams kUnit{1.0, 1.0};

CondensateSolution robin(double kappa, double L, const PhysicalParams& p = kUnit) {
  auto out = solve_robin(RobinDirichletModel{kappa, L}, p);
  EXPECT_TRUE(std::holds_alternative<CondensateSolution>(out)) << "kappa=" << kappa << " L=" << L;
  return std::get<CondensateSolution>(std::move(out));
}

TEST(RobinThresholds, KappaTwo) {
  const auto t = robin_thresholds(2.0, 1.0);
  EXPECT_NEAR(t.L0, 0.549306, 1e-6);
  ASSERT_TRUE(t.L1 && t.L2);
  EXPECT_NEAR(*t.L1, 0.55536, 1e-5);
  EXPECT_NEAR(*t.L2, 1.66608, 1e-5);
  EXPECT_NEAR(t.L0, std::atanh(0.5), 1e-15);
}

TEST(RobinThresholds, OrderingAndAbsence) {
  for (double kappa : {1.5, 2.0, 3.0, 10.0}) {
    const auto t = robin_thresholds(kappa, 1.0);
    ASSERT_TRUE(t.L1 && t.L2);
    EXPECT_LT(t.L0, *t.L1);
    EXPECT_LT(*t.L1, *t.L2);
  }
  const auto t = robin_thresholds(1.2, 1.0);
  EXPECT_FALSE(t.L1);
  EXPECT_FALSE(t.L2);
  EXPECT_THROW(robin_thresholds(1.0, 1.0), NoCriticalRegime);
  EXPECT_THROW(robin_thresholds(0.5, 1.0), NoCriticalRegime);
}

TEST(RobinThresholds, ScaleWithMass) {
  const auto t1 = robin_thresholds(2.0, 1.0);
  const auto t2 = robin_thresholds(4.0, 2.0);
  EXPECT_NEAR(t2.L0, t1.L0 / 2, 1e-14);
  EXPECT_NEAR(*t2.L2, *t1.L2 / 2, 1e-14);
}

TEST(HoleThreshold, UnitWidth) {
  const double U0 = hole_threshold(1.0, 1.0);
  EXPECT_NEAR(U0, 5.1159, 1e-4);
  const double p = std::sqrt(U0 - 1.0);
  EXPECT_NEAR(p, 2.02876, 1e-5);
  EXPECT_LT(std::abs(std::tan(p) + p), 1e-10);
}

TEST(HoleThreshold, WideHoleApproachesMassSquared) {
  double previous = hole_threshold(1.0, 1.0);
  for (double R : {3.0, 10.0, 100.0}) {
    const double U0 = hole_threshold(R, 1.0);
    EXPECT_GT(U0, 1.0);
    EXPECT_LT(U0, previous);
    previous = U0;
  }
  EXPECT_LT(previous - 1.0, 1e-3);
}

TEST(SolveDelta, ShiftAndJump) {
  const auto sol = solve_delta(DeltaModel{2.0}, kUnit);
  EXPECT_NEAR(std::get<DeltaDs>(sol.kind()).x1, 0.5493061443, 1e-10);
  const double jump = sol.derivative(0.0, Side::Right) - sol.derivative(0.0, Side::Left) +
                      4.0 * sol.value(0.0);
  EXPECT_NEAR(jump, 0.0, 1e-12);
  EXPECT_NEAR(sol.value(-1.3), sol.value(1.3), 1e-15);
  EXPECT_THROW(solve_delta(DeltaModel{1.0}, kUnit), NoCriticalMode);
}

TEST(SolveDelta, VanishesAtThreshold) {
  const auto near = solve_delta(DeltaModel{1.0 + 1e-8}, kUnit);
  EXPECT_GT(std::get<DeltaDs>(near.kind()).x1, 8.0);
  EXPECT_LT(near.value(0.0), 1e-3);
}

TEST(RobinResidual, SignChangeInsideFirstWindow) {
  const ModelConfig cfg = RobinDirichletModel{2.0, 0.552};
  const double r0 = robin_reduced_residual(1e-6, cfg, kUnit);
  const double r1 = robin_reduced_residual(1.0 - 1e-6, cfg, kUnit);
  EXPECT_LT(r0 * r1, 0.0);
  EXPECT_NEAR(robin_matching_residual(0.0, cfg, kUnit), 0.0, 1e-15);
}

TEST(RobinResidual, EndpointsVanishAtThresholdLengths) {
  const auto t = robin_thresholds(2.0, 1.0);
  EXPECT_NEAR(robin_reduced_residual(0.0, RobinDirichletModel{2.0, t.L0}, kUnit), 0.0, 1e-12);
  EXPECT_NEAR(robin_reduced_residual(1.0, RobinDirichletModel{2.0, *t.L1}, kUnit), 0.0, 1e-12);
  EXPECT_NEAR(robin_reduced_residual(1.0, RobinDirichletModel{2.0, *t.L2}, kUnit), 0.0, 1e-10);
}

TEST(SolveRobin, FirstWindowGapAndUpperBranch) {
  const auto a = robin(2.0, 0.552);
  ASSERT_TRUE(a.elliptic_k());
  EXPECT_GT(*a.elliptic_k(), 0.0);
  EXPECT_LT(*a.elliptic_k(), 1.0);

  const auto gap = solve_robin(RobinDirichletModel{2.0, 1.0}, kUnit);
  ASSERT_TRUE(std::holds_alternative<KGap>(gap));
  EXPECT_EQ(std::get<KGap>(gap).L, 1.0);

  const auto b = robin(2.0, 2.2);
  EXPECT_GT(*b.elliptic_k(), 0.0);
  EXPECT_LT(*b.elliptic_k(), 1.0);
  EXPECT_THROW(solve_condensate(RobinDirichletModel{2.0, 1.0}, kUnit), KGapError);
  EXPECT_THROW(solve_robin(RobinDirichletModel{1.0, 2.2}, kUnit), NoCriticalMode);
}

TEST(SolveRobin, AcceptedRootsAreRegularAndSmallestWins) {
  for (double L : {0.552, 1.7, 2.2, 3.0}) {
    const auto sol = robin(2.0, L);
    const auto& diag = sol.diagnostics();
    ASSERT_FALSE(diag.accepted.empty());
    EXPECT_EQ(*sol.elliptic_k(), diag.accepted.front());
    for (double x : numerics::linspace(0.0, L, 500)) EXPECT_TRUE(std::isfinite(sol.value(x)));
  }
}

TEST(SolveRobin, BoundaryConditionsAndGpEquation) {
  for (double L : {0.551, 0.555, 1.7, 2.2, 4.0}) {
    const auto sol = robin(2.0, L);
    for (double d : boundary_defects(sol)) EXPECT_LT(std::abs(d), 1e-10) << "L=" << L;
    EXPECT_LT(gp_residual(sol), 1e-6) << "L=" << L;
  }
}

TEST(SolveRobin, LargerCouplingScalesAmplitude) {
  const auto a = robin(2.0, 2.2, kUnit);
  const auto b = robin(2.0, 2.2, PhysicalParams{1.0, 4.0});
  EXPECT_NEAR(*a.elliptic_k(), *b.elliptic_k(), 1e-12);
  EXPECT_NEAR(a.value(0.5), 2.0 * b.value(0.5), 1e-12);
}

TEST(SolveHole, UnitWidthDepthSix) {
  const ModelConfig cfg = PotentialHoleModel{6.0, 1.0};
  const auto sol = solve_hole(cfg, kUnit);
  const double k = *sol.elliptic_k();
  EXPECT_GT(k, 0.0);
  EXPECT_LT(k, 1.0);
  EXPECT_LT(std::abs(hole_reduced_residual(k, cfg, kUnit)), 1e-10);
  for (double d : boundary_defects(sol)) EXPECT_LT(std::abs(d), 1e-10);
  EXPECT_LT(gp_residual(sol), 1e-6);

  const double x1 = std::get<HoleSnPlusTail>(sol.kind()).x1;
  const double phiR = sol.value(1.0);
  const double c = 1.0 / std::tanh(1.0 + x1);
  EXPECT_NEAR(c * c, 1.0 + 0.5 * phiR * phiR, 1e-10);
}

TEST(SolveHole, ModulusGrowsWithDepthAndVanishesAtThreshold) {
  const double U0c = hole_threshold(1.0, 1.0);
  double previous = 0.0;
  for (double U0 : {U0c + 1e-4, 5.2, 6.0, 8.0, 10.0, 20.0}) {
    const auto sol = solve_hole(PotentialHoleModel{U0, 1.0}, kUnit);
    EXPECT_GT(*sol.elliptic_k(), previous) << "U0=" << U0;
    previous = *sol.elliptic_k();
  }
  const auto near = solve_hole(PotentialHoleModel{U0c + 1e-4, 1.0}, kUnit);
  EXPECT_LT(*near.elliptic_k(), 0.02);
  EXPECT_LT(std::abs(condensate_energy(near)), 1e-8);
  EXPECT_THROW(solve_hole(PotentialHoleModel{U0c - 1e-3, 1.0}, kUnit), NoCriticalMode);
}

TEST(CondensateEnergy, DeltaClosedForm) {
  const auto sol = solve_delta(DeltaModel{2.0}, kUnit);
  EXPECT_NEAR(condensate_energy(sol) / (-8.0 / 3.0), 1.0, 1e-10);
  for (double kappa : {1.1, 1.7, 3.0}) {
    for (double lambda : {0.5, 2.0}) {
      const auto s = solve_delta(DeltaModel{kappa}, PhysicalParams{1.0, lambda});
      const double closed = -2.0 * (kappa + 2.0) * (kappa - 1.0) * (kappa - 1.0) / (3.0 * lambda);
      EXPECT_NEAR(condensate_energy(s) / closed, 1.0, 1e-10);
    }
  }
}

TEST(CondensateEnergy, BelowMeanfieldEnergy) {
  for (const ModelConfig& cfg :
       {ModelConfig{DeltaModel{1.5}}, ModelConfig{RobinDirichletModel{2.0, 0.552}},
        ModelConfig{RobinDirichletModel{2.0, 2.2}}, ModelConfig{RobinDirichletModel{1.3, 3.0}},
        ModelConfig{PotentialHoleModel{6.0, 1.0}}}) {
    const double ec = condensate_energy(solve_condensate(cfg, kUnit));
    const double ebs = meanfield_energy(bound_state(cfg, kUnit));
    EXPECT_LE(ec, ebs) << model_name(cfg);
  }
  const double ec = condensate_energy(robin(2.0, 0.552));
  const double ebs = meanfield_energy(bound_state(RobinDirichletModel{2.0, 0.552}, kUnit));
  EXPECT_LT(std::abs(ec - ebs), 0.1 * std::abs(ebs));
}

TEST(CondensateEnergy, TrivialCondensateIsZero) {
  const CondensateSolution zero(RobinDirichletModel{1.0, 2.0}, kUnit, TrivialCondensate{});
  EXPECT_EQ(condensate_energy(zero), 0.0);
  EXPECT_EQ(gp_residual(zero), 0.0);
}

TEST(GpResidual, DeltaSolution) {
  EXPECT_LT(gp_residual(solve_delta(DeltaModel{2.0}, kUnit)), 1e-6);
}

TEST(NearThresholdModulus, ClosedFormAtUnitLength) {
  const double x = 1.0;
  const double s = std::sinh(x);
  const double expected =
      -(12 * x - 8 * std::sinh(2 * x) + std::sinh(4 * x)) / (16 * s * s);
  EXPECT_NEAR(near_threshold_modulus(RobinDirichletModel{2.0, 1.0}, kUnit), expected, 1e-13);
}

TEST(NearThresholdModulus, SmallLengthSeries) {
  for (double L : {1e-2, 1e-3}) {
    const double a = near_threshold_modulus(RobinDirichletModel{2.0, L}, kUnit);
    EXPECT_NEAR(a / (-(6.4 / 16.0) * L * L * L), 1.0, 1e-3) << "L=" << L;
  }
}

TEST(NearThresholdModulus, MatchesSolverNearThreshold) {
  // kappa(k) at fixed L from the matching condition, compared with
  // kappa_c + |alpha~| k^2; the relative defect must shrink with k.
  const double L = 2.0;
  const double kc = robin_critical_kappa(L, 1.0);
  const double alpha = std::abs(near_threshold_modulus(RobinDirichletModel{kc, L}, kUnit));
  double previous = 1e300;
  for (double k : {0.05, 0.02, 0.01}) {
    const double kappa = numerics::bisect(
        [&](double kap) { return robin_reduced_residual(k, RobinDirichletModel{kap, L}, kUnit); },
        kc, kc + 1.0, 1e-15);
    const double defect = std::abs((kappa - kc) - alpha * k * k) / (k * k);
    EXPECT_LT(defect, previous) << "k=" << k;
    previous = defect;
  }
  EXPECT_LT(previous, 1e-2 * alpha);
}

TEST(KGap, WholeGapAtKappaTwo) {
  const auto t = robin_thresholds(2.0, 1.0);
  for (double L : numerics::linspace(*t.L1 + 1e-3, *t.L2 - 1e-3, 10)) {
    EXPECT_TRUE(std::holds_alternative<KGap>(solve_robin(RobinDirichletModel{2.0, L}, kUnit)))
        << "L=" << L;
  }
}

TEST(ThresholdCoefficient, CondensateSharesMeanfieldCoefficient) {
  const auto te = threshold_expansion(DeltaModel{1.0}, kUnit);
  const double d = 0.005;
  const auto c = [&](double dd) {
    return -condensate_energy(solve_delta(DeltaModel{1.0 + dd}, kUnit)) / (dd * dd);
  };
  EXPECT_NEAR((2 * c(d / 2) - c(d)) / te.coefficient, 1.0, 1e-3);
}

}  // namespace
}  // namespace casimir
