#include <cmath>

#include <gtest/gtest.h>

#include "casimir/condensate.hpp"
#include "casimir/errors.hpp"
#include "casimir/forces.hpp"
#include "casimir/numerics.hpp"

namespace casimir {
namespace {

const PhysicalParams kUnit{1.0, 1.0};

TEST(ForceOf, LinearEnergy) {
  const auto f = force_of([](double L) { return 3.7 * L; }, 2.0);
  EXPECT_NEAR(f.F, -3.7, 1e-10);
  EXPECT_NEAR(f.step, 2e-4, 1e-18);
}

TEST(ForceOf, QuadraticEnergy) {
  const auto f = force_of([](double L) { return L * L; }, 1.0);
  EXPECT_NEAR(f.F, -2.0, 1e-9);
}

TEST(ForceOf, StepHalvingWithinErrorEstimate) {
  const auto E = [](double L) { return std::exp(-L) * std::sin(3 * L); };
  for (double L : {0.5, 1.3, 2.9}) {
    ForceOptions coarse;
    coarse.h_rel = 1e-2;
    ForceOptions fine;
    fine.h_rel = 5e-3;
    const auto a = force_of(E, L, coarse);
    const auto b = force_of(E, L, fine);
    EXPECT_LT(std::abs(a.F - b.F), 10 * a.error) << "L=" << L;
    const double exact = -std::exp(-L) * (3 * std::cos(3 * L) - std::sin(3 * L));
    EXPECT_LT(std::abs(a.F - exact), 10 * a.error);
  }
}

TEST(ForceOf, AvoidListShrinksTheStep) {
  ForceOptions opts;
  opts.avoid = {1.0007};
  const auto f = force_of([](double L) { return L; }, 1.0, opts);
  EXPECT_LE(1.0 + 2 * f.step + 5 * f.step, 1.0007 + 1e-15);
  opts.avoid = {1.0};
  EXPECT_THROW(force_of([](double L) { return L; }, 1.0, opts), BranchCrossing);
}

TEST(ForceOf, BranchChangesAreReported) {
  const auto gap = [](double L) -> double {
    if (L > 1.0) throw KGapError("gap", {});
    return L;
  };
  EXPECT_THROW(force_of(gap, 1.0 - 1e-5), BranchCrossing);
  const auto sub = [](double L) -> double {
    if (L < 1.0) throw NoCriticalMode("subcritical");
    return L;
  };
  EXPECT_THROW(force_of(sub, 1.0 + 1e-5), BranchCrossing);
}

TEST(CondensateForce, RepulsiveAboveTheGap) {
  const auto t = robin_thresholds(2.0, 1.0);
  for (double L : numerics::linspace(*t.L2 + 0.05, 3.0, 6)) {
    const auto f = force_of(
        [](double x) {
          return robin_condensate_energy(RobinDirichletModel{2.0, x}, kUnit, Background::Exact);
        },
        L);
    EXPECT_GT(f.F, 0.0) << "L=" << L;
    EXPECT_LT(f.error, 1e-3 * std::abs(f.F));
  }
}

TEST(RobinEnergies, SubcriticalHasNoCondensate) {
  EXPECT_EQ(robin_condensate_energy(RobinDirichletModel{0.5, 2.2}, kUnit, Background::Exact),
            0.0);
  EXPECT_EQ(robin_condensate_energy(RobinDirichletModel{0.5, 2.2}, kUnit, Background::Approx),
            0.0);
  EXPECT_NEAR(robin_vacuum_energy(RobinDirichletModel{0.5, 2.2}, kUnit, Background::Exact),
              vacuum_energy_subcritical(kUnit, 0.5, 2.2).E0_ren, 1e-6);
}

TEST(TotalForce, SubcriticalFluctuationsRepel) {
  const auto rep = total_force(RobinDirichletModel{0.5, 2.2}, kUnit, Background::Exact);
  EXPECT_EQ(rep.F_cond, 0.0);
  EXPECT_GT(rep.F_fluct, 0.0);
  EXPECT_EQ(rep.F_total, rep.F_cond + rep.F_fluct);
  EXPECT_GT(rep.step_used, 0.0);
}

TEST(TotalForce, CriticalComponentsAddUp) {
  const ModelConfig cfg = RobinDirichletModel{2.0, 2.2};
  const auto rep = total_force(cfg, kUnit, Background::Exact);
  EXPECT_GT(rep.F_cond, 0.0);
  EXPECT_EQ(rep.F_total, rep.F_cond + rep.F_fluct);
  EXPECT_EQ(rep.richardson_error, rep.cond_error + rep.fluct_error);

  VacuumEnergyOptions vopts;
  vopts.check_stability = false;
  ForceOptions fopts;
  fopts.avoid = {std::atanh(0.5), *robin_thresholds(2.0, 1.0).L2};
  const auto joint = force_of(
      [&](double L) {
        const ModelConfig c = RobinDirichletModel{2.0, L};
        return robin_condensate_energy(c, kUnit, Background::Exact) +
               robin_vacuum_energy(c, kUnit, Background::Exact, vopts);
      },
      2.2, fopts);
  EXPECT_NEAR(joint.F, rep.F_total, joint.error + rep.richardson_error + 1e-6);
}

TEST(TotalForce, StepShrinksNearTheCriticalLength) {
  const double kc_length = std::atanh(1.0 / 1.3);
  const auto rep =
      total_force(RobinDirichletModel{1.3, kc_length + 1e-3}, kUnit, Background::Approx);
  EXPECT_LE(rep.step_used, 1e-3 / 7.0 + 1e-15);
}

}  // namespace
}  // namespace casimir
