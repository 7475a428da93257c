#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "casimir/ellipj.hpp"
#include "casimir/models.hpp"

namespace casimir {

enum class Side { Left, Right };

/// phi0 == 0 (threshold, or an explicitly requested trivial background).
struct TrivialCondensate {};

/// sqrt(2/lambda) m / sinh(m (|x| + x1)).
struct DeltaDs {
  double x1;
};

/// sqrt(2/lambda) m k / sqrt(1+k^2) sc(m (x - L) / sqrt(1+k^2), sqrt(1-k^2)).
/// `k` is the parameter k in [0, 1]; the Jacobi modulus is its complement.
struct RobinSc {
  EllipticModulus k;
};

/// sqrt(2/lambda) P k / sqrt(1+k^2) sn(P x / sqrt(1+k^2), k) for x < R with
/// P = sqrt(U0 - m^2), continued by sqrt(2/lambda) m / sinh(m (x + x1)) for x >= R.
struct HoleSnPlusTail {
  EllipticModulus k;
  double x1;
};

/// Every sign change of the matching condition found by the k-scan.
struct RootDiagnostics {
  std::vector<double> accepted;
  /// Roots whose profile has a pole (Robin) or a node (hole) in the domain.
  std::vector<double> rejected;
};

/// Exact static solution of (-d^2 + m^2 + V + lambda phi0^2) phi0 = 0.
class CondensateSolution {
 public:
  using Kind = std::variant<TrivialCondensate, DeltaDs, RobinSc, HoleSnPlusTail>;

  CondensateSolution(ModelConfig model, PhysicalParams params, Kind kind,
                     RootDiagnostics diagnostics = {});

  const ModelConfig& model() const noexcept { return model_; }
  const PhysicalParams& params() const noexcept { return params_; }
  const Kind& kind() const noexcept { return kind_; }
  const RootDiagnostics& diagnostics() const noexcept { return diagnostics_; }

  /// Elliptic parameter k for the Robin and hole solutions, nullopt otherwise.
  std::optional<double> elliptic_k() const;

  /// Field value. At a matching point `side` selects the one-sided branch.
  double value(double x, Side side = Side::Right) const;
  /// First derivative; at a matching point `side` selects the one-sided limit.
  double derivative(double x, Side side = Side::Right) const;

 private:
  ModelConfig model_;
  PhysicalParams params_;
  Kind kind_;
  RootDiagnostics diagnostics_;
  double amplitude_ = 0.0;
  double scale_ = 0.0;
};

/// Interval lengths at which the Robin matching condition changes character
/// for fixed kappa: L0 (k = 0), and L1 < L2 (k = 1) when kappa >= sqrt(2) m.
struct RobinThresholds {
  double L0;
  std::optional<double> L1;
  std::optional<double> L2;
};

/// Throws NoCriticalRegime when kappa <= m.
RobinThresholds robin_thresholds(double kappa, double m);

/// Smallest U0 for which the hole of width R binds a critical mode.
double hole_threshold(double R, double m);

/// Delta model: x1 = artanh(m / kappa) / m. Throws NoCriticalMode if kappa <= m.
CondensateSolution solve_delta(const ModelConfig& cfg, const PhysicalParams& params);

/// kappa phi0(0) + phi0'(0) for the Robin solution with parameter k.
double robin_matching_residual(double k, const ModelConfig& cfg,
                               const PhysicalParams& params);

/// robin_matching_residual divided by the amplitude sqrt(2/lambda) m k / sqrt(1+k^2).
/// Finite at k = 0, where its zero reproduces the bound-state threshold.
double robin_reduced_residual(double k, const ModelConfig& cfg,
                              const PhysicalParams& params);

struct KGap {
  double L;
  std::vector<double> rejected_roots;
};

using RobinOutcome = std::variant<CondensateSolution, KGap>;

inline constexpr int kRobinScanPoints = 2000;

/// Scans k on kRobinScanPoints cells, bisects every sign change, discards
/// roots with an sc pole in (0, L) and returns the smallest survivor, or
/// KGap when none survives. Throws NoCriticalMode below kappa_c(L).
RobinOutcome solve_robin(const ModelConfig& cfg, const PhysicalParams& params);

/// Reduced matching residual of the hole solution at x = R,
///   phi0'(R) + phi0(R) sqrt(m^2 + lambda phi0(R)^2 / 2),
/// divided by the inner amplitude.
double hole_reduced_residual(double k, const ModelConfig& cfg,
                             const PhysicalParams& params);

/// Throws NoCriticalMode below the hole threshold and NoSolution when no
/// nodeless root exists.
CondensateSolution solve_hole(const ModelConfig& cfg, const PhysicalParams& params);

/// Dispatches on the model. A Robin k-gap is reported as KGapError.
CondensateSolution solve_condensate(const ModelConfig& cfg,
                                    const PhysicalParams& params);

/// E_cond = -(lambda/4) int phi0^4 over the model domain.
double condensate_energy(const CondensateSolution& sol, double rel_tol = 1e-12);

/// Max |-phi0'' + (m^2 + V) phi0 + lambda phi0^3| on `grid_size` points, with a
/// five-point second difference of step h; points are kept 3h away from
/// matching points and domain ends. Infinite domains are cut 10/m beyond
/// the last matching point.
double gp_residual(const CondensateSolution& sol, int grid_size = 400,
                   double h = 1e-3);

/// Residuals of all boundary and matching conditions (Robin, Dirichlet,
/// derivative jump, and value/derivative continuity at the hole edge).
std::vector<double> boundary_defects(const CondensateSolution& sol);

/// Leading-order coefficient in kappa - kappa_c = alpha~ k^2 near the Robin
/// threshold, alpha~ = -m (12mL - 8 sinh 2mL + sinh 4mL) / (16 sinh^2 mL).
/// The numerically solved k(kappa) follows kappa - kappa_c = |alpha~| k^2:
/// only the magnitude of the expression is borne out.
double near_threshold_modulus(const ModelConfig& cfg, const PhysicalParams& params);

}  // namespace casimir
