#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace casimir {

/// Mass and quartic self-coupling of the real scalar field.
struct PhysicalParams {
  double m = 1.0;
  double lambda = 1.0;

  /// Throws DomainError unless m > 0 and lambda > 0.
  void validate() const;
};

/// Attractive delta potential V = -2 kappa delta(x) on the whole line.
struct DeltaModel {
  double kappa = 0.0;
};

/// Interval [0, L], Robin (kappa + d/dx) phi = 0 at x = 0, Dirichlet at x = L.
struct RobinDirichletModel {
  double kappa = 0.0;
  double L = 0.0;
};

/// Potential hole V = -U0 on (0, R) on the half line, Dirichlet at x = 0.
struct PotentialHoleModel {
  double U0 = 0.0;
  double R = 0.0;
};

using ModelConfig =
    std::variant<DeltaModel, RobinDirichletModel, PotentialHoleModel>;

/// Throws DomainError when a geometric parameter is not strictly positive.
void validate(const ModelConfig& cfg);

/// Short tag used in configs and CSV output: "delta", "robin" or "hole".
std::string_view model_name(const ModelConfig& cfg);

/// Closed interval on which the model lives; infinite ends are +-inf.
struct Domain {
  double lower;
  double upper;

  bool contains(double x) const noexcept { return x >= lower && x <= upper; }
  bool finite() const noexcept {
    return lower > -std::numeric_limits<double>::infinity() &&
           upper < std::numeric_limits<double>::infinity();
  }
};

Domain domain_of(const ModelConfig& cfg);

/// Points where the field or its derivative is allowed to be non-smooth
/// (the delta at 0, the hole edge at R). Empty for the Robin interval.
std::vector<double> matching_points(const ModelConfig& cfg);

/// Pointwise potential. The delta model returns 0 everywhere: its strength
/// enters only through the derivative jump at the origin.
/// Throws DomainError for x outside the model domain.
double potential_eval(const ModelConfig& cfg, double x);

struct MatchingJump {
  double kappa;
};  // phi'(+0) - phi'(-0) = -2 kappa phi(0), phi continuous
struct Robin {
  double kappa;
};  // (kappa + d/dx) phi = 0
struct Dirichlet {};  // phi = 0

struct BoundaryCondition {
  std::variant<MatchingJump, Robin, Dirichlet> kind;
  double location;
};

/// Conditions imposed at finite points of the domain.
std::vector<BoundaryCondition> boundary_conditions(const ModelConfig& cfg);

/// Residual of a boundary condition for a field given by its value and its
/// one-sided derivatives at the condition's location. For Robin and Dirichlet
/// only `right` (the inward derivative at x = 0) or `left` is consulted as
/// appropriate.
double boundary_residual(const BoundaryCondition& bc, double value,
                         double derivative_left, double derivative_right);

/// Model plus physical parameters as read from a JSON configuration.
struct ModelSpec {
  ModelConfig model;
  PhysicalParams params;
};

/// Parses {"model": "delta"|"robin"|"hole", "m", "lambda", "kappa", "L",
/// "U0", "R"}. Missing m/lambda default to 1. Throws DomainError on a
/// malformed document or missing model parameters.
ModelSpec parse_model_config(std::string_view json_text);

/// Inverse of parse_model_config (only the keys relevant to the model).
std::string to_json(const ModelSpec& spec);

}  // namespace casimir
