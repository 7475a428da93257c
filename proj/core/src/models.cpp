#include "casimir/models.hpp"

#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << what << " must be positive and finite, got " << v;
    throw DomainError(os.str());
  }
}

}  // namespace

void PhysicalParams::validate() const {
  require_positive(m, "mass m");
  require_positive(lambda, "coupling lambda");
}

void validate(const ModelConfig& cfg) {
  std::visit(overloaded{
                 [](const DeltaModel& d) { require_positive(d.kappa, "kappa"); },
                 [](const RobinDirichletModel& r) {
                   require_positive(r.kappa, "kappa");
                   require_positive(r.L, "interval length L");
                 },
                 [](const PotentialHoleModel& h) {
                   require_positive(h.U0, "hole depth U0");
                   require_positive(h.R, "hole width R");
                 },
             },
             cfg);
}

std::string_view model_name(const ModelConfig& cfg) {
  return std::visit(overloaded{
                        [](const DeltaModel&) { return std::string_view("delta"); },
                        [](const RobinDirichletModel&) {
                          return std::string_view("robin");
                        },
                        [](const PotentialHoleModel&) {
                          return std::string_view("hole");
                        },
                    },
                    cfg);
}

Domain domain_of(const ModelConfig& cfg) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(overloaded{
                        [](const DeltaModel&) { return Domain{-inf, inf}; },
                        [](const RobinDirichletModel& r) { return Domain{0.0, r.L}; },
                        [](const PotentialHoleModel&) { return Domain{0.0, inf}; },
                    },
                    cfg);
}

std::vector<double> matching_points(const ModelConfig& cfg) {
  return std::visit(overloaded{
                        [](const DeltaModel&) { return std::vector<double>{0.0}; },
                        [](const RobinDirichletModel&) { return std::vector<double>{}; },
                        [](const PotentialHoleModel& h) { return std::vector<double>{h.R}; },
                    },
                    cfg);
}

double potential_eval(const ModelConfig& cfg, double x) {
  if (!domain_of(cfg).contains(x)) {
    std::ostringstream os;
    os << "potential_eval: x = " << x << " outside the " << model_name(cfg)
       << " domain";
    throw DomainError(os.str());
  }
  if (const auto* hole = std::get_if<PotentialHoleModel>(&cfg)) {
    return x < hole->R ? -hole->U0 : 0.0;
  }
  return 0.0;
}

std::vector<BoundaryCondition> boundary_conditions(const ModelConfig& cfg) {
  return std::visit(
      overloaded{
          [](const DeltaModel& d) {
            return std::vector<BoundaryCondition>{{MatchingJump{d.kappa}, 0.0}};
          },
          [](const RobinDirichletModel& r) {
            return std::vector<BoundaryCondition>{{Robin{r.kappa}, 0.0},
                                                  {Dirichlet{}, r.L}};
          },
          [](const PotentialHoleModel&) {
            return std::vector<BoundaryCondition>{{Dirichlet{}, 0.0}};
          },
      },
      cfg);
}

double boundary_residual(const BoundaryCondition& bc, double value,
                         double derivative_left, double derivative_right) {
  return std::visit(
      overloaded{
          [&](const MatchingJump& j) {
            return derivative_right - derivative_left + 2.0 * j.kappa * value;
          },
          [&](const Robin& r) { return r.kappa * value + derivative_right; },
          [&](const Dirichlet&) { return value; },
      },
      bc.kind);
}

}  // namespace casimir
