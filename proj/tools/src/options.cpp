#include "casimir/cli/options.hpp"

#include <variant>

#include "casimir/errors.hpp"

namespace casimir::cli {
namespace {

double require(const std::optional<double>& flag, const std::optional<double>& base,
               const char* name) {
  if (flag) return *flag;
  if (base) return *base;
  throw UsageError(std::string("missing model parameter --") + name);
}

template <class F>
void as_usage_error(F&& check) {
  try {
    check();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

PhysicalParams resolve_params(const RunOptions& opts, const std::optional<ModelSpec>& base) {
  PhysicalParams p = base ? base->params : PhysicalParams{};
  if (opts.m) p.m = *opts.m;
  if (opts.lambda) p.lambda = *opts.lambda;
  as_usage_error([&] { p.validate(); });
  return p;
}

ModelSpec resolve_model(const RunOptions& opts, const std::optional<ModelSpec>& base) {
  std::string name;
  if (opts.model) {
    name = *opts.model;
  } else if (base) {
    name = std::string(model_name(base->model));
  } else {
    throw UsageError("no model given: use --model or --config");
  }

  std::optional<double> kappa, L, U0, R;
  if (base) {
    if (const auto* d = std::get_if<DeltaModel>(&base->model)) kappa = d->kappa;
    if (const auto* r = std::get_if<RobinDirichletModel>(&base->model)) {
      kappa = r->kappa;
      L = r->L;
    }
    if (const auto* h = std::get_if<PotentialHoleModel>(&base->model)) {
      U0 = h->U0;
      R = h->R;
    }
  }

  ModelSpec spec;
  spec.params = resolve_params(opts, base);
  if (name == "delta") {
    spec.model = DeltaModel{require(opts.kappa, kappa, "kappa")};
  } else if (name == "robin") {
    spec.model = RobinDirichletModel{require(opts.kappa, kappa, "kappa"),
                                     require(opts.L, L, "L")};
  } else if (name == "hole") {
    spec.model = PotentialHoleModel{require(opts.U0, U0, "U0"), require(opts.R, R, "R")};
  } else {
    throw UsageError("unknown model '" + name + "' (expected delta, robin or hole)");
  }
  as_usage_error([&] { validate(spec.model); });
  return spec;
}

}  // namespace casimir::cli
