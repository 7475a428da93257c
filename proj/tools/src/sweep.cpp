#include "casimir/cli/sweep.hpp"

#include <sstream>

#include "casimir/condensate.hpp"
#include "casimir/errors.hpp"
#include "casimir/forces.hpp"
#include "casimir/meanfield.hpp"
#include "casimir/numerics.hpp"
#include "parallel.hpp"

namespace casimir::cli {
namespace {

constexpr SweepOutput kAllOutputs[] = {SweepOutput::E_bs,    SweepOutput::E_cond,
                                       SweepOutput::k,       SweepOutput::E0_ren,
                                       SweepOutput::F_cond,  SweepOutput::F_fluct,
                                       SweepOutput::F_total};

bool needs_robin(SweepOutput o) {
  return o == SweepOutput::E0_ren || o == SweepOutput::F_cond || o == SweepOutput::F_fluct ||
         o == SweepOutput::F_total;
}

bool is_force(SweepOutput o) {
  return o == SweepOutput::F_cond || o == SweepOutput::F_fluct || o == SweepOutput::F_total;
}

bool is_critical(const ModelSpec& spec) {
  const double m = spec.params.m;
  if (const auto* d = std::get_if<DeltaModel>(&spec.model)) return d->kappa > m;
  if (const auto* r = std::get_if<RobinDirichletModel>(&spec.model)) {
    return r->kappa > robin_critical_kappa(r->L, m);
  }
  const auto& h = std::get<PotentialHoleModel>(spec.model);
  return h.U0 > hole_threshold(h.R, m);
}

ModelSpec with_variable(ModelSpec spec, SweepVariable var, double value) {
  std::visit(
      [&](auto& model) {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, DeltaModel>) {
          model.kappa = value;
        } else if constexpr (std::is_same_v<T, RobinDirichletModel>) {
          (var == SweepVariable::Kappa ? model.kappa : model.L) = value;
        } else {
          model.U0 = value;
        }
      },
      spec.model);
  return spec;
}

}  // namespace

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::Kappa: return "kappa";
    case SweepVariable::L: return "L";
    case SweepVariable::U0: return "U0";
  }
  return "?";
}

std::string_view to_string(SweepOutput o) {
  switch (o) {
    case SweepOutput::E_bs: return "E_bs";
    case SweepOutput::E_cond: return "E_cond";
    case SweepOutput::k: return "k";
    case SweepOutput::E0_ren: return "E0_ren";
    case SweepOutput::F_cond: return "F_cond";
    case SweepOutput::F_fluct: return "F_fluct";
    case SweepOutput::F_total: return "F_total";
  }
  return "?";
}

SweepVariable parse_variable(std::string_view name) {
  for (auto v : {SweepVariable::Kappa, SweepVariable::L, SweepVariable::U0}) {
    if (name == to_string(v)) return v;
  }
  throw UsageError("unknown sweep variable '" + std::string(name) +
                   "' (expected kappa, L or U0)");
}

std::vector<SweepOutput> parse_outputs(std::string_view list) {
  std::vector<SweepOutput> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string_view item = list.substr(start, end - start);
    bool found = false;
    for (SweepOutput o : kAllOutputs) {
      if (item == to_string(o)) {
        out.push_back(o);
        found = true;
      }
    }
    if (!found) throw UsageError("unknown sweep output '" + std::string(item) + "'");
    start = end + 1;
  }
  return out;
}

void validate(const SweepSpec& spec) {
  if (!(spec.from < spec.to)) throw UsageError("sweep: --from must be smaller than --to");
  if (spec.points < 2) throw UsageError("sweep: --points must be at least 2");
  if (spec.outputs.empty()) throw UsageError("sweep: no outputs requested");
  const bool robin = std::holds_alternative<RobinDirichletModel>(spec.fixed.model);
  const bool hole = std::holds_alternative<PotentialHoleModel>(spec.fixed.model);
  if (spec.variable == SweepVariable::L && !robin) {
    throw UsageError("sweep: L is only a parameter of the robin model");
  }
  if (spec.variable == SweepVariable::U0 && !hole) {
    throw UsageError("sweep: U0 is only a parameter of the hole model");
  }
  if (spec.variable == SweepVariable::Kappa && hole) {
    throw UsageError("sweep: the hole model has no kappa");
  }
  for (SweepOutput o : spec.outputs) {
    if (needs_robin(o) && !robin) {
      throw UsageError("sweep: " + std::string(to_string(o)) + " requires the robin model");
    }
  }
}

VacuumEnergyOptions vacuum_options(const RunOptions& opts) {
  VacuumEnergyOptions v;
  v.cutoff = opts.cutoff;
  v.rel_tol = opts.tol;
  return v;
}

PointResult evaluate_point(const ModelSpec& spec, const std::vector<SweepOutput>& outputs,
                           const VacuumEnergyOptions& vopts) {
  PointResult res{"ok", std::vector<std::optional<double>>(outputs.size())};
  const auto degrade = [&](const char* status) {
    if (res.status == "ok") res.status = status;
  };
  bool critical = false;
  try {
    validate(spec.model);
    spec.params.validate();
    critical = is_critical(spec);
  } catch (const Error&) {
    res.status = "error";
    return res;
  }
  if (!critical) res.status = "subcritical";

  std::optional<CondensateSolution> sol;
  bool kgap = false;
  if (critical) {
    try {
      sol = solve_condensate(spec.model, spec.params);
    } catch (const KGapError&) {
      kgap = true;
      res.status = "kgap";
    } catch (const Error&) {
      degrade("error");
    }
  }

  std::optional<ForceReport> forces;
  bool forces_tried = false;
  const auto get_forces = [&]() -> const std::optional<ForceReport>& {
    if (!forces_tried) {
      forces_tried = true;
      try {
        forces = total_force(spec.model, spec.params, Background::Exact, vopts);
      } catch (const Error&) {
        degrade("error");
      }
    }
    return forces;
  };

  for (std::size_t i = 0; i < outputs.size(); ++i) {
    auto& cell = res.values[i];
    const SweepOutput o = outputs[i];
    try {
      switch (o) {
        case SweepOutput::E_bs:
          if (critical) cell = meanfield_energy(bound_state(spec.model, spec.params));
          break;
        case SweepOutput::E_cond:
          if (sol) cell = condensate_energy(*sol);
          break;
        case SweepOutput::k:
          if (sol) {
            if (auto k = sol->elliptic_k()) cell = *k;
          }
          break;
        case SweepOutput::E0_ren:
          if (!kgap && (sol || !critical)) {
            cell = robin_vacuum_energy(spec.model, spec.params, Background::Exact, vopts);
          }
          break;
        default:
          if (is_force(o) && !kgap && (sol || !critical) && get_forces()) {
            if (o == SweepOutput::F_cond) {
              if (critical) cell = forces->F_cond;
            } else if (o == SweepOutput::F_fluct) {
              cell = forces->F_fluct;
            } else {
              cell = forces->F_total;
            }
          }
          break;
      }
    } catch (const Error&) {
      degrade("error");
    }
  }
  return res;
}

CsvTable run_sweep(const SweepSpec& spec, const RunOptions& opts) {
  validate(spec);
  const auto grid = numerics::linspace(spec.from, spec.to, static_cast<std::size_t>(spec.points));
  const VacuumEnergyOptions vopts = vacuum_options(opts);
  const auto results = detail::parallel_map<PointResult>(
      grid.size(), opts.jobs, [&](std::size_t i) {
        return evaluate_point(with_variable(spec.fixed, spec.variable, grid[i]), spec.outputs,
                              vopts);
      });

  CsvTable table;
  table.header = {std::string(to_string(spec.variable)), "status"};
  for (SweepOutput o : spec.outputs) table.header.emplace_back(to_string(o));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row{format_number(grid[i]), results[i].status};
    for (const auto& v : results[i].values) row.push_back(format_optional(v));
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace casimir::cli
